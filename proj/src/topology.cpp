#include "risfold/topology.hpp"

#include <numeric>
#include <string>

namespace risfold {

int ActivationTopology::active_count() const {
    return std::accumulate(bits.begin(), bits.end(), 0,
                           [](int acc, std::uint8_t b) { return acc + (b != 0 ? 1 : 0); });
}

int ActivationTopology::active_count_in_layer(int layer) const {
    int count = 0;
    for (int n = 0; n < per_layer; ++n)
        if (active(layer, n))
            ++count;
    return count;
}

void ActivationTopology::validate() const {
    if (layers < 1 || per_layer < 1)
        throw ConstraintViolation("ActivationTopology: empty grid");
    if (static_cast<int>(bits.size()) != size())
        throw ConstraintViolation("ActivationTopology: bit vector length mismatch");
    for (std::uint8_t b : bits)
        if (b > 1)
            throw ConstraintViolation("ActivationTopology: entries must be 0 or 1");
    const int ones = active_count();
    if (ones != budget)
        throw ConstraintViolation("ActivationTopology: " + std::to_string(ones) +
                                  " active elements, budget is " + std::to_string(budget));
}

ActivationTopology full_topology(int layers, int per_layer) {
    ActivationTopology z;
    z.layers = layers;
    z.per_layer = per_layer;
    z.budget = layers * per_layer;
    z.bits.assign(static_cast<std::size_t>(z.size()), 1);
    return z;
}

ActivationTopology dense_seed_topology(int layers, int per_layer, int budget) {
    if (budget < 0 || budget > layers * per_layer)
        throw ConstraintViolation("dense_seed_topology: budget exceeds grid capacity");
    ActivationTopology z;
    z.layers = layers;
    z.per_layer = per_layer;
    z.budget = budget;
    z.bits.assign(static_cast<std::size_t>(z.size()), 0);
    for (int i = 0; i < budget; ++i)
        z.bits[static_cast<std::size_t>(i)] = 1;
    return z;
}

} // namespace risfold
