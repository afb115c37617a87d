#pragma once

#include <cstdint>
#include <vector>

#include "risfold/errors.hpp"

namespace risfold {

/// Global binary activation vector z: concatenation of per-layer sub-vectors,
/// with a fixed number of ones (the active-element budget).
struct ActivationTopology {
    std::vector<std::uint8_t> bits; // length layers * per_layer, entries 0/1
    int layers{0};
    int per_layer{0}; // N_G
    int budget{0};    // N_A

    int size() const { return layers * per_layer; }
    bool active(int layer, int n) const { return bits[static_cast<std::size_t>(layer * per_layer + n)] != 0; }
    int active_count() const;
    int active_count_in_layer(int layer) const;

    /// Throws ConstraintViolation if entries are non-binary or the ones do
    /// not sum to the budget.
    void validate() const;

    /// Exact comparison key for tabu membership and tie-breaking.
    const std::vector<std::uint8_t>& fingerprint() const { return bits; }

    friend bool operator==(const ActivationTopology& a, const ActivationTopology& b) {
        return a.layers == b.layers && a.per_layer == b.per_layer && a.bits == b.bits;
    }
};

/// All grid locations active.
ActivationTopology full_topology(int layers, int per_layer);

/// The first `budget` locations active in (layer, grid index) order. With the
/// reference dimensions this reproduces the dense two-layer footprint inside
/// the three-layer grid.
ActivationTopology dense_seed_topology(int layers, int per_layer, int budget);

} // namespace risfold
