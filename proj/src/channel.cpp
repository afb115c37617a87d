#include "risfold/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risfold {

namespace {

constexpr double kPi = std::numbers::pi;

MatrixC link_matrix(const std::vector<Vec3>& tx, const std::vector<Vec3>& rx, double lambda,
                    const char* link_name) {
    MatrixC mat(static_cast<Eigen::Index>(rx.size()), static_cast<Eigen::Index>(tx.size()));
    for (std::size_t r = 0; r < rx.size(); ++r) {
        for (std::size_t t = 0; t < tx.size(); ++t) {
            if (distance(tx[t], rx[r]) <= 0.0)
                throw DegenerateChannelError(std::string("synthesize: coincident endpoints on ") +
                                             link_name + " (tx " + std::to_string(t) + ", rx " +
                                             std::to_string(r) + ")");
            mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) =
                los_entry(tx[t], rx[r], lambda);
        }
    }
    return mat;
}

} // namespace

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::domain_error("wavelength: frequency must be > 0");
    return kSpeedOfLight / frequency_hz;
}

Complex los_entry(Vec3 tx, Vec3 rx, double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("los_entry: wavelength must be > 0");
    const double d = distance(tx, rx);
    if (d <= 0.0)
        throw DegenerateChannelError("los_entry: coincident tx/rx point");
    const double magnitude = lambda / (4.0 * kPi * d);
    const double phase = -2.0 * kPi * d / lambda;
    return std::polar(magnitude, phase);
}

std::vector<Vec3> linear_array(Vec3 center, int count, double spacing) {
    if (count < 1)
        throw std::domain_error("linear_array: count must be >= 1");
    if (!(spacing > 0.0))
        throw std::domain_error("linear_array: spacing must be > 0");
    std::vector<Vec3> out(static_cast<std::size_t>(count));
    const double mid = (count - 1) / 2.0;
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = Vec3{center.x + (i - mid) * spacing, center.y, center.z};
    return out;
}

ChannelSet synthesize(const std::vector<Vec3>& user_antennas, const SurfaceGeometry& surface,
                      const std::vector<Vec3>& bs_antennas, double lambda) {
    if (user_antennas.empty() || bs_antennas.empty() || surface.positions.empty())
        throw std::invalid_argument("synthesize: all endpoint sets must be nonempty");

    ChannelSet set;
    set.h.reserve(surface.positions.size());
    set.h.push_back(link_matrix(user_antennas, surface.positions.front(), lambda, "user->layer1"));
    for (std::size_t l = 1; l < surface.positions.size(); ++l) {
        const std::string name = "layer" + std::to_string(l) + "->layer" + std::to_string(l + 1);
        set.h.push_back(link_matrix(surface.positions[l - 1], surface.positions[l], lambda,
                                    name.c_str()));
    }
    // g holds layer-L -> BS coefficients with one row per element (N x M),
    // so g^H is the M x N receive-side matrix. The LoS coefficient depends
    // only on distance, so tx/rx roles are interchangeable here.
    set.g = link_matrix(bs_antennas, surface.positions.back(), lambda, "layerL->bs");
    return set;
}

} // namespace risfold
