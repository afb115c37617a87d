#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "risfold/geometry.hpp"

namespace risfold {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

/// All links of one uplink snapshot. h[0] is the user -> layer-1 matrix
/// (N x K); h[l] for l >= 1 maps layer l to layer l+1 (N x N); g maps the
/// last layer to the BS (N x M), so g^H is the M x N matrix of the receive
/// side.
struct ChannelSet {
    std::vector<MatrixC> h;
    MatrixC g;

    int layer_count() const { return static_cast<int>(h.size()); }
    int elements_per_layer() const { return h.empty() ? 0 : static_cast<int>(h.front().rows()); }
    int user_antennas() const { return h.empty() ? 0 : static_cast<int>(h.front().cols()); }
    int bs_antennas() const { return static_cast<int>(g.cols()); }
};

/// c0 / f.
double wavelength(double frequency_hz);

/// Spherical-wave line-of-sight coefficient between two points:
/// (lambda / (4 pi d)) * exp(-i 2 pi d / lambda).
/// Throws DegenerateChannelError when the points coincide.
Complex los_entry(Vec3 tx, Vec3 rx, double lambda);

/// Uniform linear array of `count` antennas along the x-axis, centered on
/// `center`, with the given spacing.
std::vector<Vec3> linear_array(Vec3 center, int count, double spacing);

/// Builds every link matrix of the uplink from explicit element positions.
/// Throws DegenerateChannelError (naming the offending indices) if any
/// tx/rx pair coincides.
ChannelSet synthesize(const std::vector<Vec3>& user_antennas, const SurfaceGeometry& surface,
                      const std::vector<Vec3>& bs_antennas, double lambda);

} // namespace risfold
