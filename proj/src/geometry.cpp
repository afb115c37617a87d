#include "risfold/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risfold {

double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

double distance(Vec3 a, Vec3 b) { return norm(a - b); }

void SurfaceSpec::validate() const {
    if (layers < 1)
        throw std::invalid_argument("SurfaceSpec: layers must be >= 1");
    if (rows < 1)
        throw std::invalid_argument("SurfaceSpec: rows must be >= 1");
    if (cols < 2)
        throw std::invalid_argument("SurfaceSpec: cols must be >= 2 so both halves are nonempty");
    if (!(element_pitch > 0.0))
        throw std::invalid_argument("SurfaceSpec: element_pitch must be > 0");
    if (!(layer_spacing > 0.0))
        throw std::invalid_argument("SurfaceSpec: layer_spacing must be > 0");
    if (!(first_layer_offset > 0.0))
        throw std::invalid_argument("SurfaceSpec: first_layer_offset must be > 0");
    if (angle_count < 1)
        throw std::invalid_argument("SurfaceSpec: angle_count must be >= 1");
}

double max_fold_angle(double layer_spacing, double flat_width) {
    if (!(layer_spacing > 0.0))
        throw std::domain_error("max_fold_angle: layer spacing must be > 0");
    if (!(flat_width > 0.0))
        throw std::domain_error("max_fold_angle: flat width must be > 0");
    return std::atan(2.0 * layer_spacing / flat_width);
}

double flat_width(const SurfaceSpec& spec) {
    spec.validate();
    return spec.cols * spec.element_pitch;
}

AngleSet build_angle_set(int m, double phi_max) {
    if (m < 1)
        throw std::domain_error("build_angle_set: m must be >= 1");
    if (!(phi_max > 0.0))
        throw std::domain_error("build_angle_set: phi_max must be > 0");
    AngleSet set;
    set.phi_max = phi_max;
    if (m == 1) {
        set.angles = {0.0};
        return set;
    }
    set.angles.resize(m);
    for (int j = 0; j < m; ++j)
        set.angles[j] = -phi_max + 2.0 * j * phi_max / (m - 1);
    // Uniform grids with odd m land exactly on zero; pin it to avoid -0.0.
    if (m % 2 == 1)
        set.angles[m / 2] = 0.0;
    return set;
}

AngleSet angle_set(const SurfaceSpec& spec) {
    return build_angle_set(spec.angle_count, max_fold_angle(spec.layer_spacing, flat_width(spec)));
}

int AngleSet::index_of(double phi) const {
    for (int j = 0; j < size(); ++j)
        if (std::abs(angles[j] - phi) <= 1e-12)
            return j;
    return -1;
}

double AngleSet::flattest() const {
    double best = angles.front();
    for (double a : angles) {
        if (std::abs(a) < std::abs(best) || (std::abs(a) == std::abs(best) && a > best))
            best = a;
    }
    return best;
}

Half half_of_column(int col, int cols) {
    const double center = (cols - 1) / 2.0;
    if (col < center)
        return Half::Left;
    if (col > center)
        return Half::Right;
    return Half::Center;
}

SurfaceGeometry apply_fold(const SurfaceSpec& spec, const FoldConfiguration& c) {
    spec.validate();
    const AngleSet set = angle_set(spec);
    if (!set.contains(c.phi_left))
        throw ConstraintViolation("apply_fold: phi_left " + std::to_string(c.phi_left) +
                                  " is not in the feasible angle set");
    if (!set.contains(c.phi_right))
        throw ConstraintViolation("apply_fold: phi_right " + std::to_string(c.phi_right) +
                                  " is not in the feasible angle set");

    SurfaceGeometry geom;
    geom.rows = spec.rows;
    geom.cols = spec.cols;
    geom.half_of.resize(spec.locations_per_layer());
    geom.positions.assign(spec.layers, std::vector<Vec3>(spec.locations_per_layer()));

    const double row_center = (spec.rows - 1) / 2.0;
    const double col_center = (spec.cols - 1) / 2.0;
    for (int l = 0; l < spec.layers; ++l) {
        const double layer_y = spec.first_layer_offset + l * spec.layer_spacing;
        for (int r = 0; r < spec.rows; ++r) {
            for (int col = 0; col < spec.cols; ++col) {
                const int n = r * spec.cols + col;
                const Half half = half_of_column(col, spec.cols);
                if (l == 0)
                    geom.half_of[n] = half;
                const double dx = (col - col_center) * spec.element_pitch;
                const double dz = (r - row_center) * spec.element_pitch;
                // Rotate about the vertical hinge line x = 0 of this layer.
                // Positive angles move the outer edge toward +y (the BS):
                // left-half elements sit at dx < 0, so their boresight shift
                // is -dx*sin(phi) > 0.
                double x = dx;
                double y = layer_y;
                if (half == Half::Left) {
                    x = dx * std::cos(c.phi_left);
                    y = layer_y - dx * std::sin(c.phi_left);
                } else if (half == Half::Right) {
                    x = dx * std::cos(c.phi_right);
                    y = layer_y + dx * std::sin(c.phi_right);
                }
                geom.positions[l][n] = Vec3{x, y, dz};
            }
        }
    }
    return geom;
}

} // namespace risfold
