#pragma once

#include <cstddef>
#include <vector>

#include "risfold/errors.hpp"

namespace risfold {

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend bool operator==(Vec3 a, Vec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

double norm(Vec3 v);
double distance(Vec3 a, Vec3 b);

/// Which side of the central hinge a grid column belongs to. Columns exactly
/// on the hinge line (odd column counts only) do not rotate.
enum class Half { Left, Center, Right };

/// Static description of the multilayer surface: L stacked rows x cols grids
/// along +y, hinged about the vertical centerline of each layer.
struct SurfaceSpec {
    int layers{1};
    int rows{1};
    int cols{2};
    double element_pitch{0.0};      // meters between adjacent grid locations
    double layer_spacing{0.0};      // D, meters between consecutive layers
    double first_layer_offset{0.0}; // meters from the user array to layer 1
    int angle_count{3};             // m, detent positions of the hinge

    int locations_per_layer() const { return rows * cols; }
    int total_locations() const { return layers * rows * cols; }

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
};

/// The feasible discrete fold angles: m values uniformly spaced on
/// [-phi_max, +phi_max] (just {0} when m == 1).
struct AngleSet {
    double phi_max{0.0};
    std::vector<double> angles;

    int size() const { return static_cast<int>(angles.size()); }
    /// Index of the feasible angle matching `phi` (within 1e-12 absolute),
    /// or -1 when `phi` is not a member.
    int index_of(double phi) const;
    bool contains(double phi) const { return index_of(phi) >= 0; }
    /// The member closest to zero; ties resolve to the non-negative one.
    double flattest() const;
};

/// c = [phi_left, phi_right], shared by every layer.
struct FoldConfiguration {
    double phi_left{0.0};
    double phi_right{0.0};

    friend bool operator==(const FoldConfiguration& a, const FoldConfiguration& b) {
        return a.phi_left == b.phi_left && a.phi_right == b.phi_right;
    }
};

/// Element positions after folding. positions[l][n] is the location of grid
/// index n = row*cols + col on layer l (0-based layer here; layer 1 of the
/// model is positions[0]).
struct SurfaceGeometry {
    std::vector<std::vector<Vec3>> positions;
    std::vector<Half> half_of; // per grid index, identical for every layer
    int rows{0};
    int cols{0};
};

/// Maximum mechanical tilt: atan(2 D / W_RIS). Both arguments must be > 0.
double max_fold_angle(double layer_spacing, double flat_width);

/// W_RIS in the flat case: cols * element_pitch.
double flat_width(const SurfaceSpec& spec);

/// The m feasible angles for a hinge limited to +-phi_max.
AngleSet build_angle_set(int m, double phi_max);

/// Angle set implied by a surface spec (m = spec.angle_count, phi_max from
/// its own dimensions).
AngleSet angle_set(const SurfaceSpec& spec);

/// Hinge side of a grid column under the strict left/right split.
Half half_of_column(int col, int cols);

/// Rigid fold of every layer about its vertical hinge axis. Positive angles
/// tilt the half's outer edge toward the base station (+y). The fold is
/// always computed from the flat layout, never incrementally.
/// Throws ConstraintViolation when an angle is not in the spec's angle set.
SurfaceGeometry apply_fold(const SurfaceSpec& spec, const FoldConfiguration& c);

} // namespace risfold
