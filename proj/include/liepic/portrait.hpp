#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "liepic/repr.hpp"
#include "liepic/torus.hpp"

namespace liepic {

struct PortraitPoint {
  double x = 0;
  double y = 0;
};

using PointCloud = std::vector<PortraitPoint>;

// Builds all fundamental representations of a root system, in index order.
std::vector<Representation> fundamental_reps(const RootSystemData& rs);

// The portrait map at one torus point. For self-dual groups (A1, C2, G2) the
// coordinates are the real character values (imaginary parts are asserted
// below 1e-9, anything larger throws std::logic_error); for A2 they are
// (Re chi_1, Im chi_1). A1 uses only the x coordinate, y is set to 0.
PortraitPoint delta(const RootSystemData& rs, std::span<const Representation> reps,
                    const TorusPoint& t);

// Monte-Carlo point cloud: delta over sample_uniform.
PointCloud shotgun(const RootSystemData& rs, std::span<const Representation> reps,
                   uint64_t seed, size_t count);

// Analytic curves bounding the portraits.
enum class CurveTag { deltoid, segment_right, segment_left, parabola, cubic };

const char* curve_name(CurveTag tag);

struct BoundaryCurve {
  WallId wall;
  std::optional<CurveTag> closed_form;  // absent for A1, whose portrait is an interval
  std::vector<std::pair<double, PortraitPoint>> samples;  // (t, point), t increasing
};

// Walls traced by the `boundary` command for a group (1..3 for rank 2, wall 1
// only for A1).
std::vector<WallId> boundary_walls(GroupType type);

// Image of one wall under delta(exp(.)), sampled at segments+1 equally spaced
// parameters. segments must be >= 2.
BoundaryCurve boundary_polyline(const RootSystemData& rs, std::span<const Representation> reps,
                                WallId wall, int segments);

// Left-minus-right value of the tagged curve's defining equation; zero on the
// curve. Throws std::invalid_argument when the tag does not belong to the
// group's portrait.
double closed_form_residual(GroupType type, double x, double y, CurveTag tag);

// Exact-rational variant for rational inputs.
Rat closed_form_residual_exact(GroupType type, const Rat& x, const Rat& y, CurveTag tag);

// Signed margin: > 0 inside the portrait region, 0 on its boundary, < 0
// outside. Rank-2 groups only.
double membership(GroupType type, double x, double y);

// The symmetry group of the portrait induced by the center: rotations by
// 120 degrees (A2), the reflection x -> -x (C2, A1), or the identity (G2).
struct CenterSymmetry {
  GroupType type;
  // Row-major 2x2 linear maps.
  std::vector<std::array<double, 4>> transforms;
};

CenterSymmetry center_symmetry(GroupType type);

// Orbit of a point under the center symmetries, exact duplicates removed.
std::vector<PortraitPoint> center_orbit(GroupType type, const PortraitPoint& p);

// The region data used by membership tests: boundary curve tags with inside
// orientation, and the corner points of the portrait.
struct RegionSpec {
  GroupType type;
  struct OrientedCurve {
    CurveTag tag;
    double inside_sign;  // margin contribution = inside_sign * residual / scale
    double scale;
  };
  std::vector<OrientedCurve> curves;
  std::vector<PortraitPoint> vertices;
};

RegionSpec region_spec(GroupType type);

}  // namespace liepic
