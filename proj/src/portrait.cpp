#include "liepic/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace liepic {

namespace {

constexpr double kImagTol = 1e-9;

// Implicit equation of the three-cusped hypocycloid traced by
// (2 cos t + cos 2t, 2 sin t - sin 2t).
double deltoid_residual(double x, double y) {
  double r2 = x * x + y * y;
  return r2 * r2 + 18.0 * r2 - 27.0 - 8.0 * x * x * x + 24.0 * x * y * y;
}

Rat deltoid_residual_exact(const Rat& x, const Rat& y) {
  Rat r2 = x * x + y * y;
  return r2 * r2 + Rat(18) * r2 - Rat(27) - Rat(8) * x * x * x + Rat(24) * x * y * y;
}

}  // namespace

std::vector<Representation> fundamental_reps(const RootSystemData& rs) {
  std::vector<Representation> reps;
  for (int i = 1; i <= rs.rank; ++i) reps.push_back(fundamental_rep(rs, i));
  return reps;
}

PortraitPoint delta(const RootSystemData& rs, std::span<const Representation> reps,
                    const TorusPoint& t) {
  if (static_cast<int>(reps.size()) != rs.rank)
    throw std::invalid_argument("delta: expected one representation per rank");
  const auto c1 = character(reps[0], t.x);
  if (rs.type == GroupType::A2) return {c1.real(), c1.imag()};
  if (std::fabs(c1.imag()) > kImagTol)
    throw std::logic_error("self-dual character has a nonreal value");
  if (rs.rank == 1) return {c1.real(), 0.0};
  const auto c2 = character(reps[1], t.x);
  if (std::fabs(c2.imag()) > kImagTol)
    throw std::logic_error("self-dual character has a nonreal value");
  return {c1.real(), c2.real()};
}

PointCloud shotgun(const RootSystemData& rs, std::span<const Representation> reps,
                   uint64_t seed, size_t count) {
  PointCloud cloud;
  cloud.reserve(count);
  for (const auto& t : sample_uniform(rs, seed, count)) cloud.push_back(delta(rs, reps, t));
  return cloud;
}

const char* curve_name(CurveTag tag) {
  switch (tag) {
    case CurveTag::deltoid: return "deltoid";
    case CurveTag::segment_right: return "segment_right";
    case CurveTag::segment_left: return "segment_left";
    case CurveTag::parabola: return "parabola";
    case CurveTag::cubic: return "cubic";
  }
  return "?";
}

std::vector<WallId> boundary_walls(GroupType type) {
  if (type == GroupType::A1) return {WallId::wall1};
  return {WallId::wall1, WallId::wall2, WallId::wall3};
}

namespace {

std::optional<CurveTag> wall_curve(GroupType type, WallId wall) {
  switch (type) {
    case GroupType::A1: return std::nullopt;
    case GroupType::A2: return CurveTag::deltoid;
    case GroupType::C2:
      switch (wall) {
        case WallId::wall1: return CurveTag::segment_right;
        case WallId::wall2: return CurveTag::parabola;
        case WallId::wall3: return CurveTag::segment_left;
        default: break;
      }
      break;
    case GroupType::G2:
      switch (wall) {
        case WallId::wall1:
        case WallId::wall3:
        case WallId::extended: return CurveTag::cubic;
        case WallId::wall2: return CurveTag::parabola;
      }
      break;
  }
  throw std::invalid_argument("no boundary curve for this wall");
}

}  // namespace

BoundaryCurve boundary_polyline(const RootSystemData& rs, std::span<const Representation> reps,
                                WallId wall, int segments) {
  if (segments < 2) throw std::invalid_argument("boundary_polyline: segments must be >= 2");
  const double hi = wall_param_max(rs, wall);
  BoundaryCurve curve;
  curve.wall = wall;
  curve.closed_form = wall_curve(rs.type, wall);
  curve.samples.reserve(segments + 1);
  for (int k = 0; k <= segments; ++k) {
    double t = hi * static_cast<double>(k) / static_cast<double>(segments);
    TorusPoint tp{wall_point(rs, wall, t)};
    curve.samples.emplace_back(t, delta(rs, reps, tp));
  }
  return curve;
}

double closed_form_residual(GroupType type, double x, double y, CurveTag tag) {
  switch (type) {
    case GroupType::A2:
      if (tag == CurveTag::deltoid) return deltoid_residual(x, y);
      break;
    case GroupType::C2:
      if (tag == CurveTag::segment_right) return 2.0 * x - 3.0 - y;
      if (tag == CurveTag::segment_left) return -2.0 * x - 3.0 - y;
      if (tag == CurveTag::parabola) return x * x + 4.0 - 4.0 * y;
      break;
    case GroupType::G2:
      if (tag == CurveTag::parabola) return x * x + 2.0 * x - 7.0 - 4.0 * y;
      if (tag == CurveTag::cubic)
        return y * y + 10.0 * y - 7.0 - 4.0 * x * x * x + x * x + 2.0 * x + 10.0 * x * y;
      break;
    case GroupType::A1: break;
  }
  throw std::invalid_argument("curve tag does not belong to this group");
}

Rat closed_form_residual_exact(GroupType type, const Rat& x, const Rat& y, CurveTag tag) {
  switch (type) {
    case GroupType::A2:
      if (tag == CurveTag::deltoid) return deltoid_residual_exact(x, y);
      break;
    case GroupType::C2:
      if (tag == CurveTag::segment_right) return Rat(2) * x - Rat(3) - y;
      if (tag == CurveTag::segment_left) return Rat(-2) * x - Rat(3) - y;
      if (tag == CurveTag::parabola) return x * x + Rat(4) - Rat(4) * y;
      break;
    case GroupType::G2:
      if (tag == CurveTag::parabola) return x * x + Rat(2) * x - Rat(7) - Rat(4) * y;
      if (tag == CurveTag::cubic)
        return y * y + Rat(10) * y - Rat(7) - Rat(4) * x * x * x + x * x + Rat(2) * x +
               Rat(10) * x * y;
      break;
    case GroupType::A1: break;
  }
  throw std::invalid_argument("curve tag does not belong to this group");
}

double membership(GroupType type, double x, double y) {
  const RegionSpec spec = region_spec(type);
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.curves)
    margin = std::min(margin, c.inside_sign * closed_form_residual(type, x, y, c.tag) / c.scale);
  return margin;
}

CenterSymmetry center_symmetry(GroupType type) {
  CenterSymmetry cs{type, {}};
  const std::array<double, 4> id{1, 0, 0, 1};
  cs.transforms.push_back(id);
  switch (type) {
    case GroupType::A1:
    case GroupType::C2:
      cs.transforms.push_back({-1, 0, 0, 1});
      break;
    case GroupType::A2: {
      const double c = -0.5, s = std::sqrt(3.0) / 2.0;
      cs.transforms.push_back({c, -s, s, c});   // rotation by 120 degrees
      cs.transforms.push_back({c, s, -s, c});   // rotation by 240 degrees
      break;
    }
    case GroupType::G2: break;
  }
  return cs;
}

std::vector<PortraitPoint> center_orbit(GroupType type, const PortraitPoint& p) {
  if (group_rank(type) != 2) throw std::invalid_argument("center_orbit: rank-2 groups only");
  std::vector<PortraitPoint> orbit;
  for (const auto& m : center_symmetry(type).transforms) {
    PortraitPoint q{m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
    bool dup = std::any_of(orbit.begin(), orbit.end(),
                           [&](const PortraitPoint& r) { return r.x == q.x && r.y == q.y; });
    if (!dup) orbit.push_back(q);
  }
  return orbit;
}

RegionSpec region_spec(GroupType type) {
  RegionSpec spec;
  spec.type = type;
  switch (type) {
    case GroupType::A2:
      spec.curves = {{CurveTag::deltoid, -1.0, 1.0}};
      spec.vertices = {{3.0, 0.0},
                       {-1.5, 3.0 * std::sqrt(3.0) / 2.0},
                       {-1.5, -3.0 * std::sqrt(3.0) / 2.0}};
      break;
    case GroupType::C2:
      spec.curves = {{CurveTag::segment_right, -1.0, 1.0},
                     {CurveTag::segment_left, -1.0, 1.0},
                     {CurveTag::parabola, 1.0, 4.0}};
      spec.vertices = {{4.0, 5.0}, {-4.0, 5.0}, {0.0, -3.0}};
      break;
    case GroupType::G2:
      spec.curves = {{CurveTag::parabola, -1.0, 4.0}, {CurveTag::cubic, -1.0, 1.0}};
      spec.vertices = {{7.0, 14.0}, {-2.0, 5.0}, {-1.0, -2.0}};
      break;
    case GroupType::A1:
      throw std::invalid_argument("region_spec: rank-2 groups only");
  }
  return spec;
}

}  // namespace liepic
