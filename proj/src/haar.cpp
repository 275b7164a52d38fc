#include "liepic/haar.hpp"

#include <cmath>
#include <stdexcept>

namespace liepic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_density_group(GroupType type) {
  if (type != GroupType::C2 && type != GroupType::G2)
    throw std::invalid_argument(
        "the Haar density formula assumes -1 lies in the Weyl group, which holds only for C2 "
        "and G2 here");
}

}  // namespace

BBox default_bbox(GroupType type) {
  switch (type) {
    case GroupType::A1: return {-2.5, 2.5, -1.0, 1.0};
    case GroupType::A2: return {-3.5, 3.5, -3.5, 3.5};
    case GroupType::C2: return {-4.5, 4.5, -3.5, 5.5};
    case GroupType::G2: return {-2.5, 7.5, -2.5, 14.5};
  }
  throw std::invalid_argument("bad group");
}

template <class Real>
Real density_radicand(const RootSystemData& rs, const Real* v) {
  Real prod = 1;
  for (const auto& alpha : rs.positive_roots) {
    Real p = 0;
    for (int i = 0; i < rs.rank; ++i) p += Real(static_cast<double>(alpha.c[i])) * v[i];
    p -= realmath::r_round(p);
    Real s = realmath::r_sin(realmath::pi<Real>() * p);
    prod *= Real(-4) * s * s;
  }
  return prod;
}

template double density_radicand<double>(const RootSystemData&, const double*);
template long double density_radicand<long double>(const RootSystemData&, const long double*);
#if LIEPIC_HAVE_FLOAT128
template __float128 density_radicand<__float128>(const RootSystemData&, const __float128*);
#endif

double density_at(const RootSystemData& rs, const TorusPoint& t) {
  require_density_group(rs.type);
  double rad = density_radicand<double>(rs, t.x.data());
  return std::sqrt(std::fabs(rad)) / (kTwoPi * kTwoPi);
}

template <class Real>
Real discriminant_eval(GroupType type, Real x, Real y) {
  if (type == GroupType::C2)
    return (x * x + 4 - 4 * y) * (-2 * x - 3 - y) * (2 * x - 3 - y);
  if (type == GroupType::G2)
    return (x * x + 2 * x - 7 - 4 * y) *
           (y * y + 10 * y - 7 - 4 * x * x * x + x * x + 2 * x + 10 * x * y);
  throw std::invalid_argument("discriminant is defined for C2 and G2 only");
}

template double discriminant_eval<double>(GroupType, double, double);
template long double discriminant_eval<long double>(GroupType, long double, long double);
#if LIEPIC_HAVE_FLOAT128
template __float128 discriminant_eval<__float128>(GroupType, __float128, __float128);
#endif

double discriminant(GroupType type, double x, double y) {
  return discriminant_eval<double>(type, x, y);
}

Rat discriminant_exact(GroupType type, const Rat& x, const Rat& y) {
  if (type == GroupType::C2)
    return (x * x + Rat(4) - Rat(4) * y) * (Rat(-2) * x - Rat(3) - y) * (Rat(2) * x - Rat(3) - y);
  if (type == GroupType::G2)
    return (x * x + Rat(2) * x - Rat(7) - Rat(4) * y) *
           (y * y + Rat(10) * y - Rat(7) - Rat(4) * x * x * x + x * x + Rat(2) * x +
            Rat(10) * x * y);
  throw std::invalid_argument("discriminant is defined for C2 and G2 only");
}

DensityGrid density_grid(const RootSystemData& rs, const BBox& bbox, int nx, int ny) {
  require_density_group(rs.type);
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("density_grid: resolution must be positive");
  DensityGrid grid;
  grid.type = rs.type;
  grid.bbox = bbox;
  grid.nx = nx;
  grid.ny = ny;
  grid.values.assign(static_cast<size_t>(nx) * ny, 0.0);
  const double dx = (bbox.x1 - bbox.x0) / nx;
  const double dy = (bbox.y1 - bbox.y0) / ny;
  grid.cell_area = dx * dy;
  double sum = 0;
  for (int iy = 0; iy < ny; ++iy) {
    const double y = bbox.y0 + (iy + 0.5) * dy;
    double row_sum = 0;
    for (int ix = 0; ix < nx; ++ix) {
      const double x = bbox.x0 + (ix + 0.5) * dx;
      if (membership(rs.type, x, y) < 0) continue;
      double phi = std::sqrt(std::fabs(discriminant(rs.type, x, y))) / (kTwoPi * kTwoPi);
      grid.values[static_cast<size_t>(iy) * nx + ix] = phi;
      row_sum += phi;
    }
    sum += row_sum;
  }
  grid.integral = grid.cell_area * sum;
  return grid;
}

namespace {

bool in_alcove(const RootSystemData& rs, const double* v) {
  for (const auto& alpha : rs.simple_roots) {
    double p = 0;
    for (int i = 0; i < rs.rank; ++i) p += static_cast<double>(alpha.c[i]) * v[i];
    if (p < 0) return false;
  }
  double ph = 0;
  for (int i = 0; i < rs.rank; ++i) ph += static_cast<double>(rs.highest_root.c[i]) * v[i];
  return ph <= 1.0;
}

}  // namespace

MaxDensityResult max_density(GroupType type) {
  require_density_group(type);
  const RootSystemData rs = build_root_system(type);

  double best[2] = {0, 0};
  double best_val = -1;
  auto consider = [&](double a, double b) {
    double v[2] = {a, b};
    if (!in_alcove(rs, v)) return;
    double val = std::fabs(density_radicand<double>(rs, v));
    if (val > best_val) {
      best_val = val;
      best[0] = a;
      best[1] = b;
    }
  };

  // Coarse scan of the alcove's bounding box [0,1]^2, then shrink the step by
  // 10 around the best point until the step drops below 1e-10.
  const int coarse = 200;
  for (int i = 0; i <= coarse; ++i)
    for (int j = 0; j <= coarse; ++j)
      consider(static_cast<double>(i) / coarse, static_cast<double>(j) / coarse);

  double step = 1.0 / coarse;
  while (step > 1e-10) {
    const double next = step / 10.0;
    const double cx = best[0], cy = best[1];
    for (int i = -20; i <= 20; ++i)
      for (int j = -20; j <= 20; ++j) consider(cx + i * next, cy + j * next);
    step = next;
  }

  MaxDensityResult res;
  res.argmax_torus = TorusPoint{{best[0], best[1]}};
  res.value = std::sqrt(best_val) / (kTwoPi * kTwoPi);
  const auto reps = fundamental_reps(rs);
  res.argmax_xy = delta(rs, reps, res.argmax_torus);
  return res;
}

}  // namespace liepic
