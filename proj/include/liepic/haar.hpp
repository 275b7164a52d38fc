#pragma once

#include <span>
#include <vector>

#include "liepic/portrait.hpp"
#include "liepic/realmath.hpp"

namespace liepic {

struct BBox {
  double x0, x1, y0, y1;
};

// Frames used for plots and density grids, padded around the portrait corners.
BBox default_bbox(GroupType type);

// Pointwise density of the pushforward of Haar measure under delta, evaluated
// on torus coordinates:
//   phi = sqrt(|prod over positive roots of (2 cos(2 pi <alpha, v>) - 2)|) / (2 pi)^n.
// Defined only when -1 lies in the Weyl group, i.e. for C2 and G2; other
// groups throw std::invalid_argument.
double density_at(const RootSystemData& rs, const TorusPoint& t);

// The radicand prod (2 cos(2 pi <alpha, v>) - 2), evaluated as
// prod -4 sin^2(pi <alpha, v>) with the pairing reduced to [-1/2, 1/2] first;
// both forms are identical in exact arithmetic and the latter loses no
// precision near the vanishing locus.
template <class Real>
Real density_radicand(const RootSystemData& rs, const Real* v);

// Polynomial rewriting D(x, y) of the radicand as a function of the portrait
// coordinates; vanishes exactly on the boundary curves. C2 and G2 only.
double discriminant(GroupType type, double x, double y);
Rat discriminant_exact(GroupType type, const Rat& x, const Rat& y);

template <class Real>
Real discriminant_eval(GroupType type, Real x, Real y);

// Rectangular grid of density values phi(x, y) = sqrt(|D(x, y)|) / (2 pi)^2,
// zero outside the portrait region, evaluated at cell centers. Rows are
// independent work units; `values` is row-major by y then x.
struct DensityGrid {
  GroupType type;
  BBox bbox;
  int nx = 0, ny = 0;
  std::vector<double> values;
  double cell_area = 0;
  double integral = 0;  // cell_area * sum of values
};

DensityGrid density_grid(const RootSystemData& rs, const BBox& bbox, int nx, int ny);

struct MaxDensityResult {
  PortraitPoint argmax_xy;
  TorusPoint argmax_torus;
  double value = 0;  // phi at the maximum
};

// Maximum of the density over the portrait: coarse scan of the alcove
// followed by successive grid refinement (step shrinking by 10 per round until
// below 1e-10) in alcove coordinates. C2 and G2 only.
MaxDensityResult max_density(GroupType type);

}  // namespace liepic
