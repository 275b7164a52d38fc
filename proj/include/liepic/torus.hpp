#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liepic/rootsys.hpp"

namespace liepic {

// A point of the maximal torus: coordinates in [0,1)^n with respect to the
// simple-coroot basis, i.e. exp(sum x_i alpha_i^v).
struct TorusPoint {
  std::vector<double> x;
};

TorusPoint make_torus_point(const RootSystemData& rs, std::vector<double> coords);

// SplitMix64: 64-bit state advanced by a fixed increment, output mixed by two
// xor-multiply rounds. Doubles take the top 53 bits of each output.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next_u64();
  double next_double();  // uniform in [0,1)

 private:
  uint64_t state_;
};

// Sub-seed for partition `part` of a run seeded with `seed`; partitioned
// sampling draws partition k from SplitMix64(sub_seed(seed, k)).
uint64_t sub_seed(uint64_t seed, uint64_t part);

// Deterministic i.i.d. uniform torus points: coordinates are consecutive
// SplitMix64 doubles, point by point.
std::vector<TorusPoint> sample_uniform(const RootSystemData& rs, uint64_t seed, size_t count);

// Closed fundamental alcove of the affine Weyl group: vertices 0 and
// omega_i^v / a_i, where a_i are the highest-root coefficients.
struct Alcove {
  GroupType type;
  std::vector<CorootVec> vertices;  // [0, omega_1^v/a_1, (omega_2^v/a_2)]
};

Alcove alcove(const RootSystemData& rs);

// Walls of the alcove. Walls 1 and 2 pass through the origin along the
// fundamental coweights; wall 3 joins the two nonzero vertices. The extended
// wall (G2 only) continues wall 1 to t = 1/2, which sweeps the images of
// walls 1 and 3 in one pass.
enum class WallId { wall1 = 1, wall2 = 2, wall3 = 3, extended = 4 };

// Inclusive parameter range [0, hi] of a wall.
double wall_param_max(const RootSystemData& rs, WallId wall);

// Wall point at parameter t, exact rational coordinates. Throws
// std::invalid_argument for an out-of-range t, a wall index not present at
// this rank, or `extended` outside G2.
CorootVec wall_point_exact(const RootSystemData& rs, WallId wall, const Rat& t);

// Same in double arithmetic (for dense tracing).
std::vector<double> wall_point(const RootSystemData& rs, WallId wall, double t);

// Unique representative of v in the closed alcove, by coroot-lattice
// translation and reflection across violated walls. Throws std::runtime_error
// if the iteration cap (10 * (rank+1) * 100 steps) is exceeded.
std::vector<double> reduce_to_alcove(const RootSystemData& rs, std::span<const double> v);

}  // namespace liepic
