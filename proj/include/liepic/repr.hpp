#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "liepic/rootsys.hpp"

namespace liepic {

enum class Flavor { complex_type, self_dual };

const char* flavor_name(Flavor f);

// Weight multiset of a representation: omega coordinates -> multiplicity.
using WeightMultiset = std::map<std::vector<long long>, long long>;

// A fundamental irreducible representation. Immutable after construction;
// character evaluation is pure and safe to call concurrently.
struct Representation {
  GroupType type = GroupType::A1;
  int index = 1;  // 1-based
  WeightVec highest_weight;
  WeightMultiset weights;
  long long dim = 0;
  Flavor flavor = Flavor::self_dual;

  // Flattened copy of `weights` for fast character sums.
  struct FlatWeight {
    double c0, c1;
    double mult;
  };
  std::vector<FlatWeight> flat;
};

// Weight multiset by Freudenthal's recursion from highest weight omega_i,
// cross-checked against the Weyl dimension formula (throws std::logic_error
// on mismatch).
Representation fundamental_rep(const RootSystemData& rs, int index);

// Complex iff -w0(omega_i) != omega_i.
Flavor flavor_of(const RootSystemData& rs, int index);

// Character value sum_mu m(mu) e^{2 pi i <mu, v>} at the torus coordinate
// vector v (simple-coroot basis).
std::complex<double> character(const Representation& rep, std::span<const double> v);

// Generic-precision real/imaginary parts of the character; used for the
// high-precision cross-validation of the density formulas.
template <class Real>
void character_parts(const Representation& rep, const Real* v, int rank, Real& re, Real& im);

}  // namespace liepic
