#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liepic/rational.hpp"

namespace liepic {

// The four compact simply connected groups of rank <= 2. B2 and C2 name the
// same group; the single label C2 is used throughout.
enum class GroupType { A1, A2, C2, G2 };

const char* group_name(GroupType type);
std::optional<GroupType> parse_group(const std::string& label);
int group_rank(GroupType type);

// Integer coordinates in the fundamental-weight basis (omega_1, ..., omega_n).
// Pairing with a CorootVec is the plain dot product of coordinate vectors.
struct WeightVec {
  std::vector<long long> c;

  bool operator==(const WeightVec&) const = default;
  bool operator<(const WeightVec& o) const { return c < o.c; }
};

// Exact rational coordinates in the simple-coroot basis (alpha_1^v, ..., alpha_n^v).
// Integer-coordinate vectors form the coroot lattice.
struct CorootVec {
  std::vector<Rat> c;

  bool operator==(const CorootVec&) const = default;
};

WeightVec operator+(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a, const WeightVec& b);
WeightVec operator*(long long k, const WeightVec& a);
CorootVec operator*(const Rat& k, const CorootVec& a);

// <weight, coroot> pairing; exact.
Rat pairing(const WeightVec& w, const CorootVec& v);
// <weight, v> for a real coordinate vector v in the simple-coroot basis.
double pairing(const WeightVec& w, std::span<const double> v);

using IntMat = std::vector<std::vector<long long>>;

// One Weyl group element. `wmat` acts on weight (omega) coordinates, `cmat`
// is the dual action on coroot-basis coordinates, so pairings are preserved.
struct WeylElement {
  IntMat wmat;
  IntMat cmat;

  WeightVec apply(const WeightVec& w) const;
  CorootVec apply(const CorootVec& v) const;
  std::vector<double> apply(std::span<const double> v) const;
  bool operator==(const WeylElement& o) const { return wmat == o.wmat; }
};

WeylElement compose(const WeylElement& a, const WeylElement& b);

// Exact lattice data for one root system, fully derived from the Cartan
// matrix at construction time. Immutable afterwards; safe for concurrent
// reads from any number of evaluation tasks.
struct RootSystemData {
  GroupType type = GroupType::A1;
  int rank = 1;

  // cartan[i][j] = <alpha_j, alpha_i^v>; simple root alpha_j has omega
  // coordinates equal to column j.
  IntMat cartan;
  std::vector<WeightVec> simple_roots;
  std::vector<WeightVec> positive_roots;
  std::vector<CorootVec> positive_coroots;  // aligned with positive_roots
  WeightVec highest_root;
  std::vector<long long> highest_root_coeffs;  // a_i with highest = sum a_i alpha_i
  CorootVec highest_coroot;
  std::vector<CorootVec> coweights;  // omega_i^v, dual basis to the simple roots
  std::vector<WeylElement> weyl_group;

  // Invariant bilinear form, normalized so short roots have squared length 2:
  // root_norm_half[i] = (alpha_i, alpha_i)/2, gram_omega is the Gram matrix
  // of the form in omega coordinates.
  std::vector<long long> root_norm_half;
  std::vector<std::vector<Rat>> gram_omega;

  WeightVec rho_hat() const;  // half-sum of positive roots = sum of omega_i

  // (a, b) under the invariant form, both in omega coordinates.
  Rat form(const WeightVec& a, const WeightVec& b) const;

  // Coefficients b with w = sum b_i alpha_i (exact; w need not be a root).
  std::vector<Rat> simple_root_coords(const WeightVec& w) const;
};

// Builds the full data set for one type. Construction self-checks the derived
// highest root and coweights against known tables and throws std::logic_error
// on mismatch.
RootSystemData build_root_system(GroupType type);

// The unique element sending every positive root to a negative root.
// Throws std::logic_error if the generated group contains no such element.
const WeylElement& longest_element(const RootSystemData& rs);

}  // namespace liepic
