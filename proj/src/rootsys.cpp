#include "liepic/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace liepic {

const char* group_name(GroupType type) {
  switch (type) {
    case GroupType::A1: return "A1";
    case GroupType::A2: return "A2";
    case GroupType::C2: return "C2";
    case GroupType::G2: return "G2";
  }
  return "?";
}

std::optional<GroupType> parse_group(const std::string& label) {
  if (label == "A1" || label == "a1") return GroupType::A1;
  if (label == "A2" || label == "a2") return GroupType::A2;
  if (label == "C2" || label == "c2" || label == "B2" || label == "b2") return GroupType::C2;
  if (label == "G2" || label == "g2") return GroupType::G2;
  return std::nullopt;
}

int group_rank(GroupType type) { return type == GroupType::A1 ? 1 : 2; }

WeightVec operator+(const WeightVec& a, const WeightVec& b) {
  WeightVec r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

WeightVec operator-(const WeightVec& a, const WeightVec& b) {
  WeightVec r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

WeightVec operator*(long long k, const WeightVec& a) {
  WeightVec r = a;
  for (auto& x : r.c) x *= k;
  return r;
}

CorootVec operator*(const Rat& k, const CorootVec& a) {
  CorootVec r = a;
  for (auto& x : r.c) x = x * k;
  return r;
}

Rat pairing(const WeightVec& w, const CorootVec& v) {
  Rat s;
  for (size_t i = 0; i < w.c.size(); ++i) s += Rat(w.c[i]) * v.c[i];
  return s;
}

double pairing(const WeightVec& w, std::span<const double> v) {
  double s = 0;
  for (size_t i = 0; i < w.c.size(); ++i) s += static_cast<double>(w.c[i]) * v[i];
  return s;
}

WeightVec WeylElement::apply(const WeightVec& w) const {
  const size_t n = w.c.size();
  WeightVec r;
  r.c.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.c[i] += wmat[i][j] * w.c[j];
  return r;
}

CorootVec WeylElement::apply(const CorootVec& v) const {
  const size_t n = v.c.size();
  CorootVec r;
  r.c.assign(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.c[i] += Rat(cmat[i][j]) * v.c[j];
  return r;
}

std::vector<double> WeylElement::apply(std::span<const double> v) const {
  const size_t n = v.size();
  std::vector<double> r(n, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[i] += static_cast<double>(cmat[i][j]) * v[j];
  return r;
}

namespace {

IntMat identity_mat(int n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const size_t n = a.size();
  IntMat r(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Gauss-Jordan inverse of a small rational matrix.
std::vector<std::vector<Rat>> rat_inverse(const std::vector<std::vector<Rat>>& m) {
  const size_t n = m.size();
  std::vector<std::vector<Rat>> a = m;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw std::logic_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

IntMat cartan_matrix(GroupType type) {
  // cartan[i][j] = <alpha_j, alpha_i^v>, Bourbaki numbering (arrow toward
  // node 1, so alpha_1 is short for C2 and G2).
  switch (type) {
    case GroupType::A1: return {{2}};
    case GroupType::A2: return {{2, -1}, {-1, 2}};
    case GroupType::C2: return {{2, -2}, {-1, 2}};
    case GroupType::G2: return {{2, -3}, {-1, 2}};
  }
  throw std::logic_error("unreachable");
}

struct ExpectedData {
  std::vector<long long> highest_coeffs;
  std::vector<CorootVec> coweights;
};

// Known highest-root coefficients and fundamental coweights; construction
// recomputes them from the Cartan matrix and aborts on any mismatch.
ExpectedData expected_data(GroupType type) {
  switch (type) {
    case GroupType::A1:
      return {{1}, {CorootVec{{Rat(1, 2)}}}};
    case GroupType::A2:
      return {{1, 1},
              {CorootVec{{Rat(2, 3), Rat(1, 3)}}, CorootVec{{Rat(1, 3), Rat(2, 3)}}}};
    case GroupType::C2:
      return {{2, 1}, {CorootVec{{Rat(1), Rat(1)}}, CorootVec{{Rat(1, 2), Rat(1)}}}};
    case GroupType::G2:
      return {{3, 2}, {CorootVec{{Rat(2), Rat(3)}}, CorootVec{{Rat(1), Rat(2)}}}};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

WeightVec RootSystemData::rho_hat() const {
  WeightVec r;
  r.c.assign(rank, 1);
  return r;
}

Rat RootSystemData::form(const WeightVec& a, const WeightVec& b) const {
  Rat s;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += Rat(a.c[i]) * gram_omega[i][j] * Rat(b.c[j]);
  return s;
}

std::vector<Rat> RootSystemData::simple_root_coords(const WeightVec& w) const {
  // Solve A b = c where columns of the Cartan matrix are the simple roots.
  std::vector<std::vector<Rat>> a(rank, std::vector<Rat>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) a[i][j] = Rat(cartan[i][j]);
  auto ainv = rat_inverse(a);
  std::vector<Rat> b(rank, Rat(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) b[i] += ainv[i][j] * Rat(w.c[j]);
  return b;
}

RootSystemData build_root_system(GroupType type) {
  RootSystemData rs;
  rs.type = type;
  rs.rank = group_rank(type);
  rs.cartan = cartan_matrix(type);
  const int n = rs.rank;

  rs.simple_roots.resize(n);
  for (int j = 0; j < n; ++j) {
    rs.simple_roots[j].c.assign(n, 0);
    for (int i = 0; i < n; ++i) rs.simple_roots[j].c[i] = rs.cartan[i][j];
  }

  // Simple reflections: s_i on weight coordinates replaces column i of the
  // identity by e_i - alpha_i; the coroot-side matrix is the dual action.
  std::vector<WeylElement> gens(n);
  for (int i = 0; i < n; ++i) {
    IntMat w = identity_mat(n);
    IntMat c = identity_mat(n);
    for (int k = 0; k < n; ++k) w[k][i] -= rs.cartan[k][i];
    for (int j = 0; j < n; ++j) c[i][j] -= rs.cartan[j][i];
    gens[i] = WeylElement{std::move(w), std::move(c)};
  }

  // Closure under composition.
  std::vector<WeylElement> group{WeylElement{identity_mat(n), identity_mat(n)}};
  std::set<IntMat> seen{group[0].wmat};
  std::deque<WeylElement> todo(group.begin(), group.end());
  while (!todo.empty()) {
    WeylElement cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      WeylElement next = compose(g, cur);
      if (seen.insert(next.wmat).second) {
        group.push_back(next);
        todo.push_back(next);
        if (group.size() > 64) throw std::logic_error("Weyl closure did not terminate");
      }
    }
  }
  rs.weyl_group = std::move(group);

  const size_t expected_order = type == GroupType::A1   ? 2
                                : type == GroupType::A2 ? 6
                                : type == GroupType::C2 ? 8
                                                        : 12;
  if (rs.weyl_group.size() != expected_order)
    throw std::logic_error("unexpected Weyl group order for " + std::string(group_name(type)));

  // Positive roots: Weyl orbit of the simple roots with nonnegative
  // simple-root coefficients.
  std::set<WeightVec> pos;
  for (const auto& w : rs.weyl_group)
    for (const auto& a : rs.simple_roots) pos.insert(w.apply(a));
  rs.positive_roots.clear();
  for (const auto& r : pos) {
    auto b = rs.simple_root_coords(r);
    bool nonneg = true;
    for (const auto& x : b) {
      if (!x.is_integer()) throw std::logic_error("non-integral root coefficients");
      if (x.num < 0) nonneg = false;
    }
    if (nonneg) rs.positive_roots.push_back(r);
  }

  // Invariant form: d_i = (alpha_i, alpha_i)/2, fixed by d_i A_ij = d_j A_ji
  // with the short root normalized to squared length 2.
  rs.root_norm_half.assign(n, 1);
  if (n == 2) {
    // d_1 * A_12 = d_2 * A_21; both off-diagonal entries are negative.
    long long p = -rs.cartan[0][1];
    long long q = -rs.cartan[1][0];
    long long g = std::gcd(p, q);
    rs.root_norm_half = {q / g, p / g};
  }

  {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = Rat(rs.cartan[i][j]);
    auto ainv = rat_inverse(a);
    // Gram matrix in omega coordinates: diag(d) * A^{-1}.
    rs.gram_omega.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rs.gram_omega[i][j] = Rat(rs.root_norm_half[i]) * ainv[i][j];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rs.gram_omega[i][j] != rs.gram_omega[j][i])
          throw std::logic_error("invariant form is not symmetric");
    // Coweights: columns of (A^T)^{-1} = rows of A^{-1}.
    rs.coweights.resize(n);
    for (int i = 0; i < n; ++i) {
      rs.coweights[i].c.resize(n);
      for (int k = 0; k < n; ++k) rs.coweights[i].c[k] = ainv[i][k];
    }
  }

  // Coroot of each positive root: alpha^v = (2/(alpha,alpha)) sum b_j d_j alpha_j^v.
  rs.positive_coroots.resize(rs.positive_roots.size());
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const auto& alpha = rs.positive_roots[r];
    auto b = rs.simple_root_coords(alpha);
    Rat norm = rs.form(alpha, alpha);
    CorootVec cv;
    cv.c.resize(n);
    for (int j = 0; j < n; ++j) cv.c[j] = Rat(2) * b[j] * Rat(rs.root_norm_half[j]) / norm;
    if (pairing(alpha, cv) != Rat(2)) throw std::logic_error("coroot normalization failed");
    rs.positive_coroots[r] = std::move(cv);
  }

  // Highest root: componentwise maximum of the simple-root coefficients.
  {
    size_t best = 0;
    Rat best_height;
    std::vector<std::vector<Rat>> coeffs(rs.positive_roots.size());
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
      coeffs[r] = rs.simple_root_coords(rs.positive_roots[r]);
      Rat h;
      for (const auto& x : coeffs[r]) h += x;
      if (r == 0 || best_height < h) {
        best = r;
        best_height = h;
      }
    }
    for (size_t r = 0; r < rs.positive_roots.size(); ++r)
      for (int j = 0; j < n; ++j)
        if (coeffs[best][j] < coeffs[r][j])
          throw std::logic_error("no dominant highest root found");
    rs.highest_root = rs.positive_roots[best];
    rs.highest_coroot = rs.positive_coroots[best];
    rs.highest_root_coeffs.resize(n);
    for (int j = 0; j < n; ++j) rs.highest_root_coeffs[j] = coeffs[best][j].num;
  }

  // Cross-check derived data against the known tables.
  const auto expect = expected_data(type);
  if (rs.highest_root_coeffs != expect.highest_coeffs)
    throw std::logic_error("highest-root coefficients disagree with reference data");
  for (int i = 0; i < n; ++i)
    if (!(rs.coweights[i] == expect.coweights[i]))
      throw std::logic_error("fundamental coweights disagree with reference data");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // <alpha_j, omega_i^v> = delta_ij.
      Rat p = pairing(rs.simple_roots[j], rs.coweights[i]);
      if (p != Rat(i == j ? 1 : 0)) throw std::logic_error("coweight duality failed");
    }

  const size_t expected_pos = type == GroupType::A1   ? 1
                              : type == GroupType::A2 ? 3
                              : type == GroupType::C2 ? 4
                                                      : 6;
  if (rs.positive_roots.size() != expected_pos)
    throw std::logic_error("unexpected number of positive roots");

  return rs;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  return WeylElement{mat_mul(a.wmat, b.wmat), mat_mul(a.cmat, b.cmat)};
}

const WeylElement& longest_element(const RootSystemData& rs) {
  for (const auto& w : rs.weyl_group) {
    bool all_negative = true;
    for (const auto& alpha : rs.positive_roots) {
      WeightVec img = w.apply(alpha);
      // img must be the negative of some positive root.
      WeightVec neg = -1LL * img;
      if (std::find(rs.positive_roots.begin(), rs.positive_roots.end(), neg) ==
          rs.positive_roots.end()) {
        all_negative = false;
        break;
      }
    }
    if (all_negative) return w;
  }
  throw std::logic_error("no longest element found; Weyl closure is broken");
}

}  // namespace liepic
