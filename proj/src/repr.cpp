#include "liepic/repr.hpp"

#include <algorithm>
#include <stdexcept>

#include "liepic/realmath.hpp"

namespace liepic {

const char* flavor_name(Flavor f) { return f == Flavor::complex_type ? "complex" : "self_dual"; }

namespace {

bool is_dominant(const WeightVec& w) {
  return std::all_of(w.c.begin(), w.c.end(), [](long long x) { return x >= 0; });
}

// Dominant representative of a weight under the Weyl group, by repeatedly
// reflecting at a negative coordinate. Terminates for any weight.
WeightVec dominant_rep(const RootSystemData& rs, WeightVec w) {
  for (int guard = 0; guard < 1000; ++guard) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (w.c[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return w;
    // s_i(w) = w - w_i * alpha_i
    w = w - w.c[neg] * rs.simple_roots[neg];
  }
  throw std::logic_error("dominant_rep did not terminate");
}

// Weyl dimension formula, exact rational arithmetic; used as an independent
// check on the Freudenthal totals.
long long weyl_dimension(const RootSystemData& rs, const WeightVec& lambda) {
  const WeightVec rho = rs.rho_hat();
  const WeightVec num_w = lambda + rho;
  Rat prod(1);
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    prod *= pairing(num_w, rs.positive_coroots[r]) / pairing(rho, rs.positive_coroots[r]);
  }
  if (!prod.is_integer()) throw std::logic_error("dimension formula gave a non-integer");
  return prod.num;
}

}  // namespace

Flavor flavor_of(const RootSystemData& rs, int index) {
  if (index < 1 || index > rs.rank) throw std::invalid_argument("flavor_of: bad index");
  WeightVec omega;
  omega.c.assign(rs.rank, 0);
  omega.c[index - 1] = 1;
  const WeylElement& w0 = longest_element(rs);
  WeightVec img = -1LL * w0.apply(omega);
  return img == omega ? Flavor::self_dual : Flavor::complex_type;
}

Representation fundamental_rep(const RootSystemData& rs, int index) {
  if (index < 1 || index > rs.rank) throw std::invalid_argument("fundamental_rep: bad index");
  const int n = rs.rank;
  WeightVec lambda;
  lambda.c.assign(n, 0);
  lambda.c[index - 1] = 1;

  // Dominant weights below lambda: lambda - sum k_i alpha_i with nonnegative
  // coordinates. A box bound of 12 covers every fundamental representation here.
  struct Dominant {
    WeightVec mu;
    long long level;  // sum k_i
    long long mult = 0;
  };
  std::vector<Dominant> doms;
  const long long kmax = 12;
  std::vector<long long> k(n, 0);
  while (true) {
    WeightVec mu = lambda;
    long long level = 0;
    for (int i = 0; i < n; ++i) {
      mu = mu - k[i] * rs.simple_roots[i];
      level += k[i];
    }
    if (is_dominant(mu)) doms.push_back({mu, level, 0});
    int i = 0;
    for (; i < n; ++i) {
      if (++k[i] <= kmax) break;
      k[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(doms.begin(), doms.end(), [](const Dominant& a, const Dominant& b) {
    return a.level < b.level || (a.level == b.level && a.mu < b.mu);
  });
  if (doms.empty() || !(doms[0].mu == lambda))
    throw std::logic_error("dominant weight enumeration failed");
  doms[0].mult = 1;

  auto find_mult = [&](const WeightVec& w) -> long long {
    WeightVec d = dominant_rep(rs, w);
    for (const auto& dom : doms)
      if (dom.mu == d) return dom.mult;
    return 0;
  };

  const WeightVec rho = rs.rho_hat();
  const Rat lam_norm = rs.form(lambda + rho, lambda + rho);
  for (size_t di = 1; di < doms.size(); ++di) {
    WeightVec mu = doms[di].mu;
    Rat denom = lam_norm - rs.form(mu + rho, mu + rho);
    if (!(Rat(0) < denom)) throw std::logic_error("Freudenthal denominator not positive");
    Rat num(0);
    for (const auto& alpha : rs.positive_roots) {
      for (long long kk = 1;; ++kk) {
        WeightVec nu = mu + kk * alpha;
        // Stop once nu is no longer <= lambda in the root order.
        auto diff = rs.simple_root_coords(lambda - nu);
        bool below = std::all_of(diff.begin(), diff.end(), [](const Rat& x) { return x >= Rat(0); });
        if (!below) break;
        long long m = find_mult(nu);
        if (m > 0) num += Rat(m) * rs.form(nu, alpha);
        if (kk > 50) throw std::logic_error("Freudenthal inner loop ran away");
      }
    }
    Rat mult = Rat(2) * num / denom;
    if (!mult.is_integer() || mult.num < 0)
      throw std::logic_error("Freudenthal produced a non-integer multiplicity");
    doms[di].mult = mult.num;
  }

  // Expand Weyl orbits.
  Representation rep;
  rep.type = rs.type;
  rep.index = index;
  rep.highest_weight = lambda;
  for (const auto& dom : doms) {
    if (dom.mult == 0) continue;
    for (const auto& w : rs.weyl_group) {
      WeightVec img = w.apply(dom.mu);
      auto [it, inserted] = rep.weights.emplace(img.c, dom.mult);
      if (!inserted && it->second != dom.mult)
        throw std::logic_error("inconsistent orbit multiplicity");
    }
  }

  rep.dim = 0;
  for (const auto& [w, m] : rep.weights) rep.dim += m;
  const long long dim_formula = weyl_dimension(rs, lambda);
  if (rep.dim != dim_formula)
    throw std::logic_error("Freudenthal total disagrees with the dimension formula");

  rep.flavor = flavor_of(rs, index);

  rep.flat.reserve(rep.weights.size());
  for (const auto& [w, m] : rep.weights)
    rep.flat.push_back({static_cast<double>(w[0]),
                        n > 1 ? static_cast<double>(w[1]) : 0.0,
                        static_cast<double>(m)});
  return rep;
}

template <class Real>
void character_parts(const Representation& rep, const Real* v, int rank, Real& re, Real& im) {
  const Real two_pi = 2 * realmath::pi<Real>();
  Real sum_re = 0, sum_im = 0;
  for (const auto& fw : rep.flat) {
    Real phase = Real(fw.c0) * v[0];
    if (rank > 1) phase += Real(fw.c1) * v[1];
    // Characters are invariant under coroot-lattice translations; reducing the
    // phase to [-1/2, 1/2) keeps the trig arguments well conditioned.
    phase -= realmath::r_round(phase);
    phase *= two_pi;
    sum_re += Real(fw.mult) * realmath::r_cos(phase);
    sum_im += Real(fw.mult) * realmath::r_sin(phase);
  }
  re = sum_re;
  im = sum_im;
}

template void character_parts<double>(const Representation&, const double*, int, double&, double&);
template void character_parts<long double>(const Representation&, const long double*, int,
                                           long double&, long double&);
#if LIEPIC_HAVE_FLOAT128
template void character_parts<__float128>(const Representation&, const __float128*, int,
                                          __float128&, __float128&);
#endif

std::complex<double> character(const Representation& rep, std::span<const double> v) {
  double re = 0, im = 0;
  character_parts<double>(rep, v.data(), static_cast<int>(v.size()), re, im);
  return {re, im};
}

}  // namespace liepic
