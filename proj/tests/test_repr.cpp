#include <doctest.h>

#include <cmath>
#include <complex>

#include "liepic/portrait.hpp"
#include "liepic/repr.hpp"
#include "liepic/torus.hpp"

using namespace liepic;

namespace {

constexpr double kTwoPi = 6.283185307179586;

WeightMultiset plus_minus(std::vector<std::vector<long long>> ws, long long zero_mult) {
  WeightMultiset m;
  for (auto& w : ws) {
    std::vector<long long> neg;
    for (auto x : w) neg.push_back(-x);
    m[w] = 1;
    m[neg] = 1;
  }
  if (zero_mult > 0) m[std::vector<long long>(ws[0].size(), 0)] = zero_mult;
  return m;
}

}  // namespace

TEST_CASE("fundamental weight multisets") {
  auto a1 = build_root_system(GroupType::A1);
  CHECK(fundamental_rep(a1, 1).weights == WeightMultiset{{{1}, 1}, {{-1}, 1}});

  auto a2 = build_root_system(GroupType::A2);
  CHECK(fundamental_rep(a2, 1).weights ==
        WeightMultiset{{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}});
  CHECK(fundamental_rep(a2, 2).weights ==
        WeightMultiset{{{0, 1}, 1}, {{1, -1}, 1}, {{-1, 0}, 1}});

  auto c2 = build_root_system(GroupType::C2);
  CHECK(fundamental_rep(c2, 1).weights == plus_minus({{1, 0}, {-1, 1}}, 0));
  CHECK(fundamental_rep(c2, 2).weights == plus_minus({{0, 1}, {2, -1}}, 1));

  auto g2 = build_root_system(GroupType::G2);
  CHECK(fundamental_rep(g2, 1).weights == plus_minus({{1, 0}, {-1, 1}, {2, -1}}, 1));
  CHECK(fundamental_rep(g2, 2).weights ==
        plus_minus({{0, 1}, {3, -1}, {1, 0}, {-1, 1}, {2, -1}, {-3, 2}}, 2));
}

TEST_CASE("dimensions") {
  CHECK(fundamental_rep(build_root_system(GroupType::A1), 1).dim == 2);
  auto a2 = build_root_system(GroupType::A2);
  CHECK(fundamental_rep(a2, 1).dim == 3);
  CHECK(fundamental_rep(a2, 2).dim == 3);
  auto c2 = build_root_system(GroupType::C2);
  CHECK(fundamental_rep(c2, 1).dim == 4);
  CHECK(fundamental_rep(c2, 2).dim == 5);
  auto g2 = build_root_system(GroupType::G2);
  CHECK(fundamental_rep(g2, 1).dim == 7);
  CHECK(fundamental_rep(g2, 2).dim == 14);
}

TEST_CASE("flavors") {
  auto a2 = build_root_system(GroupType::A2);
  CHECK(flavor_of(a2, 1) == Flavor::complex_type);
  CHECK(flavor_of(a2, 2) == Flavor::complex_type);
  auto c2 = build_root_system(GroupType::C2);
  CHECK(flavor_of(c2, 1) == Flavor::self_dual);
  CHECK(flavor_of(c2, 2) == Flavor::self_dual);
  auto g2 = build_root_system(GroupType::G2);
  CHECK(flavor_of(g2, 1) == Flavor::self_dual);
  CHECK(flavor_of(g2, 2) == Flavor::self_dual);
  CHECK(flavor_of(build_root_system(GroupType::A1), 1) == Flavor::self_dual);
}

TEST_CASE("weight multisets are Weyl invariant and dominated by the highest weight") {
  for (GroupType t : {GroupType::A1, GroupType::A2, GroupType::C2, GroupType::G2}) {
    auto rs = build_root_system(t);
    for (int i = 1; i <= rs.rank; ++i) {
      auto rep = fundamental_rep(rs, i);
      CHECK(rep.weights.at(rep.highest_weight.c) == 1);
      long long total = 0;
      for (const auto& [wc, m] : rep.weights) {
        total += m;
        WeightVec w{wc};
        for (const auto& elem : rs.weyl_group) CHECK(rep.weights.at(elem.apply(w).c) == m);
        // lambda - mu is a nonnegative integer combination of simple roots.
        auto diff = rs.simple_root_coords(rep.highest_weight - w);
        for (const auto& x : diff) {
          CHECK(x.is_integer());
          CHECK(x.num >= 0);
        }
      }
      CHECK(total == rep.dim);
    }
  }
}

TEST_CASE("A1 character is 2 cos(2 pi a)") {
  auto rs = build_root_system(GroupType::A1);
  auto rep = fundamental_rep(rs, 1);
  for (int k = 0; k <= 200; ++k) {
    double a = k / 200.0;
    auto c = character(rep, std::vector<double>{a});
    CHECK(std::fabs(c.real() - 2 * std::cos(kTwoPi * a)) <= 1e-12);
    CHECK(std::fabs(c.imag()) <= 1e-12);
  }
}

TEST_CASE("characters at the identity equal the dimension") {
  for (GroupType t : {GroupType::A1, GroupType::A2, GroupType::C2, GroupType::G2}) {
    auto rs = build_root_system(t);
    std::vector<double> zero(rs.rank, 0.0);
    for (int i = 1; i <= rs.rank; ++i) {
      auto rep = fundamental_rep(rs, i);
      auto c = character(rep, zero);
      CHECK(c.real() == doctest::Approx(static_cast<double>(rep.dim)).epsilon(1e-14));
      CHECK(c.imag() == 0.0);
    }
  }
}

TEST_CASE("C2 chi_2 along the first coweight is 4 cos(2 pi t) + 1") {
  auto rs = build_root_system(GroupType::C2);
  auto rep2 = fundamental_rep(rs, 2);
  for (int k = 0; k <= 64; ++k) {
    double t = k / 64.0;
    std::vector<double> v = {t, t};  // t * omega_1^v = t * (1, 1)
    auto c = character(rep2, v);
    CHECK(std::fabs(c.real() - (4 * std::cos(kTwoPi * t) + 1)) <= 1e-12);
    CHECK(std::fabs(c.imag()) <= 1e-12);
  }
}

TEST_CASE("character invariance properties") {
  for (GroupType t : {GroupType::A1, GroupType::A2, GroupType::C2, GroupType::G2}) {
    auto rs = build_root_system(t);
    auto reps = fundamental_reps(rs);
    auto points = sample_uniform(rs, 31337, 200);
    for (const auto& p : points) {
      for (const auto& rep : reps) {
        auto base = character(rep, p.x);
        CHECK(std::abs(base) <= rep.dim + 1e-10);
        if (rep.flavor == Flavor::self_dual) CHECK(std::fabs(base.imag()) <= 1e-10);

        for (const auto& w : rs.weyl_group) {
          auto moved = w.apply(std::span<const double>(p.x));
          CHECK(std::abs(character(rep, moved) - base) <= 1e-10);
        }

        std::vector<double> shifted = p.x;
        shifted[0] += 2.0;
        if (rs.rank > 1) shifted[1] -= 3.0;
        CHECK(std::abs(character(rep, shifted) - base) <= 1e-10);
      }
    }
  }
}

TEST_CASE("center cosets act by fixed phases") {
  auto c2 = build_root_system(GroupType::C2);
  auto reps = fundamental_reps(c2);
  auto points = sample_uniform(c2, 99, 100);
  for (const auto& p : points) {
    std::vector<double> shifted = {p.x[0] + 0.5, p.x[1] + 1.0};  // + omega_2^v
    auto c1 = character(reps[0], p.x), c1s = character(reps[0], shifted);
    auto ch2 = character(reps[1], p.x), c2s = character(reps[1], shifted);
    CHECK(std::abs(c1s + c1) <= 1e-10);   // rho_1 flips sign
    CHECK(std::abs(c2s - ch2) <= 1e-10);  // rho_2 is fixed
  }

  auto a2 = build_root_system(GroupType::A2);
  auto areps = fundamental_reps(a2);
  const std::complex<double> w1(std::cos(kTwoPi * 2 / 3), std::sin(kTwoPi * 2 / 3));
  const std::complex<double> w2(std::cos(kTwoPi / 3), std::sin(kTwoPi / 3));
  for (const auto& p : sample_uniform(a2, 77, 100)) {
    std::vector<double> shifted = {p.x[0] + 2.0 / 3.0, p.x[1] + 1.0 / 3.0};  // + omega_1^v
    CHECK(std::abs(character(areps[0], shifted) - w1 * character(areps[0], p.x)) <= 1e-10);
    CHECK(std::abs(character(areps[1], shifted) - w2 * character(areps[1], p.x)) <= 1e-10);
  }
}

TEST_CASE("bad representation indices throw") {
  auto rs = build_root_system(GroupType::A1);
  CHECK_THROWS_AS(fundamental_rep(rs, 0), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_rep(rs, 2), std::invalid_argument);
  CHECK_THROWS_AS(flavor_of(rs, 3), std::invalid_argument);
}
