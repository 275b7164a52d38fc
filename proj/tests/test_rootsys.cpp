#include <doctest.h>

#include <array>
#include <set>

#include "liepic/rootsys.hpp"

using namespace liepic;

namespace {

const GroupType kAll[] = {GroupType::A1, GroupType::A2, GroupType::C2, GroupType::G2};

// Independent 2x2 closure oracle, built from hardcoded Cartan matrices rather
// than library data.
using M2 = std::array<std::array<long long, 2>, 2>;

M2 mul(const M2& a, const M2& b) {
  M2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

std::set<M2> closure_oracle(const M2& cartan) {
  // Reflection s_i on omega coordinates: identity with column i replaced by
  // e_i - (column i of the Cartan matrix).
  std::array<M2, 2> gens;
  for (int i = 0; i < 2; ++i) {
    M2 m{{{1, 0}, {0, 1}}};
    for (int k = 0; k < 2; ++k) m[k][i] -= cartan[k][i];
    gens[i] = m;
  }
  std::set<M2> seen{M2{{{1, 0}, {0, 1}}}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<M2> next = seen;
    for (const auto& a : seen)
      for (const auto& g : gens)
        if (next.insert(mul(g, a)).second) grew = true;
    seen = next;
  }
  return seen;
}

M2 cartan_of(GroupType t) {
  switch (t) {
    case GroupType::A2: return {{{2, -1}, {-1, 2}}};
    case GroupType::C2: return {{{2, -2}, {-1, 2}}};
    case GroupType::G2: return {{{2, -3}, {-1, 2}}};
    default: return {};
  }
}

}  // namespace

TEST_CASE("group sizes and root counts") {
  const size_t pos[] = {1, 3, 4, 6};
  const size_t weyl[] = {2, 6, 8, 12};
  int k = 0;
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    CHECK(rs.positive_roots.size() == pos[k]);
    CHECK(rs.weyl_group.size() == weyl[k]);
    CHECK(rs.positive_coroots.size() == rs.positive_roots.size());
    ++k;
  }
}

TEST_CASE("highest root and coweights match the reference values") {
  auto a2 = build_root_system(GroupType::A2);
  CHECK(a2.highest_root_coeffs == std::vector<long long>{1, 1});
  CHECK(a2.coweights[0] == CorootVec{{Rat(2, 3), Rat(1, 3)}});
  CHECK(a2.coweights[1] == CorootVec{{Rat(1, 3), Rat(2, 3)}});

  auto c2 = build_root_system(GroupType::C2);
  CHECK(c2.highest_root_coeffs == std::vector<long long>{2, 1});
  CHECK(c2.coweights[0] == CorootVec{{Rat(1), Rat(1)}});
  CHECK(c2.coweights[1] == CorootVec{{Rat(1, 2), Rat(1)}});
  CHECK(c2.highest_root == WeightVec{{2, 0}});

  auto g2 = build_root_system(GroupType::G2);
  CHECK(g2.highest_root_coeffs == std::vector<long long>{3, 2});
  CHECK(g2.coweights[0] == CorootVec{{Rat(2), Rat(3)}});
  CHECK(g2.coweights[1] == CorootVec{{Rat(1), Rat(2)}});
  CHECK(g2.highest_root == WeightVec{{0, 1}});

  auto a1 = build_root_system(GroupType::A1);
  CHECK(a1.positive_roots.size() == 1);
  CHECK(a1.coweights[0] == CorootVec{{Rat(1, 2)}});
}

TEST_CASE("simple reflections square to the identity") {
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    for (int i = 0; i < rs.rank; ++i) {
      // Reconstruct s_i from its action on the omega basis.
      WeylElement si;
      si.wmat.assign(rs.rank, std::vector<long long>(rs.rank, 0));
      si.cmat = si.wmat;
      for (int k = 0; k < rs.rank; ++k) {
        si.wmat[k][k] = 1;
        si.cmat[k][k] = 1;
      }
      for (int k = 0; k < rs.rank; ++k) si.wmat[k][i] -= rs.cartan[k][i];
      for (int j = 0; j < rs.rank; ++j) si.cmat[i][j] -= rs.cartan[j][i];
      auto sq = compose(si, si);
      for (int r = 0; r < rs.rank; ++r)
        for (int cidx = 0; cidx < rs.rank; ++cidx) {
          CHECK(sq.wmat[r][cidx] == (r == cidx ? 1 : 0));
          CHECK(sq.cmat[r][cidx] == (r == cidx ? 1 : 0));
        }
    }
  }
}

TEST_CASE("rank-2 Weyl groups agree with an independent closure") {
  for (GroupType t : {GroupType::A2, GroupType::C2, GroupType::G2}) {
    auto rs = build_root_system(t);
    auto oracle = closure_oracle(cartan_of(t));
    REQUIRE(oracle.size() == rs.weyl_group.size());
    for (const auto& w : rs.weyl_group) {
      M2 m{{{w.wmat[0][0], w.wmat[0][1]}, {w.wmat[1][0], w.wmat[1][1]}}};
      CHECK(oracle.count(m) == 1);
    }
  }
}

TEST_CASE("pairings of roots with coroot-lattice vectors are integers") {
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    // A few lattice vectors including negatives.
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b) {
        CorootVec q;
        q.c.assign(rs.rank, Rat(0));
        q.c[0] = Rat(a);
        if (rs.rank > 1) q.c[1] = Rat(b);
        for (const auto& root : rs.positive_roots) CHECK(pairing(root, q).is_integer());
      }
  }
}

TEST_CASE("highest root pairs with coweights to its coefficients") {
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    for (int i = 0; i < rs.rank; ++i)
      CHECK(pairing(rs.highest_root, rs.coweights[i]) == Rat(rs.highest_root_coeffs[i]));
  }
}

TEST_CASE("coweight duality is exact") {
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(pairing(rs.simple_roots[j], rs.coweights[i]) == Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("longest element: criterion, involution, and known matrices") {
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    const auto& w0 = longest_element(rs);

    // Defining criterion: w0 maps every positive root to a negative one.
    int count_with_property = 0;
    for (const auto& w : rs.weyl_group) {
      bool all_neg = true;
      for (const auto& alpha : rs.positive_roots) {
        WeightVec img = -1LL * w.apply(alpha);
        bool is_pos = false;
        for (const auto& beta : rs.positive_roots) is_pos = is_pos || beta == img;
        all_neg = all_neg && is_pos;
      }
      if (all_neg) ++count_with_property;
    }
    CHECK(count_with_property == 1);

    auto sq = compose(w0, w0);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) CHECK(sq.wmat[i][j] == (i == j ? 1 : 0));

    if (t == GroupType::C2 || t == GroupType::G2) {
      for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) CHECK(w0.wmat[i][j] == (i == j ? -1 : 0));
    }
    if (t == GroupType::A2) {
      // w0 swaps the fundamental weights up to sign.
      WeightVec omega1{{1, 0}}, omega2{{0, 1}};
      CHECK(w0.apply(omega1) == -1LL * omega2);
      CHECK(w0.apply(omega2) == -1LL * omega1);
    }
  }
}

TEST_CASE("invariant form normalizes short roots to squared length 2") {
  for (GroupType t : kAll) {
    auto rs = build_root_system(t);
    Rat min_norm = rs.form(rs.positive_roots[0], rs.positive_roots[0]);
    for (const auto& r : rs.positive_roots) {
      Rat n = rs.form(r, r);
      if (n < min_norm) min_norm = n;
      // The coroot pairing <alpha, alpha^v> is always 2.
    }
    CHECK(min_norm == Rat(2));
  }
}

TEST_CASE("group labels parse, including the B2 synonym") {
  CHECK(parse_group("C2") == GroupType::C2);
  CHECK(parse_group("B2") == GroupType::C2);
  CHECK(parse_group("g2") == GroupType::G2);
  CHECK(!parse_group("D4").has_value());
  CHECK(group_rank(GroupType::A1) == 1);
  CHECK(group_rank(GroupType::G2) == 2);
}
