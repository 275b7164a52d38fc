#include "liepic/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace liepic {

namespace {

double mod1(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // guard against floor rounding at negative epsilons
  return r;
}

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

TorusPoint make_torus_point(const RootSystemData& rs, std::vector<double> coords) {
  if (static_cast<int>(coords.size()) != rs.rank)
    throw std::invalid_argument("torus point has wrong rank");
  for (auto& c : coords) c = mod1(c);
  return TorusPoint{std::move(coords)};
}

uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t sub_seed(uint64_t seed, uint64_t part) {
  return mix64(seed + (part + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<TorusPoint> sample_uniform(const RootSystemData& rs, uint64_t seed, size_t count) {
  SplitMix64 rng(seed);
  std::vector<TorusPoint> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    std::vector<double> x(rs.rank);
    for (int j = 0; j < rs.rank; ++j) x[j] = rng.next_double();
    out.push_back(TorusPoint{std::move(x)});
  }
  return out;
}

Alcove alcove(const RootSystemData& rs) {
  Alcove a;
  a.type = rs.type;
  CorootVec origin;
  origin.c.assign(rs.rank, Rat(0));
  a.vertices.push_back(origin);
  for (int i = 0; i < rs.rank; ++i)
    a.vertices.push_back(Rat(1, rs.highest_root_coeffs[i]) * rs.coweights[i]);
  return a;
}

double wall_param_max(const RootSystemData& rs, WallId wall) {
  switch (wall) {
    case WallId::wall1: return 1.0 / static_cast<double>(rs.highest_root_coeffs[0]);
    case WallId::wall2:
      if (rs.rank < 2) throw std::invalid_argument("wall 2 requires rank 2");
      return 1.0 / static_cast<double>(rs.highest_root_coeffs[1]);
    case WallId::wall3:
      if (rs.rank < 2) throw std::invalid_argument("wall 3 requires rank 2");
      return 1.0;
    case WallId::extended:
      if (rs.type != GroupType::G2)
        throw std::invalid_argument("the extended wall exists only for G2");
      return 0.5;
  }
  throw std::invalid_argument("bad wall id");
}

CorootVec wall_point_exact(const RootSystemData& rs, WallId wall, const Rat& t) {
  if (t < Rat(0)) throw std::invalid_argument("wall parameter below range");
  switch (wall) {
    case WallId::wall1:
    case WallId::wall2: {
      int i = wall == WallId::wall1 ? 0 : 1;
      if (i >= rs.rank) throw std::invalid_argument("wall index exceeds rank");
      if (Rat(1, rs.highest_root_coeffs[i]) < t)
        throw std::invalid_argument("wall parameter above range");
      return t * rs.coweights[i];
    }
    case WallId::wall3: {
      if (rs.rank < 2) throw std::invalid_argument("wall 3 requires rank 2");
      if (Rat(1) < t) throw std::invalid_argument("wall parameter above range");
      CorootVec a = Rat(1, rs.highest_root_coeffs[0]) * rs.coweights[0];
      CorootVec b = Rat(1, rs.highest_root_coeffs[1]) * rs.coweights[1];
      CorootVec out;
      out.c.resize(rs.rank);
      for (int k = 0; k < rs.rank; ++k) out.c[k] = (Rat(1) - t) * a.c[k] + t * b.c[k];
      return out;
    }
    case WallId::extended: {
      if (rs.type != GroupType::G2)
        throw std::invalid_argument("the extended wall exists only for G2");
      if (Rat(1, 2) < t) throw std::invalid_argument("wall parameter above range");
      return t * rs.coweights[0];
    }
  }
  throw std::invalid_argument("bad wall id");
}

std::vector<double> wall_point(const RootSystemData& rs, WallId wall, double t) {
  const double hi = wall_param_max(rs, wall);
  if (!(t >= 0.0 && t <= hi)) throw std::invalid_argument("wall parameter out of range");
  std::vector<double> out(rs.rank, 0.0);
  auto add = [&](double s, const CorootVec& v) {
    for (int k = 0; k < rs.rank; ++k) out[k] += s * v.c[k].to_double();
  };
  switch (wall) {
    case WallId::wall1:
    case WallId::extended: add(t, rs.coweights[0]); break;
    case WallId::wall2: add(t, rs.coweights[1]); break;
    case WallId::wall3: {
      add((1.0 - t) / static_cast<double>(rs.highest_root_coeffs[0]), rs.coweights[0]);
      add(t / static_cast<double>(rs.highest_root_coeffs[1]), rs.coweights[1]);
      break;
    }
  }
  return out;
}

std::vector<double> reduce_to_alcove(const RootSystemData& rs, std::span<const double> v) {
  if (static_cast<int>(v.size()) != rs.rank)
    throw std::invalid_argument("reduce_to_alcove: wrong rank");
  std::vector<double> x(v.begin(), v.end());
  for (auto& c : x) c = mod1(c);

  std::vector<double> highest_coroot_d(rs.rank);
  for (int k = 0; k < rs.rank; ++k) highest_coroot_d[k] = rs.highest_coroot.c[k].to_double();

  const int cap = 10 * (rs.rank + 1) * 100;
  for (int iter = 0; iter < cap; ++iter) {
    bool changed = false;
    for (int i = 0; i < rs.rank; ++i) {
      double p = pairing(rs.simple_roots[i], x);
      if (p < 0.0) {
        // s_i(v) = v - <alpha_i, v> alpha_i^v
        x[i] -= p;
        changed = true;
      }
    }
    double ph = pairing(rs.highest_root, x);
    if (ph > 1.0) {
      // affine reflection across <highest_root, .> = 1
      for (int k = 0; k < rs.rank; ++k) x[k] -= (ph - 1.0) * highest_coroot_d[k];
      changed = true;
    }
    if (!changed) return x;
  }
  throw std::runtime_error("reduce_to_alcove: iteration cap exceeded");
}

}  // namespace liepic
