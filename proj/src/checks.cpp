#include "liepic/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <span>

#include "liepic/cli.hpp"
#include "liepic/haar.hpp"
#include "liepic/portrait.hpp"
#include "liepic/realmath.hpp"

namespace liepic {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Ctx {
  RootSystemData rs;
  std::vector<Representation> reps;
};

Ctx make_ctx(GroupType type) {
  Ctx ctx{build_root_system(type), {}};
  ctx.reps = fundamental_reps(ctx.rs);
  return ctx;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fmt9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

using Checker = std::vector<CheckResult>&;

void add(Checker out, const std::string& name, bool pass, const std::string& detail) {
  out.push_back({name, pass, detail});
}

double dist(const PortraitPoint& p, double x, double y) {
  return std::max(std::fabs(p.x - x), std::fabs(p.y - y));
}

PortraitPoint delta_at(const Ctx& c, std::vector<double> coords) {
  return delta(c.rs, c.reps, make_torus_point(c.rs, std::move(coords)));
}

std::vector<double> coweight_coords(const Ctx& c, int i, double scale) {
  std::vector<double> v(c.rs.rank);
  for (int k = 0; k < c.rs.rank; ++k) v[k] = c.rs.coweights[i].c[k].to_double() * scale;
  return v;
}

// --- criterion 1: corner values of the portraits ---------------------------

void check_vertices(Checker out, const Ctx& c) {
  const double tol = 1e-9;
  double err = 0;
  switch (c.rs.type) {
    case GroupType::A2: {
      const double s = 3.0 * std::sqrt(3.0) / 2.0;
      err = std::max(err, dist(delta_at(c, {0, 0}), 3, 0));
      err = std::max(err, dist(delta_at(c, coweight_coords(c, 0, 1)), -1.5, -s));
      err = std::max(err, dist(delta_at(c, coweight_coords(c, 1, 1)), -1.5, s));
      break;
    }
    case GroupType::C2:
      err = std::max(err, dist(delta_at(c, {0, 0}), 4, 5));
      err = std::max(err, dist(delta_at(c, coweight_coords(c, 0, 0.5)), 0, -3));
      err = std::max(err, dist(delta_at(c, coweight_coords(c, 1, 1)), -4, 5));
      break;
    case GroupType::G2:
      err = std::max(err, dist(delta_at(c, {0, 0}), 7, 14));
      err = std::max(err, dist(delta_at(c, coweight_coords(c, 0, 1.0 / 3.0)), -2, 5));
      err = std::max(err, dist(delta_at(c, coweight_coords(c, 1, 0.5)), -1, -2));
      break;
    default: return;
  }
  add(out, std::string("1. vertex reproduction [") + group_name(c.rs.type) + "]", err <= tol,
      "max err " + fmt(err));
}

// --- criterion 2: weight multisets and dimensions --------------------------

WeightMultiset expected_weights(GroupType type, int index) {
  auto pm = [](std::vector<std::vector<long long>> ws, std::vector<long long> zero_mult)
      -> WeightMultiset {
    WeightMultiset m;
    for (auto& w : ws) {
      std::vector<long long> neg;
      for (auto x : w) neg.push_back(-x);
      m[w] = 1;
      m[neg] = 1;
    }
    if (!zero_mult.empty()) m[std::vector<long long>(ws[0].size(), 0)] = zero_mult[0];
    return m;
  };
  if (type == GroupType::A1) return {{{1}, 1}, {{-1}, 1}};
  if (type == GroupType::A2) {
    if (index == 1) return {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}};
    return {{{0, 1}, 1}, {{1, -1}, 1}, {{-1, 0}, 1}};
  }
  if (type == GroupType::C2) {
    if (index == 1) return pm({{1, 0}, {-1, 1}}, {});
    return pm({{0, 1}, {2, -1}}, {1});
  }
  // G2
  if (index == 1) return pm({{1, 0}, {-1, 1}, {2, -1}}, {1});
  return pm({{0, 1}, {3, -1}, {1, 0}, {-1, 1}, {2, -1}, {-3, 2}}, {2});
}

void check_weight_lists(Checker out, const Ctx& c) {
  if (c.rs.type == GroupType::A1) return;
  bool pass = true;
  std::string detail;
  const long long dims[2][3] = {{3, 4, 7}, {3, 5, 14}};
  int col = c.rs.type == GroupType::A2 ? 0 : c.rs.type == GroupType::C2 ? 1 : 2;
  for (int i = 1; i <= 2; ++i) {
    const auto& rep = c.reps[i - 1];
    if (rep.weights != expected_weights(c.rs.type, i)) {
      pass = false;
      detail += "rho_" + std::to_string(i) + " weights differ; ";
    }
    if (rep.dim != dims[i - 1][col]) {
      pass = false;
      detail += "rho_" + std::to_string(i) + " dim " + std::to_string(rep.dim) + "; ";
    }
  }
  if (pass) detail = "dims " + std::to_string(c.reps[0].dim) + "," + std::to_string(c.reps[1].dim);
  add(out, std::string("2. weight lists [") + group_name(c.rs.type) + "]", pass, detail);
}

// --- criterion 3: representation flavors -----------------------------------

void check_flavors(Checker out, const Ctx& c) {
  if (c.rs.type == GroupType::A1) return;
  const Flavor want =
      c.rs.type == GroupType::A2 ? Flavor::complex_type : Flavor::self_dual;
  bool pass = true;
  for (int i = 1; i <= c.rs.rank; ++i)
    pass = pass && flavor_of(c.rs, i) == want && c.reps[i - 1].flavor == want;
  add(out, std::string("3. flavors [") + group_name(c.rs.type) + "]", pass,
      std::string("expected ") + flavor_name(want));
}

// --- criterion 4: boundary closed forms ------------------------------------

void check_boundary_forms(Checker out, const Ctx& c) {
  if (c.rs.type == GroupType::A1) return;
  const double tol = 1e-9;
  double worst = 0;
  auto walls = boundary_walls(c.rs.type);
  if (c.rs.type == GroupType::G2) walls.push_back(WallId::extended);
  for (WallId wall : walls) {
    auto curve = boundary_polyline(c.rs, c.reps, wall, 512);
    for (const auto& [t, p] : curve.samples)
      worst = std::max(worst,
                       std::fabs(closed_form_residual(c.rs.type, p.x, p.y, *curve.closed_form)));
  }
  add(out, std::string("4. boundary closed forms [") + group_name(c.rs.type) + "]", worst <= tol,
      "max residual " + fmt(worst));
}

// --- criterion 5: cloud containment and wall-scan ranges -------------------

void check_cloud_and_ranges(Checker out, const Ctx& c) {
  if (c.rs.type == GroupType::A1) return;
  const size_t count = 1'000'000;
  const auto cloud = shotgun(c.rs, c.reps, 20240521, count);
  double min_margin = std::numeric_limits<double>::infinity();
  double min_x = 1e300, max_x = -1e300, min_y = 1e300;
  for (const auto& p : cloud) {
    min_margin = std::min(min_margin, membership(c.rs.type, p.x, p.y));
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  bool pass = min_margin >= -1e-7;
  std::string detail = "min membership " + fmt(min_margin);
  for (WallId wall : boundary_walls(c.rs.type)) {
    auto curve = boundary_polyline(c.rs, c.reps, wall, 4096);
    for (const auto& [t, p] : curve.samples) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
    }
  }
  const double tol = 1e-6;
  if (c.rs.type == GroupType::C2) {
    pass = pass && std::fabs(min_x + 4) <= tol && std::fabs(max_x - 4) <= tol;
    detail += "; x range [" + fmt(min_x) + ", " + fmt(max_x) + "]";
  } else if (c.rs.type == GroupType::G2) {
    pass = pass && std::fabs(min_x + 2) <= tol && std::fabs(max_x - 7) <= tol &&
           std::fabs(min_y + 2) <= tol;
    detail += "; x range [" + fmt(min_x) + ", " + fmt(max_x) + "], min y " + fmt(min_y);
  }
  add(out, std::string("5. cloud containment and ranges [") + group_name(c.rs.type) + "]", pass,
      detail);
}

// --- criterion 6: rank-1 base case ------------------------------------------

void check_rank1(Checker out, const Ctx& c) {
  if (c.rs.type != GroupType::A1) return;
  double worst = 0, min_x = 1e300, max_x = -1e300;
  const int n = 4096;
  for (int k = 0; k <= n; ++k) {
    double a = 0.5 * k / n;  // the alcove is [0, 1/2]
    double x = delta_at(c, {a}).x;
    worst = std::max(worst, std::fabs(x - 2 * std::cos(2 * kPi * a)));
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
  }
  bool pass = worst <= 1e-12 && std::fabs(min_x + 2) <= 1e-12 && std::fabs(max_x - 2) <= 1e-12;
  add(out, "6. rank-1 base case [A1]", pass,
      "max err " + fmt(worst) + ", range [" + fmt(min_x) + ", " + fmt(max_x) + "]");
}

// --- criterion 7: discriminant values and density maxima --------------------

void check_density_max(Checker out, const Ctx& c) {
  if (c.rs.type != GroupType::C2 && c.rs.type != GroupType::G2) return;
  bool pass = true;
  std::string detail;
  if (c.rs.type == GroupType::C2) {
    pass = discriminant_exact(GroupType::C2, Rat(0), Rat(-1, 3)) == Rat(1024, 27);
    if (!pass) detail += "D(0,-1/3) wrong; ";
    auto res = max_density(GroupType::C2);
    const double want = 8.0 / (kPi * kPi * std::pow(3.0, 1.5));
    double err = std::fabs(res.value - want);
    pass = pass && err <= 1e-8;
    pass = pass && std::fabs(res.argmax_torus.x[1] - 0.5) <= 1e-6;
    pass = pass && std::fabs(res.argmax_torus.x[0] - 0.348) <= 5e-4;
    pass = pass && dist(res.argmax_xy, 0, -1.0 / 3.0) <= 1e-6;
    detail += "phi_max err " + fmt(err) + ", argmax (" + fmt9(res.argmax_torus.x[0]) + ", " +
              fmt9(res.argmax_torus.x[1]) + ")";
  } else {
    pass = discriminant_exact(GroupType::G2, Rat(-1, 5), Rat(-2, 5)) == Rat(186624, 3125);
    if (!pass) detail += "D(-1/5,-2/5) wrong; ";
    auto res = max_density(GroupType::G2);
    const double want = 4.0 * 27.0 / (kPi * kPi * std::pow(5.0, 2.5));
    double err = std::fabs(res.value - want);
    pass = pass && err <= 1e-8;
    pass = pass && dist(res.argmax_xy, -0.2, -0.4) <= 1e-6;
    detail += "phi_max err " + fmt(err) + ", image (" + fmt(res.argmax_xy.x) + ", " +
              fmt(res.argmax_xy.y) + ")";
  }
  add(out, std::string("7. discriminant and density maxima [") + group_name(c.rs.type) + "]",
      pass, detail);
}

// --- criterion 8: density normalization -------------------------------------

void check_density_norm(Checker out, const Ctx& c) {
  if (c.rs.type != GroupType::C2 && c.rs.type != GroupType::G2) return;
  auto grid = density_grid(c.rs, default_bbox(c.rs.type), 1000, 1000);
  double err = std::fabs(grid.integral - 1.0);
  bool pass = err <= 0.01;
  std::string detail = "integral " + fmt(grid.integral);
  if (c.rs.type == GroupType::G2) {
    double partial = 0;
    const double dx = (grid.bbox.x1 - grid.bbox.x0) / grid.nx;
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int ix = 0; ix < grid.nx; ++ix) {
        double x = grid.bbox.x0 + (ix + 0.5) * dx;
        if (x >= 6.0) partial += grid.values[static_cast<size_t>(iy) * grid.nx + ix];
      }
    partial *= grid.cell_area;
    pass = pass && partial < 1e-5;
    detail += ", arm integral (x>=6) " + fmt(partial);
  }
  add(out, std::string("8. density normalization [") + group_name(c.rs.type) + "]", pass, detail);
}

// --- criterion 9: cross-validation of the two density routes ----------------

#if LIEPIC_HAVE_FLOAT128
using CrossReal = __float128;
#else
using CrossReal = long double;
#endif

void check_cross_validation(Checker out, const Ctx& c) {
  if (c.rs.type != GroupType::C2 && c.rs.type != GroupType::G2) return;
  const auto points = sample_uniform(c.rs, 777001, 10'000);
  const CrossReal two_pi = 2 * realmath::pi<CrossReal>();
  const CrossReal scale = two_pi * two_pi * two_pi * two_pi;  // (2 pi)^{2n}, n = 2
  double worst = 0;
  for (const auto& t : points) {
    CrossReal v[2] = {CrossReal(t.x[0]), CrossReal(t.x[1])};
    CrossReal rad = density_radicand<CrossReal>(c.rs, v);
    CrossReal phi = realmath::r_sqrt(realmath::r_abs(rad)) / (two_pi * two_pi);
    CrossReal lhs = scale * phi * phi;
    CrossReal re1, im1, re2, im2;
    character_parts<CrossReal>(c.reps[0], v, 2, re1, im1);
    character_parts<CrossReal>(c.reps[1], v, 2, re2, im2);
    CrossReal rhs = realmath::r_abs(discriminant_eval<CrossReal>(c.rs.type, re1, re2));
    CrossReal denom = lhs > rhs ? lhs : rhs;
    if (denom == 0) continue;
    double rel = static_cast<double>(realmath::r_abs(lhs - rhs) / denom);
    worst = std::max(worst, rel);
  }
  add(out, std::string("9. density formula cross-validation [") + group_name(c.rs.type) + "]",
      worst <= 1e-8, "max rel err " + fmt(worst));
}

// --- criterion 10: invariance suite -----------------------------------------

void check_invariances(Checker out, const Ctx& c) {
  const double tol = 1e-9;
  const int n_points = 1000;
  const auto points = sample_uniform(c.rs, 424242, n_points);
  SplitMix64 rng(999331);
  double worst = 0;

  auto chars_at = [&](std::span<const double> v) {
    std::vector<std::complex<double>> cs;
    for (const auto& rep : c.reps) cs.push_back(character(rep, v));
    return cs;
  };

  for (const auto& t : points) {
    const auto base = chars_at(t.x);

    // Weyl invariance under every group element (dual action on coordinates).
    for (const auto& w : c.rs.weyl_group) {
      auto moved = w.apply(std::span<const double>(t.x));
      auto cs = chars_at(moved);
      for (size_t i = 0; i < cs.size(); ++i) worst = std::max(worst, std::abs(cs[i] - base[i]));
    }

    // Coroot-lattice translation invariance.
    {
      std::vector<double> shifted = t.x;
      for (auto& x : shifted) x += static_cast<double>(rng.next_u64() % 7) - 3.0;
      auto cs = chars_at(shifted);
      for (size_t i = 0; i < cs.size(); ++i) worst = std::max(worst, std::abs(cs[i] - base[i]));
    }

    // Center action: shifting by a central coweight multiplies each character
    // by the fixed phase e^{2 pi i <omega_i, c>}.
    {
      int central = c.rs.type == GroupType::A2 ? 0 : c.rs.type == GroupType::C2 ? 1 : -1;
      if (c.rs.type == GroupType::A1) central = 0;
      if (central >= 0) {
        std::vector<double> shifted = t.x;
        for (int k = 0; k < c.rs.rank; ++k) shifted[k] += c.rs.coweights[central].c[k].to_double();
        auto cs = chars_at(shifted);
        for (size_t i = 0; i < cs.size(); ++i) {
          Rat pr = pairing(c.reps[i].highest_weight, c.rs.coweights[central]);
          const double ang = 2 * kPi * pr.to_double();
          std::complex<double> phase{std::cos(ang), std::sin(ang)};
          worst = std::max(worst, std::abs(cs[i] - phase * base[i]));
        }
        // Portrait level: the shift acts by one of the center symmetries
        // (rotation by 240 degrees for A2, x -> -x for C2 and A1).
        if (c.rs.rank == 2) {
          PortraitPoint p = delta(c.rs, c.reps, make_torus_point(c.rs, t.x));
          PortraitPoint q = delta(c.rs, c.reps, make_torus_point(c.rs, shifted));
          const auto sym = center_symmetry(c.rs.type);
          const auto& m = sym.transforms[c.rs.type == GroupType::A2 ? 2 : 1];
          worst = std::max(worst, std::fabs(q.x - (m[0] * p.x + m[1] * p.y)));
          worst = std::max(worst, std::fabs(q.y - (m[2] * p.x + m[3] * p.y)));
        }
      }
    }

    // A2: complex conjugation reflects the portrait about the horizontal axis.
    if (c.rs.type == GroupType::A2) {
      std::vector<double> negated = t.x;
      for (auto& x : negated) x = -x;
      PortraitPoint p = delta(c.rs, c.reps, make_torus_point(c.rs, t.x));
      PortraitPoint q = delta(c.rs, c.reps, make_torus_point(c.rs, negated));
      worst = std::max(worst, std::fabs(q.x - p.x));
      worst = std::max(worst, std::fabs(q.y + p.y));
    }
  }
  add(out, std::string("10. invariance suite [") + group_name(c.rs.type) + "]", worst <= tol,
      "max err " + fmt(worst));
}

// --- criterion 11: CLI determinism -------------------------------------------

void check_determinism(Checker out, const Ctx& c) {
  if (c.rs.type != GroupType::G2) return;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path f1 = dir / "liepic_det_a.csv";
  const fs::path f2 = dir / "liepic_det_b.csv";
  bool pass = true;
  std::string detail;
  for (const auto& f : {f1, f2}) {
    int rc = run_cli({"sample", "--group", "G2", "--count", "1000", "--seed", "7", "--out",
                      f.string()});
    if (rc != 0) {
      pass = false;
      detail = "sample run failed";
    }
  }
  if (pass) {
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      return std::string(std::istreambuf_iterator<char>(in), {});
    };
    std::string a = slurp(f1), b = slurp(f2);
    pass = !a.empty() && a == b;
    detail = pass ? std::to_string(a.size()) + " bytes, identical" : "outputs differ";
  }
  std::error_code ec;
  fs::remove(f1, ec);
  fs::remove(f2, ec);
  add(out, "11. sample determinism [G2]", pass, detail);
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(std::optional<GroupType> group) {
  std::vector<CheckResult> out;
  const GroupType all[] = {GroupType::A1, GroupType::A2, GroupType::C2, GroupType::G2};
  for (GroupType g : all) {
    if (group && *group != g) continue;
    Ctx ctx = make_ctx(g);
    check_vertices(out, ctx);
    check_weight_lists(out, ctx);
    check_flavors(out, ctx);
    check_boundary_forms(out, ctx);
    check_cloud_and_ranges(out, ctx);
    check_rank1(out, ctx);
    check_density_max(out, ctx);
    check_density_norm(out, ctx);
    check_cross_validation(out, ctx);
    check_invariances(out, ctx);
    check_determinism(out, ctx);
  }
  return out;
}

std::string format_check_line(const CheckResult& r) {
  return (r.pass ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : " -- " + r.detail);
}

}  // namespace liepic
