#include "liepic/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liepic/checks.hpp"
#include "liepic/haar.hpp"
#include "liepic/io.hpp"
#include "liepic/portrait.hpp"

namespace liepic {

namespace {

GroupType group_or_throw(const std::string& label) {
  auto g = parse_group(label);
  if (!g) throw CLI::ValidationError("--group", "unknown group label '" + label + "'");
  return *g;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void print_info(std::ostream& os, GroupType type) {
  const RootSystemData rs = build_root_system(type);
  os << "group " << group_name(type) << "\n";
  os << "rank " << rs.rank << "\n";
  os << "cartan matrix:\n";
  for (int i = 0; i < rs.rank; ++i) {
    os << " ";
    for (int j = 0; j < rs.rank; ++j) os << " " << rs.cartan[i][j];
    os << "\n";
  }
  auto print_weight = [&](const WeightVec& w) {
    for (int i = 0; i < rs.rank; ++i) os << (i ? " " : "") << w.c[i];
  };
  auto print_coroot = [&](const CorootVec& v) {
    for (int i = 0; i < rs.rank; ++i) os << (i ? " " : "") << v.c[i].str();
  };
  os << "simple roots (omega basis):\n";
  for (int j = 0; j < rs.rank; ++j) {
    os << "  alpha" << j + 1 << ": ";
    print_weight(rs.simple_roots[j]);
    os << "\n";
  }
  os << "positive roots (omega basis):\n";
  for (const auto& r : rs.positive_roots) {
    os << "  ";
    print_weight(r);
    os << "\n";
  }
  os << "highest root: ";
  print_weight(rs.highest_root);
  os << "\n";
  os << "highest root coefficients: ";
  for (int i = 0; i < rs.rank; ++i) os << (i ? " " : "") << rs.highest_root_coeffs[i];
  os << "\n";
  os << "coweights (coroot basis):\n";
  for (int i = 0; i < rs.rank; ++i) {
    os << "  omega" << i + 1 << "v: ";
    print_coroot(rs.coweights[i]);
    os << "\n";
  }
  os << "weyl group order: " << rs.weyl_group.size() << "\n";
  os << "alcove vertices (coroot basis):\n";
  for (const auto& v : alcove(rs).vertices) {
    os << "  ";
    print_coroot(v);
    os << "\n";
  }
  os << "fundamental representations:\n";
  for (int i = 1; i <= rs.rank; ++i) {
    const Representation rep = fundamental_rep(rs, i);
    os << "  rho" << i << ": dim " << rep.dim << ", flavor " << flavor_name(rep.flavor)
       << ", highest weight ";
    print_weight(rep.highest_weight);
    os << "\n";
    os << "  weights (omega coordinates, multiplicity):\n";
    for (const auto& [w, m] : rep.weights) {
      os << "    ";
      for (size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
      os << " (" << m << ")\n";
    }
  }
}

BBox parse_bbox(const std::string& s) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(parse_double(item));
  if (vals.size() != 4 || vals[0] >= vals[1] || vals[2] >= vals[3])
    throw CLI::ValidationError("--bbox", "expected x0,x1,y0,y1 with x0<x1 and y0<y1");
  return {vals[0], vals[1], vals[2], vals[3]};
}

std::pair<int, int> parse_grid(const std::string& s) {
  auto comma = s.find(',');
  int nx = 0, ny = 0;
  try {
    if (comma == std::string::npos) {
      nx = ny = std::stoi(s);
    } else {
      nx = std::stoi(s.substr(0, comma));
      ny = std::stoi(s.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "expected NX or NX,NY");
  }
  if (nx <= 0 || ny <= 0) throw CLI::ValidationError("--grid", "resolution must be positive");
  return {nx, ny};
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"portraits of the compact rank-2 Lie groups: point clouds, boundary curves, and "
               "Haar densities"};
  app.name("liepic");
  app.require_subcommand(1);

  std::string group_label, out_path, format = "csv", bbox_str, grid_str = "512";
  uint64_t seed = 1;
  long long count = 10000;
  int segments = 512;

  auto add_group = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--group", group_label, "group label: A1, A2, C2 (= B2), or G2");
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file path")->required();
    cmd->add_option("--format", format, "output format: csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));
  };

  CLI::App* info = app.add_subcommand("info", "print root system and representation data");
  add_group(info);

  CLI::App* sample = app.add_subcommand("sample", "draw a Monte-Carlo point cloud of the portrait");
  add_group(sample);
  sample->add_option("--count", count, "number of points")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "64-bit generator seed");
  add_out(sample);

  CLI::App* boundary = app.add_subcommand("boundary", "trace the boundary curves of the portrait");
  add_group(boundary);
  boundary->add_option("--segments", segments, "segments per wall (>= 2)");
  add_out(boundary);

  CLI::App* density = app.add_subcommand("density", "Haar pushforward density on a grid (C2, G2)");
  add_group(density);
  density->add_option("--grid", grid_str, "grid resolution NX or NX,NY");
  density->add_option("--bbox", bbox_str, "frame x0,x1,y0,y1 (default per group)");
  add_out(density);

  CLI::App* check = app.add_subcommand("check", "run the verification suite");
  add_group(check, /*required=*/false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e);
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (info->parsed()) {
      print_info(std::cout, group_or_throw(group_label));
      return 0;
    }

    if (sample->parsed()) {
      const GroupType type = group_or_throw(group_label);
      const RootSystemData rs = build_root_system(type);
      const auto reps = fundamental_reps(rs);
      const PointCloud cloud = shotgun(rs, reps, seed, static_cast<size_t>(count));
      if (format == "csv") {
        write_file(out_path, write_cloud_csv(cloud, rs.rank == 1));
      } else {
        write_file(out_path, render_cloud_svg(cloud, default_bbox(type), RenderSpec{}));
      }
      return 0;
    }

    if (boundary->parsed()) {
      const GroupType type = group_or_throw(group_label);
      if (segments < 2) throw CLI::ValidationError("--segments", "must be >= 2");
      const RootSystemData rs = build_root_system(type);
      const auto reps = fundamental_reps(rs);
      std::vector<BoundaryCurve> curves;
      for (WallId wall : boundary_walls(type))
        curves.push_back(boundary_polyline(rs, reps, wall, segments));
      if (format == "csv") {
        write_file(out_path, write_boundary_csv(curves, rs.rank == 1));
      } else {
        write_file(out_path, render_boundary_svg(curves, default_bbox(type), RenderSpec{}));
      }
      return 0;
    }

    if (density->parsed()) {
      const GroupType type = group_or_throw(group_label);
      const RootSystemData rs = build_root_system(type);
      auto [nx, ny] = parse_grid(grid_str);
      const BBox bbox = bbox_str.empty() ? default_bbox(type) : parse_bbox(bbox_str);
      const DensityGrid grid = density_grid(rs, bbox, nx, ny);
      if (format == "csv") {
        write_file(out_path, write_grid_csv(grid));
      } else {
        write_file(out_path, render_grid_svg(grid, RenderSpec{}));
      }
      return 0;
    }

    if (check->parsed()) {
      std::optional<GroupType> filter;
      if (!group_label.empty()) filter = group_or_throw(group_label);
      const auto results = run_acceptance_checks(filter);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << format_check_line(r) << "\n";
        all_pass = all_pass && r.pass;
      }
      std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
      return all_pass ? 0 : 2;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace liepic
