#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "liepic/io.hpp"

using namespace liepic;

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Pulls every numeric token out of attribute values like points="a,b c,d".
std::vector<double> extract_numbers(const std::string& text, const std::string& attr) {
  std::vector<double> out;
  size_t pos = 0;
  while ((pos = text.find(attr + "=\"", pos)) != std::string::npos) {
    pos += attr.size() + 2;
    size_t end = text.find('"', pos);
    std::string body = text.substr(pos, end - pos);
    size_t i = 0;
    while (i < body.size()) {
      size_t j = body.find_first_of(" ,", i);
      if (j == std::string::npos) j = body.size();
      if (j > i) out.push_back(parse_double(body.substr(i, j - i)));
      i = j + 1;
    }
    pos = end;
  }
  return out;
}

double attr_value(const std::string& text, size_t from, const std::string& attr) {
  size_t pos = text.find(attr + "=\"", from);
  REQUIRE(pos != std::string::npos);
  pos += attr.size() + 2;
  size_t end = text.find('"', pos);
  return parse_double(text.substr(pos, end - pos));
}

}  // namespace

TEST_CASE("doubles round trip exactly through the CSV format") {
  for (double v : {0.0, 0.5, -1.0 / 3.0, 3.0, 1e-300, -2.5e17, kPi}) {
    CHECK(parse_double(format_double(v)) == v);
  }
  // 17 significant digits in scientific notation.
  CHECK(format_double(0.5) == "5.0000000000000000e-01");
}

TEST_CASE("cloud CSV round trip") {
  PointCloud cloud = {{1.0 / 3.0, -2.0 / 7.0}, {0.0, 5.0}, {-4.0, 1e-12}};
  std::string csv = write_cloud_csv(cloud);
  CHECK(csv.substr(0, 4) == "x,y\n");
  auto back = parse_cloud_csv(csv);
  REQUIRE(back.size() == cloud.size());
  for (size_t i = 0; i < cloud.size(); ++i) {
    CHECK(back[i].x == cloud[i].x);
    CHECK(back[i].y == cloud[i].y);
  }
  CHECK(write_cloud_csv(cloud) == csv);  // byte stable

  std::string xcsv = write_cloud_csv({{0.25, 0}}, /*x_only=*/true);
  CHECK(xcsv.substr(0, 2) == "x\n");
  auto xback = parse_cloud_csv(xcsv);
  REQUIRE(xback.size() == 1);
  CHECK(xback[0].x == 0.25);
}

TEST_CASE("grid CSV layout is row-major by y then x") {
  auto rs = build_root_system(GroupType::C2);
  auto grid = density_grid(rs, BBox{-1, 1, -1, 1}, 2, 2);
  std::string csv = write_grid_csv(grid);
  REQUIRE(csv.rfind("x,y,phi\n", 0) == 0);
  size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 5);  // header + 4 cells
  // First data row is the cell at (x0 + dx/2, y0 + dy/2) = (-0.5, -0.5).
  size_t first = csv.find('\n') + 1;
  size_t comma = csv.find(',', first);
  CHECK(parse_double(csv.substr(first, comma - first)) == -0.5);
}

TEST_CASE("single point maps to the canvas center") {
  RenderSpec spec;
  spec.width = 100;
  spec.height = 100;
  spec.margin = 0;
  PointCloud cloud = {{0.0, 0.0}};
  std::string svg = render_cloud_svg(cloud, BBox{-1, 1, -1, 1}, spec);
  size_t c = svg.find("<circle");
  REQUIRE(c != std::string::npos);
  CHECK(attr_value(svg, c, "cx") == doctest::Approx(50.0));
  CHECK(attr_value(svg, c, "cy") == doctest::Approx(50.0));
  CHECK(svg.find("data-bbox") != std::string::npos);
}

TEST_CASE("A2 boundary SVG matches the hypocycloid coordinate stream") {
  auto rs = build_root_system(GroupType::A2);
  auto reps = fundamental_reps(rs);
  std::vector<BoundaryCurve> curves;
  for (WallId w : boundary_walls(GroupType::A2))
    curves.push_back(boundary_polyline(rs, reps, w, 64));
  RenderSpec spec;
  spec.margin = 40;
  const BBox bbox = default_bbox(GroupType::A2);
  std::string svg = render_boundary_svg(curves, bbox, spec);

  auto nums = extract_numbers(svg, "points");
  REQUIRE(nums.size() == 2 * 3 * 65);
  // Every emitted pixel, mapped back to data coordinates, lies on the deltoid.
  const double sx = (spec.width - 2 * spec.margin) / (bbox.x1 - bbox.x0);
  const double sy = (spec.height - 2 * spec.margin) / (bbox.y1 - bbox.y0);
  for (size_t i = 0; i < nums.size(); i += 2) {
    double px = std::round(nums[i] / 1e-6) * 1e-6;
    double py = std::round(nums[i + 1] / 1e-6) * 1e-6;
    double x = bbox.x0 + (px - spec.margin) / sx;
    double y = bbox.y0 + (spec.height - spec.margin - py) / sy;
    CHECK(std::fabs(closed_form_residual(GroupType::A2, x, y, CurveTag::deltoid)) <= 1e-3);
  }
  // The outline closes: first and last samples of consecutive walls share cusps.
  CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("G2 density SVG cells stay inside the region") {
  auto rs = build_root_system(GroupType::G2);
  auto grid = density_grid(rs, default_bbox(GroupType::G2), 60, 60);
  RenderSpec spec;
  std::string svg = render_grid_svg(grid, spec);
  const BBox bbox = grid.bbox;
  const double sx = (spec.width - 2 * spec.margin) / (bbox.x1 - bbox.x0);
  const double sy = (spec.height - 2 * spec.margin) / (bbox.y1 - bbox.y0);
  const double dx = (bbox.x1 - bbox.x0) / grid.nx;
  const double dy = (bbox.y1 - bbox.y0) / grid.ny;
  size_t pos = 0;
  int cells = 0;
  while ((pos = svg.find("<rect x=", pos)) != std::string::npos) {
    double px = attr_value(svg, pos, "x");
    double py = attr_value(svg, pos, "y");
    double x = bbox.x0 + (px - spec.margin) / sx + dx / 2;
    double y = bbox.y0 + (spec.height - spec.margin - py) / sy - dy / 2;
    CHECK(membership(GroupType::G2, x, y) >= -1e-6);
    ++cells;
    ++pos;
  }
  CHECK(cells > 100);
}

TEST_CASE("renderers reject empty data") {
  RenderSpec spec;
  CHECK_THROWS_AS(render_cloud_svg({}, BBox{0, 1, 0, 1}, spec), std::invalid_argument);
  CHECK_THROWS_AS(render_boundary_svg({}, BBox{0, 1, 0, 1}, spec), std::invalid_argument);
  CHECK_THROWS_AS(parse_cloud_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_cloud_csv("a,b\n1,2\n"), std::invalid_argument);
}
