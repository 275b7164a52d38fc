#include "liepic/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <stdexcept>

namespace liepic {

std::string format_double(double v) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc()) throw std::invalid_argument("bad number: " + std::string(s));
  return v;
}

namespace {

// Compact shortest-round-trip formatting for SVG coordinates.
std::string format_short(double v) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format failed");
  return std::string(buf, ptr);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

std::string write_cloud_csv(const PointCloud& cloud, bool x_only) {
  std::string out = x_only ? "x\n" : "x,y\n";
  for (const auto& p : cloud) {
    out += format_double(p.x);
    if (!x_only) {
      out += ',';
      out += format_double(p.y);
    }
    out += '\n';
  }
  return out;
}

PointCloud parse_cloud_csv(const std::string& text) {
  PointCloud cloud;
  bool header = true;
  bool x_only = false;
  for (auto line : split(text, '\n')) {
    if (line.empty()) continue;
    if (header) {
      if (line != "x,y" && line != "x") throw std::invalid_argument("unexpected CSV header");
      x_only = line == "x";
      header = false;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != (x_only ? 1u : 2u)) throw std::invalid_argument("bad CSV row");
    PortraitPoint p;
    p.x = parse_double(cells[0]);
    if (!x_only) p.y = parse_double(cells[1]);
    cloud.push_back(p);
  }
  if (header) throw std::invalid_argument("empty CSV");
  return cloud;
}

std::string write_boundary_csv(std::span<const BoundaryCurve> curves, bool x_only) {
  std::string out = x_only ? "wall,t,x\n" : "wall,t,x,y\n";
  for (const auto& curve : curves) {
    const std::string wall = std::to_string(static_cast<int>(curve.wall));
    for (const auto& [t, p] : curve.samples) {
      out += wall;
      out += ',';
      out += format_double(t);
      out += ',';
      out += format_double(p.x);
      if (!x_only) {
        out += ',';
        out += format_double(p.y);
      }
      out += '\n';
    }
  }
  return out;
}

std::string write_grid_csv(const DensityGrid& grid) {
  std::string out = "x,y,phi\n";
  const double dx = (grid.bbox.x1 - grid.bbox.x0) / grid.nx;
  const double dy = (grid.bbox.y1 - grid.bbox.y0) / grid.ny;
  for (int iy = 0; iy < grid.ny; ++iy) {
    const double y = grid.bbox.y0 + (iy + 0.5) * dy;
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.bbox.x0 + (ix + 0.5) * dx;
      out += format_double(x);
      out += ',';
      out += format_double(y);
      out += ',';
      out += format_double(grid.values[static_cast<size_t>(iy) * grid.nx + ix]);
      out += '\n';
    }
  }
  return out;
}

namespace {

struct PixelMap {
  BBox bbox;
  double px0, py0, sx, sy;

  PixelMap(const BBox& b, const RenderSpec& spec) : bbox(b) {
    double w = spec.width - 2 * spec.margin;
    double h = spec.height - 2 * spec.margin;
    double dx = bbox.x1 - bbox.x0;
    double dy = bbox.y1 - bbox.y0;
    if (dx <= 0) dx = 1;
    if (dy <= 0) dy = 1;
    sx = w / dx;
    sy = h / dy;
    px0 = spec.margin;
    py0 = spec.height - spec.margin;  // y axis flipped
  }
  double px(double x) const { return px0 + (x - bbox.x0) * sx; }
  double py(double y) const { return py0 - (y - bbox.y0) * sy; }
};

std::string svg_open(const RenderSpec& spec, const BBox& bbox) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
         "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
         std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
  out += "<metadata id=\"data-bbox\">" + format_double(bbox.x0) + " " + format_double(bbox.x1) +
         " " + format_double(bbox.y0) + " " + format_double(bbox.y1) + "</metadata>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out;
}

struct Rgb {
  double r, g, b;
};

Rgb ramp_color(const std::string& ramp, double t) {
  t = std::clamp(t, 0.0, 1.0);
  if (ramp == "gray") {
    double v = 255.0 * (1.0 - t);
    return {v, v, v};
  }
  // viridis, linearly interpolated between anchor colors
  static const Rgb anchors[] = {{68, 1, 84},    {72, 40, 120},  {62, 74, 137},
                                {49, 104, 142}, {38, 130, 142}, {31, 158, 137},
                                {53, 183, 121}, {109, 205, 89}, {180, 222, 44},
                                {253, 231, 37}};
  const int n = static_cast<int>(std::size(anchors)) - 1;
  double u = t * n;
  int k = std::min(static_cast<int>(u), n - 1);
  double f = u - k;
  return {anchors[k].r + f * (anchors[k + 1].r - anchors[k].r),
          anchors[k].g + f * (anchors[k + 1].g - anchors[k].g),
          anchors[k].b + f * (anchors[k + 1].b - anchors[k].b)};
}

std::string hex_color(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(c.r)),
                static_cast<int>(std::lround(c.g)), static_cast<int>(std::lround(c.b)));
  return buf;
}

}  // namespace

std::string render_cloud_svg(const PointCloud& cloud, const BBox& bbox, const RenderSpec& spec) {
  if (cloud.empty()) throw std::invalid_argument("render_cloud_svg: empty cloud");
  PixelMap map(bbox, spec);
  std::string out = svg_open(spec, bbox);
  for (const auto& p : cloud) {
    out += "<circle cx=\"" + format_short(map.px(p.x)) + "\" cy=\"" + format_short(map.py(p.y)) +
           "\" r=\"" + format_short(spec.point_radius) + "\" fill=\"#1f77b4\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_boundary_svg(std::span<const BoundaryCurve> curves, const BBox& bbox,
                                const RenderSpec& spec) {
  if (curves.empty()) throw std::invalid_argument("render_boundary_svg: no curves");
  PixelMap map(bbox, spec);
  std::string out = svg_open(spec, bbox);
  for (const auto& curve : curves) {
    if (curve.samples.empty()) throw std::invalid_argument("render_boundary_svg: empty curve");
    out += "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [t, p] : curve.samples) {
      if (!first) out += ' ';
      first = false;
      out += format_short(map.px(p.x));
      out += ',';
      out += format_short(map.py(p.y));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_grid_svg(const DensityGrid& grid, const RenderSpec& spec) {
  if (grid.values.empty()) throw std::invalid_argument("render_grid_svg: empty grid");
  PixelMap map(grid.bbox, spec);
  double max_val = *std::max_element(grid.values.begin(), grid.values.end());
  if (max_val <= 0) max_val = 1;
  const double dx = (grid.bbox.x1 - grid.bbox.x0) / grid.nx;
  const double dy = (grid.bbox.y1 - grid.bbox.y0) / grid.ny;
  std::string out = svg_open(spec, grid.bbox);
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      double v = grid.values[static_cast<size_t>(iy) * grid.nx + ix];
      if (v <= 0) continue;
      double x = grid.bbox.x0 + ix * dx;
      double y = grid.bbox.y0 + (iy + 1) * dy;  // top edge of the cell
      out += "<rect x=\"" + format_short(map.px(x)) + "\" y=\"" + format_short(map.py(y)) +
             "\" width=\"" + format_short(dx * map.sx) + "\" height=\"" +
             format_short(dy * map.sy) + "\" fill=\"" +
             hex_color(ramp_color(spec.ramp, v / max_val)) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace liepic
