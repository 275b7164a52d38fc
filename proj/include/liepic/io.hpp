#pragma once

#include <string>
#include <string_view>

#include "liepic/haar.hpp"
#include "liepic/portrait.hpp"

namespace liepic {

// Scientific notation with 17 significant digits via std::to_chars: locale
// independent, byte stable, and exact on round trip.
std::string format_double(double v);
double parse_double(std::string_view s);

// Point cloud CSV, header "x,y" ("x" for rank-1 data).
std::string write_cloud_csv(const PointCloud& cloud, bool x_only = false);
PointCloud parse_cloud_csv(const std::string& text);

// Boundary CSV, header "wall,t,x,y" ("wall,t,x" for rank-1 data).
std::string write_boundary_csv(std::span<const BoundaryCurve> curves, bool x_only = false);

// Density grid CSV, header "x,y,phi", row-major by y then x.
std::string write_grid_csv(const DensityGrid& grid);

struct RenderSpec {
  int width = 800;
  int height = 800;
  double margin = 40;
  double point_radius = 1.5;
  std::string ramp = "viridis";  // or "gray"
};

// SVG documents. The data bounding box is embedded as
//   <metadata id="data-bbox">x0 x1 y0 y1</metadata>
// so pixel coordinates can be mapped back to data coordinates. All throw
// std::invalid_argument on empty data.
std::string render_cloud_svg(const PointCloud& cloud, const BBox& bbox, const RenderSpec& spec);
std::string render_boundary_svg(std::span<const BoundaryCurve> curves, const BBox& bbox,
                                const RenderSpec& spec);
std::string render_grid_svg(const DensityGrid& grid, const RenderSpec& spec);

}  // namespace liepic
