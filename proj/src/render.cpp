#include "isoperim/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "isoperim/errors.hpp"

namespace isop {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(std::span<const TriPoint> points, const SvgOptions& options) {
  if (points.empty()) throw DomainError("render_svg: no points");
  const double s = options.scale;
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const auto& p : points) {
    PlanePoint q = embed_to_plane(p);
    min_x = std::min(min_x, q.x());
    max_x = std::max(max_x, q.x());
    min_y = std::min(min_y, q.y());
    max_y = std::max(max_y, q.y());
  }
  const double margin = 1.0;
  const double width = (max_x - min_x + 2 * margin) * s;
  const double height = (max_y - min_y + 2 * margin) * s;
  // SVG y grows downward; flip so the lattice reads counterclockwise as usual.
  auto px = [&](TriPoint p) { return (embed_to_plane(p).x() - min_x + margin) * s; };
  auto py = [&](TriPoint p) { return (max_y - embed_to_plane(p).y() + margin) * s; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
                    "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  if (options.draw_edges) {
    std::unordered_set<TriPoint, TriPointHash> set(points.begin(), points.end());
    const auto& gens = tri_generators();
    for (const auto& p : points) {
      // Half the generators suffice to draw each edge once.
      for (std::size_t j = 0; j < 6; ++j) {
        TriPoint q = p + gens[j];
        if (!set.count(q)) continue;
        bool is_short = edge_class(gens[j]) == EdgeClass::kShort;
        out += "  <line x1=\"" + fmt(px(p)) + "\" y1=\"" + fmt(py(p)) + "\" x2=\"" + fmt(px(q)) + "\" y2=\"" +
               fmt(py(q)) + "\" stroke=\"" + (is_short ? "#333333" : "#9bb7d4") + "\" stroke-width=\"" +
               (is_short ? "1.5" : "1") + "\"/>\n";
      }
    }
  }
  const double r = s * 0.12;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    out += "  <circle cx=\"" + fmt(px(p)) + "\" cy=\"" + fmt(py(p)) + "\" r=\"" + fmt(r) + "\" fill=\"black\"/>\n";
    if (options.label_points) {
      out += "  <text x=\"" + fmt(px(p) + r * 1.2) + "\" y=\"" + fmt(py(p) - r * 1.2) + "\" font-size=\"" +
             fmt(s * 0.3) + "\" font-family=\"sans-serif\">" + std::to_string(i + 1) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void render_svg(std::span<const TriPoint> points, const std::filesystem::path& path, const SvgOptions& options) {
  std::string svg = render_svg(points, options);
  std::ofstream f(path);
  if (!f || !(f << svg)) throw std::runtime_error("render_svg: cannot write " + path.string());
}

}  // namespace isop
