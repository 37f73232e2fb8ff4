#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "isoperim/trilattice.hpp"

namespace isop {

struct SvgOptions {
  double scale = 40.0;  // pixels per unit length
  bool draw_edges = true;
  bool label_points = false;  // 1-based position in the input list
};

std::string render_svg(std::span<const TriPoint> points, const SvgOptions& options = {});
// DomainError on an empty list; std::runtime_error if the file cannot be written.
void render_svg(std::span<const TriPoint> points, const std::filesystem::path& path, const SvgOptions& options = {});

}  // namespace isop
