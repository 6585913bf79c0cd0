#pragma once

#include <string>
#include <string_view>

#include "ribbon/document.hpp"

namespace ribbon {

inline constexpr double svg_hole_radius = 0.06;
inline constexpr double svg_stroke_width = 0.02;

/// Deterministic SVG 1.1 drawing of a named structure: outer cycles filled,
/// removed inner interiors white, holes as gray disks, filaments as lines,
/// one text label per ribbon. Throws UnknownTarget or AmbiguousTarget.
std::string render_svg(const ComplexDocument& document, std::string_view target);

}  // namespace ribbon
