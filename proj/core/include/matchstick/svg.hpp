#pragma once

#include <string>

#include "matchstick/realization.hpp"

namespace matchstick {

struct SvgStyle {
  double scale = 100.0;  ///< pixels per unit length
  double margin = 20.0;
  double vertex_radius = 3.0;
  double stroke_width = 1.5;
  bool labels = false;
  std::string edge_color = "#222222";
  std::string outer_color = "#c0392b";
  std::string vertex_color = "#000000";
};

/// Deterministic SVG document; the outer face walk is drawn in `outer_color`.
std::string export_svg(const Realization& re, const SvgStyle& style = {});

}  // namespace matchstick
