#include "matchstick/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace matchstick {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string export_svg(const Realization& re, const SvgStyle& st) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  if (!re.coords.empty()) {
    minx = maxx = re.coords[0].x;
    miny = maxy = re.coords[0].y;
  }
  for (const Point& p : re.coords) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double w = (maxx - minx) * st.scale + 2 * st.margin;
  const double h = (maxy - miny) * st.scale + 2 * st.margin;
  // SVG y grows downwards; flip so the drawing keeps its orientation.
  auto X = [&](double x) { return num((x - minx) * st.scale + st.margin); };
  auto Y = [&](double y) { return num((maxy - y) * st.scale + st.margin); };

  std::set<Edge> outer;
  if (auto f = re.graph.outer_face())
    for (int d : re.graph.face_darts(*f)) outer.insert(make_edge(re.graph.dart_tail(d), re.graph.dart_head(d)));

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
       "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  s += "<g stroke-linecap=\"round\" stroke-width=\"" + num(st.stroke_width) + "\">\n";
  for (const Edge& e : re.graph.edges()) {
    const std::string& color = outer.count(e) ? st.outer_color : st.edge_color;
    s += "<line x1=\"" + X(re.coords[e.u].x) + "\" y1=\"" + Y(re.coords[e.u].y) + "\" x2=\"" + X(re.coords[e.v].x) +
         "\" y2=\"" + Y(re.coords[e.v].y) + "\" stroke=\"" + color + "\"/>\n";
  }
  s += "</g>\n<g fill=\"" + st.vertex_color + "\">\n";
  for (std::size_t v = 0; v < re.coords.size(); ++v) {
    s += "<circle cx=\"" + X(re.coords[v].x) + "\" cy=\"" + Y(re.coords[v].y) + "\" r=\"" + num(st.vertex_radius) +
         "\"/>\n";
    if (st.labels)
      s += "<text x=\"" + X(re.coords[v].x) + "\" y=\"" + Y(re.coords[v].y) + "\" dx=\"4\" dy=\"-4\" font-size=\"10\">" +
           std::to_string(v) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace matchstick
