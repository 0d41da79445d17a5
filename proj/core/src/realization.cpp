#include "matchstick/realization.hpp"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "matchstick/error.hpp"

namespace matchstick {

Realization::Realization(std::vector<Point> c, EmbeddedGraph g, double tol)
    : coords(std::move(c)), graph(std::move(g)), edge_tol(tol) {
  if (static_cast<int>(coords.size()) != graph.vertex_count())
    throw Error("coordinate count does not match vertex count");
  if (!(edge_tol > 0)) throw Error("edge_tol must be positive");
}

RealizationReport verify_drawing(std::span<const Point> p, std::span<const Edge> edges, double edge_tol) {
  RealizationReport rep;
  rep.edge_tol = edge_tol;
  for (const Edge& e : edges) rep.max_edge_error = std::max(rep.max_edge_error, std::abs(distance(p[e.u], p[e.v]) - 1.0));

  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (distance(p[a], p[b]) < kMinVertexSeparation) rep.coincident_vertices.emplace_back(a, b);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      int shared = -1;
      if (e.u == f.u || e.u == f.v) shared = e.u;
      if (e.v == f.u || e.v == f.v) shared = shared == -1 ? e.v : -2;
      bool bad = false;
      if (shared == -1) {
        bad = segment_contact(p[e.u], p[e.v], p[f.u], p[f.v]) != SegmentContact::none;
      } else if (shared >= 0) {
        // Two edges at a common vertex only clash when they overlap.
        const Point s = p[shared];
        const Point a = p[e.u == shared ? e.v : e.u];
        const Point b = p[f.u == shared ? f.v : f.u];
        bad = orientation(s, a, b) == 0 && dot(a - s, b - s) > 0;
      }
      if (bad) rep.crossing_pairs.emplace_back(e, f);
    }
  }
  return rep;
}

RealizationReport verify_realization(const Realization& re) {
  const EmbeddedGraph& g = re.graph;
  const auto edges = g.edges();
  RealizationReport rep = verify_drawing(re.coords, edges, re.edge_tol);

  rep.face_areas.resize(g.face_count());
  for (int f = 0; f < g.face_count(); ++f) {
    std::vector<Point> poly;
    for (VertexId v : g.face_walk(f)) poly.push_back(re.coords[v]);
    rep.face_areas[f] = signed_area(poly);
  }
  int outer = 0;
  if (g.outer_face()) {
    outer = *g.outer_face();
  } else {
    for (int f = 1; f < g.face_count(); ++f)
      if (std::abs(rep.face_areas[f]) > std::abs(rep.face_areas[outer])) outer = f;
  }
  rep.outer_face = outer;

  bool direct = rep.face_areas[outer] <= 0, mirror = rep.face_areas[outer] >= 0;
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == outer) continue;
    direct = direct && rep.face_areas[f] > 0;
    mirror = mirror && rep.face_areas[f] < 0;
  }
  rep.orientation_consistent = direct || mirror;

  const auto walk = g.face_walk(outer);
  auto sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  const bool simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (simple && walk.size() >= 3) {
    std::vector<Point> poly;
    for (VertexId v : walk) poly.push_back(re.coords[v]);
    rep.outer_convex = is_convex(poly);
  }
  return rep;
}

EmbeddedGraph graph_from_coords(std::span<const Point> coords, std::span<const Edge> edges) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(coords.size());
  for (const Point& q : coords) xy.emplace_back(q.x, q.y);
  return embedding_from_drawing(xy, edges);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string point_json(Point q) { return "[" + format_double(q.x) + "," + format_double(q.y) + "]"; }
std::string edge_json(Edge e) { return "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "]"; }

}  // namespace

std::string to_json(const Realization& re) {
  std::string out = "{\"n\":" + std::to_string(re.graph.vertex_count()) + ",\"coords\":[";
  for (std::size_t i = 0; i < re.coords.size(); ++i) out += (i ? "," : "") + point_json(re.coords[i]);
  out += "],\"edges\":[";
  const auto edges = re.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out += (i ? "," : "") + edge_json(edges[i]);
  out += "],\"edge_tol\":" + format_double(re.edge_tol) + "}";
  return out;
}

std::string to_json(const RealizationReport& r) {
  std::string out = "{\"passed\":" + std::string(r.passed() ? "true" : "false");
  out += ",\"max_edge_error\":" + format_double(r.max_edge_error);
  out += ",\"edge_tol\":" + format_double(r.edge_tol);
  out += ",\"crossing_pairs\":[";
  for (std::size_t i = 0; i < r.crossing_pairs.size(); ++i)
    out += std::string(i ? "," : "") + "[" + edge_json(r.crossing_pairs[i].first) + "," +
           edge_json(r.crossing_pairs[i].second) + "]";
  out += "],\"coincident_vertices\":[";
  for (std::size_t i = 0; i < r.coincident_vertices.size(); ++i)
    out += std::string(i ? "," : "") + "[" + std::to_string(r.coincident_vertices[i].first) + "," +
           std::to_string(r.coincident_vertices[i].second) + "]";
  out += "],\"outer_convex\":" + std::string(r.outer_convex ? "true" : "false");
  out += ",\"orientation_consistent\":" + std::string(r.orientation_consistent ? "true" : "false");
  out += ",\"outer_face\":" + (r.outer_face ? std::to_string(*r.outer_face) : std::string("null"));
  out += ",\"face_areas\":[";
  for (std::size_t i = 0; i < r.face_areas.size(); ++i) out += (i ? "," : "") + format_double(r.face_areas[i]);
  out += "]}";
  return out;
}

Drawing drawing_from_json(std::string_view text) {
  Drawing d;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& c : j.at("coords")) d.coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    const int n = static_cast<int>(d.coords.size());
    if (j.contains("n") && j.at("n").get<int>() != n) throw Error("n does not match coordinate count");
    for (const auto& e : j.at("edges")) {
      const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error("bad edge in realization JSON");
      d.edges.push_back(make_edge(u, v));
    }
    if (j.contains("edge_tol")) d.edge_tol = j.at("edge_tol").get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed realization JSON: ") + ex.what());
  }
  return d;
}

}  // namespace matchstick
