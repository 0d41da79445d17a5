#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchstick/embedded_graph.hpp"
#include "matchstick/geometry.hpp"

namespace matchstick {

inline constexpr double kConstructionEdgeTol = 1e-9;
inline constexpr double kRealizerEdgeTol = 1e-6;
inline constexpr double kMinVertexSeparation = 1e-7;

/// Coordinates for every vertex of an embedded graph (unit = one match).
struct Realization {
  std::vector<Point> coords;
  EmbeddedGraph graph;
  double edge_tol = kConstructionEdgeTol;

  /// Throws `Error` when the coordinate count differs from the vertex count
  /// or edge_tol is not positive.
  Realization(std::vector<Point> coords, EmbeddedGraph graph, double edge_tol = kConstructionEdgeTol);
};

struct RealizationReport {
  double max_edge_error = 0.0;
  double edge_tol = 0.0;
  std::vector<std::pair<Edge, Edge>> crossing_pairs;
  std::vector<std::pair<VertexId, VertexId>> coincident_vertices;
  bool outer_convex = false;
  /// Signed shoelace area of every face walk, indexed by face id.
  std::vector<double> face_areas;
  std::optional<int> outer_face;
  /// Bounded faces counter-clockwise and the outer face clockwise, or the
  /// whole drawing mirrored.
  bool orientation_consistent = false;

  bool edges_ok() const { return max_edge_error <= edge_tol; }
  /// Unit edges within tolerance, no crossings, no coincident vertices.
  bool passed() const { return edges_ok() && crossing_pairs.empty() && coincident_vertices.empty(); }
};

/// Edge lengths, coincidences and crossings of a straight-line drawing.
/// Face fields are left empty.
RealizationReport verify_drawing(std::span<const Point> coords, std::span<const Edge> edges,
                                 double edge_tol);

/// Full check of a realization, including face areas and convexity of the
/// outer face. When the graph has no outer face, the face of largest absolute
/// area is used.
RealizationReport verify_realization(const Realization& re);

/// Rotation system read off the drawing (see `embedding_from_drawing`).
EmbeddedGraph graph_from_coords(std::span<const Point> coords, std::span<const Edge> edges);

/// {n, coords, edges, edge_tol} with 17 significant digits.
std::string to_json(const Realization& re);
std::string to_json(const RealizationReport& report);

/// Parsed drawing before an embedding is attached.
struct Drawing {
  std::vector<Point> coords;
  std::vector<Edge> edges;
  double edge_tol = kConstructionEdgeTol;
};
/// Throws `Error` on malformed JSON or out-of-range edges.
Drawing drawing_from_json(std::string_view text);

/// printf-style "%.17g".
std::string format_double(double x);

}  // namespace matchstick
