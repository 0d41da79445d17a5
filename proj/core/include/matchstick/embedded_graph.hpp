#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace matchstick {

using VertexId = int;

struct DirectedEdge {
  VertexId from = 0;
  VertexId to = 0;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Undirected edge with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A connected plane graph given by its rotation system, plus an optional
/// designated outer face.
///
/// Orientation convention: `rotation(v)` lists the neighbours of `v` in
/// clockwise order as drawn in the plane (the planar_code convention).
/// Faces are traced with the successor rule
///
///     next(u -> v) = (v -> w),  w = the neighbour following u in rotation(v),
///
/// which keeps the face on the left of every dart. Bounded faces are therefore
/// walked counter-clockwise and the unbounded face clockwise.
///
/// Darts (directed edges) are numbered consecutively: dart `offset(v) + i`
/// is `v -> rotation(v)[i]`.
class EmbeddedGraph {
 public:
  /// Validates and builds. Throws `Error` on asymmetric adjacency, self-loops,
  /// repeated neighbours, disconnected input, non-planar rotation systems and
  /// an outer-face hint that is not an edge.
  static EmbeddedGraph build(std::vector<std::vector<VertexId>> rotation,
                             std::optional<DirectedEdge> outer_face_hint = std::nullopt);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(dart_head_.size()) / 2; }
  int dart_count() const { return static_cast<int>(dart_head_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  std::span<const VertexId> rotation(VertexId v) const { return rotation_[v]; }
  const std::vector<std::vector<VertexId>>& rotations() const { return rotation_; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
  int max_degree() const;
  bool adjacent(VertexId a, VertexId b) const;

  int dart(VertexId from, VertexId to) const;  ///< -1 when not an edge
  int first_dart(VertexId v) const { return offset_[v]; }
  int dart_tail(int d) const { return dart_tail_[d]; }
  int dart_head(int d) const { return dart_head_[d]; }
  int reverse_dart(int d) const { return dart_reverse_[d]; }
  int next_dart(int d) const { return dart_next_[d]; }
  int face_of_dart(int d) const { return dart_face_[d]; }
  DirectedEdge dart_edge(int d) const { return {dart_tail_[d], dart_head_[d]}; }

  /// Face `f` as its dart cycle, in traversal order.
  std::span<const int> face_darts(int f) const { return faces_[f]; }
  /// Walk length of face `f` (bridges count twice).
  int face_length(int f) const { return static_cast<int>(faces_[f].size()); }
  /// Vertices visited by face `f`, in walk order (repeats possible).
  std::vector<VertexId> face_walk(int f) const;

  std::optional<int> outer_face() const { return outer_face_; }
  /// Copy with `face` designated as the unbounded face.
  EmbeddedGraph with_outer_face(int face) const;
  EmbeddedGraph without_outer_face() const;
  /// Vertices incident to the outer face (distinct, ascending).
  std::vector<VertexId> outer_vertices() const;
  /// True for vertices not incident to the outer face.
  std::vector<bool> inner_mask() const;

  /// Mirror image: every rotation reversed. The outer face follows along.
  EmbeddedGraph mirrored() const;
  /// Relabel: vertex v becomes perm[v]. Outer face follows along.
  EmbeddedGraph relabeled(std::span<const VertexId> perm) const;

  std::vector<Edge> edges() const;

 private:
  EmbeddedGraph() = default;
  void trace_faces();

  std::vector<std::vector<VertexId>> rotation_;
  std::vector<int> offset_;
  std::vector<int> dart_tail_, dart_head_, dart_reverse_, dart_next_, dart_face_;
  std::vector<std::vector<int>> faces_;
  std::optional<int> outer_face_;
};

/// Builds an embedding from a straight-line drawing: neighbours are sorted
/// clockwise by angle and the outer face is the face of most negative signed
/// area. Used for fixtures and for turning coordinates into graphs.
EmbeddedGraph embedding_from_drawing(std::span<const std::pair<double, double>> coords,
                                     std::span<const Edge> edges);

}  // namespace matchstick
