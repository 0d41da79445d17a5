#include "matchstick/embedded_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

bool is_connected(const std::vector<std::vector<VertexId>>& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : rot[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

EmbeddedGraph EmbeddedGraph::build(std::vector<std::vector<VertexId>> rotation,
                                   std::optional<DirectedEdge> outer_face_hint) {
  const int n = static_cast<int>(rotation.size());
  if (n == 0) throw Error("embedded graph needs at least one vertex");
  for (VertexId v = 0; v < n; ++v) {
    const auto& r = rotation[v];
    for (std::size_t i = 0; i < r.size(); ++i) {
      VertexId w = r[i];
      if (w < 0 || w >= n)
        throw Error("vertex " + std::to_string(v) + " lists out-of-range neighbour " +
                    std::to_string(w));
      if (w == v) throw Error("self-loop at vertex " + std::to_string(v));
      if (std::count(r.begin(), r.end(), w) > 1)
        throw Error("vertex " + std::to_string(v) + " lists neighbour " + std::to_string(w) +
                    " more than once");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rotation[v]) {
      const auto& back = rotation[w];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw Error("asymmetric adjacency: " + std::to_string(v) + " lists " +
                    std::to_string(w) + " but not vice versa");
    }
  }
  if (!is_connected(rotation)) throw Error("graph is not connected");

  EmbeddedGraph g;
  g.rotation_ = std::move(rotation);
  g.offset_.resize(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + g.degree(v);
  const int darts = g.offset_[n];
  g.dart_tail_.resize(darts);
  g.dart_head_.resize(darts);
  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      g.dart_tail_[g.offset_[v] + i] = v;
      g.dart_head_[g.offset_[v] + i] = g.rotation_[v][i];
    }
  }
  g.dart_reverse_.resize(darts);
  g.dart_next_.resize(darts);
  for (int d = 0; d < darts; ++d) {
    const VertexId u = g.dart_tail_[d];
    const VertexId v = g.dart_head_[d];
    const auto& rv = g.rotation_[v];
    const int pos = static_cast<int>(std::find(rv.begin(), rv.end(), u) - rv.begin());
    g.dart_reverse_[d] = g.offset_[v] + pos;
    g.dart_next_[d] = g.offset_[v] + (pos + 1) % static_cast<int>(rv.size());
  }
  g.trace_faces();

  if (n - g.edge_count() + g.face_count() != 2)
    throw Error("rotation system is not planar (V - E + F = " +
                std::to_string(n - g.edge_count() + g.face_count()) + ")");

  if (outer_face_hint) {
    const int d = g.dart(outer_face_hint->from, outer_face_hint->to);
    if (d < 0)
      throw Error("outer-face hint " + std::to_string(outer_face_hint->from) + "->" +
                  std::to_string(outer_face_hint->to) + " is not an edge");
    g.outer_face_ = g.dart_face_[d];
  } else if (g.edge_count() == 0) {
    g.outer_face_ = 0;
  }
  return g;
}

void EmbeddedGraph::trace_faces() {
  const int darts = dart_count();
  dart_face_.assign(darts, -1);
  faces_.clear();
  if (darts == 0) {
    faces_.emplace_back();
    return;
  }
  for (int start = 0; start < darts; ++start) {
    if (dart_face_[start] >= 0) continue;
    const int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int d = start;
    do {
      dart_face_[d] = f;
      faces_[f].push_back(d);
      d = dart_next_[d];
    } while (d != start);
  }
}

int EmbeddedGraph::max_degree() const {
  int m = 0;
  for (const auto& r : rotation_) m = std::max(m, static_cast<int>(r.size()));
  return m;
}

bool EmbeddedGraph::adjacent(VertexId a, VertexId b) const { return dart(a, b) >= 0; }

int EmbeddedGraph::dart(VertexId from, VertexId to) const {
  if (from < 0 || from >= vertex_count()) return -1;
  const auto& r = rotation_[from];
  auto it = std::find(r.begin(), r.end(), to);
  if (it == r.end()) return -1;
  return offset_[from] + static_cast<int>(it - r.begin());
}

std::vector<VertexId> EmbeddedGraph::face_walk(int f) const {
  std::vector<VertexId> walk;
  walk.reserve(faces_[f].size());
  for (int d : faces_[f]) walk.push_back(dart_tail_[d]);
  if (walk.empty() && vertex_count() == 1) walk.push_back(0);
  return walk;
}

EmbeddedGraph EmbeddedGraph::with_outer_face(int face) const {
  if (face < 0 || face >= face_count())
    throw Error("face " + std::to_string(face) + " does not exist");
  EmbeddedGraph g = *this;
  g.outer_face_ = face;
  return g;
}

EmbeddedGraph EmbeddedGraph::without_outer_face() const {
  EmbeddedGraph g = *this;
  if (edge_count() > 0) g.outer_face_.reset();
  return g;
}

std::vector<VertexId> EmbeddedGraph::outer_vertices() const {
  std::vector<VertexId> out;
  if (!outer_face_) return out;
  out = face_walk(*outer_face_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<bool> EmbeddedGraph::inner_mask() const {
  std::vector<bool> inner(vertex_count(), true);
  for (VertexId v : outer_vertices()) inner[v] = false;
  return inner;
}

EmbeddedGraph EmbeddedGraph::mirrored() const {
  auto rot = rotation_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  std::optional<DirectedEdge> hint;
  if (outer_face_ && edge_count() > 0) {
    // The mirror traverses the same face through reversed darts.
    const int d = faces_[*outer_face_].front();
    hint = DirectedEdge{dart_head_[d], dart_tail_[d]};
  }
  return build(std::move(rot), hint);
}

EmbeddedGraph EmbeddedGraph::relabeled(std::span<const VertexId> perm) const {
  const int n = vertex_count();
  if (static_cast<int>(perm.size()) != n) throw Error("relabel permutation has wrong size");
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId v = 0; v < n; ++v) {
    auto& r = rot[perm[v]];
    for (VertexId w : rotation_[v]) r.push_back(perm[w]);
  }
  std::optional<DirectedEdge> hint;
  if (outer_face_ && edge_count() > 0) {
    const int d = faces_[*outer_face_].front();
    hint = DirectedEdge{perm[dart_tail_[d]], perm[dart_head_[d]]};
  }
  return build(std::move(rot), hint);
}

std::vector<Edge> EmbeddedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (VertexId w : rotation_[v])
      if (v < w) out.push_back({v, w});
  return out;
}

EmbeddedGraph embedding_from_drawing(std::span<const std::pair<double, double>> coords,
                                     std::span<const Edge> edges) {
  const int n = static_cast<int>(coords.size());
  std::vector<std::vector<VertexId>> rot(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
    rot[e.u].push_back(e.v);
    rot[e.v].push_back(e.u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto angle = [&](VertexId w) {
      return std::atan2(coords[w].second - coords[v].second, coords[w].first - coords[v].first);
    };
    // Clockwise = decreasing polar angle.
    std::sort(rot[v].begin(), rot[v].end(),
              [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
  }
  EmbeddedGraph g = EmbeddedGraph::build(std::move(rot));
  if (g.edge_count() == 0) return g;
  int outer = 0;
  double most_negative = 0.0;
  for (int f = 0; f < g.face_count(); ++f) {
    double area = 0.0;
    for (int d : g.face_darts(f)) {
      const auto& a = coords[g.dart_tail(d)];
      const auto& b = coords[g.dart_head(d)];
      area += a.first * b.second - b.first * a.second;
    }
    if (f == 0 || area < most_negative) {
      most_negative = area;
      outer = f;
    }
  }
  return g.with_outer_face(outer);
}

}  // namespace matchstick
