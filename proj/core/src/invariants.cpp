#include "matchstick/invariants.hpp"

#include <algorithm>
#include <queue>

#include "matchstick/error.hpp"

namespace matchstick {

FaceProfile face_profile(const EmbeddedGraph& g, int r) {
  if (!g.outer_face()) throw Error("face_profile needs a designated outer face");
  FaceProfile p;
  p.r = r;
  p.n = g.vertex_count();
  p.edges = g.edge_count();
  p.f_total = g.face_count();
  for (int f = 0; f < g.face_count(); ++f) ++p.a[g.face_length(f)];
  p.k = g.face_length(*g.outer_face());
  for (VertexId v : g.outer_vertices()) p.tau += r - g.degree(v);
  p.girth = girth(g);
  return p;
}

int girth(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  std::queue<VertexId> q;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) continue;
      for (VertexId w : g.rotation(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    std::queue<VertexId>().swap(q);
  }
  return best;
}

bool euler_identity_check(const FaceProfile& p, int n) {
  if (n != 2 * p.f_total - 4 + p.tau) return false;
  long long lhs = 0;
  for (auto [len, cnt] : p.a) lhs += static_cast<long long>(6 - len) * cnt;
  return lhs == 12 - 2 * p.tau;
}

bool face_sum_identity(const FaceProfile& p) {
  long long lhs = 0;
  for (auto [len, cnt] : p.a) lhs += static_cast<long long>(2 * len - p.r * len + 2 * p.r) * cnt;
  return lhs == 4 * p.r - 2 * p.tau;
}

std::string_view to_string(ConnectivityLevel level) {
  switch (level) {
    case ConnectivityLevel::one_connected: return "one_connected";
    case ConnectivityLevel::two_connected: return "two_connected";
    case ConnectivityLevel::three_connected: return "three_connected";
  }
  return "?";
}

std::vector<std::vector<VertexId>> components_without(const EmbeddedGraph& g,
                                                      const std::vector<Edge>& removed) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  auto cut = [&](VertexId a, VertexId b) {
    const Edge e = make_edge(a, b);
    return std::find(removed.begin(), removed.end(), e) != removed.end();
  };
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (VertexId w : g.rotation(v)) {
        if (comp[w] < 0 && !cut(v, w)) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

namespace {

// Size of the smaller side if `removed` disconnects g, else 0.
int smaller_side(const EmbeddedGraph& g, const std::vector<Edge>& removed) {
  auto comps = components_without(g, removed);
  if (comps.size() < 2) return 0;
  int m = g.vertex_count();
  for (const auto& c : comps) m = std::min(m, static_cast<int>(c.size()));
  return m;
}

}  // namespace

std::vector<std::vector<Edge>> minimum_edge_cuts(const EmbeddedGraph& g) {
  const auto edges = g.edges();
  std::vector<std::vector<Edge>> bridges;
  for (const Edge& e : edges)
    if (smaller_side(g, {e}) > 0) bridges.push_back({e});
  if (!bridges.empty()) return bridges;
  std::vector<std::vector<Edge>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (smaller_side(g, {edges[i], edges[j]}) > 0) pairs.push_back({edges[i], edges[j]});
  return pairs;
}

ConnectivityClass connectivity_class(const EmbeddedGraph& g) {
  if (g.max_degree() > 3) throw Error("connectivity_class expects maximum degree 3");
  ConnectivityClass out;
  const auto cuts = minimum_edge_cuts(g);
  if (cuts.empty()) return out;
  out.level = cuts.front().size() == 1 ? ConnectivityLevel::one_connected
                                       : ConnectivityLevel::two_connected;
  int best = -1;
  for (const auto& c : cuts) {
    const int s = smaller_side(g, c);
    if (s > best) {
      best = s;
      out.cut_witness = c;
    }
  }
  return out;
}

bool inner_vertices_regular(const EmbeddedGraph& g, int r) {
  const auto inner = g.inner_mask();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > r) return false;
    if (inner[v] && g.degree(v) != r) return false;
  }
  return true;
}

}  // namespace matchstick
