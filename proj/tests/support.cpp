#include "support.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include "matchstick/canonical.hpp"

namespace matchstick::testing {

EmbeddedGraph from_drawing(const std::vector<std::pair<double, double>>& coords,
                           const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back(make_edge(a, b));
  return embedding_from_drawing(coords, es);
}

EmbeddedGraph two_squares_with_bridge() {
  return from_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 0}, {3, 0}, {3, 1}, {2, 1}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {1, 4}});
}

namespace {

using Rotation = std::vector<std::vector<VertexId>>;

const Rotation kPentagon444 = {{1, 2},    {0, 3, 4}, {0, 5, 6}, {1, 6, 7}, {1, 7, 5},
                               {2, 4, 8}, {2, 8, 3}, {3, 8, 4}, {5, 7, 6}};

bool connected_without(int n, const std::vector<Edge>& edges, int skip1, int skip2) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (i == skip1 || i == skip2) continue;
    adj[edges[i].u].push_back(edges[i].v);
    adj[edges[i].v].push_back(edges[i].u);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

int girth_of(int n, const std::vector<std::vector<int>>& adj) {
  int best = INT_MAX;
  std::vector<bool> on_path(n, false);
  std::function<void(int, int, int)> dfs = [&](int s, int v, int len) {
    if (len + 1 >= best) return;
    for (int w : adj[v]) {
      if (w == s && len >= 2) best = std::min(best, len + 1);
      if (w > s && !on_path[w]) {
        on_path[w] = true;
        dfs(s, w, len + 1);
        on_path[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, 0);
    on_path[s] = false;
  }
  return best;
}

}  // namespace

EmbeddedGraph pentagon_444() { return EmbeddedGraph::build(kPentagon444, DirectedEdge{0, 1}); }

EmbeddedGraph bridged_pentagons() {
  Rotation r = kPentagon444;
  for (const auto& nb : kPentagon444) {
    r.push_back(nb);
    for (auto& w : r.back()) w += 9;
  }
  r[0].push_back(9);
  r[9].push_back(0);
  return EmbeddedGraph::build(r, DirectedEdge{0, 1});
}

int brute_force_edge_connectivity(const EmbeddedGraph& g) {
  const auto edges = g.edges();
  const int n = g.vertex_count();
  const int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i)
    if (!connected_without(n, edges, i, -1)) return 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!connected_without(n, edges, i, j)) return 2;
  return 3;
}

int brute_force_girth(const EmbeddedGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    adj[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  return girth_of(g.vertex_count(), adj);
}

bool embedded_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.outer_face().has_value() != b.outer_face().has_value()) return false;
  if (n == 1) return true;
  auto index_of = [](std::span<const VertexId> r, VertexId x) {
    return static_cast<int>(std::find(r.begin(), r.end(), x) - r.begin());
  };
  for (int s : {1, -1}) {
    for (int e = 0; e < b.dart_count(); ++e) {
      std::vector<int> phi(n, -1), inv(n, -1), anchor_a(n), anchor_b(n);
      const VertexId w0 = b.dart_tail(e);
      if (a.degree(0) != b.degree(w0)) continue;
      phi[0] = w0;
      inv[w0] = 0;
      anchor_a[0] = 0;
      anchor_b[0] = index_of(b.rotation(w0), b.dart_head(e));
      std::vector<VertexId> queue{0};
      bool ok = true;
      for (std::size_t qi = 0; ok && qi < queue.size(); ++qi) {
        const VertexId v = queue[qi], w = phi[v];
        const int d = a.degree(v);
        for (int t = 0; ok && t < d; ++t) {
          const VertexId x = a.rotation(v)[(anchor_a[v] + t) % d];
          const VertexId y = b.rotation(w)[((anchor_b[v] + s * t) % d + d) % d];
          if (phi[x] < 0) {
            if (inv[y] >= 0 || a.degree(x) != b.degree(y)) {
              ok = false;
              break;
            }
            phi[x] = y;
            inv[y] = x;
            anchor_a[x] = index_of(a.rotation(x), v);
            anchor_b[x] = index_of(b.rotation(y), w);
            queue.push_back(x);
          } else if (phi[x] != y) {
            ok = false;
          }
        }
      }
      if (!ok || static_cast<int>(queue.size()) != n) continue;
      if (a.outer_face()) {
        const int d = a.face_darts(*a.outer_face()).front();
        const VertexId u = phi[a.dart_tail(d)], v = phi[a.dart_head(d)];
        const int img = s > 0 ? b.dart(u, v) : b.dart(v, u);
        if (b.face_of_dart(img) != *b.outer_face()) continue;
      }
      return true;
    }
  }
  return false;
}

namespace {

struct OracleState {
  const EnumSpec* spec;
  int n = 0;
  int tau = 0;
  int m = 0;
  std::vector<Edge> pairs;
  std::vector<Edge> chosen;
  std::vector<int> deg;
  std::set<std::string>* out;
};

// Every rotation system of the labelled graph; planar ones contribute each
// admissible outer face.
void process_labelled(OracleState& st) {
  const int n = st.n;
  std::vector<std::vector<int>> adj(n);
  for (auto e : st.chosen) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  if (!connected_without(n, st.chosen, -1, -1)) return;
  if (girth_of(n, adj) < st.spec->girth_min) return;

  std::vector<int> cubic;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() == 3) cubic.push_back(v);
  const int m = static_cast<int>(st.chosen.size());
  std::optional<int> level;

  for (unsigned mask = 0; mask < (1u << cubic.size()); ++mask) {
    Rotation rot = adj;
    for (std::size_t i = 0; i < cubic.size(); ++i)
      if (mask & (1u << i)) std::swap(rot[cubic[i]][1], rot[cubic[i]][2]);

    // Face count straight from the permutation.
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    auto pos = [&](int v, int w) {
      return static_cast<int>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
    };
    std::vector<bool> seen(2 * m, false);
    int faces = 0;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
        int d = offset[v] + i;
        if (seen[d]) continue;
        ++faces;
        int tail = v, head = rot[v][i];
        while (!seen[d]) {
          seen[d] = true;
          const int j = (pos(head, tail) + 1) % static_cast<int>(rot[head].size());
          tail = std::exchange(head, rot[head][j]);
          d = offset[tail] + j;
        }
      }
    if (n - m + faces != 2) continue;

    if (!level) {
      EmbeddedGraph any = EmbeddedGraph::build(rot);
      level = brute_force_edge_connectivity(any);
    }
    if (*level < st.spec->connectivity_min) return;

    EmbeddedGraph g = EmbeddedGraph::build(rot);
    if (st.spec->complete_only) {
      st.out->insert(canonical_key(g).bytes);
      continue;
    }
    for (int f = 0; f < g.face_count(); ++f) {
      std::vector<bool> on_face(n, false);
      for (VertexId v : g.face_walk(f)) on_face[v] = true;
      bool ok = true;
      for (int v = 0; v < n; ++v)
        if (!on_face[v] && g.degree(v) != 3) ok = false;
      if (ok) st.out->insert(canonical_key(g.with_outer_face(f)).bytes);
    }
  }
}

void extend(OracleState& st, std::size_t idx) {
  const int placed = static_cast<int>(st.chosen.size());
  const int remaining = static_cast<int>(st.pairs.size() - idx);
  if (placed > st.m || placed + remaining < st.m) return;
  if (idx == st.pairs.size()) {
    if (placed == st.m) process_labelled(st);
    return;
  }
  const Edge e = st.pairs[idx];
  // Row e.u closes after its last pair; its degree is then final and must keep
  // the degree sequence non-increasing.
  const bool closes_row = e.v == st.n - 1;
  auto row_ok = [&] {
    if (!closes_row) return true;
    const int d = st.deg[e.u];
    if (d < 1) return false;
    if (e.u > 0 && d > st.deg[e.u - 1]) return false;
    return true;
  };
  if (st.deg[e.u] < 3 && st.deg[e.v] < 3) {
    st.chosen.push_back(e);
    ++st.deg[e.u];
    ++st.deg[e.v];
    if (row_ok()) extend(st, idx + 1);
    --st.deg[e.u];
    --st.deg[e.v];
    st.chosen.pop_back();
  }
  if (row_ok()) extend(st, idx + 1);
}

}  // namespace

std::set<std::string> labelled_oracle(const EnumSpec& spec) {
  std::set<std::string> out;
  for (int n = 2; n <= spec.n_max; ++n) {
    if (!spec.n_values.empty() && !spec.n_values.contains(n)) continue;
    for (int tau : spec.tau_set) {
      if (spec.complete_only && tau != 0) continue;
      if ((3 * n - tau) % 2 != 0 || tau > 3 * n) continue;
      OracleState st;
      st.spec = &spec;
      st.n = n;
      st.tau = tau;
      st.m = (3 * n - tau) / 2;
      st.deg.assign(n, 0);
      st.out = &out;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) st.pairs.push_back({u, v});
      extend(st, 0);
    }
  }
  return out;
}

EmbeddedGraph scrambled(const EmbeddedGraph& g, unsigned seed, bool mirror) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  EmbeddedGraph h = g.relabeled(perm);
  return mirror ? h.mirrored() : h;
}

}  // namespace matchstick::testing
