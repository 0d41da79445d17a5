#include "matchstick/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "matchstick/canonical.hpp"
#include "matchstick/error.hpp"
#include "matchstick/invariants.hpp"

namespace matchstick {

namespace {

using Rotation = std::vector<std::vector<VertexId>>;

constexpr int kGrowthLimit = 12;
constexpr int kCubicLimit = 20;

bool uses_dual_route(const EnumSpec& s) { return s.complete_only && s.connectivity_min >= 3; }

bool wanted_n(const EnumSpec& s, int n) {
  if (n < 2 || n > s.n_max) return false;
  return s.n_values.empty() || s.n_values.contains(n);
}

int effective_jobs(int jobs) { return std::max(1, jobs); }

// Runs body(i) for i in [0, count) on `jobs` threads.
template <class F>
void parallel_for(int count, int jobs, F&& body) {
  jobs = std::min(effective_jobs(jobs), std::max(1, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (int i = next++; i < count; i = next++) body(i, t);
    });
  }
}

void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId x) {
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, x);
}

std::vector<std::vector<int>> all_distances(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<VertexId> queue(n);
  for (VertexId s = 0; s < n; ++s) {
    auto& d = dist[s];
    int head = 0, tail = 0;
    d[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const VertexId x = queue[head++];
      for (VertexId y : g.rotation(x)) {
        if (d[y] < 0) {
          d[y] = d[x] + 1;
          queue[tail++] = y;
        }
      }
    }
  }
  return dist;
}

struct Keyed {
  std::string key;
  EmbeddedGraph graph;
};

bool key_less(const Keyed& a, const Keyed& b) {
  if (a.graph.vertex_count() != b.graph.vertex_count())
    return a.graph.vertex_count() < b.graph.vertex_count();
  return a.key < b.key;
}

// Candidates contributed by one plane graph: one per admissible outer face,
// or the bare graph for cubic specs.
void admissible_outputs(const EnumSpec& s, const EmbeddedGraph& g, std::vector<Keyed>& out) {
  if (!wanted_n(s, g.vertex_count())) return;
  if (s.complete_only) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) != 3) return;
    if (!s.tau_set.contains(0)) return;
    if (static_cast<int>(connectivity_class(g).level) < s.connectivity_min) return;
    out.push_back({canonical_key(g).bytes, canonical_form(g)});
    return;
  }
  bool connectivity_checked = false;
  for (int f = 0; f < g.face_count(); ++f) {
    EmbeddedGraph h = g.with_outer_face(f);
    if (!inner_vertices_regular(h)) continue;
    if (!s.tau_set.contains(face_profile(h).tau)) continue;
    if (!connectivity_checked) {
      if (static_cast<int>(connectivity_class(g).level) < s.connectivity_min) return;
      connectivity_checked = true;
    }
    out.push_back({canonical_key(h).bytes, std::move(h)});
  }
}

// Every child obtained by one growth move: a pendant vertex hung into a
// corner, or an edge drawn across a face between two of its corners.
void children(const EnumSpec& s, const EmbeddedGraph& g, std::vector<Rotation>& out) {
  const int n = g.vertex_count();
  if (n < s.n_max) {
    for (int d = 0; d < g.dart_count(); ++d) {
      const VertexId u = g.dart_tail(d), v = g.dart_head(d);
      if (g.degree(v) >= 3) continue;
      Rotation r = g.rotations();
      insert_after(r[v], u, n);
      r.push_back({v});
      out.push_back(std::move(r));
    }
  }
  const auto dist = all_distances(g);
  for (int f = 0; f < g.face_count(); ++f) {
    const auto darts = g.face_darts(f);
    const int len = static_cast<int>(darts.size());
    for (int i = 0; i < len; ++i) {
      const VertexId a = g.dart_head(darts[i]);
      if (g.degree(a) >= 3) continue;
      for (int j = i + 1; j < len; ++j) {
        const VertexId b = g.dart_head(darts[j]);
        if (b == a || g.degree(b) >= 3 || g.adjacent(a, b)) continue;
        if (dist[a][b] + 1 < s.girth_min) continue;
        Rotation r = g.rotations();
        insert_after(r[a], g.dart_tail(darts[i]), b);
        insert_after(r[b], g.dart_tail(darts[j]), a);
        out.push_back(std::move(r));
      }
    }
  }
}

void grow(const EnumSpec& s, const std::function<void(const EmbeddedGraph&)>& sink) {
  std::vector<EmbeddedGraph> level{EmbeddedGraph::build({{1}, {0}})};
  const int jobs = effective_jobs(s.jobs);
  while (!level.empty()) {
    std::vector<std::vector<Keyed>> outputs(level.size());
    std::vector<std::unordered_map<std::string, Rotation>> next_parts(jobs);
    parallel_for(static_cast<int>(level.size()), jobs, [&](int i, int t) {
      admissible_outputs(s, level[i], outputs[i]);
      std::vector<Rotation> kids;
      children(s, level[i], kids);
      for (auto& r : kids) {
        EmbeddedGraph c = EmbeddedGraph::build(std::move(r));
        auto key = canonical_key(c).bytes;
        if (!next_parts[t].contains(key)) next_parts[t].emplace(std::move(key), c.rotations());
      }
    });

    std::vector<Keyed> emitted;
    for (auto& o : outputs)
      for (auto& k : o) emitted.push_back(std::move(k));
    std::sort(emitted.begin(), emitted.end(), key_less);
    emitted.erase(std::unique(emitted.begin(), emitted.end(),
                              [](const Keyed& a, const Keyed& b) { return a.key == b.key; }),
                  emitted.end());
    for (const auto& k : emitted) sink(canonical_form(k.graph));

    std::map<std::string, Rotation> merged;
    for (auto& part : next_parts)
      for (auto& [key, rot] : part) merged.try_emplace(key, std::move(rot));
    level.clear();
    level.reserve(merged.size());
    for (auto& [key, rot] : merged) level.push_back(canonical_form(EmbeddedGraph::build(std::move(rot))));
  }
}

// Bipyramid over a cycle of N-2 vertices (tetrahedron for N = 4).
Rotation seed_triangulation(int count) {
  if (count == 4) return {{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}};
  const int m = count - 2;
  const VertexId inner = m, outer = m + 1;
  Rotation r(count);
  for (int i = 0; i < m; ++i) r[i] = {outer, (i + m - 1) % m, inner, (i + 1) % m};
  for (int i = m - 1; i >= 0; --i) r[inner].push_back(i);
  for (int i = 0; i < m; ++i) r[outer].push_back(i);
  return r;
}

std::vector<EmbeddedGraph> triangulations(int count, int jobs) {
  std::map<std::string, EmbeddedGraph> seen;
  EmbeddedGraph seed = canonical_form(EmbeddedGraph::build(seed_triangulation(count)));
  seen.emplace(canonical_key(seed).bytes, seed);
  std::vector<EmbeddedGraph> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<Keyed>> found(frontier.size());
    parallel_for(static_cast<int>(frontier.size()), jobs, [&](int i, int) {
      const EmbeddedGraph& t = frontier[i];
      for (const Edge& e : t.edges()) {
        const VertexId a = e.u, b = e.v;
        if (t.degree(a) <= 3 || t.degree(b) <= 3) continue;
        const int ab = t.dart(a, b), ba = t.dart(b, a);
        const VertexId c = t.dart_head(t.next_dart(ab));
        const VertexId d = t.dart_head(t.next_dart(ba));
        if (c == d || t.adjacent(c, d)) continue;
        Rotation r = t.rotations();
        std::erase(r[a], b);
        std::erase(r[b], a);
        insert_after(r[c], b, d);
        insert_after(r[d], a, c);
        EmbeddedGraph flipped = EmbeddedGraph::build(std::move(r));
        found[i].push_back({canonical_key(flipped).bytes, std::move(flipped)});
      }
    });
    std::vector<EmbeddedGraph> next;
    for (auto& list : found) {
      for (auto& k : list) {
        if (seen.contains(k.key)) continue;
        EmbeddedGraph c = canonical_form(k.graph);
        seen.emplace(std::move(k.key), c);
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<EmbeddedGraph> all;
  all.reserve(seen.size());
  for (auto& [key, t] : seen) all.push_back(std::move(t));
  return all;
}

EmbeddedGraph dual_graph(const EmbeddedGraph& t) {
  Rotation r(t.face_count());
  for (int f = 0; f < t.face_count(); ++f) {
    const auto darts = t.face_darts(f);
    for (auto it = darts.rbegin(); it != darts.rend(); ++it)
      r[f].push_back(t.face_of_dart(t.reverse_dart(*it)));
  }
  return EmbeddedGraph::build(std::move(r));
}

// Cubic 3-connected graphs are exactly the duals of simple triangulations
// with at least four vertices, so these specs walk the flip graph of
// triangulations on n/2 + 2 vertices instead of growing subgraphs.
void cubic_duals(const EnumSpec& s, const std::function<void(const EmbeddedGraph&)>& sink) {
  if (!s.tau_set.contains(0)) return;
  for (int n = 4; n <= s.n_max; n += 2) {
    if (!wanted_n(s, n)) continue;
    std::vector<Keyed> out;
    for (const EmbeddedGraph& t : triangulations(n / 2 + 2, s.jobs)) {
      EmbeddedGraph d = dual_graph(t);
      if (girth(d) < s.girth_min) continue;
      out.push_back({canonical_key(d).bytes, canonical_form(d)});
    }
    std::sort(out.begin(), out.end(), key_less);
    for (const auto& k : out) sink(k.graph);
  }
}

}  // namespace

void validate(const EnumSpec& s) {
  if (s.n_max < 4) throw Error("n_max must be at least 4");
  if (s.girth_min < 3) throw Error("girth_min must be at least 3");
  if (s.connectivity_min < 1 || s.connectivity_min > 3) throw Error("connectivity_min must be 1, 2 or 3");
  for (int t : s.tau_set)
    if (t < 0) throw Error("tau values must be non-negative");
  for (int n : s.n_values)
    if (n < 1 || n > s.n_max) throw Error("requested vertex count " + std::to_string(n) + " exceeds n_max");
  const int limit = uses_dual_route(s) ? kCubicLimit : kGrowthLimit;
  if (s.n_max > limit)
    throw Error("n_max " + std::to_string(s.n_max) + " is outside the supported range (at most " +
                std::to_string(limit) + " for this spec)");
}

void enumerate_graphs(const EnumSpec& spec, const std::function<void(const EmbeddedGraph&)>& sink) {
  validate(spec);
  if (uses_dual_route(spec))
    cubic_duals(spec, sink);
  else
    grow(spec, sink);
}

std::vector<EmbeddedGraph> enumerate_all(const EnumSpec& spec) {
  std::vector<EmbeddedGraph> out;
  enumerate_graphs(spec, [&](const EmbeddedGraph& g) { out.push_back(g); });
  return out;
}

void EnumCounts::add(const EmbeddedGraph& g) {
  ++total;
  ++by_n[g.vertex_count()];
  ++by_tau[g.outer_face() ? face_profile(g).tau : 0];
}

std::string count_report_json(const EnumSpec& spec, const EnumCounts& counts) {
  nlohmann::ordered_json j;
  j["spec"] = {{"n_max", spec.n_max},
               {"girth_min", spec.girth_min},
               {"tau_set", spec.tau_set},
               {"connectivity_min", spec.connectivity_min},
               {"complete_only", spec.complete_only},
               {"n_values", spec.n_values}};
  j["total"] = counts.total;
  nlohmann::ordered_json by_n = nlohmann::ordered_json::object(), by_tau = nlohmann::ordered_json::object();
  for (auto [n, c] : counts.by_n) by_n[std::to_string(n)] = c;
  for (auto [t, c] : counts.by_tau) by_tau[std::to_string(t)] = c;
  j["by_n"] = by_n;
  j["by_tau"] = by_tau;
  return j.dump();
}

bool satisfies(const EnumSpec& s, const EmbeddedGraph& g) {
  if (!wanted_n(s, g.vertex_count()) || g.max_degree() > 3) return false;
  if (girth(g) < s.girth_min) return false;
  if (static_cast<int>(connectivity_class(g).level) < s.connectivity_min) return false;
  if (s.complete_only) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) != 3) return false;
    return s.tau_set.contains(0);
  }
  if (!g.outer_face() || !inner_vertices_regular(g)) return false;
  return s.tau_set.contains(face_profile(g).tau);
}

}  // namespace matchstick
