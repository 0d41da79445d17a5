#include "matchstick/certificates.hpp"

#include <algorithm>
#include <map>

#include "matchstick/canonical.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/error.hpp"
#include "matchstick/geometry.hpp"

namespace matchstick {

namespace {

using json = nlohmann::ordered_json;

CertificateReport verdict_only(CertificateId id, Verdict v) { return {id, v, nullptr}; }

CertificateReport rejected(CertificateId id, json witness) {
  return {id, Verdict::rejected, std::move(witness)};
}

bool is_cubic(const EmbeddedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

bool simple_face(const EmbeddedGraph& g, int f) {
  auto walk = g.face_walk(f);
  std::sort(walk.begin(), walk.end());
  return std::adjacent_find(walk.begin(), walk.end()) == walk.end();
}

bool candidate_shape(const EmbeddedGraph& g, const FaceProfile& p) {
  return g.outer_face() && p.girth >= 4 && g.max_degree() <= 3 && inner_vertices_regular(g);
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

// Faces on the side of `cycle` away from the outer face.
std::vector<char> enclosed_face_mask(const EmbeddedGraph& g, const std::vector<VertexId>& cycle) {
  std::set<Edge> on_cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    on_cycle.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  std::vector<char> outside(g.face_count(), 0);
  std::vector<int> stack{*g.outer_face()};
  outside[*g.outer_face()] = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int d : g.face_darts(f)) {
      if (on_cycle.contains(make_edge(g.dart_tail(d), g.dart_head(d)))) continue;
      const int h = g.face_of_dart(g.reverse_dart(d));
      if (!outside[h]) {
        outside[h] = 1;
        stack.push_back(h);
      }
    }
  }
  for (char& c : outside) c = !c;
  return outside;
}

int enclosed_faces(const EmbeddedGraph& g, const std::vector<VertexId>& cycle) {
  const auto mask = enclosed_face_mask(g, cycle);
  return static_cast<int>(std::count(mask.begin(), mask.end(), 1));
}

// Simple cycles of length <= max_len, each once: it starts at its smallest
// vertex and its second vertex is smaller than its last.
std::vector<std::vector<VertexId>> short_cycles(const EmbeddedGraph& g, int max_len) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<char> used(g.vertex_count(), 0);
  auto extend = [&](auto&& self) -> void {
    const VertexId s = path.front(), x = path.back();
    for (VertexId y : g.rotation(x)) {
      if (y == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (y <= s || used[y] || static_cast<int>(path.size()) >= max_len) continue;
      used[y] = 1;
      path.push_back(y);
      self(self);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    used[s] = 1;
    extend(extend);
    used[s] = 0;
  }
  return out;
}

// Every 4-cycle once, listed from its smallest vertex.
std::vector<std::vector<VertexId>> four_cycles(const EmbeddedGraph& g) {
  std::vector<std::vector<VertexId>> out;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    const auto nb = g.rotation(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = 0; j < nb.size(); ++j) {
        const VertexId b = nb[i], d = nb[j];
        if (b >= d || b < a || d < a) continue;
        for (VertexId c : g.rotation(b))
          if (c > a && c != d && g.adjacent(c, d)) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

int inner_vertex_count(const EmbeddedGraph& g) {
  const auto inner = g.inner_mask();
  return static_cast<int>(std::count(inner.begin(), inner.end(), true));
}

// The component on `vertices`, with the outer face inherited from g.
struct Side {
  EmbeddedGraph graph;
  bool covered = false;  ///< every cut endpoint lies on the side's outer face
};

Side split_side(const EmbeddedGraph& g, const std::vector<VertexId>& vertices,
                const std::vector<Edge>& cut) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<VertexId>> rot(vertices.size());
  for (VertexId v : vertices)
    for (VertexId w : g.rotation(v))
      if (index[w] >= 0) rot[index[v]].push_back(index[w]);

  // Corner left behind by each removed cut edge, named by its incoming dart.
  std::vector<DirectedEdge> corners;
  for (const Edge& e : cut) {
    for (auto [a, x] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (index[a] < 0) continue;
      const auto r = g.rotation(a);
      const int deg = static_cast<int>(r.size());
      const int pos = static_cast<int>(std::find(r.begin(), r.end(), x) - r.begin());
      VertexId p = r[(pos + deg - 1) % deg];
      for (int s = 2; index[p] < 0 && s < deg; ++s) p = r[(pos + deg - s) % deg];
      corners.push_back({index[p], index[a]});
    }
  }

  std::optional<DirectedEdge> outer;
  for (int d : g.face_darts(*g.outer_face())) {
    const VertexId u = g.dart_tail(d), v = g.dart_head(d);
    if (index[u] >= 0 && index[v] >= 0) {
      outer = DirectedEdge{index[u], index[v]};
      break;
    }
  }
  if (!outer) outer = corners.front();
  Side side{EmbeddedGraph::build(std::move(rot), outer), true};
  const EmbeddedGraph& c = side.graph;
  for (const auto& corner : corners)
    if (c.face_of_dart(c.dart(corner.from, corner.to)) != *c.outer_face()) side.covered = false;
  return side;
}

}  // namespace

std::string_view to_string(CertificateId id) {
  switch (id) {
    case CertificateId::euler_girth: return "euler_girth";
    case CertificateId::quadrangle_interior: return "quadrangle_interior";
    case CertificateId::inner_444: return "inner_444";
    case CertificateId::a4_corollary: return "a4_corollary";
    case CertificateId::outer_quadrangle_bound: return "outer_quadrangle_bound";
    case CertificateId::area_feasibility: return "area_feasibility";
    case CertificateId::small_component_split: return "small_component_split";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::rejected: return "rejected";
    case Verdict::passed: return "passed";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

const std::vector<CertificateId>& all_certificates() {
  static const std::vector<CertificateId> ids{
      CertificateId::euler_girth,        CertificateId::quadrangle_interior,
      CertificateId::inner_444,          CertificateId::a4_corollary,
      CertificateId::outer_quadrangle_bound, CertificateId::area_feasibility,
      CertificateId::small_component_split};
  return ids;
}

CertificateId certificate_from_string(std::string_view name) {
  for (CertificateId id : all_certificates())
    if (to_string(id) == name) return id;
  throw Error("unknown certificate '" + std::string(name) + "'");
}

CertificateReport cert_euler_girth(const EmbeddedGraph& g, const FaceProfile& p) {
  const auto id = CertificateId::euler_girth;
  const auto inner = g.inner_mask();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 3 || (inner[v] && g.degree(v) != 3))
      return rejected(id, {{"vertex", v}, {"degree", g.degree(v)}, {"inner", static_cast<bool>(inner[v])}});
  }
  long twice_edges = 0;
  for (auto [len, count] : p.a) twice_edges += static_cast<long>(len) * count;
  if (twice_edges != 2L * g.edge_count() || !euler_identity_check(p, g.vertex_count()))
    throw InvariantError("face counting identities fail on a valid plane graph");
  return verdict_only(id, Verdict::passed);
}

CertificateReport cert_quadrangle_interior(const EmbeddedGraph& g, const FaceProfile& p) {
  const auto id = CertificateId::quadrangle_interior;
  if (!candidate_shape(g, p)) return verdict_only(id, Verdict::inapplicable);
  for (const auto& cycle : four_cycles(g)) {
    const int inside = enclosed_faces(g, cycle);
    if (inside > 1) return rejected(id, {{"cycle", cycle}, {"enclosed_faces", inside}});
  }
  return verdict_only(id, Verdict::passed);
}

CertificateReport cert_inner_444(const EmbeddedGraph& g, const FaceProfile& p) {
  const auto id = CertificateId::inner_444;
  if (!candidate_shape(g, p)) return verdict_only(id, Verdict::inapplicable);
  const auto inner = g.inner_mask();
  const int inner_count = inner_vertex_count(g);
  std::vector<VertexId> centres;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!inner[v] || g.degree(v) != 3) continue;
    std::set<int> faces;
    bool quads = true;
    for (int i = 0; i < 3; ++i) {
      const int f = g.face_of_dart(g.first_dart(v) + i);
      faces.insert(f);
      quads = quads && g.face_length(f) == 4 && simple_face(g, f);
    }
    if (quads && faces.size() == 3) centres.push_back(v);
  }
  if (centres.empty()) return verdict_only(id, Verdict::inapplicable);
  if (p.k < 6 || (p.k == 6 && inner_count > 1))
    return rejected(id, {{"vertex", centres.front()}, {"k", p.k}, {"inner_vertices", inner_count}});

  // The hexagon around a centre has perimeter 6, so no other cycle of length
  // at most 6 can enclose it.
  const auto cycles = short_cycles(g, 6);
  for (VertexId v : centres) {
    std::set<Edge> hexagon;
    for (int i = 0; i < 3; ++i) {
      for (int d : g.face_darts(g.face_of_dart(g.first_dart(v) + i))) {
        if (g.dart_tail(d) != v && g.dart_head(d) != v)
          hexagon.insert(make_edge(g.dart_tail(d), g.dart_head(d)));
      }
    }
    const int face_at_v = g.face_of_dart(g.first_dart(v));
    for (const auto& cycle : cycles) {
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
      std::set<Edge> edges;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        edges.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
      if (edges == hexagon) continue;
      if (enclosed_face_mask(g, cycle)[face_at_v])
        return rejected(id, {{"vertex", v}, {"enclosing_cycle", cycle}});
    }
  }
  return verdict_only(id, Verdict::passed);
}

CertificateReport cert_outer_quadrangle_bound(const EmbeddedGraph& g, const FaceProfile& p) {
  const auto id = CertificateId::outer_quadrangle_bound;
  if (!g.outer_face() || !is_cubic(g) || p.girth < 4 || p.k <= 4) return verdict_only(id, Verdict::inapplicable);
  if (connectivity_class(g).level != ConnectivityLevel::three_connected)
    return verdict_only(id, Verdict::inapplicable);
  int x = 0;
  for (int d : g.face_darts(*g.outer_face())) {
    const int other = g.face_of_dart(g.reverse_dart(d));
    if (other != *g.outer_face() && g.face_length(other) == 4) ++x;
  }
  const int a4 = p.count(4);
  if (x >= p.k - 4 || a4 > p.f_total - 6)
    return rejected(id, {{"x", x}, {"k", p.k}, {"a4", a4}, {"faces", p.f_total}});
  return verdict_only(id, Verdict::passed);
}

CertificateReport cert_a4_corollary(const EmbeddedGraph& g, const FaceProfile& p) {
  const auto id = CertificateId::a4_corollary;
  if (!is_cubic(g) || p.girth < 4) return verdict_only(id, Verdict::inapplicable);
  if (connectivity_class(g).level != ConnectivityLevel::three_connected)
    return verdict_only(id, Verdict::inapplicable);
  const int a4 = p.count(4);
  if (a4 > p.f_total - 6) return rejected(id, {{"a4", a4}, {"faces", p.f_total}});
  return verdict_only(id, Verdict::passed);
}

namespace {

CertificateReport area_verdict(int k, int m) {
  const auto id = CertificateId::area_feasibility;
  const double ratio = a_max_ratio(k);
  if (m > ratio - kAreaTolerance) return rejected(id, {{"k", k}, {"m", m}, {"ratio", ratio}});
  return verdict_only(id, Verdict::passed);
}

}  // namespace

CertificateReport cert_area_feasibility(const FaceProfile& p) {
  if (p.k < 3) throw Error("area_feasibility needs an outer face of length at least 3");
  if (p.girth < 4) return verdict_only(CertificateId::area_feasibility, Verdict::inapplicable);
  int m = 0;
  for (auto [len, count] : p.a)
    if (len >= 5 && len % 2 == 1) m += count;
  if (p.k >= 5 && p.k % 2 == 1) --m;
  return area_verdict(p.k, m);
}

CertificateReport cert_area_feasibility(const EmbeddedGraph& g, const FaceProfile& p) {
  if (!g.outer_face() || p.girth < 4 || p.k < 3)
    return verdict_only(CertificateId::area_feasibility, Verdict::inapplicable);
  int m = 0;
  for (int f = 0; f < g.face_count(); ++f) {
    const int len = g.face_length(f);
    if (f != *g.outer_face() && len >= 5 && len % 2 == 1 && simple_face(g, f)) ++m;
  }
  return area_verdict(p.k, m);
}

SurvivorsDb::SurvivorsDb(std::vector<EmbeddedGraph> graphs) : graphs_(std::move(graphs)) {
  for (const auto& g : graphs_) keys_.insert(canonical_key(g).bytes);
}

bool SurvivorsDb::contains(const EmbeddedGraph& g) const { return keys_.contains(canonical_key(g).bytes); }

SurvivorsDb build_survivors_db(int jobs) {
  EnumSpec spec;
  spec.n_max = 10;
  spec.girth_min = 4;
  spec.tau_set = {1, 2};
  spec.connectivity_min = 1;
  spec.jobs = jobs;
  PipelineConfig cfg;
  cfg.enabled.erase(CertificateId::small_component_split);
  std::vector<EmbeddedGraph> kept;
  enumerate_graphs(spec, [&](const EmbeddedGraph& g) {
    if (!assess_graph(g, cfg).rejected()) kept.push_back(g);
  });
  return SurvivorsDb(std::move(kept));
}

CertificateReport cert_small_component_split(const EmbeddedGraph& g, const FaceProfile& p,
                                             const SurvivorsDb& survivors) {
  const auto id = CertificateId::small_component_split;
  if (!g.outer_face() || !is_cubic(g) || p.girth < 4) return verdict_only(id, Verdict::inapplicable);
  const auto cuts = minimum_edge_cuts(g);
  if (cuts.empty()) return verdict_only(id, Verdict::inapplicable);
  for (const auto& cut : cuts) {
    const auto parts = components_without(g, cut);
    json sizes = json::array();
    for (const auto& part : parts) sizes.push_back(part.size());
    for (const auto& part : parts) {
      if (part.size() > 10) continue;
      const Side side = split_side(g, part, cut);
      if (side.covered && !survivors.contains(side.graph)) {
        json cut_json = json::array();
        for (const Edge& e : cut) cut_json.push_back(edge_json(e));
        return rejected(id, {{"cut", cut_json}, {"component_sizes", sizes}, {"component", part}});
      }
    }
  }
  return verdict_only(id, Verdict::passed);
}

Girth5Bound bound_girth5() {
  // Girth 5, cubic, τ = 0: the face identity reads A_5 = 12 + sum_{i>=7} (i-6) A_i,
  // so a k-gon outer face with k >= 6 forces 12 + (k - 6) pentagons inside.
  Girth5Bound out;
  int a5 = 12;
  int k = 0;
  out.trace.push_back({k, a5});
  for (int step = 0; step < 12; ++step) {
    int next_k = std::max(k, 5);
    for (;; ++next_k) {
      const int inner_pentagons = a5 - (next_k == 5 ? 1 : 0);
      if (inner_pentagons < a_max_ratio(next_k) - kAreaTolerance) break;
    }
    if (next_k == k) break;
    k = next_k;
    a5 = std::max(a5, 12 + (k - 6));
    out.trace.push_back({k, a5});
  }
  out.n_lower = 2 * (a5 + 1) - 4;
  return out;
}

json to_json(const Girth5Bound& b) {
  json trace = json::array();
  for (auto [k, a5] : b.trace) {
    json step;
    if (k > 0) step["k_lower"] = k;
    step["a5_lower"] = a5;
    trace.push_back(step);
  }
  return {{"trace", trace}, {"n_lower", b.n_lower}};
}

std::vector<CertificateReport> filter_pipeline(const EmbeddedGraph& g, const PipelineConfig& cfg) {
  if (!g.outer_face()) throw Error("filter_pipeline needs a designated outer face");
  const FaceProfile p = face_profile(g);
  std::vector<CertificateReport> out;
  for (CertificateId id : all_certificates()) {
    if (!cfg.enabled.contains(id)) continue;
    CertificateReport r;
    switch (id) {
      case CertificateId::euler_girth: r = cert_euler_girth(g, p); break;
      case CertificateId::quadrangle_interior: r = cert_quadrangle_interior(g, p); break;
      case CertificateId::inner_444: r = cert_inner_444(g, p); break;
      case CertificateId::a4_corollary: r = cert_a4_corollary(g, p); break;
      case CertificateId::outer_quadrangle_bound: r = cert_outer_quadrangle_bound(g, p); break;
      case CertificateId::area_feasibility: r = cert_area_feasibility(g, p); break;
      case CertificateId::small_component_split:
        r = cfg.survivors ? cert_small_component_split(g, p, *cfg.survivors)
                          : verdict_only(id, Verdict::inapplicable);
        break;
    }
    out.push_back(std::move(r));
    if (out.back().verdict == Verdict::rejected && !cfg.exhaustive) break;
    // A failed screen makes the remaining hypotheses meaningless.
    if (out.back().verdict == Verdict::rejected && id == CertificateId::euler_girth) break;
  }
  return out;
}

bool FaceAssessment::rejected() const {
  return std::any_of(reports.begin(), reports.end(),
                     [](const CertificateReport& r) { return r.verdict == Verdict::rejected; });
}

bool GraphAssessment::rejected() const {
  return !faces.empty() && std::all_of(faces.begin(), faces.end(),
                                       [](const FaceAssessment& f) { return f.rejected(); });
}

GraphAssessment assess_graph(const EmbeddedGraph& g, const PipelineConfig& cfg) {
  GraphAssessment a;
  if (g.outer_face()) {
    a.faces.push_back({std::nullopt, filter_pipeline(g, cfg)});
    return a;
  }
  for (int f = 0; f < g.face_count(); ++f) {
    a.faces.push_back({f, filter_pipeline(g.with_outer_face(f), cfg)});
    if (!a.faces.back().rejected() && !cfg.exhaustive) break;
  }
  return a;
}

json to_json(const CertificateReport& r, const std::string& graph_id) {
  json j;
  j["graph_id"] = graph_id;
  j["certificate"] = to_string(r.certificate);
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.verdict == Verdict::rejected ? r.witness : json(nullptr);
  return j;
}

std::vector<std::string> report_lines(const GraphAssessment& a, const std::string& graph_id,
                                      bool exhaustive) {
  std::vector<std::string> lines;
  if (exhaustive) {
    for (const auto& face : a.faces) {
      for (const auto& r : face.reports) {
        json j = to_json(r, graph_id);
        if (face.face) j["outer_face"] = *face.face;
        lines.push_back(j.dump());
      }
    }
    return lines;
  }
  json j;
  j["graph_id"] = graph_id;
  if (!a.rejected()) {
    j["certificate"] = nullptr;
    j["verdict"] = "passed";
    j["witness"] = nullptr;
  } else if (a.faces.size() == 1 && !a.faces.front().face) {
    const auto& r = a.faces.front().reports.back();
    j["certificate"] = to_string(r.certificate);
    j["verdict"] = "rejected";
    j["witness"] = r.witness;
  } else {
    json per_face = json::array();
    for (const auto& face : a.faces) {
      const auto& r = face.reports.back();
      per_face.push_back({{"outer_face", *face.face}, {"certificate", to_string(r.certificate)}, {"witness", r.witness}});
    }
    j["certificate"] = to_string(a.faces.front().reports.back().certificate);
    j["verdict"] = "rejected";
    j["witness"] = {{"faces", per_face}};
  }
  lines.push_back(j.dump());
  return lines;
}

}  // namespace matchstick
