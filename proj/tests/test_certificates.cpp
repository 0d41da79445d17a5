#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "matchstick/canonical.hpp"
#include "matchstick/certificates.hpp"
#include "matchstick/constructions.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/error.hpp"
#include "matchstick/fixtures.hpp"
#include "support.hpp"

using namespace matchstick;
namespace mt = matchstick::testing;

namespace {

FaceProfile profile(std::map<int, int> a, int k, int girth = 4) {
  FaceProfile p;
  p.a = std::move(a);
  p.k = k;
  p.girth = girth;
  for (auto [len, count] : p.a) p.f_total += count;
  return p;
}

const std::vector<EmbeddedGraph>& sweep_graphs() {
  static const auto graphs = [] {
    EnumSpec s;
    s.n_max = 18;
    s.n_values = {16, 18};
    s.complete_only = true;
    s.connectivity_min = 3;
    return enumerate_all(s);
  }();
  return graphs;
}

const SurvivorsDb& db() {
  static const SurvivorsDb d = build_survivors_db();
  return d;
}

CertificateReport run(CertificateId id, const EmbeddedGraph& g) {
  PipelineConfig cfg;
  cfg.enabled = {id};
  cfg.survivors = &db();
  return filter_pipeline(g, cfg).at(0);
}

// Outer edges whose other side is a quadrangle, found by scanning face walks.
int brute_force_x(const EmbeddedGraph& g) {
  const auto outer = g.face_walk(*g.outer_face());
  int x = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const Edge e = make_edge(outer[i], outer[(i + 1) % outer.size()]);
    bool quad = false;
    for (int f = 0; f < g.face_count(); ++f) {
      if (f == *g.outer_face() || g.face_length(f) != 4) continue;
      const auto w = g.face_walk(f);
      for (int j = 0; j < 4; ++j)
        if (make_edge(w[j], w[(j + 1) % 4]) == e) quad = true;
    }
    x += quad;
  }
  return x;
}

}  // namespace

TEST(Certificates, Names) {
  for (auto id : all_certificates()) EXPECT_EQ(certificate_from_string(to_string(id)), id);
  EXPECT_THROW(certificate_from_string("nope"), Error);
  EXPECT_EQ(all_certificates().front(), CertificateId::euler_girth);
}

TEST(EulerGirth, ScreensCandidates) {
  const auto g = fixture("FIG1_G4").graph;
  EXPECT_EQ(cert_euler_girth(g, face_profile(g)).verdict, Verdict::passed);
  // FIG1_G4 with the hexagon as an inner face leaves degree-2 vertices inside.
  const auto h = g.with_outer_face(g.face_of_dart(g.reverse_dart(g.face_darts(*g.outer_face()).front())));
  const auto r = cert_euler_girth(h, face_profile(h));
  EXPECT_EQ(r.verdict, Verdict::rejected);
  EXPECT_FALSE(r.witness.is_null());
}

TEST(QuadrangleInterior, Examples) {
  const auto square = EmbeddedGraph::build({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, DirectedEdge{0, 1});
  EXPECT_EQ(cert_quadrangle_interior(square, face_profile(square)).verdict, Verdict::passed);
  const auto cube = fixture("CUBE").graph;
  const auto r = cert_quadrangle_interior(cube, face_profile(cube));
  EXPECT_EQ(r.verdict, Verdict::rejected);
  EXPECT_EQ(r.witness["enclosed_faces"], 5);
  // Every k = 4 candidate on 8 vertices.
  EnumSpec s;
  s.n_max = 8;
  s.n_values = {8};
  s.tau_set = {0, 1, 2, 3, 4};
  int seen = 0;
  for (const auto& g : enumerate_all(s)) {
    const auto p = face_profile(g);
    if (p.k != 4) continue;
    ++seen;
    EXPECT_EQ(cert_quadrangle_interior(g, p).verdict, Verdict::rejected);
  }
  EXPECT_GT(seen, 0);
}

TEST(Inner444, Examples) {
  const auto g3 = fixture("FIG1_G3").graph;
  EXPECT_EQ(face_profile(g3).k, 6);
  EXPECT_EQ(cert_inner_444(g3, face_profile(g3)).verdict, Verdict::passed);

  const auto pent = mt::pentagon_444();
  const auto pp = face_profile(pent);
  EXPECT_EQ(pp.k, 5);
  EXPECT_EQ(pp.tau, 1);
  const auto r = cert_inner_444(pent, pp);
  EXPECT_EQ(r.verdict, Verdict::rejected);
  EXPECT_TRUE(r.witness.contains("vertex"));

  const auto g4 = fixture("FIG1_G4").graph;
  EXPECT_EQ(cert_inner_444(g4, face_profile(g4)).verdict, Verdict::inapplicable);
}

TEST(OuterQuadrangleBound, SixFaceWithTwoQuadrangleEdges) {
  int found = 0;
  for (const auto& base : sweep_graphs())
    for (int f = 0; f < base.face_count(); ++f) {
      if (base.face_length(f) != 6) continue;
      const auto g = base.with_outer_face(f);
      if (brute_force_x(g) != 2) continue;
      ++found;
      const auto r = cert_outer_quadrangle_bound(g, face_profile(g));
      EXPECT_EQ(r.verdict, Verdict::rejected);
      EXPECT_EQ(r.witness["x"], 2);
    }
  EXPECT_GT(found, 0);
}

TEST(OuterQuadrangleBound, XMatchesBruteForce) {
  for (const auto& base : sweep_graphs())
    for (int f = 0; f < base.face_count(); ++f) {
      const auto g = base.with_outer_face(f);
      const auto p = face_profile(g);
      if (p.k <= 4) continue;
      const int x = brute_force_x(g);
      const bool expect_reject = x >= p.k - 4 || p.count(4) > p.f_total - 6;
      const auto r = cert_outer_quadrangle_bound(g, p);
      EXPECT_EQ(r.verdict, expect_reject ? Verdict::rejected : Verdict::passed);
      if (expect_reject) EXPECT_EQ(r.witness["x"], x);
    }
}

TEST(OuterQuadrangleBound, CubeIsInapplicable) {
  const auto cube = fixture("CUBE").graph;
  EXPECT_EQ(cert_outer_quadrangle_bound(cube, face_profile(cube)).verdict, Verdict::inapplicable);
}

TEST(A4Corollary, NineFacesFourQuadrangles) {
  EnumSpec s;
  s.n_max = 14;
  s.n_values = {14};
  s.complete_only = true;
  s.connectivity_min = 3;
  int found = 0;
  for (const auto& base : enumerate_all(s)) {
    const auto g = base.with_outer_face(0);
    const auto p = face_profile(g);
    ASSERT_EQ(p.f_total, 9);
    const auto r = cert_a4_corollary(g, p);
    EXPECT_EQ(r.verdict, p.count(4) > 3 ? Verdict::rejected : Verdict::passed);
    if (p.count(4) == 4) {
      ++found;
      EXPECT_EQ(r.witness["a4"], 4);
      EXPECT_EQ(cert_outer_quadrangle_bound(g, p).verdict == Verdict::rejected || p.k <= 4, true);
    }
  }
  EXPECT_GT(found, 0);
}

TEST(AreaFeasibility, Examples) {
  // Outer pentagon with five inner pentagons: |F| = 9, A_4 = 3, A_5 = 6.
  auto r = cert_area_feasibility(profile({{4, 3}, {5, 6}}, 5));
  EXPECT_EQ(r.verdict, Verdict::rejected);
  EXPECT_EQ(r.witness["m"], 5);
  EXPECT_NEAR(r.witness["ratio"].get<double>(), 3.973, 1e-3);

  r = cert_area_feasibility(profile({{5, 15}, {9, 1}}, 9));
  EXPECT_EQ(r.verdict, Verdict::rejected);
  EXPECT_EQ(r.witness["m"], 15);

  EXPECT_EQ(cert_area_feasibility(profile({{5, 16}, {10, 1}}, 10)).verdict, Verdict::passed);
  EXPECT_THROW(cert_area_feasibility(profile({{2, 1}}, 2)), Error);
  EXPECT_EQ(cert_area_feasibility(profile({{3, 4}}, 3, 3)).verdict, Verdict::inapplicable);
}

TEST(AreaFeasibility, BoundaryUsesTolerance) {
  // Ratio at k = 6 is 6 up to rounding; m = 6 is rejected, m = 5 passes.
  EXPECT_EQ(cert_area_feasibility(profile({{5, 6}, {6, 1}}, 6)).verdict, Verdict::rejected);
  EXPECT_EQ(cert_area_feasibility(profile({{5, 5}, {6, 1}}, 6)).verdict, Verdict::passed);
}

TEST(AreaFeasibility, Monotone) {
  for (int k = 3; k <= 20; ++k)
    for (int m = 0; m <= 40; ++m) {
      const auto at = [&](int kk, int mm) {
        std::map<int, int> a{{kk, 1}};
        a[kk == 5 ? 7 : 5] += mm;
        return cert_area_feasibility(profile(a, kk)).verdict;
      };
      if (at(k, m) == Verdict::rejected) {
        EXPECT_EQ(at(k, m + 1), Verdict::rejected) << k << " " << m;
      } else {
        EXPECT_EQ(at(k + 1, m), Verdict::passed) << k << " " << m;
      }
    }
}

TEST(AreaFeasibility, GraphFormCountsSimpleOddFaces) {
  const auto g = fixture("FIG1_G4").graph;  // two pentagons inside a hexagon
  EXPECT_EQ(cert_area_feasibility(g, face_profile(g)).verdict, Verdict::passed);
  const auto pent = mt::pentagon_444();
  EXPECT_EQ(cert_area_feasibility(pent, face_profile(pent)).verdict, Verdict::passed);
}

TEST(SmallComponentSplit, Examples) {
  const auto bridged = mt::bridged_pentagons();
  const auto p = face_profile(bridged);
  EXPECT_EQ(p.tau, 0);
  EXPECT_EQ(connectivity_class(bridged).level, ConnectivityLevel::one_connected);
  const auto r = cert_small_component_split(bridged, p, db());
  EXPECT_EQ(r.verdict, Verdict::rejected);
  EXPECT_FALSE(r.witness.is_null());

  const auto twenty = construct_complete_girth4(20).graph;
  EXPECT_EQ(connectivity_class(twenty).level, ConnectivityLevel::two_connected);
  EXPECT_EQ(cert_small_component_split(twenty, face_profile(twenty), db()).verdict, Verdict::passed);

  const auto cube = fixture("CUBE").graph;
  EXPECT_EQ(cert_small_component_split(cube, face_profile(cube), db()).verdict, Verdict::inapplicable);
}

TEST(SmallComponentSplit, SurvivorsAreTheTwoFixtures) {
  ASSERT_EQ(db().size(), 2u);
  EXPECT_TRUE(db().contains(fixture("FIG1_G4").graph));
  EXPECT_TRUE(db().contains(fixture("FIG5_G2").graph));
  EXPECT_TRUE(db().contains(mt::scrambled(fixture("FIG5_G2").graph, 3, true)));
  EXPECT_FALSE(db().contains(fixture("FIG5_G1").graph));
}

TEST(BoundGirth5, Trace) {
  const auto b = bound_girth5();
  ASSERT_EQ(b.trace.size(), 3u);
  EXPECT_EQ(b.trace[0], (std::pair<int, int>{0, 12}));
  EXPECT_EQ(b.trace[1], (std::pair<int, int>{9, 15}));
  EXPECT_EQ(b.trace[2], (std::pair<int, int>{10, 16}));
  EXPECT_EQ(b.n_lower, 30);
  for (std::size_t i = 1; i < b.trace.size(); ++i) {
    EXPECT_GT(b.trace[i].first, b.trace[i - 1].first);
    EXPECT_GT(b.trace[i].second, b.trace[i - 1].second);
  }
  // Each step: the smallest k whose ratio exceeds the inner pentagon count,
  // then the face identity with one more face per unit of k beyond 6.
  for (std::size_t i = 1; i < b.trace.size(); ++i) {
    const int a5 = b.trace[i - 1].second;
    const int k = b.trace[i].first;
    const int inner = a5 - (k == 5 ? 1 : 0);
    EXPECT_LT(inner, a_max_ratio(k));
    EXPECT_GE(inner, a_max_ratio(k - 1)) << k;
    EXPECT_EQ(b.trace[i].second, std::max(a5, 12 + k - 6));
  }
  EXPECT_EQ(b.n_lower, 2 * (b.trace.back().second + 1) - 4);
  const auto j = to_json(b);
  EXPECT_EQ(j["n_lower"], 30);
}

TEST(Pipeline, CubeRejectedByQuadrangleInterior) {
  PipelineConfig cfg;
  const auto reports = filter_pipeline(fixture("CUBE").graph, cfg);
  ASSERT_FALSE(reports.empty());
  EXPECT_EQ(reports.back().certificate, CertificateId::quadrangle_interior);
  EXPECT_EQ(reports.back().verdict, Verdict::rejected);
}

TEST(Pipeline, RealizableFixturesPass) {
  PipelineConfig cfg;
  cfg.exhaustive = true;
  cfg.survivors = &db();
  for (const char* name : {"FIG1_G4", "FIG5_G2", "FIG5_G1", "FIG1_G3"}) {
    const auto reports = filter_pipeline(fixture(name).graph, cfg);
    EXPECT_EQ(reports.size(), all_certificates().size());
    for (const auto& r : reports) {
      EXPECT_NE(r.verdict, Verdict::rejected) << name << " " << to_string(r.certificate);
      EXPECT_TRUE(r.witness.is_null());
    }
  }
}

TEST(Pipeline, NeedsOuterFace) {
  EXPECT_THROW(filter_pipeline(fixture("CUBE").graph.without_outer_face(), PipelineConfig{}), Error);
}

TEST(Pipeline, SweepGraphsAllRejected) {
  PipelineConfig cfg;
  cfg.survivors = &db();
  ASSERT_EQ(sweep_graphs().size(), 46u);
  for (const auto& g : sweep_graphs()) {
    const auto a = assess_graph(g, cfg);
    EXPECT_EQ(static_cast<int>(a.faces.size()), g.face_count());
    EXPECT_TRUE(a.rejected());
  }
}

TEST(Pipeline, VerdictIndependentOfOrder) {
  std::vector<EmbeddedGraph> graphs;
  for (const auto& g : sweep_graphs()) graphs.push_back(g.with_outer_face(0));
  EnumSpec s;
  s.tau_set = {1, 2};
  for (auto& g : enumerate_all(s)) graphs.push_back(std::move(g));
  PipelineConfig all;
  all.exhaustive = true;
  all.survivors = &db();
  for (const auto& g : graphs) {
    bool any = false;
    for (auto id : all_certificates()) any = any || run(id, g).verdict == Verdict::rejected;
    const auto reports = filter_pipeline(g, all);
    const bool pipeline = std::any_of(reports.begin(), reports.end(),
                                      [](const auto& r) { return r.verdict == Verdict::rejected; });
    EXPECT_EQ(pipeline, any);
  }
}

TEST(Pipeline, JsonLines) {
  PipelineConfig cfg;
  const auto a = assess_graph(fixture("CUBE").graph, cfg);
  const auto lines = report_lines(a, "cube", false);
  ASSERT_EQ(lines.size(), 1u);
  const auto j = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(j["graph_id"], "cube");
  EXPECT_EQ(j["verdict"], "rejected");
  EXPECT_EQ(j["certificate"], "quadrangle_interior");
  // Field order is fixed.
  EXPECT_EQ(lines[0].find("{\"graph_id\""), 0u);
}
