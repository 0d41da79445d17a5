#include "matchstick/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

Fixture make(std::string name, std::string description, std::vector<std::string> labels,
             std::vector<std::pair<double, double>> drawing, std::vector<Edge> edges) {
  EmbeddedGraph g = embedding_from_drawing(drawing, edges);
  return Fixture{std::move(name), std::move(description), std::move(labels), std::move(drawing),
                 std::move(edges), std::move(g)};
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Ten-vertex ladder with two pentagon caps. Ids 0..3 = bottom row (B1..B4),
// 4..7 = top row (T1..T4), 8 = apex over the top row, 9 = apex under the bottom row.
std::vector<Edge> ladder_edges() {
  return {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {0, 4},
          {1, 5}, {2, 6}, {3, 7}, {4, 8}, {7, 8}, {0, 9}, {3, 9}};
}

std::vector<std::pair<double, double>> ladder_drawing() {
  return {{0.0, 1.0},  {0.66, 1.0}, {1.33, 1.0}, {2.0, 1.0}, {0.0, 2.0},
          {0.66, 2.0}, {1.33, 2.0}, {2.0, 2.0},  {1.0, 3.0}, {1.0, 0.0}};
}

Fixture cube() {
  std::vector<std::pair<double, double>> d = {{0, 0}, {3, 0}, {3, 3}, {0, 3},
                                              {1, 1}, {2, 1}, {2, 2}, {1, 2}};
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                         {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return make("CUBE", "3-cube, outer face a quadrangle", numeric_labels(8), d, e);
}

Fixture fig1_g3() {
  std::vector<std::pair<double, double>> d;
  for (int i = 0; i < 6; ++i) {
    const double phi = std::numbers::pi / 2 - i * std::numbers::pi / 3;
    d.emplace_back(std::cos(phi), std::sin(phi));
  }
  d.emplace_back(0.0, 0.0);
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {2, 6}, {4, 6}};
  return make("FIG1_G3", "hexagon with a centre joined to alternate corners (k=6, tau=3)",
              numeric_labels(7), d, e);
}

Fixture fig1_g4() {
  return make("FIG1_G4", "three-quadrangle ladder with two pentagon caps (n=10, k=6, tau=2)",
              numeric_labels(10), ladder_drawing(), ladder_edges());
}

Fixture fig5_g1() {
  auto d = ladder_drawing();
  d.emplace_back(3.0, 2.0);
  d.emplace_back(3.0, 1.0);
  auto e = ladder_edges();
  e.insert(e.end(), {{8, 10}, {10, 11}, {9, 11}});
  return make("FIG5_G1", "FIG1_G4 plus the path 9-11-12-10 (n=12, tau=2)", numeric_labels(12),
              d, e);
}

Fixture fig5_g2() {
  // b0..b4 = 0..4, m1..m3 = 5..7, t0 = 8, t4 = 9
  std::vector<std::pair<double, double>> d = {{0, 0.5}, {1, 0.5}, {2, 0.5}, {3, 0.5}, {4, 0.5},
                                              {1, 1.5}, {2, 1.5}, {3, 1.5}, {0, 2.5}, {4, 2.5}};
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}, {5, 6},
                         {6, 7}, {0, 8}, {4, 9}, {5, 8}, {7, 9}, {8, 9}};
  return make("FIG5_G2", "four quadrangles under a pentagon (n=10, k=7, tau=2)",
              {"b0", "b1", "b2", "b3", "b4", "m1", "m2", "m3", "t0", "t4"}, d, e);
}

Fixture fig9() {
  auto d = ladder_drawing();
  d.emplace_back(3.0, 1.5);
  auto e = ladder_edges();
  e.insert(e.end(), {{8, 10}, {9, 10}});
  return make("FIG9", "FIG1_G4 plus a vertex joined to both apexes (n=11)", numeric_labels(11),
              d, e);
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"CUBE", "FIG1_G3", "FIG1_G4", "FIG5_G1", "FIG5_G2", "FIG9"};
}

Fixture fixture(std::string_view name) {
  if (name == "CUBE") return cube();
  if (name == "FIG1_G3") return fig1_g3();
  if (name == "FIG1_G4") return fig1_g4();
  if (name == "FIG5_G1") return fig5_g1();
  if (name == "FIG5_G2") return fig5_g2();
  if (name == "FIG9") return fig9();
  throw Error("unknown fixture '" + std::string(name) + "'");
}

}  // namespace matchstick
