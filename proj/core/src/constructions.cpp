#include "matchstick/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

Realization from_drawing(std::vector<Point> coords, const std::vector<Edge>& edges, double tol) {
  EmbeddedGraph g = graph_from_coords(coords, edges);
  return Realization(std::move(coords), std::move(g), tol);
}

Realization checked(Realization re, const char* what) {
  const auto rep = verify_realization(re);
  if (!rep.passed() || !rep.orientation_consistent)
    throw InvariantError(std::string(what) + " failed geometric verification");
  return re;
}

// Congruence mapping a -> a2 and the direction of b - a onto b2 - a2.
Point place(Point p, Point a, Point b, Point a2, Point b2) {
  const double ang = std::atan2((b2 - a2).y, (b2 - a2).x) - std::atan2((b - a).y, (b - a).x);
  const double c = std::cos(ang), s = std::sin(ang);
  const Point v = p - a;
  return a2 + Point{c * v.x - s * v.y, s * v.x + c * v.y};
}

Point reflect(Point p, Point a, Point b) {
  const Point d = (1.0 / distance(a, b)) * (b - a);
  const Point foot = a + dot(p - a, d) * d;
  return 2.0 * foot - p;
}

}  // namespace

ChainParams solve_chain_closure(double alpha, int n_links) {
  if (n_links < 1) throw Error("n_links must be at least 1");
  if (n_links == 1) return {kPi / 6, kPi / 3, 1};
  if (!(alpha > 0 && alpha < kPi / 2)) throw Error("alpha must lie in (0, pi/2)");
  const double m = 2.0 * n_links - 2.0;
  auto f = [&](double beta) { return 2 * std::sin(alpha) + m * std::sin(beta) - 1.0; };
  double lo = alpha, hi = kPi / 2;
  if (!(f(lo) < 0 && f(hi) > 0)) throw Error("no beta in (alpha, pi/2) closes the chain");
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return {alpha, 0.5 * (lo + hi), n_links};
}

Realization construct_chain_k6(const ChainParams& p, bool closure) {
  const int n = p.n_links;
  if (n < 1) throw Error("n_links must be at least 1");
  if (n > 1 && !(p.alpha > 0 && p.alpha < p.beta && p.beta < kPi / 2))
    throw Error("chain angles must satisfy 0 < alpha < beta < pi/2");
  if (n == 1 && !(p.alpha > 0 && p.alpha < kPi / 2)) throw Error("alpha must lie in (0, pi/2)");
  const double width = 2 * std::sin(p.alpha) + (2 * n - 2) * std::sin(p.beta);
  if (closure && std::abs(width - 1.0) > 1e-12) throw Error("chain parameters do not satisfy the closure equation");

  // Bottom ends of the 2n + 1 rungs.
  std::vector<Point> base(2 * n + 1);
  base[0] = {0, 0};
  for (int j = 1; j <= 2 * n; ++j) {
    const bool outer = j == 1 || j == 2 * n;
    const double a = outer ? p.alpha : p.beta;
    const double dy = j % 2 == 1 && j != 2 * n ? std::cos(a) : -std::cos(a);
    base[j] = base[j - 1] + Point{std::sin(a), dy};
  }

  std::vector<Point> pts;
  std::vector<Edge> edges;
  std::vector<int> bottom(2 * n + 1), top(2 * n + 1);
  if (closure) {
    pts = {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1}, {1, 0}};
    edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    bottom[0] = 0, top[0] = 1, bottom[2 * n] = 5, top[2 * n] = 4;
    for (int j = 1; j < 2 * n; ++j) {
      bottom[j] = static_cast<int>(pts.size());
      pts.push_back(base[j]);
      top[j] = static_cast<int>(pts.size());
      pts.push_back(base[j] + Point{0, 1});
      edges.push_back({bottom[j], top[j]});
    }
  } else {
    for (int j = 0; j <= 2 * n; ++j) {
      bottom[j] = static_cast<int>(pts.size());
      pts.push_back(base[j]);
      top[j] = static_cast<int>(pts.size());
      pts.push_back(base[j] + Point{0, 1});
      edges.push_back({bottom[j], top[j]});
    }
  }
  for (int j = 1; j <= 2 * n; ++j) {
    edges.push_back(make_edge(bottom[j - 1], bottom[j]));
    edges.push_back(make_edge(top[j - 1], top[j]));
  }
  return checked(from_drawing(std::move(pts), edges, kConstructionEdgeTol), "chain construction");
}

TenVertexShape ten_vertex_shape(double alpha) {
  return {alpha - kPi / 2, kPi / 2, alpha / 2 - kPi / 2, 0, 1};
}

std::array<Point, 10> ten_vertex_points(const TenVertexShape& s) {
  std::array<Point, 10> p;
  p[4] = {0, 0};
  p[5] = {0, 1};
  p[6] = p[5] + unit(s.turn);
  p[7] = p[6] + unit(s.bend);
  const Point r = unit(s.rung);
  for (int i = 0; i < 4; ++i) p[i] = p[i + 4] + r;
  const auto c9 = unit_circle_intersections(p[4], p[7]);
  const auto c10 = unit_circle_intersections(p[0], p[3]);
  if (c9.empty() || c10.empty()) throw Error("ten-vertex shape has no apex");
  p[8] = c9[s.p9_root];
  p[9] = c10[s.p10_root];
  return p;
}

std::array<Edge, 14> ten_vertex_edges() {
  return {{{0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {0, 1}, {1, 2}, {2, 3}, {0, 9}, {3, 9}, {4, 8}, {7, 8}}};
}

Realization construct_ten_vertex() {
  const auto p = ten_vertex_points(ten_vertex_shape(35 * kDeg));
  const auto e = ten_vertex_edges();
  return checked(from_drawing({p.begin(), p.end()}, {e.begin(), e.end()}, kConstructionEdgeTol),
                 "ten-vertex construction");
}

Realization construct_complete_girth4(int n) {
  if (n % 2 != 0) throw Error("a cubic graph has an even number of vertices");
  if (n < 20) throw Error("no complete cubic girth-4 matchstick graph has fewer than 20 vertices");
  const auto ten_edges = ten_vertex_edges();
  std::vector<Point> pts;
  std::vector<Edge> edges;
  auto add_copy = [&](const std::array<Point, 10>& q) {
    const int off = static_cast<int>(pts.size());
    pts.insert(pts.end(), q.begin(), q.end());
    for (const Edge& e : ten_edges) edges.push_back({e.u + off, e.v + off});
    return off;
  };

  if (n == 20) {
    // Second copy: p9' one unit from p9 in direction 23 degrees, p10' on the
    // circle of radius |p9 p10| about p9' and the unit circle about p10.
    const auto a = ten_vertex_points(ten_vertex_shape(35 * kDeg));
    const Point x9 = a[8] + unit(23 * kDeg);
    const double rb = distance(a[8], a[9]);
    const double dd = distance(x9, a[9]);
    const double along = (rb * rb - 1 + dd * dd) / (2 * dd);
    const double h = std::sqrt(std::max(0.0, rb * rb - along * along));
    const Point u = (1.0 / dd) * (a[9] - x9);
    const Point x10 = x9 + along * u + h * Point{-u.y, u.x};
    std::array<Point, 10> b;
    for (int i = 0; i < 10; ++i) b[i] = place(a[i], a[8], a[9], x9, x10);
    add_copy(a);
    const int off = add_copy(b);
    edges.push_back({8, off + 8});
    edges.push_back({9, off + 9});
    return checked(from_drawing(std::move(pts), edges, kConstructionEdgeTol), "20-vertex construction");
  }

  // A nearly folded ten-vertex shape leaves room for the path 9, 11, 12, 10
  // on a line that keeps the whole copy on one side.
  const TenVertexShape shape{-60 * kDeg, 90 * kDeg, 270.25 * kDeg, 0, 1};
  const auto a = ten_vertex_points(shape);
  const Point q11 = a[8] + unit(275.3 * kDeg);
  const auto c12 = unit_circle_intersections(q11, a[9]);
  if (c12.empty()) throw InvariantError("path vertex 12 not found");
  const Point q12 = c12[1];
  const Point dir = q12 - q11;
  Point normal{-dir.y, dir.x};
  double side = 0.0;
  for (const Point& v : a) side += dot(v - q11, normal);
  if (side > 0) normal = -1.0 * normal;

  const int k = (n - 22) / 2;
  add_copy(a);
  std::vector<int> left, right;
  for (int j = 0; j <= k; ++j) {
    left.push_back(static_cast<int>(pts.size()));
    pts.push_back(q11 + static_cast<double>(j) * normal);
    right.push_back(static_cast<int>(pts.size()));
    pts.push_back(q12 + static_cast<double>(j) * normal);
    edges.push_back({left[j], right[j]});
    if (j > 0) {
      edges.push_back({left[j - 1], left[j]});
      edges.push_back({right[j - 1], right[j]});
    }
  }
  edges.push_back({8, left[0]});
  edges.push_back({9, right[0]});
  std::array<Point, 10> b;
  for (int i = 0; i < 10; ++i) b[i] = reflect(a[i], q11, q12) + static_cast<double>(k) * normal;
  const int off = add_copy(b);
  edges.push_back({off + 8, left[k]});
  edges.push_back({off + 9, right[k]});
  return checked(from_drawing(std::move(pts), edges, kConstructionEdgeTol), "mirrored construction");
}

}  // namespace matchstick
