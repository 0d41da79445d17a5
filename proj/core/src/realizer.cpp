#include "matchstick/realizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <thread>

#include "matchstick/error.hpp"

namespace matchstick {

std::string_view to_string(RealizeOutcome::Status s) {
  return s == RealizeOutcome::Status::realized ? "realized" : "failed";
}

double edge_objective(std::span<const double> xy, std::span<const Edge> edges, std::span<double> grad) {
  if (!grad.empty()) std::fill(grad.begin(), grad.end(), 0.0);
  double f = 0.0;
  for (const Edge& e : edges) {
    const double dx = xy[2 * e.u] - xy[2 * e.v];
    const double dy = xy[2 * e.u + 1] - xy[2 * e.v + 1];
    const double r = dx * dx + dy * dy - 1.0;
    f += r * r;
    if (!grad.empty()) {
      const double c = 4.0 * r;
      grad[2 * e.u] += c * dx;
      grad[2 * e.u + 1] += c * dy;
      grad[2 * e.v] -= c * dx;
      grad[2 * e.v + 1] -= c * dy;
    }
  }
  return f;
}

namespace {

struct Pt {
  double x, y;
};

// Distance from p to segment ab plus its partial derivatives.
struct PointSegment {
  double d;
  Pt gp, ga, gb;
};

PointSegment point_segment(Pt p, Pt a, Pt b) {
  const double ex = b.x - a.x, ey = b.y - a.y;
  const double len2 = ex * ex + ey * ey;
  double t = len2 > 0 ? ((p.x - a.x) * ex + (p.y - a.y) * ey) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double cx = a.x + t * ex, cy = a.y + t * ey;
  const double ux = p.x - cx, uy = p.y - cy;
  const double d = std::hypot(ux, uy);
  if (d == 0.0) return {0.0, {0, 0}, {0, 0}, {0, 0}};
  const Pt u{ux / d, uy / d};
  return {d, u, {-(1 - t) * u.x, -(1 - t) * u.y}, {-t * u.x, -t * u.y}};
}

double orient(Pt a, Pt b, Pt c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

struct Objective {
  std::span<const Edge> edges;
  std::vector<std::pair<int, int>> edge_pairs;  // non-adjacent
  int n;
  double weight, clearance;

  double operator()(std::span<const double> xy, std::span<double> grad) const {
    double f = edge_objective(xy, edges, grad);
    if (weight == 0.0) return f;
    auto P = [&](int v) { return Pt{xy[2 * v], xy[2 * v + 1]}; };
    auto add = [&](int v, Pt g, double c) {
      grad[2 * v] += c * g.x;
      grad[2 * v + 1] += c * g.y;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dx = xy[2 * i] - xy[2 * j], dy = xy[2 * i + 1] - xy[2 * j + 1];
        if (std::abs(dx) >= clearance || std::abs(dy) >= clearance) continue;
        const double d = std::hypot(dx, dy);
        if (d >= clearance) continue;
        const double gap = clearance - d;
        f += weight * gap * gap;
        if (!grad.empty() && d > 0) {
          const double c = -2.0 * weight * gap / d;
          add(i, {dx, dy}, c);
          add(j, {-dx, -dy}, c);
        }
      }
    }
    for (auto [i, j] : edge_pairs) {
      const Edge& e = edges[i];
      const Edge& h = edges[j];
      const Pt a = P(e.u), b = P(e.v), c = P(h.u), d = P(h.v);
      // Cheap bounding-box rejection.
      if (std::min(a.x, b.x) - clearance > std::max(c.x, d.x) || std::min(c.x, d.x) - clearance > std::max(a.x, b.x) ||
          std::min(a.y, b.y) - clearance > std::max(c.y, d.y) || std::min(c.y, d.y) - clearance > std::max(a.y, b.y))
        continue;
      const bool crossing = (orient(a, b, c) > 0) != (orient(a, b, d) > 0) &&
                            (orient(c, d, a) > 0) != (orient(c, d, b) > 0);
      const PointSegment cand[4] = {point_segment(a, c, d), point_segment(b, c, d), point_segment(c, a, b),
                                    point_segment(d, a, b)};
      int best = 0;
      for (int k = 1; k < 4; ++k)
        if (cand[k].d < cand[best].d) best = k;
      const double dist = crossing ? -cand[best].d : cand[best].d;
      if (dist >= clearance) continue;
      const double gap = clearance - dist;
      f += weight * gap * gap;
      if (grad.empty()) continue;
      // d(penalty)/d(dist) = -2 w gap; dist flips sign when crossing.
      const double s = -2.0 * weight * gap * (crossing ? -1.0 : 1.0);
      const PointSegment& q = cand[best];
      const int pv[4] = {e.u, e.v, h.u, h.v};
      const int point = pv[best];
      const int sa = best < 2 ? h.u : e.u;
      const int sb = best < 2 ? h.v : e.v;
      add(point, q.gp, s);
      add(sa, q.ga, s);
      add(sb, q.gb, s);
    }
    return f;
  }
};

double dotv(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Limited-memory BFGS with backtracking; a step is accepted only when it
// lowers the objective, so the recorded sequence never increases.
RestartResult descend(const Objective& obj, std::vector<double>& x, int max_iterations, bool record) {
  const std::size_t dim = x.size();
  constexpr int kMemory = 8;
  std::vector<double> g(dim), d(dim), xn(dim), gn(dim);
  std::deque<std::vector<double>> S, Y;
  std::deque<double> rho;
  double f = obj(x, g);
  RestartResult res;
  if (record) res.trace.push_back(f);
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (f < 1e-28) break;
    // Two-loop recursion.
    d = g;
    std::vector<double> alpha(S.size());
    for (int i = static_cast<int>(S.size()) - 1; i >= 0; --i) {
      alpha[i] = rho[i] * dotv(S[i], d);
      for (std::size_t k = 0; k < dim; ++k) d[k] -= alpha[i] * Y[i][k];
    }
    if (!S.empty()) {
      const double gamma = dotv(S.back(), Y.back()) / dotv(Y.back(), Y.back());
      for (double& v : d) v *= gamma;
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
      const double beta = rho[i] * dotv(Y[i], d);
      for (std::size_t k = 0; k < dim; ++k) d[k] += S[i][k] * (alpha[i] - beta);
    }
    for (double& v : d) v = -v;
    double slope = dotv(g, d);
    if (!(slope < 0)) {
      S.clear();
      Y.clear();
      rho.clear();
      for (std::size_t k = 0; k < dim; ++k) d[k] = -g[k];
      slope = -dotv(g, g);
      if (!(slope < 0)) break;
    }
    double step = 1.0;
    bool accepted = false;
    double fn = 0;
    for (int ls = 0; ls < 40; ++ls) {
      for (std::size_t k = 0; k < dim; ++k) xn[k] = x[k] + step * d[k];
      fn = obj(xn, gn);
      if (fn <= f + 1e-4 * step * slope && fn < f) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    std::vector<double> s(dim), y(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      s[k] = xn[k] - x[k];
      y[k] = gn[k] - g[k];
    }
    const double sy = dotv(s, y);
    if (sy > 1e-300) {
      S.push_back(std::move(s));
      Y.push_back(std::move(y));
      rho.push_back(1.0 / sy);
      if (static_cast<int>(S.size()) > kMemory) {
        S.pop_front();
        Y.pop_front();
        rho.pop_front();
      }
    }
    x.swap(xn);
    g.swap(gn);
    f = fn;
    if (record) res.trace.push_back(f);
  }
  res.residual = f;
  res.iterations = it;
  return res;
}

// Barycentric drawing with `face` on a regular polygon of unit sides. It
// respects the rotation system, so descent starts in the right basin more
// often than from random points.
std::vector<double> tutte_start(const EmbeddedGraph& g, int face) {
  const int n = g.vertex_count();
  std::vector<double> x(2 * n, 0.0);
  std::vector<bool> fixed(n, false);
  std::vector<VertexId> boundary;
  for (VertexId v : g.face_walk(face))
    if (!fixed[v]) {
      fixed[v] = true;
      boundary.push_back(v);
    }
  const int k = static_cast<int>(boundary.size());
  const double radius = k < 3 ? 0.5 : 0.5 / std::sin(std::numbers::pi / k);
  for (int i = 0; i < k; ++i) {
    const double ang = -2 * std::numbers::pi * i / k;
    x[2 * boundary[i]] = radius * std::cos(ang);
    x[2 * boundary[i] + 1] = radius * std::sin(ang);
  }
  for (int sweep = 0; sweep < 500; ++sweep)
    for (VertexId v = 0; v < n; ++v) {
      if (fixed[v]) continue;
      double sx = 0, sy = 0;
      for (VertexId w : g.rotation(v)) {
        sx += x[2 * w];
        sy += x[2 * w + 1];
      }
      x[2 * v] = sx / g.degree(v);
      x[2 * v + 1] = sy / g.degree(v);
    }
  return x;
}

}  // namespace

double penalized_objective(std::span<const double> xy, std::span<const Edge> edges, double weight,
                           double clearance, std::span<double> grad) {
  Objective obj{edges, {}, static_cast<int>(xy.size() / 2), weight, clearance};
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge &e = edges[i], &h = edges[j];
      if (e.u != h.u && e.u != h.v && e.v != h.u && e.v != h.v)
        obj.edge_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return obj(xy, grad);
}

RealizeOutcome realize_unit_distance(const EmbeddedGraph& g, const RealizeConfig& cfg) {
  const int n = g.vertex_count();
  if (n > kRealizerMaxVertices) throw Error("realizer supports at most 200 vertices");
  if (cfg.restarts < 1 || !(cfg.success_tol > 0) || cfg.crossing_penalty_weight < 0 || cfg.max_iterations < 0)
    throw Error("invalid realizer configuration");

  const auto edges = g.edges();
  Objective obj{edges, {}, n, cfg.crossing_penalty_weight, cfg.clearance};
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge &e = edges[i], &h = edges[j];
      if (e.u != h.u && e.u != h.v && e.v != h.u && e.v != h.v)
        obj.edge_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  std::vector<RestartResult> results(cfg.restarts);
  std::vector<std::vector<double>> finals(cfg.restarts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r; (r = next.fetch_add(1)) < cfg.restarts;) {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                        static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::vector<double> x(2 * n);
      if (r % 2 == 0) {
        const double radius = n / 2.0;
        for (int v = 0; v < n; ++v) {
          const double rad = radius * std::sqrt(unit(rng));
          const double ang = 2 * std::numbers::pi * unit(rng);
          x[2 * v] = rad * std::cos(ang);
          x[2 * v + 1] = rad * std::sin(ang);
        }
      } else {
        const int face = g.outer_face() ? *g.outer_face() : (r / 2) % g.face_count();
        x = tutte_start(g, face);
        std::normal_distribution<double> noise(0.0, 0.15);
        for (double& c : x) c += noise(rng);
      }
      results[r] = descend(obj, x, cfg.max_iterations, cfg.record_traces);
      results[r].edge_residual = edge_objective(x, edges, {});
      finals[r] = std::move(x);
    }
  };
  const int jobs = std::clamp(cfg.jobs, 1, cfg.restarts);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (results[r].residual < results[best].residual) best = r;

  std::vector<Point> coords(n);
  for (int v = 0; v < n; ++v) coords[v] = {finals[best][2 * v], finals[best][2 * v + 1]};
  RealizeOutcome out{RealizeOutcome::Status::failed, Realization(coords, g, cfg.success_tol), results[best].residual,
                     best, std::move(results)};
  if (out.best_residual <= cfg.success_tol && verify_realization(out.best).passed())
    out.status = RealizeOutcome::Status::realized;
  return out;
}

std::string to_json(const RealizeOutcome& o) {
  std::string s = "{\"status\":\"" + std::string(to_string(o.status)) + "\"";
  s += ",\"best_residual\":" + format_double(o.best_residual);
  s += ",\"best_edge_residual\":" + format_double(o.restart_stats[o.best_restart].edge_residual);
  s += ",\"best_restart\":" + std::to_string(o.best_restart);
  s += ",\"restart_residuals\":[";
  for (std::size_t i = 0; i < o.restart_stats.size(); ++i)
    s += (i ? "," : "") + format_double(o.restart_stats[i].residual);
  s += "],\"best\":" + to_json(o.best) + "}";
  return s;
}

}  // namespace matchstick
