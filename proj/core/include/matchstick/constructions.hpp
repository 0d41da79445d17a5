#pragma once

#include <array>

#include "matchstick/realization.hpp"

namespace matchstick {

/// Angles of the k = 6 quadrangle chain. The chain has 2 * n_links
/// quadrangles with vertical rungs; the first and last steps make angle
/// alpha with the vertical, the inner steps angle beta.
struct ChainParams {
  double alpha = 0.0;
  double beta = 0.0;
  int n_links = 1;
};

/// Solves 2 sin(alpha) + (2 n - 2) sin(beta) = 1 for beta in (alpha, pi/2)
/// by bisection. For n_links = 1 the equation forces alpha = pi/6 and the
/// returned beta is unused (set to pi/3). Throws `Error` when no root exists.
ChainParams solve_chain_closure(double alpha, int n_links);

/// With `closure`, the hexagon 1..6 at (0,0), (0,1), (0,2), (1,2), (1,1),
/// (1,0) with a chain between rungs 1-2 and 6-5: 4 n + 4 vertices, k = 6,
/// tau = 2. `params` must already satisfy the closure equation (see
/// solve_chain_closure). Without closure only the open chain is built.
/// Throws `Error` when 0 < alpha < beta < pi/2 or n_links >= 1 fails, or
/// when the closure equation is off by more than 1e-12.
Realization construct_chain_k6(const ChainParams& params, bool closure = true);

/// Ladder angles of the ten-vertex tau = 2 graph: top path directions
/// p6->p7 and p7->p8 (p5 = (0,0), p6 = (0,1)), common rung direction, and
/// which of the two unit-circle intersections p9 and p10 take (0 = left of
/// p5->p8 resp. p1->p4).
struct TenVertexShape {
  double turn = 0.0;
  double bend = 0.0;
  double rung = 0.0;
  int p9_root = 0;
  int p10_root = 1;
};

/// The shape with outer angle alpha at p6, straight continuation at p7 and
/// rungs bisecting alpha.
TenVertexShape ten_vertex_shape(double alpha);

/// p1..p10 (ids 0..9). Throws `Error` when a circle intersection is empty.
std::array<Point, 10> ten_vertex_points(const TenVertexShape& shape);

/// Edges of the ten-vertex graph on ids 0..9.
std::array<Edge, 14> ten_vertex_edges();

/// The alpha = 35 degree witness: ids 0..9 are p1..p10, outer face p10, p1,
/// p5, p9, p8, p4.
Realization construct_ten_vertex();

/// Complete cubic girth-4 unit-distance graph on n vertices. n = 20: two
/// copies of construct_ten_vertex joined p9-p9', p10-p10'. n = 22 + 2k: a
/// ten-vertex copy with the path p9, 11, 12, p10, its mirror image in the
/// line through 11 and 12, and k unit squares replacing the edge 11-12.
/// Throws `Error` for odd n or n < 20.
Realization construct_complete_girth4(int n);

}  // namespace matchstick
