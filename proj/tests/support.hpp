#pragma once

// Brute-force oracles and small graph builders shared by the test suites.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matchstick/embedded_graph.hpp"
#include "matchstick/enumerate.hpp"

namespace matchstick::testing {

EmbeddedGraph from_drawing(const std::vector<std::pair<double, double>>& coords,
                           const std::vector<std::pair<int, int>>& edges);

/// Two unit squares joined by one edge.
EmbeddedGraph two_squares_with_bridge();

/// The n = 9, τ = 1 configuration around a 4-4-4 vertex with a pentagonal
/// outer face (vertex 0 has degree 2).
EmbeddedGraph pentagon_444();

/// Two copies of pentagon_444 joined by a bridge between their degree-2
/// vertices: cubic, n = 18, 1-connected.
EmbeddedGraph bridged_pentagons();

/// Edge connectivity (capped at 3) by deleting every edge set of size <= 2.
int brute_force_edge_connectivity(const EmbeddedGraph& g);

/// Shortest cycle by exhaustive simple-cycle search; INT_MAX for forests.
int brute_force_girth(const EmbeddedGraph& g);

/// Equivalence of embedded graphs (relabelling, rotation, global reflection,
/// outer face when both have one) by propagating a dart-to-dart map.
bool embedded_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b);

/// Canonical keys of every admissible candidate on at most `spec.n_max`
/// labelled vertices, found by listing labelled graphs, every rotation
/// system, and every outer face.
std::set<std::string> labelled_oracle(const EnumSpec& spec);

/// Vertices shuffled by a fixed-seed permutation, optionally mirrored.
EmbeddedGraph scrambled(const EmbeddedGraph& g, unsigned seed, bool mirror);

}  // namespace matchstick::testing
