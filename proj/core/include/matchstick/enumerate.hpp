#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "matchstick/embedded_graph.hpp"

namespace matchstick {

/// Candidate universe: connected plane graphs with maximum degree 3, girth at
/// least `girth_min`, every inner vertex of degree 3 and deficiency τ in
/// `tau_set` for the chosen outer face.
struct EnumSpec {
  int n_max = 10;
  int girth_min = 4;
  std::set<int> tau_set{0};
  int connectivity_min = 1;
  /// Only cubic graphs. They are emitted without an outer face, since every
  /// face choice gives τ = 0.
  bool complete_only = false;
  /// Restricts the emitted vertex counts; empty means 2..n_max.
  std::set<int> n_values;
  int jobs = 1;
};

/// Throws `Error` when the spec is malformed or outside the supported range:
/// n_max <= 20 for cubic 3-connected specs, n_max <= 12 otherwise.
void validate(const EnumSpec& spec);

/// Streams every admissible graph exactly once up to equivalence, in
/// canonical form. Output order is fixed and does not depend on `jobs`:
/// grouped by edge count (vertex count for cubic 3-connected specs), then
/// sorted by vertex count and canonical key within a group.
void enumerate_graphs(const EnumSpec& spec, const std::function<void(const EmbeddedGraph&)>& sink);

std::vector<EmbeddedGraph> enumerate_all(const EnumSpec& spec);

struct EnumCounts {
  long total = 0;
  std::map<int, long> by_n;
  std::map<int, long> by_tau;

  void add(const EmbeddedGraph& g);
};

/// {spec, total, by_n, by_tau} on one line.
std::string count_report_json(const EnumSpec& spec, const EnumCounts& counts);

/// True when `g` satisfies the spec predicate (re-derived from scratch).
bool satisfies(const EnumSpec& spec, const EmbeddedGraph& g);

}  // namespace matchstick
