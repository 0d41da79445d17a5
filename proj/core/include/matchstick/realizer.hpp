#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matchstick/embedded_graph.hpp"
#include "matchstick/realization.hpp"

namespace matchstick {

/// Largest graph the realizer accepts.
inline constexpr int kRealizerMaxVertices = 200;

struct RealizeConfig {
  int restarts = 100;
  int max_iterations = 4000;
  double success_tol = 1e-6;
  double crossing_penalty_weight = 10.0;
  /// Separation below which non-adjacent edges and vertex pairs are penalized.
  double clearance = 0.01;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Keep each restart's objective sequence (for diagnostics and tests).
  bool record_traces = false;
};

struct RestartResult {
  /// Final value of the penalized objective: the quantity that is minimized
  /// and compared against success_tol.
  double residual = 0.0;
  /// Edge-length part alone at the same point.
  double edge_residual = 0.0;
  int iterations = 0;
  std::vector<double> trace;
};

struct RealizeOutcome {
  enum class Status { realized, failed };
  Status status = Status::failed;
  Realization best;
  double best_residual = 0.0;
  int best_restart = 0;
  std::vector<RestartResult> restart_stats;
};

std::string_view to_string(RealizeOutcome::Status s);

/// sum over edges of (|p_u - p_v|^2 - 1)^2. `grad` (size 2n, x/y interleaved)
/// is overwritten when non-empty.
double edge_objective(std::span<const double> xy, std::span<const Edge> edges, std::span<double> grad);

/// Edge objective plus weight * sum of max(0, clearance - d)^2 over vertex
/// pairs and non-adjacent edge pairs, where d is the segment distance, taken
/// negative (minus the penetration depth) for properly crossing segments.
double penalized_objective(std::span<const double> xy, std::span<const Edge> edges, double weight,
                           double clearance, std::span<double> grad);

/// Multi-start L-BFGS descent of `penalized_objective` from random points in
/// a disk of radius n/2. The restart with the smallest (residual, index)
/// wins; "realized" also needs the exact check to pass at success_tol.
/// Throws `Error` for more than kRealizerMaxVertices vertices or a bad config.
RealizeOutcome realize_unit_distance(const EmbeddedGraph& g, const RealizeConfig& cfg);

/// Evidence report combining certificate verdicts and numerics. Returns JSON
/// {certificate_rejections, restarts, min_residual, residual_histogram, ...}.
/// Numerical runs are skipped when a certificate already rejects the graph.
std::string assess_nonrealizability(const EmbeddedGraph& g, const RealizeConfig& cfg);

std::string to_json(const RealizeOutcome& outcome);

}  // namespace matchstick
