#include <cmath>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "matchstick/certificates.hpp"
#include "matchstick/realizer.hpp"

namespace matchstick {

namespace {

// Decade exponent of a residual; exact zeros land in their own bucket.
int decade(double residual) {
  if (!(residual > 0)) return std::numeric_limits<int>::min();
  return static_cast<int>(std::floor(std::log10(residual)));
}

}  // namespace

std::string assess_nonrealizability(const EmbeddedGraph& g, const RealizeConfig& cfg) {
  using json = nlohmann::ordered_json;
  PipelineConfig pcfg;
  pcfg.exhaustive = false;
  // Every outer face of this embedding is tried; a rejection counts only if
  // no face choice survives.
  const GraphAssessment a = assess_graph(g.without_outer_face(), pcfg);

  json out;
  out["n"] = g.vertex_count();
  out["edges"] = g.edge_count();
  json rejections = json::array();
  for (const auto& face : a.faces) {
    for (const auto& r : face.reports) {
      if (r.verdict != Verdict::rejected) continue;
      rejections.push_back({{"outer_face", face.face.value_or(-1)},
                            {"certificate", to_string(r.certificate)},
                            {"witness", r.witness}});
    }
  }
  out["certificate_rejections"] = rejections;

  if (a.rejected()) {
    out["conclusion"] = "not realizable with this embedding: every outer face is rejected by a certificate";
    out["restarts"] = 0;
    out["min_residual"] = nullptr;
    out["residual_histogram"] = json::object();
    return out.dump();
  }

  const RealizeOutcome o = realize_unit_distance(g, cfg);
  std::map<int, int> decades;
  for (const auto& r : o.restart_stats) ++decades[decade(r.residual)];
  json histogram = json::object();
  for (auto [e, count] : decades)
    histogram[e == std::numeric_limits<int>::min() ? "0" : "1e" + std::to_string(e)] = count;
  out["restarts"] = cfg.restarts;
  out["seed"] = cfg.seed;
  out["min_residual"] = o.best_residual;
  out["edge_residual_at_min"] = o.restart_stats[o.best_restart].edge_residual;
  out["clearance"] = cfg.clearance;
  out["residual_histogram"] = histogram;
  if (o.status == RealizeOutcome::Status::realized) {
    out["conclusion"] = "realizable: witness coordinates pass exact verification";
    out["witness"] = json::parse(to_json(o.best));
  } else {
    out["conclusion"] =
        "undecided: no certificate applies and no restart reached the tolerance; numerical evidence only, not a proof";
  }
  return out.dump();
}

}  // namespace matchstick
