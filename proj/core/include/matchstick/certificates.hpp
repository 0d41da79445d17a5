#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "matchstick/embedded_graph.hpp"
#include "matchstick/invariants.hpp"

namespace matchstick {

/// Listed in pipeline order.
enum class CertificateId {
  euler_girth,
  quadrangle_interior,
  inner_444,
  a4_corollary,
  outer_quadrangle_bound,
  area_feasibility,
  small_component_split,
};

enum class Verdict { rejected, passed, inapplicable };

std::string_view to_string(CertificateId id);
std::string_view to_string(Verdict v);
/// Throws `Error` for unknown names.
CertificateId certificate_from_string(std::string_view name);
const std::vector<CertificateId>& all_certificates();

/// `witness` is non-null exactly when the verdict is `rejected`.
struct CertificateReport {
  CertificateId certificate = CertificateId::euler_girth;
  Verdict verdict = Verdict::inapplicable;
  nlohmann::ordered_json witness;
};

/// Area comparisons treat m as exceeding the ratio when m > ratio - kAreaTolerance.
inline constexpr double kAreaTolerance = 1e-9;

/// Candidate screen: rejects graphs that are not admissible 3-regular
/// candidates for their outer face (a vertex of degree above 3, or an inner
/// vertex of degree other than 3). Throws `InvariantError` if the counting
/// identities fail, which cannot happen for a valid plane graph.
CertificateReport cert_euler_girth(const EmbeddedGraph& g, const FaceProfile& p);

/// A unit quadrangle is a rhombus and nothing fits inside it. Rejects when
/// some 4-cycle has more than one face on its bounded side; for the outer
/// face this is the rule "k = 4 and the graph is more than the bare 4-cycle".
/// Needs girth >= 4 and degree-3 inner vertices.
CertificateReport cert_quadrangle_interior(const EmbeddedGraph& g, const FaceProfile& p);

/// An inner vertex whose three faces are quadrangles spans a convex unit
/// hexagon. Rejects if k < 6, or k = 6 with a second inner vertex, or if any
/// other cycle of length <= 6 encloses such a vertex (perimeter argument
/// applied to inner cycles too). Needs girth >= 4 and degree-3 inner
/// vertices; inapplicable when no such vertex exists.
CertificateReport cert_inner_444(const EmbeddedGraph& g, const FaceProfile& p);

/// Cubic, 3-connected, girth >= 4 and k > 4. x counts outer edges whose
/// other face is a quadrangle; rejects if x >= k - 4 or A_4 > |F| - 6.
CertificateReport cert_outer_quadrangle_bound(const EmbeddedGraph& g, const FaceProfile& p);

/// A_4 <= |F| - 6 alone, for cubic 3-connected graphs of girth >= 4. Does not
/// depend on the outer face.
CertificateReport cert_a4_corollary(const EmbeddedGraph& g, const FaceProfile& p);

/// Profile-only form: m counts inner faces of odd length >= 5, which assumes
/// every face is a simple polygon (true without bridges). Throws `Error` if k < 3.
CertificateReport cert_area_feasibility(const FaceProfile& p);

/// Graph form used by the pipeline: m counts only inner faces bounded by a
/// simple odd cycle of length >= 5.
CertificateReport cert_area_feasibility(const EmbeddedGraph& g, const FaceProfile& p);

/// Canonical keys (with outer face) of the small configurations that survive
/// the n <= 10, τ in {1, 2} sweep.
class SurvivorsDb {
 public:
  SurvivorsDb() = default;
  explicit SurvivorsDb(std::vector<EmbeddedGraph> graphs);

  bool contains(const EmbeddedGraph& g) const;
  const std::vector<EmbeddedGraph>& graphs() const { return graphs_; }
  std::size_t size() const { return graphs_.size(); }

 private:
  std::vector<EmbeddedGraph> graphs_;
  std::set<std::string> keys_;
};

/// Reruns the small-configuration sweep and keeps the pipeline survivors.
SurvivorsDb build_survivors_db(int jobs = 1);

/// Cubic, girth >= 4, outer face designated, not 3-connected. Splits at every
/// minimum cut. A side whose cut endpoints lie on its own outer face is a
/// configuration with τ = cut size; one with n <= 10 missing from the
/// database rejects the graph.
CertificateReport cert_small_component_split(const EmbeddedGraph& g, const FaceProfile& p,
                                             const SurvivorsDb& survivors);

struct Girth5Bound {
  /// (k_lower, a5_lower); the first entry has k_lower = 0 (no bound yet).
  std::vector<std::pair<int, int>> trace;
  int n_lower = 0;
};

/// Alternates the area table with the face count identity for a cubic
/// girth-5 graph until the outer face length stabilises.
Girth5Bound bound_girth5();

nlohmann::ordered_json to_json(const Girth5Bound& b);

struct PipelineConfig {
  std::set<CertificateId> enabled{all_certificates().begin(), all_certificates().end()};
  bool exhaustive = false;
  /// small_component_split reports inapplicable without a database.
  const SurvivorsDb* survivors = nullptr;
};

/// Runs the enabled certificates in pipeline order on a graph with an outer
/// face, stopping at the first rejection unless `exhaustive`. Throws `Error`
/// if no outer face is designated.
std::vector<CertificateReport> filter_pipeline(const EmbeddedGraph& g, const PipelineConfig& cfg);

struct FaceAssessment {
  std::optional<int> face;  ///< empty when the graph came with its outer face
  std::vector<CertificateReport> reports;
  bool rejected() const;
};

/// With an outer face: one assessment. Without: one per face, and the graph
/// counts as rejected only when every outer-face choice is rejected.
struct GraphAssessment {
  std::vector<FaceAssessment> faces;
  bool rejected() const;
};

GraphAssessment assess_graph(const EmbeddedGraph& g, const PipelineConfig& cfg);

nlohmann::ordered_json to_json(const CertificateReport& r, const std::string& graph_id);

/// JSON lines for one graph: a single summary line, or one line per report
/// when `exhaustive`.
std::vector<std::string> report_lines(const GraphAssessment& a, const std::string& graph_id,
                                      bool exhaustive);

}  // namespace matchstick
