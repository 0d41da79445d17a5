// matchstick: enumeration, certificates, constructions, verification and the
// numerical realizer behind one command line. Exit codes: 0 success, 1 the
// run found rejections or violations, 2 usage or input error, 3 internal
// invariant breach.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matchstick/certificates.hpp"
#include "matchstick/constructions.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/error.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/planar_code.hpp"
#include "matchstick/realization.hpp"
#include "matchstick/realizer.hpp"
#include "matchstick/svg.hpp"

#ifndef MATCHSTICK_VERSION
#define MATCHSTICK_VERSION "0.0.0"
#endif

namespace {

using namespace matchstick;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

// 64-bit FNV-1a over everything the run writes, in write order.
class Digest {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

struct Run {
  Digest digest;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  void out(std::string_view text) {
    digest.update(text);
    std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
  }
  void line(std::string_view text) {
    out(text);
    out("\n");
  }
  void write_file(const std::string& path, std::string_view bytes) {
    if (path == "-") {
      out(bytes);
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    digest.update(bytes);
    outputs.push_back(path);
  }
};

std::string read_all(const std::string& path, Run& run) {
  run.inputs.push_back(path);
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

int default_jobs() {
  if (const char* env = std::getenv("MATCHSTICK_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

bool is_fixture(const std::string& name) {
  for (const auto& f : fixture_names())
    if (f == name) return true;
  return false;
}

bool is_cubic(const EmbeddedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

struct NamedGraph {
  std::string id;
  EmbeddedGraph graph;
};

// A fixture name, or a planar_code / drawing JSON file ('-' for stdin).
// planar_code records get their outer face by `outer`: "first-dart", "none",
// or "auto" (none for cubic graphs, first dart otherwise).
std::vector<NamedGraph> load_graphs(const std::string& source, const std::string& outer, Run& run) {
  if (is_fixture(source)) {
    run.inputs.push_back("fixture:" + source);
    return {{source, fixture(source).graph}};
  }
  const std::string bytes = read_all(source, run);
  std::vector<NamedGraph> out;
  if (bytes.starts_with(kPlanarCodeHeader)) {
    const auto rule = outer == "none" ? OuterFaceRule::none : OuterFaceRule::first_dart;
    int index = 0;
    for (auto& g : read_planar_code(bytes, rule)) {
      if (outer == "auto" && is_cubic(g)) g = g.without_outer_face();
      out.push_back({"#" + std::to_string(index++), std::move(g)});
    }
    return out;
  }
  const Drawing d = drawing_from_json(bytes);
  out.push_back({source, graph_from_coords(d.coords, d.edges)});
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

json manifest(const CLI::App* sub, const Run& run, double seconds) {
  json params = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    const auto& r = opt->results();
    if (r.empty())
      params[opt->get_name()] = true;
    else if (r.size() == 1)
      params[opt->get_name()] = r.front();
    else
      params[opt->get_name()] = r;
  }
  json m;
  m["manifest"] = {{"subcommand", sub->get_name()},
                   {"parameters", params},
                   {"inputs", run.inputs},
                   {"outputs", run.outputs},
                   {"tool_version", MATCHSTICK_VERSION},
                   {"wall_clock_seconds", seconds},
                   {"digest", run.digest.hex()}};
  return m;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int n_max = 10;
  std::string n_list;
  int girth = 4;
  std::string tau = "0";
  int connectivity = 1;
  bool complete = false;
  std::string planar_code_out;
  int jobs = 1;
};

int run_enumerate(const EnumerateArgs& a, Run& run) {
  EnumSpec spec;
  spec.girth_min = a.girth;
  spec.connectivity_min = a.connectivity;
  spec.complete_only = a.complete;
  spec.jobs = a.jobs;
  spec.tau_set.clear();
  for (int t : parse_int_list(a.tau)) spec.tau_set.insert(t);
  if (a.complete) spec.tau_set = {0};
  spec.n_max = a.n_max;
  if (!a.n_list.empty()) {
    for (int n : parse_int_list(a.n_list)) spec.n_values.insert(n);
    spec.n_max = *spec.n_values.rbegin();
  }
  validate(spec);

  const bool graphs_to_stdout = a.planar_code_out == "-";
  std::ofstream file;
  if (!a.planar_code_out.empty() && !graphs_to_stdout) {
    file.open(a.planar_code_out, std::ios::binary);
    if (!file) throw Error("cannot write " + a.planar_code_out);
    run.outputs.push_back(a.planar_code_out);
  }
  auto emit = [&](std::string_view bytes) {
    if (graphs_to_stdout) {
      run.out(bytes);
    } else if (file.is_open()) {
      run.digest.update(bytes);
      file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
  };
  emit(kPlanarCodeHeader);
  EnumCounts counts;
  enumerate_graphs(spec, [&](const EmbeddedGraph& g) {
    counts.add(g);
    emit(planar_code_record(g));
  });
  const std::string report = count_report_json(spec, counts);
  if (graphs_to_stdout) {
    std::cerr << report << "\n";
    run.digest.update(report);
  } else {
    run.line(report);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- filter

struct FilterArgs {
  std::string in = "-";
  bool exhaustive = false;
  std::vector<std::string> only;
  std::string outer = "auto";
  int jobs = 1;
};

int run_filter(const FilterArgs& a, Run& run) {
  const auto graphs = load_graphs(a.in, a.outer, run);
  PipelineConfig cfg;
  cfg.exhaustive = a.exhaustive;
  if (!a.only.empty()) {
    cfg.enabled.clear();
    for (const auto& name : a.only) cfg.enabled.insert(certificate_from_string(name));
  }
  SurvivorsDb db;
  if (cfg.enabled.contains(CertificateId::small_component_split)) {
    db = build_survivors_db(a.jobs);
    cfg.survivors = &db;
  }

  std::vector<GraphAssessment> results(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < graphs.size();) results[i] = assess_graph(graphs[i].graph, cfg);
  };
  {
    std::vector<std::jthread> pool;
    const int jobs = std::max(1, std::min<int>(a.jobs, static_cast<int>(graphs.size())));
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  long rejected = 0;
  std::map<std::string, long> by_certificate;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const auto& l : report_lines(results[i], graphs[i].id, a.exhaustive)) run.line(l);
    if (results[i].rejected()) {
      ++rejected;
      ++by_certificate[std::string(to_string(results[i].faces.front().reports.back().certificate))];
    }
  }
  json summary;
  summary["summary"] = {{"total", graphs.size()},
                        {"rejected", rejected},
                        {"passed", static_cast<long>(graphs.size()) - rejected},
                        {"rejected_by", by_certificate}};
  run.line(summary.dump());
  return rejected > 0 ? kExitRejected : kExitOk;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  bool girth4 = false;
  int n = 20;
  bool ten_vertex = false;
  bool chain = false;
  double alpha_deg = 0;
  int links = 1;
  std::string svg;
};

void maybe_svg(const std::string& path, const Realization& re, Run& run) {
  if (!path.empty()) run.write_file(path, export_svg(re));
}

int run_construct(const ConstructArgs& a, Run& run) {
  const int modes = int(a.girth4) + int(a.ten_vertex) + int(a.chain);
  if (modes != 1) throw Error("choose exactly one of --girth4, --ten-vertex, --chain");
  std::optional<Realization> re;
  if (a.girth4) re = construct_complete_girth4(a.n);
  if (a.ten_vertex) re = construct_ten_vertex();
  if (a.chain) re = construct_chain_k6(solve_chain_closure(a.alpha_deg * std::numbers::pi / 180.0, a.links));
  run.line(to_json(*re));
  maybe_svg(a.svg, *re, run);
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string coords = "-";
  std::string graph;
  double tol = 0;
};

int run_verify(const VerifyArgs& a, Run& run) {
  const Drawing d = drawing_from_json(read_all(a.coords, run));
  EmbeddedGraph g = a.graph.empty() ? graph_from_coords(d.coords, d.edges)
                                    : load_graphs(a.graph, "first-dart", run).front().graph;
  if (!a.graph.empty()) {
    auto given = d.edges;
    std::sort(given.begin(), given.end());
    if (given != g.edges()) throw Error("edges in the coordinate file do not match the graph");
  }
  const Realization re(d.coords, std::move(g), a.tol > 0 ? a.tol : d.edge_tol);
  const RealizationReport report = verify_realization(re);
  run.line(to_json(report));
  return report.passed() ? kExitOk : kExitRejected;
}

// ------------------------------------------------------------------ realize

struct RealizeArgs {
  std::string graph;
  RealizeConfig cfg;
  bool assess = false;
  std::string svg;
};

int run_realize(const RealizeArgs& a, Run& run) {
  const EmbeddedGraph g = load_graphs(a.graph, "first-dart", run).front().graph;
  if (a.assess) {
    run.line(assess_nonrealizability(g, a.cfg));
    return kExitOk;
  }
  const RealizeOutcome o = realize_unit_distance(g, a.cfg);
  run.line(to_json(o));
  maybe_svg(a.svg, o.best, run);
  return kExitOk;
}

// ----------------------------------------------------------------- fixtures

int run_fixtures(bool list, const std::string& emit, const std::string& format, Run& run) {
  if (list == !emit.empty()) throw Error("use exactly one of --list or --emit NAME");
  if (list) {
    for (const auto& name : fixture_names()) {
      const Fixture f = fixture(name);
      run.line(json{{"name", f.name}, {"n", f.graph.vertex_count()}, {"description", f.description}}.dump());
    }
    return kExitOk;
  }
  const Fixture f = fixture(emit);
  if (format == "planar_code") {
    run.out(write_planar_code(std::span(&f.graph, 1)));
    return kExitOk;
  }
  json coords = json::array(), edges = json::array(), rotation = json::array();
  for (auto [x, y] : f.drawing) coords.push_back({x, y});
  for (const Edge& e : f.edges) edges.push_back({e.u, e.v});
  for (const auto& r : f.graph.rotations()) rotation.push_back(r);
  run.line(json{{"name", f.name},
                {"description", f.description},
                {"labels", f.labels},
                {"n", f.graph.vertex_count()},
                {"coords", coords},
                {"edges", edges},
                {"rotation", rotation},
                {"outer_face", f.graph.face_walk(*f.graph.outer_face())}}
               .dump());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchstick graph toolkit: enumeration, certificates, constructions, verification, realizer"};
  app.set_version_flag("--version", MATCHSTICK_VERSION);
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");
  const int jobs = default_jobs();

  EnumerateArgs ea;
  ea.jobs = jobs;
  auto* en = app.add_subcommand("enumerate", "Stream admissible plane graphs and a count report");
  en->add_option("--n-max", ea.n_max, "Largest vertex count");
  en->add_option("--n", ea.n_list, "Comma-separated vertex counts (sets n-max to their maximum)");
  en->add_option("--girth", ea.girth, "Minimum girth");
  en->add_option("--tau", ea.tau, "Comma-separated admissible deficiencies");
  en->add_option("--connectivity", ea.connectivity, "Minimum edge connectivity (1..3)");
  en->add_flag("--complete", ea.complete, "Cubic graphs only (τ = 0, no outer face)");
  en->add_option("--planar-code-out", ea.planar_code_out, "Write graphs as planar_code ('-' for stdout)");
  en->add_option("--jobs", ea.jobs, "Worker threads (default $MATCHSTICK_JOBS or 1)");

  FilterArgs fa;
  fa.jobs = jobs;
  auto* fi = app.add_subcommand("filter", "Run the certificate pipeline");
  fi->add_option("--in", fa.in, "planar_code file, drawing JSON, fixture name, or '-'");
  fi->add_flag("--exhaustive", fa.exhaustive, "Report every certificate instead of stopping at the first rejection");
  fi->add_option("--only", fa.only, "Restrict to these certificates");
  fi->add_option("--outer-face", fa.outer, "auto | first-dart | none (for planar_code input)")
      ->check(CLI::IsMember({"auto", "first-dart", "none"}));
  fi->add_option("--jobs", fa.jobs, "Worker threads");

  ConstructArgs ca;
  auto* co = app.add_subcommand("construct", "Build an explicit unit-distance witness");
  co->add_flag("--girth4", ca.girth4, "Complete cubic girth-4 graph on --n vertices");
  co->add_option("--n", ca.n, "Vertex count for --girth4");
  co->add_flag("--ten-vertex", ca.ten_vertex, "The ten-vertex τ = 2 graph at alpha = 35 degrees");
  co->add_flag("--chain", ca.chain, "The k = 6 quadrangle chain");
  co->add_option("--alpha", ca.alpha_deg, "Chain end angle in degrees");
  co->add_option("--links", ca.links, "Chain links");
  co->add_option("--svg", ca.svg, "Also write an SVG drawing");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Check a drawing: unit edges, no crossings, no coincidences");
  ve->add_option("--coords", va.coords, "Realization JSON ('-' for stdin)");
  ve->add_option("--graph", va.graph, "Embedding to check against (fixture, planar_code or JSON)");
  ve->add_option("--tol", va.tol, "Edge tolerance (default: the file's edge_tol)");

  RealizeArgs ra;
  ra.cfg.jobs = jobs;
  auto* re = app.add_subcommand("realize", "Search numerically for a unit-distance drawing");
  re->add_option("--graph", ra.graph, "Fixture name, planar_code or JSON file")->required();
  re->add_option("--restarts", ra.cfg.restarts, "Random restarts");
  re->add_option("--seed", ra.cfg.seed, "PRNG seed");
  re->add_option("--max-iterations", ra.cfg.max_iterations, "Iterations per restart");
  re->add_option("--tol", ra.cfg.success_tol, "Residual threshold for success");
  re->add_option("--weight", ra.cfg.crossing_penalty_weight, "Crossing penalty weight");
  re->add_option("--clearance", ra.cfg.clearance, "Penalized separation");
  re->add_option("--jobs", ra.cfg.jobs, "Worker threads");
  re->add_flag("--assess", ra.assess, "Evidence report: certificates first, then numerics");
  re->add_option("--svg", ra.svg, "Write the best drawing as SVG");

  auto* bg = app.add_subcommand("bound-girth5", "Vertex lower bound for complete cubic girth-5 matchstick graphs");

  bool fx_list = false;
  std::string fx_emit, fx_format = "json";
  auto* fx = app.add_subcommand("fixtures", "List or export the built-in graphs");
  fx->add_flag("--list", fx_list, "List fixture names");
  fx->add_option("--emit", fx_emit, "Export one fixture");
  fx->add_option("--format", fx_format, "json | planar_code")->check(CLI::IsMember({"json", "planar_code"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Run run;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  const CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == en) code = run_enumerate(ea, run);
    if (sub == fi) code = run_filter(fa, run);
    if (sub == co) code = run_construct(ca, run);
    if (sub == ve) code = run_verify(va, run);
    if (sub == re) code = run_realize(ra, run);
    if (sub == bg) run.line(to_json(bound_girth5()).dump());
    if (sub == fx) code = run_fixtures(fx_list, fx_emit, fx_format, run);
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout.flush();

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string m = manifest(sub, run, seconds).dump();
  if (manifest_path.empty()) {
    std::cerr << m << "\n";
  } else {
    std::ofstream f(manifest_path);
    f << m << "\n";
  }
  return code;
}
