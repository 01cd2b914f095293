// cfcolor: batch front end for the conflict-free coloring library.
//
// Exit codes: 0 ok, 1 verification failed, 2 input error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "cfcolor/cfcolor.hpp"

namespace {

using namespace cfcolor;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kResourceCap = 3;

struct Common {
  std::string format = "edgelist";
  bool lenient = false;
};

GraphFormat parse_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::edgelist;
  if (s == "dot-subset") return GraphFormat::dot_subset;
  throw InputError("unknown graph format '" + s + "'");
}

Graph load_graph(const std::string& path, const Common& c) {
  return read_graph_file(path, parse_format(c.format),
                         c.lenient ? DuplicatePolicy::lenient : DuplicatePolicy::strict);
}

/// Writes to the named file, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& mode, const Common& common) {
  Graph g = load_graph(graph_path, common);
  std::ifstream in(coloring_path);
  if (!in) throw InputError("cannot open coloring file " + coloring_path);
  VerificationReport r;
  if (mode == "vertex") {
    r = verify_vertex_cf(g, read_vertex_coloring(in, g));
  } else if (mode == "edge") {
    r = verify_edge_cf(g, read_edge_coloring(in, g));
  } else {
    throw InputError("mode must be vertex or edge");
  }
  std::cout << to_json(r).dump() << '\n';
  return r.ok ? kOk : kVerifyFailed;
}

int cmd_color(const std::string& graph_path, const std::string& algorithm, const std::string& mode,
              const std::string& params_path, std::uint64_t seed, bool strict,
              const std::string& out_path, const std::string& log_path, const Common& common) {
  Graph g = load_graph(graph_path, common);
  AlgorithmConfig cfg;
  cfg.algorithm = parse_algorithm(algorithm);
  if (mode != "vertex" && mode != "edge") throw InputError("mode must be vertex or edge");
  cfg.mode = mode == "edge" ? ColoringMode::edge : ColoringMode::vertex;
  if (!params_path.empty()) cfg.params = read_json_file(params_path);
  cfg.seed = seed;
  cfg.strict_paper_mode = strict;

  AlgorithmRun run = run_algorithm(g, cfg);

  if (!log_path.empty()) {
    Output log(log_path);
    for (const auto& line : run.log) log.stream() << line.dump() << '\n';
  }
  const bool exact = cfg.algorithm == Algorithm::exact;
  if (!exact || out_path != "-") {
    Output out(out_path);
    if (run.edge_coloring) write_edge_coloring(out.stream(), *run.edge_coloring, run.header);
    if (run.vertex_coloring) write_vertex_coloring(out.stream(), *run.vertex_coloring, run.header);
  }
  if (exact || out_path != "-") {
    json summary = exact ? run.extra : json::object();
    summary["algorithm"] = algorithm_name(cfg.algorithm, run.mode);
    summary["colors_used"] = run.colors_used;
    summary["verified"] = run.verified;
    std::cout << summary.dump() << '\n';
  }
  if (!run.completed) {
    std::cerr << "cfcolor: " << run.message << '\n';
    return kResourceCap;
  }
  if (!run.verified) {
    std::cerr << "cfcolor: emitted coloring failed independent verification\n";
    return kVerifyFailed;
  }
  if (run.resource_cap) {
    std::cerr << "cfcolor: " << run.message << '\n';
    return kResourceCap;
  }
  return kOk;
}

int cmd_bench(const std::string& suite_path, const std::string& out_path, bool no_time) {
  json suite = read_json_file(suite_path);
  std::vector<std::string> errors;
  auto records = run_suite(suite, &errors);
  Output out(out_path);
  out.stream() << to_csv(records, !no_time);
  for (const auto& e : errors) std::cerr << "cfcolor bench: " << e << '\n';
  return kOk;
}

json describe(std::size_t n, const EdgeColoring& f, const UnsatisfiedSearch& s) {
  Graph kn = complete_graph(n);
  auto edge_json = [&](std::optional<EdgeId> e) -> json {
    if (!e) return nullptr;
    return json{kn.edge(*e).u, kn.edge(*e).v};
  };
  json matchings = json::object();
  for (const auto& [c, edges] : s.certificate.matchings) {
    json list = json::array();
    for (EdgeId e : edges) list.push_back(edge_json(e));
    matchings[std::to_string(c)] = list;
  }
  std::string why;
  bool valid = validate_certificate(n, f, s.certificate, &why);
  json j{{"colors_used", s.colors_used},
         {"brute", edge_json(s.brute)},
         {"guided", edge_json(s.guided)},
         {"agree", s.agree},
         {"guarantee_applies", s.guarantee_applies},
         {"class_a", s.certificate.class_a},
         {"matchings", matchings},
         {"uncovered", edge_json(s.certificate.uncovered)},
         {"certificate_valid", valid}};
  if (!valid) j["certificate_error"] = why;
  return j;
}

int cmd_lower_bound(std::size_t n, const std::string& coloring_path, std::size_t colors,
                    std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw InputError("--n must be at least 2");
  json out{{"n", n}, {"theorem_bound", theorem_bound(static_cast<long long>(n))}};
  Graph kn = complete_graph(n);
  if (!coloring_path.empty()) {
    std::ifstream in(coloring_path);
    if (!in) throw InputError("cannot open coloring file " + coloring_path);
    EdgeColoring f = read_edge_coloring(in, kn);
    auto s = find_unsatisfied_edge(n, f);
    out["result"] = describe(n, f, s);
    std::cout << out.dump() << '\n';
    bool consistent = s.agree && out["result"]["certificate_valid"].get<bool>() &&
                      (!s.guarantee_applies || s.certificate.uncovered.has_value());
    return consistent ? kOk : kVerifyFailed;
  }
  if (colors == 0) throw InputError("--colors must be positive");
  Rng rng(seed);
  std::uniform_int_distribution<Color> draw(0, static_cast<Color>(colors) - 1);
  std::size_t found = 0, agreed = 0, valid = 0, guaranteed = 0, guaranteed_hit = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    EdgeColoring f(kn.edge_count());
    for (std::size_t e = 0; e < kn.edge_count(); ++e) f.set(static_cast<EdgeId>(e), draw(rng));
    auto s = find_unsatisfied_edge(n, f);
    if (s.brute) ++found;
    if (s.agree) ++agreed;
    if (validate_certificate(n, f, s.certificate)) ++valid;
    if (s.guarantee_applies) {
      ++guaranteed;
      if (s.certificate.uncovered) ++guaranteed_hit;
    }
  }
  out["samples"] = samples;
  out["colors"] = colors;
  out["seed"] = seed;
  out["unsatisfied_found"] = found;
  out["strategies_agree"] = agreed;
  out["certificates_valid"] = valid;
  out["guarantee_applies"] = guaranteed;
  out["guarantee_met"] = guaranteed_hit;
  std::cout << out.dump() << '\n';
  bool consistent = agreed == samples && valid == samples && guaranteed_hit == guaranteed;
  return consistent ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free graph coloring engine"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Graph format: edgelist or dot-subset")
      ->capture_default_str();
  app.add_flag("--lenient", common.lenient, "Drop duplicate edges and loops instead of failing");

  std::string graph_path, coloring_path, mode = "edge";
  auto* verify = app.add_subcommand("verify", "Check a coloring for the conflict-free property");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("coloring", coloring_path, "Coloring file ('id color' lines)")->required();
  verify->add_option("--mode", mode, "vertex or edge")->capture_default_str();

  std::string algorithm, params_path, out_path = "-", log_path;
  std::uint64_t seed = 1;
  bool strict = false;
  auto* color = app.add_subcommand("color", "Run a coloring algorithm and verify its output");
  color->add_option("graph", graph_path, "Graph file")->required();
  color->add_option("--algorithm", algorithm, "line-cf | near-regular | pseudoforest | exact")
      ->required();
  color->add_option("--mode", mode, "vertex or edge (exact solver only)")->capture_default_str();
  color->add_option("--params", params_path, "JSON parameter file");
  color->add_option("--seed", seed, "RNG seed")->capture_default_str();
  color->add_flag("--strict-paper-mode", strict, "Fail instead of taking fallbacks");
  color->add_option("--out", out_path, "Coloring output file ('-' for stdout)");
  color->add_option("--log", log_path, "Run log output (JSON lines)");

  std::string suite_path;
  bool no_time = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and emit CSV");
  bench->add_option("suite", suite_path, "Suite JSON file")->required();
  bench->add_option("--out", out_path, "CSV output file ('-' for stdout)");
  bench->add_flag("--no-wall-time", no_time, "Leave the wall_time column empty");

  std::size_t n = 0, colors = 2, samples = 1;
  auto* lower = app.add_subcommand("lower-bound", "Search K_n edge colorings for unsatisfied edges");
  lower->add_option("--n", n, "Number of vertices of K_n")->required();
  lower->add_option("--coloring", coloring_path, "Edge coloring of K_n (lexicographic edge ids)");
  lower->add_option("--colors", colors, "Colors for random sampling")->capture_default_str();
  lower->add_option("--samples", samples, "Random colorings to test")->capture_default_str();
  lower->add_option("--seed", seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return cmd_verify(graph_path, coloring_path, mode, common);
    if (*color)
      return cmd_color(graph_path, algorithm, mode, params_path, seed, strict, out_path, log_path,
                       common);
    if (*bench) return cmd_bench(suite_path, out_path, no_time);
    if (*lower) return cmd_lower_bound(n, coloring_path, colors, samples, seed);
  } catch (const InputError& e) {
    std::cerr << "cfcolor: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "cfcolor: precondition violated: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "cfcolor: bad JSON: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
