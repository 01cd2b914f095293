#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfcolor/exact.hpp"
#include "cfcolor/generators.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/io.hpp"
#include "cfcolor/line_cf.hpp"
#include "cfcolor/near_regular.hpp"
#include "cfcolor/pseudoforest.hpp"
#include "cfcolor/random.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

enum class Algorithm { line_cf, near_regular, pseudoforest, exact };
enum class ColoringMode { vertex, edge };

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "line-cf") return Algorithm::line_cf;
  if (s == "near-regular") return Algorithm::near_regular;
  if (s == "pseudoforest") return Algorithm::pseudoforest;
  if (s == "exact") return Algorithm::exact;
  throw InputError("unknown algorithm '" + s + "'");
}

inline std::string algorithm_name(Algorithm a, ColoringMode mode) {
  switch (a) {
    case Algorithm::line_cf: return "line-cf";
    case Algorithm::near_regular: return "near-regular";
    case Algorithm::pseudoforest: return "pseudoforest";
    case Algorithm::exact: return mode == ColoringMode::edge ? "exact-index" : "exact-number";
  }
  return "?";
}

inline ColoringMode natural_mode(Algorithm a, ColoringMode requested) {
  switch (a) {
    case Algorithm::line_cf:
    case Algorithm::pseudoforest: return ColoringMode::edge;
    case Algorithm::near_regular: return ColoringMode::vertex;
    case Algorithm::exact: return requested;
  }
  return requested;
}

/// Outcome of one algorithm run on one graph. `verified` always comes from
/// verify_vertex_cf / verify_edge_cf on the emitted coloring.
struct AlgorithmRun {
  ColoringMode mode = ColoringMode::edge;
  bool completed = false;  // algorithm produced a total coloring
  bool resource_cap = false;
  std::string message;
  std::optional<VertexColoring> vertex_coloring;
  std::optional<EdgeColoring> edge_coloring;
  std::string header;  // coloring-file header line
  std::size_t colors_used = 0;
  std::size_t rounds = 0;
  std::uint64_t attempts_total = 0;
  bool verified = false;
  VerificationReport report;
  json log = json::array();
  json extra = json::object();
};

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::line_cf;
  ColoringMode mode = ColoringMode::edge;
  json params = json::object();
  std::uint64_t seed = 1;
  bool strict_paper_mode = false;
};

inline AlgorithmRun run_algorithm(const Graph& g, const AlgorithmConfig& cfg) {
  AlgorithmRun run;
  run.mode = natural_mode(cfg.algorithm, cfg.mode);
  switch (cfg.algorithm) {
    case Algorithm::line_cf: {
      LineCfParams p = line_cf_params_from_json(cfg.params);
      p.rng_seed = cfg.seed;
      if (cfg.strict_paper_mode) p.strict_paper_mode = true;
      auto res = cf_edge_coloring(g, p);
      for (const auto& entry : res.log) run.log.push_back(to_json(entry));
      run.rounds = res.rounds;
      run.attempts_total = res.attempts_total;
      run.completed = res.complete;
      run.resource_cap = !res.complete;
      run.message = res.failure;
      run.header = "pairing: label = round * " + std::to_string(res.stride) +
                   " + color; round 0 marks edges satisfied without being selected";
      run.extra["stride"] = res.stride;
      run.edge_coloring = std::move(res.coloring);
      break;
    }
    case Algorithm::near_regular: {
      NearRegularParams p = near_regular_params_from_json(cfg.params);
      p.rng_seed = cfg.seed;
      auto res = color_near_regular(g, p);
      run.rounds = res.stage1_runs;
      run.attempts_total = res.subset_resamples + res.color_resamples;
      run.completed = res.ok;
      run.resource_cap = !res.ok;
      run.message = res.failure;
      run.header = "reserved color 0 outside the dominating subset; palette 1.." +
                   std::to_string(res.palette);
      run.extra["palette"] = res.palette;
      run.extra["subset_resamples"] = res.subset_resamples;
      run.extra["color_resamples"] = res.color_resamples;
      run.extra["stage1_runs"] = res.stage1_runs;
      run.log.push_back(run.extra);
      run.vertex_coloring = std::move(res.coloring);
      break;
    }
    case Algorithm::pseudoforest: {
      auto res = color_pseudoforest(g);
      run.completed = true;
      run.header = "pseudoforest 3-edge-coloring";
      run.edge_coloring = std::move(res.coloring);
      break;
    }
    case Algorithm::exact: {
      ExactLimits limits;
      if (cfg.params.contains("node_budget"))
        limits.node_budget = cfg.params["node_budget"].get<std::uint64_t>();
      auto res = run.mode == ColoringMode::edge ? cf_chromatic_index(g, limits)
                                                : cf_chromatic_number(g, limits);
      run.attempts_total = res.nodes_explored;
      run.completed = true;
      run.resource_cap = !res.certified;
      if (!res.certified) run.message = "node budget exhausted; result is an upper bound";
      run.header = std::string("exact ") + (res.certified ? "certified" : "uncertified") +
                   " k=" + std::to_string(res.k);
      run.extra = to_json(res);
      if (run.mode == ColoringMode::edge)
        run.edge_coloring = res.edge_witness();
      else
        run.vertex_coloring = res.vertex_witness();
      break;
    }
  }
  if (run.edge_coloring && run.edge_coloring->is_total()) {
    run.report = verify_edge_cf(g, *run.edge_coloring);
    run.verified = run.report.ok;
    run.colors_used = run.edge_coloring->distinct_colors();
  } else if (run.vertex_coloring && run.vertex_coloring->size() == g.vertex_count()) {
    run.report = verify_vertex_cf(g, *run.vertex_coloring);
    run.verified = run.report.ok;
    run.colors_used = run.vertex_coloring->distinct_colors();
  }
  if (!run.completed) run.verified = false;
  return run;
}

struct BenchRecord {
  std::string generator;
  std::size_t n = 0;
  std::string parameter;
  std::size_t delta = 0;
  std::string algorithm;
  std::size_t colors_used = 0;
  std::size_t rounds = 0;
  std::uint64_t attempts_total = 0;
  bool verified = false;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
};

inline const char* bench_csv_header() {
  return "generator,n,parameter,delta,algorithm,colors_used,rounds,attempts_total,verified,seed,"
         "wall_time";
}

struct SlopeSummary {
  std::string algorithm;
  double slope = 0.0;
  std::size_t points = 0;
  bool defined = false;
};

/// Least-squares slope of colors_used against ln(delta), over verified records
/// with delta >= 1, per algorithm (in order of first appearance).
inline std::vector<SlopeSummary> slope_by_algorithm(const std::vector<BenchRecord>& records) {
  std::vector<SlopeSummary> out;
  std::map<std::string, std::vector<std::pair<double, double>>> pts;
  for (const auto& r : records) {
    auto [it, fresh] = pts.try_emplace(r.algorithm);
    if (fresh) out.push_back({r.algorithm});
    if (r.verified && r.delta >= 1)
      it->second.emplace_back(std::log(static_cast<double>(r.delta)),
                                    static_cast<double>(r.colors_used));
  }
  for (auto& s : out) {
    const auto& p = pts[s.algorithm];
    s.points = p.size();
    if (p.size() < 2) continue;
    double mx = 0, my = 0;
    for (auto [x, y] : p) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(p.size());
    my /= static_cast<double>(p.size());
    double sxx = 0, sxy = 0;
    for (auto [x, y] : p) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    if (sxx <= 0) continue;
    s.slope = sxy / sxx;
    s.defined = true;
  }
  return out;
}

inline std::string to_csv(const std::vector<BenchRecord>& records, bool include_wall_time = true) {
  std::ostringstream out;
  out << bench_csv_header() << '\n';
  for (const auto& r : records) {
    out << r.generator << ',' << r.n << ',' << r.parameter << ',' << r.delta << ',' << r.algorithm
        << ',' << r.colors_used << ',' << r.rounds << ',' << r.attempts_total << ','
        << (r.verified ? "true" : "false") << ',' << r.seed << ',';
    if (include_wall_time) out << std::fixed << std::setprecision(6) << r.wall_time;
    out.unsetf(std::ios::floatfield);
    out << '\n';
  }
  for (const auto& s : slope_by_algorithm(records)) {
    out << "# summary algorithm=" << s.algorithm << " points=" << s.points << " slope_colors_vs_ln_delta=";
    if (s.defined)
      out << std::setprecision(6) << s.slope;
    else
      out << "undefined";
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::vector<json> as_list(const json& v) {
  if (v.is_array()) return std::vector<json>(v.begin(), v.end());
  return {v};
}

inline std::string format_param(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

}  // namespace detail

/// One planned run of a suite after expanding list-valued fields.
struct SuiteEntry {
  std::string generator;
  std::size_t n = 0;
  std::optional<double> parameter;
  bool line_graph = false;
  AlgorithmConfig config;
};

/// Suite file:
/// {"seed": S, "runs": [{"generator": "gnp"|"regular"|"complete"|"pseudoforest",
///   "n": N or [..], "p": P or [..] (gnp), "d": D or [..] (regular),
///   "line_graph": bool, "algorithm": "line-cf"|..., "mode": "vertex"|"edge",
///   "replicates": R, "params": {...}}]}
inline std::vector<SuiteEntry> expand_suite(const json& suite, std::uint64_t& suite_seed) {
  suite_seed = suite.value("seed", std::uint64_t{1});
  std::vector<SuiteEntry> out;
  if (!suite.contains("runs")) return out;
  for (const auto& run : suite["runs"]) {
    std::string gen = run.at("generator").get<std::string>();
    if (gen != "gnp" && gen != "regular" && gen != "complete" && gen != "pseudoforest")
      throw InputError("unknown generator '" + gen + "'");
    Algorithm alg = parse_algorithm(run.at("algorithm").get<std::string>());
    std::string mode_s = run.value("mode", std::string("edge"));
    if (mode_s != "edge" && mode_s != "vertex") throw InputError("mode must be vertex or edge");
    ColoringMode mode = mode_s == "edge" ? ColoringMode::edge : ColoringMode::vertex;
    std::size_t replicates = run.value("replicates", std::size_t{1});
    std::vector<json> params{json()};
    if (gen == "gnp") params = detail::as_list(run.at("p"));
    if (gen == "regular") params = detail::as_list(run.at("d"));
    for (const auto& nj : detail::as_list(run.at("n")))
      for (const auto& pj : params)
        for (std::size_t r = 0; r < replicates; ++r) {
          SuiteEntry e;
          e.generator = gen;
          e.n = nj.get<std::size_t>();
          if (!pj.is_null()) e.parameter = pj.get<double>();
          e.line_graph = run.value("line_graph", false);
          e.config.algorithm = alg;
          e.config.mode = mode;
          e.config.params = run.value("params", json::object());
          out.push_back(std::move(e));
        }
  }
  return out;
}

inline Graph generate(const SuiteEntry& e, Rng& rng) {
  Graph g;
  if (e.generator == "gnp") g = gnp(e.n, *e.parameter, rng);
  else if (e.generator == "regular") g = random_regular(e.n, static_cast<std::size_t>(*e.parameter), rng);
  else if (e.generator == "complete") g = complete_graph(e.n);
  else g = random_pseudoforest(e.n, rng);
  if (e.line_graph) g = line_graph(g).graph;
  return g;
}

/// Runs every entry; a failing run is recorded with verified=false and the
/// suite continues. Diagnostics for failures go to `errors` if given.
inline std::vector<BenchRecord> run_suite(const json& suite,
                                          std::vector<std::string>* errors = nullptr) {
  std::uint64_t suite_seed = 1;
  auto entries = expand_suite(suite, suite_seed);
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    BenchRecord rec;
    rec.generator = e.generator + (e.line_graph ? "-line" : "");
    rec.n = e.n;
    if (e.parameter) rec.parameter = detail::format_param(*e.parameter);
    rec.algorithm = algorithm_name(e.config.algorithm, e.config.mode);
    rec.seed = mix_seed(suite_seed, i);
    auto t0 = std::chrono::steady_clock::now();
    try {
      Rng rng(rec.seed);
      Graph g = generate(e, rng);
      rec.delta = g.max_degree();
      e.config.seed = mix_seed(rec.seed, 0);
      auto run = run_algorithm(g, e.config);
      rec.colors_used = run.colors_used;
      rec.rounds = run.rounds;
      rec.attempts_total = run.attempts_total;
      rec.verified = run.verified;
      if (errors && (!rec.verified || run.resource_cap))
        errors->push_back("record " + std::to_string(i) + ": " +
                          (run.message.empty() ? "verification failed" : run.message));
    } catch (const std::exception& ex) {
      if (errors) errors->push_back("record " + std::to_string(i) + ": " + ex.what());
    }
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    records.push_back(rec);
  }
  return records;
}

}  // namespace cfcolor
