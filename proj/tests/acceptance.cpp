// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cfcolor/cfcolor.hpp"
#include "pseudoforest_checks.hpp"

using namespace cfcolor;

namespace {

// Pinned limits.
constexpr double kKnownValuesSeconds = 10.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kLowerBoundSeconds = 300.0;
constexpr std::size_t kPseudoforestRuns = 1000;
constexpr std::size_t kPseudoforestMaxN = 60;
constexpr std::size_t kLineCfRuns = 100;
constexpr std::size_t kLineCfDeltaLo = 20;
constexpr std::size_t kLineCfDeltaHi = 120;
// Base-case cutoff for the pipeline runs: the lower edge of the degree window,
// so every instance goes through at least one randomized round.
constexpr std::size_t kLineCfDelta0 = kLineCfDeltaLo;
constexpr std::size_t kNearRegularRuns = 100;
constexpr std::size_t kNearRegularMinPass = 95;
constexpr std::size_t kK64Samples = 1000;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Order-sensitive 64-bit digest of everything a run produced.
struct Fingerprint {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  void add(std::uint64_t x) { h = mix_seed(h, x); }
  void add(const EdgeColoring& f) {
    add(f.size());
    for (const auto& c : f.raw()) add(c ? static_cast<std::uint64_t>(*c) + 1 : 0);
  }
  void add(const VertexColoring& c) {
    add(c.size());
    for (Color x : c.color) add(static_cast<std::uint64_t>(x));
  }
};

struct Verdict {
  bool pass = true;
  std::string detail;
};

void report(int id, const std::string& name, const Verdict& v) {
  std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", id, name.c_str(),
              v.detail.c_str());
  std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1 -------------------------------------------------------------------------

Verdict known_values() {
  auto t0 = Clock::now();
  Verdict v;
  std::vector<std::string> bad;
  auto expect = [&](const std::string& what, const Graph& g, std::size_t want) {
    auto r = cf_chromatic_number(g);
    if (!r.certified || r.k != want || !verify_vertex_cf(g, r.vertex_witness()).ok)
      bad.push_back(what + "=" + std::to_string(r.k));
  };
  for (std::size_t n : {5u, 7u, 9u}) expect("C" + std::to_string(n), cycle_graph(n), 2);
  for (std::size_t n = 3; n <= 6; ++n) expect("K" + std::to_string(n), complete_graph(n), 2);
  expect("K1", complete_graph(1), 1);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::pair<Vertex, Vertex>> m;
    for (std::size_t i = 0; i < k; ++i)
      m.emplace_back(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
    expect("L(matching" + std::to_string(k) + ")", line_graph(build_graph(2 * k, m)).graph, 1);
  }
  double t = seconds_since(t0);
  v.pass = bad.empty() && t < kKnownValuesSeconds;
  v.detail = fmt("%zu mismatches, %.2fs (limit %.0fs)", bad.size(), t, kKnownValuesSeconds);
  for (const auto& b : bad) v.detail += " " + b;
  return v;
}

// 2 -------------------------------------------------------------------------

Verdict oracle_equivalence() {
  auto t0 = Clock::now();
  std::size_t graphs = 0, discrepancies = 0, uncertified = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> p;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) p.push_back(slots[b]);
      Graph h = build_graph(n, p);
      auto idx = cf_chromatic_index(h);
      auto num = cf_chromatic_number(line_graph(h).graph);
      ++graphs;
      if (!idx.certified || !num.certified) ++uncertified;
      if (idx.k != num.k) ++discrepancies;
    }
  }
  double t = seconds_since(t0);
  Verdict v;
  v.pass = discrepancies == 0 && uncertified == 0 && t < kOracleSeconds;
  v.detail = fmt("%zu labelled graphs on <=5 vertices, %zu discrepancies, %zu uncertified, %.2fs",
                 graphs, discrepancies, uncertified, t);
  return v;
}

// 3 -------------------------------------------------------------------------

Verdict pseudoforest_suite(Fingerprint& fp) {
  Rng rng(mix_seed(kSeed, 3));
  std::size_t failures = 0, edges = 0;
  std::string first;
  for (std::size_t i = 0; i < kPseudoforestRuns; ++i) {
    Graph h = random_pseudoforest(kPseudoforestMaxN, rng);
    edges += h.edge_count();
    auto pf = color_pseudoforest(h);
    fp.add(pf.coloring);
    std::string why = check_pseudoforest_structure(h, pf);
    if (why.empty() && pf.coloring.distinct_colors() > 3) why = "more than 3 colors";
    if (why.empty() && h.edge_count() > 0 && !verify_edge_cf(h, pf.coloring).ok) why = "not conflict-free";
    if (!why.empty()) {
      if (!failures) first = "run " + std::to_string(i) + ": " + why;
      ++failures;
    }
  }
  Verdict v;
  v.pass = failures == 0;
  v.detail = fmt("%zu random pseudoforests (%zu edges total), %zu failures", kPseudoforestRuns, edges,
                 failures);
  if (!first.empty()) v.detail += "; first: " + first;
  return v;
}

// 4 and 5 -------------------------------------------------------------------

struct LineCfSuite {
  std::size_t runs = 0, verified = 0, within_bound = 0;
  std::size_t checked_rounds = 0, decay_violations = 0, fallback_rounds = 0;
  double slope = 0.0;
  bool slope_defined = false;
  std::size_t min_delta = 0, max_delta = 0;
  std::string first_bound_miss;
};

LineCfSuite run_line_cf_suite(Fingerprint& fp, std::size_t delta0) {
  static const std::size_t sizes[] = {100, 200, 400};
  LineCfParams params;
  params.delta0 = delta0;
  LineCfSuite s;
  s.min_delta = static_cast<std::size_t>(-1);
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < kLineCfRuns; ++i) {
    std::size_t n = sizes[i % 3];
    Rng rng(mix_seed(kSeed + 4, i));
    // Spread the target degree over the window, then draw until it lands.
    double target = static_cast<double>(kLineCfDeltaLo) +
                    (static_cast<double>(kLineCfDeltaHi - kLineCfDeltaLo) * static_cast<double>(i)) /
                        static_cast<double>(kLineCfRuns - 1);
    double p = std::min(1.0, 0.85 * target / static_cast<double>(n - 1));
    Graph h;
    do h = gnp(n, p, rng);
    while (h.max_degree() < kLineCfDeltaLo || h.max_degree() > kLineCfDeltaHi);
    const std::size_t delta = h.max_degree();
    s.min_delta = std::min(s.min_delta, delta);
    s.max_delta = std::max(s.max_delta, delta);

    params.rng_seed = mix_seed(kSeed + 4, 1000 + i);
    auto res = cf_edge_coloring(h, params);
    fp.add(res.coloring);
    ++s.runs;
    bool ok = res.complete && res.coloring.is_total() && verify_edge_cf(h, res.coloring).ok;
    if (ok) ++s.verified;
    std::size_t colors = res.coloring.distinct_colors();
    double rounds = std::ceil(std::log(static_cast<double>(delta)) / std::log(1.0 / (1.0 - params.beta)));
    std::size_t bound = 9 * static_cast<std::size_t>(rounds) + 2 * params.delta0 - 1;
    if (colors <= bound)
      ++s.within_bound;
    else if (s.first_bound_miss.empty())
      s.first_bound_miss = fmt("run %zu: %zu colors > %zu", i, colors, bound);

    for (const auto& r : res.log) {
      if (r.base_case || !r.fallbacks.empty()) {
        if (!r.base_case) ++s.fallback_rounds;
        if (r.base_case || r.delta_after == 0) continue;
      }
      if (params.beta * static_cast<double>(r.delta) < 1.0) continue;
      ++s.checked_rounds;
      if (static_cast<double>(r.delta_after) > (1.0 - params.beta) * static_cast<double>(r.delta))
        ++s.decay_violations;
    }

    BenchRecord rec;
    rec.algorithm = "line-cf";
    rec.delta = delta;
    rec.colors_used = colors;
    rec.verified = ok;
    records.push_back(rec);
  }
  auto slopes = slope_by_algorithm(records);
  if (!slopes.empty() && slopes[0].defined) {
    s.slope = slopes[0].slope;
    s.slope_defined = true;
  }
  return s;
}

Verdict line_cf_verdict(const LineCfSuite& s, const LineCfSuite& with_default_delta0) {
  Verdict v;
  v.pass = s.verified == kLineCfRuns && s.within_bound == kLineCfRuns && s.slope_defined &&
           std::isfinite(s.slope) && s.slope > 0.0;
  v.detail = fmt("delta0=%zu: %zu/%zu verified, %zu/%zu within color bound, delta in [%zu,%zu], slope %.3f; "
                 "delta0=%zu (default, informational): %zu/%zu verified, slope %.3f",
                 kLineCfDelta0, s.verified, s.runs, s.within_bound, s.runs, s.min_delta, s.max_delta, s.slope,
                 LineCfParams{}.delta0, with_default_delta0.verified, with_default_delta0.runs,
                 with_default_delta0.slope);
  if (!s.first_bound_miss.empty()) v.detail += "; " + s.first_bound_miss;
  return v;
}

Verdict decay_verdict(const LineCfSuite& s) {
  Verdict v;
  v.pass = s.decay_violations == 0 && s.checked_rounds > 0;
  v.detail = fmt("%zu accepted rounds with beta*delta >= 1 checked, %zu violations, %zu fallback rounds",
                 s.checked_rounds, s.decay_violations, s.fallback_rounds);
  return v;
}

// 6 -------------------------------------------------------------------------

Verdict near_regular_suite(Fingerprint& fp) {
  static const std::size_t degrees[] = {30, 50, 80};
  std::size_t passed = 0, cap_failures = 0, invalid = 0, unused_palette = 0, over_budget = 0;
  for (std::size_t i = 0; i < kNearRegularRuns; ++i) {
    std::size_t d = degrees[i % 3];
    Rng rng(mix_seed(kSeed + 6, i));
    Graph g = random_regular(500, d, rng);
    auto p = NearRegularParams::scaled(1.0);
    p.rng_seed = mix_seed(kSeed + 6, 1000 + i);
    auto r = color_near_regular(g, p);
    fp.add(r.coloring);
    if (!r.ok) {
      ++cap_failures;
      continue;
    }
    if (!verify_vertex_cf(g, r.coloring).ok) {
      ++invalid;
      continue;
    }
    std::size_t colors = r.coloring.distinct_colors();
    if (colors > r.palette + 1) {
      ++over_budget;
      continue;
    }
    if (colors < r.palette + 1) {
      // valid output, but some palette color was never drawn
      ++unused_palette;
      continue;
    }
    ++passed;
  }
  Verdict v;
  v.pass = passed >= kNearRegularMinPass && invalid == 0 && over_budget == 0;
  v.detail = fmt("%zu/%zu verified with exactly palette+1 colors (need %zu); not passing: %zu cap exhaustions, "
                 "%zu invalid outputs, %zu over budget, %zu valid with an undrawn palette color",
                 passed, kNearRegularRuns, kNearRegularMinPass, cap_failures, invalid, over_budget,
                 unused_palette);
  return v;
}

// 7 -------------------------------------------------------------------------

Verdict lower_bound_suite(Fingerprint& fp) {
  auto t0 = Clock::now();
  std::size_t exhaustive = 0, exhaustive_bad = 0, disagreements = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    Graph kn = complete_graph(n);
    const std::size_t index = cf_chromatic_index(kn).k;
    const std::size_t m = kn.edge_count();
    for (std::size_t k = 1; k <= 2; ++k) {
      if (k >= index) continue;  // only counts the exact solver proves insufficient
      std::vector<Color> raw(m, 0);
      while (true) {
        auto f = EdgeColoring::total(raw);
        auto s = find_unsatisfied_edge(n, f);
        ++exhaustive;
        if (!s.agree) ++disagreements;
        if (!s.brute || !validate_certificate(n, f, s.certificate)) ++exhaustive_bad;
        std::size_t i = 0;
        while (i < m && raw[i] == static_cast<Color>(k) - 1) raw[i++] = 0;
        if (i == m) break;
        ++raw[i];
      }
    }
  }

  const std::size_t n = 64;
  const long long x = theorem_bound(n);
  Graph kn = complete_graph(n);
  Rng rng(mix_seed(kSeed, 7));
  std::uniform_int_distribution<Color> draw(0, x - 1);
  std::size_t found = 0, certified = 0, large_class = 0;
  for (std::size_t i = 0; i < kK64Samples; ++i) {
    EdgeColoring f(kn.edge_count());
    for (std::size_t e = 0; e < kn.edge_count(); ++e) f.set(static_cast<EdgeId>(e), draw(rng));
    auto s = find_unsatisfied_edge(n, f);
    fp.add(s.brute ? static_cast<std::uint64_t>(*s.brute) : ~0ULL);
    fp.add(s.guided ? static_cast<std::uint64_t>(*s.guided) : ~0ULL);
    if (!s.agree) ++disagreements;
    if (s.brute && s.guided) ++found;
    if (static_cast<long long>(s.certificate.class_a.size()) > x + 1) ++large_class;
    if (s.certificate.uncovered && validate_certificate(n, f, s.certificate)) ++certified;
  }
  double t = seconds_since(t0);
  Verdict v;
  v.pass = exhaustive_bad == 0 && disagreements == 0 && found == kK64Samples &&
           certified == kK64Samples && large_class == kK64Samples && t < kLowerBoundSeconds;
  v.detail = fmt("(a) %zu exhaustive colorings, %zu without unsatisfied edge; (b) K64 with %lld colors: "
                 "%zu/%zu found, %zu/%zu certificates valid, %zu/%zu with |A| > %lld; (c) %zu disagreements; "
                 "%.1fs",
                 exhaustive, exhaustive_bad, x, found, kK64Samples, certified, kK64Samples, large_class,
                 kK64Samples, x + 1, disagreements, t);
  return v;
}

// 8 -------------------------------------------------------------------------

std::string bench_csv() {
  json suite = json::parse(R"({"seed": 77, "runs": [
    {"generator": "gnp", "n": [100, 200], "p": [0.15, 0.3], "algorithm": "line-cf"},
    {"generator": "regular", "n": 500, "d": [30, 50], "algorithm": "near-regular"},
    {"generator": "pseudoforest", "n": 60, "algorithm": "pseudoforest", "replicates": 5},
    {"generator": "complete", "n": [4, 5, 6], "algorithm": "exact", "mode": "edge"}]})");
  return to_csv(run_suite(suite), false);
}

}  // namespace

int main() {
  bool all = true;
  auto record = [&](int id, const std::string& name, const Verdict& v) {
    report(id, name, v);
    all = all && v.pass;
  };

  record(1, "known values", known_values());
  record(2, "index equals number of line graph", oracle_equivalence());

  Fingerprint fp3, fp4, fp6, fp7;
  record(3, "pseudoforest construction", pseudoforest_suite(fp3));
  auto lc = run_line_cf_suite(fp4, kLineCfDelta0);
  Fingerprint unused;
  auto lc_default = run_line_cf_suite(unused, LineCfParams{}.delta0);
  record(4, "line-cf pipeline", line_cf_verdict(lc, lc_default));
  record(5, "degree decay", decay_verdict(lc));
  record(6, "near-regular coloring", near_regular_suite(fp6));
  record(7, "lower bound on cliques", lower_bound_suite(fp7));

  Fingerprint again3, again4, again6, again7;
  pseudoforest_suite(again3);
  run_line_cf_suite(again4, kLineCfDelta0);
  near_regular_suite(again6);
  lower_bound_suite(again7);
  std::string csv_a = bench_csv(), csv_b = bench_csv();
  Verdict det;
  std::vector<std::string> differs;
  if (fp3.h != again3.h) differs.push_back("3");
  if (fp4.h != again4.h) differs.push_back("4");
  if (fp6.h != again6.h) differs.push_back("6");
  if (fp7.h != again7.h) differs.push_back("7");
  if (csv_a != csv_b) differs.push_back("bench csv");
  det.pass = differs.empty();
  det.detail = "reran criteria 3, 4, 6, 7 and a mixed bench suite; ";
  det.detail += differs.empty() ? "all outputs identical" : "differences in:";
  for (const auto& d : differs) det.detail += " " + d;
  record(8, "determinism", det);

  return all ? 0 : 1;
}
