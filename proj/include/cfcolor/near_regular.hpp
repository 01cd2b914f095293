#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfcolor/graph.hpp"
#include "cfcolor/random.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

/// Constants of the near-regular procedure. Selection probability is
/// c_sel*ln(D)/(alpha*D), the window is [c_lo*ln(D), (c_hi_num/alpha)*ln(D)],
/// and the palette has ceil((c_col/alpha)*ln(D)) colors, D = max degree.
struct NearRegularParams {
  double alpha = 1.0;
  double c_sel = 8.0;
  double c_lo = 3.0;
  double c_hi_num = 16.0;
  double c_col = 6.0;
  /// Local resampling steps allowed per stage-1 run.
  std::size_t subset_step_cap = 100'000;
  /// Local resampling steps allowed per stage-2 run.
  std::size_t color_step_cap = 100'000;
  /// Stage 1 is rerun this many times when stage 2 exhausts its cap.
  std::size_t stage1_runs = 5;
  std::uint64_t rng_seed = 1;

  /// Large constants from the existence argument; rarely practical.
  static NearRegularParams paper(double alpha) {
    NearRegularParams p;
    p.alpha = alpha;
    p.c_sel = 400.0;
    p.c_lo = 350.0;
    p.c_hi_num = 450.0;
    p.c_col = 2700.0;
    return p;
  }

  /// Desk-scale constants used for runs on graphs with degrees in the tens.
  static NearRegularParams scaled(double alpha) {
    NearRegularParams p;
    p.alpha = alpha;
    return p;
  }

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0,1]");
    if (!(c_lo < c_sel && c_sel < c_hi_num))
      throw InputError("constants must satisfy c_lo < c_sel < c_hi_num");
    if (!(c_col > 0.0)) throw InputError("c_col must be positive");
    if (subset_step_cap == 0 || color_step_cap == 0 || stage1_runs == 0)
      throw InputError("retry caps must be positive");
  }

  double selection_probability(std::size_t max_degree) const {
    double d = static_cast<double>(max_degree);
    return std::min(1.0, c_sel * std::log(d) / (alpha * d));
  }
  double window_low(std::size_t max_degree) const {
    return c_lo * std::log(static_cast<double>(max_degree));
  }
  double window_high(std::size_t max_degree) const {
    return c_hi_num / alpha * std::log(static_cast<double>(max_degree));
  }
  std::size_t palette_size(std::size_t max_degree) const {
    double raw = std::ceil(c_col / alpha * std::log(static_cast<double>(max_degree)));
    return std::max<std::size_t>(2, static_cast<std::size_t>(raw));
  }
};

struct SubsetResult {
  bool ok = false;
  std::vector<char> in_subset;
  std::size_t resamples = 0;
  /// Vertex whose window count is furthest outside the window (on failure).
  Vertex worst = -1;
};

struct NearRegularResult {
  bool ok = false;
  std::string failure;
  VertexColoring coloring;
  std::vector<char> in_subset;
  std::size_t palette = 0;
  std::size_t subset_resamples = 0;
  std::size_t color_resamples = 0;
  std::size_t stage1_runs = 0;
  std::vector<Vertex> violators;
};

/// Color reserved for vertices outside the subset; palette colors are 1..P.
inline constexpr Color kReservedColor = 0;

namespace detail {

inline void check_near_regular(const Graph& g, double alpha) {
  std::size_t dmax = g.max_degree();
  if (dmax < 2) throw PreconditionError("near-regular coloring needs max degree >= 2");
  double need = alpha * static_cast<double>(dmax);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (static_cast<double>(g.degree(static_cast<Vertex>(v))) < need)
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(static_cast<Vertex>(v))) + " < alpha*Delta = " +
                              std::to_string(need));
}

/// Some color occurs exactly once on N[v] ∩ V'.
inline bool has_unique_in_subset(const Graph& g, const std::vector<char>& in_subset,
                                 const std::vector<Color>& color, Vertex v, std::vector<Color>& scratch) {
  scratch.clear();
  if (in_subset[static_cast<std::size_t>(v)]) scratch.push_back(color[static_cast<std::size_t>(v)]);
  for (const auto& inc : g.incident(v))
    if (in_subset[static_cast<std::size_t>(inc.neighbor)])
      scratch.push_back(color[static_cast<std::size_t>(inc.neighbor)]);
  return smallest_singleton(scratch).has_value();
}

}  // namespace detail

/// |V' ∩ N[v]| for every v.
inline std::vector<std::size_t> window_counts(const Graph& g, const std::vector<char>& in_subset) {
  std::vector<std::size_t> cnt(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!in_subset[v]) continue;
    ++cnt[v];
    for (const auto& inc : g.incident(static_cast<Vertex>(v)))
      ++cnt[static_cast<std::size_t>(inc.neighbor)];
  }
  return cnt;
}

/// Draws V' with independent coins, then repeatedly re-flips the coins of
/// N[v] for the smallest vertex v whose count |V' ∩ N[v]| leaves the window.
inline SubsetResult sample_dominating_subset(const Graph& g, const NearRegularParams& p, Rng& rng) {
  p.validate();
  detail::check_near_regular(g, p.alpha);
  const std::size_t dmax = g.max_degree();
  const double lo = p.window_low(dmax);
  const double hi = p.window_high(dmax);
  std::bernoulli_distribution coin(p.selection_probability(dmax));

  SubsetResult r;
  const std::size_t n = g.vertex_count();
  r.in_subset.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) r.in_subset[v] = coin(rng) ? 1 : 0;
  auto cnt = window_counts(g, r.in_subset);

  auto outside = [&](std::size_t v) {
    double c = static_cast<double>(cnt[v]);
    return c < lo ? lo - c : (c > hi ? c - hi : 0.0);
  };
  auto flip = [&](Vertex u, char value) {
    auto ui = static_cast<std::size_t>(u);
    if (r.in_subset[ui] == value) return;
    r.in_subset[ui] = value;
    auto apply = [&](std::size_t x) { cnt[x] = value ? cnt[x] + 1 : cnt[x] - 1; };
    apply(ui);
    for (const auto& inc : g.incident(u)) apply(static_cast<std::size_t>(inc.neighbor));
  };

  while (true) {
    std::size_t bad = n;
    for (std::size_t v = 0; v < n && bad == n; ++v)
      if (outside(v) > 0.0) bad = v;
    if (bad == n) {
      r.ok = true;
      return r;
    }
    if (r.resamples == p.subset_step_cap) break;
    ++r.resamples;
    auto v = static_cast<Vertex>(bad);
    flip(v, coin(rng) ? 1 : 0);
    for (const auto& inc : g.incident(v)) flip(inc.neighbor, coin(rng) ? 1 : 0);
  }
  double worst = -1.0;
  for (std::size_t v = 0; v < n; ++v)
    if (outside(v) > worst) {
      worst = outside(v);
      r.worst = static_cast<Vertex>(v);
    }
  return r;
}

/// X_v: members of N[v] ∩ V' whose color repeats inside N[v] ∩ V'.
/// Paired with d_v = |N[v] ∩ V'|; v is served by V' iff X_v < d_v.
struct ConflictCount {
  std::size_t repeated;
  std::size_t members;
};

inline ConflictCount conflict_count(const Graph& g, const std::vector<char>& in_subset,
                                    const VertexColoring& col, Vertex v) {
  std::vector<Vertex> members;
  if (in_subset[static_cast<std::size_t>(v)]) members.push_back(v);
  for (const auto& inc : g.incident(v))
    if (in_subset[static_cast<std::size_t>(inc.neighbor)]) members.push_back(inc.neighbor);
  ConflictCount c{0, members.size()};
  for (Vertex w : members) {
    bool repeats = false;
    for (Vertex x : members)
      if (x != w && col[x] == col[w]) repeats = true;
    if (repeats) ++c.repeated;
  }
  return c;
}

/// Stage 2 on a fixed subset: vertices outside V' share kReservedColor,
/// members of V' draw uniformly from 1..palette; the colors of N[v] ∩ V' are
/// redrawn for the smallest unserved v until every v sees a color exactly once
/// inside N[v] ∩ V'.
inline NearRegularResult color_with_subset(const Graph& g, const std::vector<char>& in_subset,
                                           std::size_t palette, std::size_t step_cap, Rng& rng) {
  const std::size_t n = g.vertex_count();
  NearRegularResult r;
  r.in_subset = in_subset;
  r.palette = palette;
  std::uniform_int_distribution<Color> draw(1, static_cast<Color>(palette));
  std::vector<Color> color(n, kReservedColor);
  for (std::size_t v = 0; v < n; ++v)
    if (in_subset[v]) color[v] = draw(rng);

  std::vector<Color> scratch;
  while (true) {
    std::size_t bad = n;
    for (std::size_t v = 0; v < n && bad == n; ++v)
      if (!detail::has_unique_in_subset(g, in_subset, color, static_cast<Vertex>(v), scratch)) bad = v;
    if (bad == n) {
      r.ok = true;
      break;
    }
    if (r.color_resamples == step_cap) {
      for (std::size_t v = 0; v < n; ++v)
        if (!detail::has_unique_in_subset(g, in_subset, color, static_cast<Vertex>(v), scratch))
          r.violators.push_back(static_cast<Vertex>(v));
      r.failure = "coloring stage exhausted its cap with " + std::to_string(r.violators.size()) +
                  " unserved vertices";
      break;
    }
    ++r.color_resamples;
    auto v = static_cast<Vertex>(bad);
    if (in_subset[bad]) color[bad] = draw(rng);
    for (const auto& inc : g.incident(v))
      if (in_subset[static_cast<std::size_t>(inc.neighbor)])
        color[static_cast<std::size_t>(inc.neighbor)] = draw(rng);
  }
  r.coloring.color = std::move(color);
  return r;
}

/// Full procedure: stage 1 (subset), stage 2 (coloring); stage 1 is rerun when
/// stage 2 exhausts its cap, up to p.stage1_runs times.
inline NearRegularResult color_near_regular(const Graph& g, const NearRegularParams& p) {
  p.validate();
  detail::check_near_regular(g, p.alpha);
  Rng rng(p.rng_seed);
  const std::size_t palette = p.palette_size(g.max_degree());
  NearRegularResult last;
  std::size_t subset_total = 0, color_total = 0;
  for (std::size_t run = 1; run <= p.stage1_runs; ++run) {
    auto subset = sample_dominating_subset(g, p, rng);
    subset_total += subset.resamples;
    if (!subset.ok) {
      last = NearRegularResult{};
      last.palette = palette;
      last.stage1_runs = run;
      last.subset_resamples = subset_total;
      last.color_resamples = color_total;
      last.in_subset = subset.in_subset;
      last.violators = {subset.worst};
      last.failure = "subset stage exhausted its cap; worst window at vertex " +
                     std::to_string(subset.worst);
      return last;
    }
    last = color_with_subset(g, subset.in_subset, palette, p.color_step_cap, rng);
    color_total += last.color_resamples;
    last.stage1_runs = run;
    last.subset_resamples = subset_total;
    last.color_resamples = color_total;
    if (last.ok) return last;
  }
  return last;
}

}  // namespace cfcolor
