#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfcolor/exact.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/pseudoforest.hpp"
#include "cfcolor/random.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

struct LineCfParams {
  /// Required per-round degree decay fraction; e^-4 by default.
  double beta = std::exp(-4.0);
  /// Vertices with degree >= heavy_fraction * max degree select an edge.
  double heavy_fraction = 0.5;
  /// Rounds run while the residual max degree is at least this.
  std::size_t delta0 = 55;
  std::size_t round_retry_cap = 1000;
  std::uint64_t rng_seed = 1;
  /// Report failure instead of walking the fallback ladder.
  bool strict_paper_mode = false;

  void validate() const {
    if (!(beta > 0.0 && beta < 1.0)) throw InputError("beta must lie in (0,1)");
    if (!(heavy_fraction > 0.0 && heavy_fraction <= 1.0))
      throw InputError("heavy_fraction must lie in (0,1]");
    if (static_cast<double>(delta0) < 1.0 / (1.0 - beta))
      throw InputError("delta0 must be at least 1/(1-beta)");
    if (round_retry_cap == 0) throw InputError("round_retry_cap must be positive");
  }
};

/// One round of the pipeline. Maps are indexed by vertex or edge id of the
/// round's graph.
struct RoundState {
  std::vector<std::optional<EdgeId>> selected;  // e_v for heavy v
  std::vector<std::optional<int>> f1;           // bit for heavy v
  EdgeSubset S;
  EdgeColoring f2;  // {0,1,2} on S
  EdgeColoring f3;  // {0,1,2} on S, from the pseudoforest construction
  EdgeColoring f;   // 3*f2 + f3, nine colors on S
  EdgeSubset L;     // edges satisfied by f
  std::size_t attempts = 0;
  double beta = 0.0;
};

struct PropertyAEntry {
  Vertex v;
  std::size_t clear_count[2];  // neighbors touching no edge colored i or 2
  bool pass;
};

struct PropertyAReport {
  bool ok = true;
  double threshold = 0.0;
  std::vector<PropertyAEntry> entries;
  std::size_t failing() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
  }
};

inline bool is_heavy(std::size_t degree, std::size_t delta, double heavy_fraction) {
  return static_cast<double>(degree) >= heavy_fraction * static_cast<double>(delta);
}

/// Every heavy vertex picks a uniform incident edge and a uniform bit; edges
/// picked by both endpoints with different bits get color 2.
inline RoundState sample_round(const Graph& h, std::size_t delta, Rng& rng,
                               double heavy_fraction = 0.5) {
  if (delta == 0) throw PreconditionError("sample_round needs max degree >= 1");
  const std::size_t n = h.vertex_count();
  RoundState st;
  st.selected.assign(n, std::nullopt);
  st.f1.assign(n, std::nullopt);
  st.S = EdgeSubset(h.edge_count());
  st.f2 = EdgeColoring(h.edge_count());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& inc = h.incident(static_cast<Vertex>(v));
    if (inc.empty() || !is_heavy(inc.size(), delta, heavy_fraction)) continue;
    std::uniform_int_distribution<std::size_t> pick(0, inc.size() - 1);
    EdgeId e = inc[pick(rng)].edge;
    int bit = coin(rng) ? 1 : 0;
    st.selected[v] = e;
    st.f1[v] = bit;
    st.S.insert(e);
    const auto& prev = st.f2[e];
    if (prev && *prev != bit)
      st.f2.set(e, 2);
    else
      st.f2.set(e, bit);
  }
  return st;
}

/// For each vertex with degree > heavy_fraction*delta and each i in {0,1},
/// counts neighbors not incident to any edge whose f2 color is i or 2. Passes
/// when both counts reach beta*delta; below beta*delta = 1 the requirement
/// is vacuous.
inline PropertyAReport check_property_a(const Graph& h, const EdgeColoring& f2, std::size_t delta,
                                        double beta, double heavy_fraction = 0.5) {
  const std::size_t n = h.vertex_count();
  // touches[u][c]: u is incident to an edge with f2 color c
  std::vector<std::array<char, 3>> touches(n, {0, 0, 0});
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto& c = f2[static_cast<EdgeId>(e)];
    if (!c) continue;
    if (*c < 0 || *c > 2) throw InputError("f2 colors must lie in {0,1,2}");
    touches[static_cast<std::size_t>(h.edges()[e].u)][static_cast<std::size_t>(*c)] = 1;
    touches[static_cast<std::size_t>(h.edges()[e].v)][static_cast<std::size_t>(*c)] = 1;
  }
  PropertyAReport r;
  double raw = beta * static_cast<double>(delta);
  r.threshold = raw < 1.0 ? 0.0 : raw;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t d = h.degree(static_cast<Vertex>(v));
    if (!(static_cast<double>(d) > heavy_fraction * static_cast<double>(delta))) continue;
    PropertyAEntry entry{static_cast<Vertex>(v), {0, 0}, true};
    for (const auto& inc : h.incident(static_cast<Vertex>(v))) {
      const auto& t = touches[static_cast<std::size_t>(inc.neighbor)];
      if (!t[0] && !t[2]) ++entry.clear_count[0];
      if (!t[1] && !t[2]) ++entry.clear_count[1];
    }
    entry.pass = static_cast<double>(entry.clear_count[0]) >= r.threshold &&
                 static_cast<double>(entry.clear_count[1]) >= r.threshold;
    if (!entry.pass) r.ok = false;
    r.entries.push_back(entry);
  }
  return r;
}

struct RoundOutcome {
  bool accepted = false;
  RoundState state;                // complete when accepted, else the best attempt
  std::size_t failing_vertices = 0;  // of the returned attempt
};

/// Resamples until property (a) holds (at most params.round_retry_cap times),
/// then composes the pseudoforest coloring of H[S] with f2 and recomputes the
/// satisfied set from scratch.
inline RoundOutcome run_round(const Graph& h, const LineCfParams& params, double beta, Rng& rng) {
  const std::size_t delta = h.max_degree();
  if (delta == 0) throw PreconditionError("run_round needs at least one edge");
  RoundOutcome out;
  std::optional<RoundState> best;
  std::size_t best_failing = 0;
  for (std::size_t attempt = 1; attempt <= params.round_retry_cap; ++attempt) {
    auto st = sample_round(h, delta, rng, params.heavy_fraction);
    st.attempts = attempt;
    st.beta = beta;
    auto report = check_property_a(h, st.f2, delta, beta, params.heavy_fraction);
    if (report.ok) {
      best = std::move(st);
      out.accepted = true;
      break;
    }
    std::size_t failing = report.failing();
    if (!best || failing < best_failing) {
      best = std::move(st);
      best_failing = failing;
    }
    best->attempts = attempt;
  }
  out.state = std::move(*best);
  if (!out.accepted) {
    out.failing_vertices = best_failing;
    return out;
  }

  RoundState& st = out.state;
  auto members = st.S.members();
  Graph sub = edge_induced(h, members);
  if (!is_pseudoforest(sub))
    throw std::logic_error("selected edges do not form a pseudoforest");
  auto pf = color_pseudoforest(sub);
  st.f3 = EdgeColoring(h.edge_count());
  st.f = EdgeColoring(h.edge_count());
  for (std::size_t i = 0; i < members.size(); ++i) {
    Color c3 = *pf.coloring[static_cast<EdgeId>(i)];
    st.f3.set(members[i], c3);
    st.f.set(members[i], 3 * *st.f2[members[i]] + c3);
  }
  st.L = satisfied_edges(h, st.f);
  if (!st.S.is_subset_of(st.L)) throw std::logic_error("a selected edge is not satisfied");
  return out;
}

struct RoundLog {
  std::size_t round = 0;
  std::size_t delta = 0;
  std::size_t delta_after = 0;
  std::size_t attempts = 0;
  std::size_t selected = 0;   // |S|
  std::size_t satisfied = 0;  // |L|
  std::size_t colors_used = 0;
  double beta = 0.0;
  bool base_case = false;
  std::vector<std::string> fallbacks;
};

/// Final labels are round * stride + color. Round 0 color 0 is the shared
/// label for edges that were satisfied in some round without being selected;
/// rounds are numbered from 1 and the base case takes the next index.
struct LineCfResult {
  bool complete = true;
  std::string failure;
  EdgeColoring coloring;
  std::vector<std::size_t> round_of_edge;
  std::vector<Color> round_color;
  std::size_t stride = 16;
  std::size_t rounds = 0;  // randomized rounds accepted
  std::size_t attempts_total = 0;
  std::vector<RoundLog> log;
};

inline std::size_t pairing_stride(std::size_t max_round_colors) {
  std::size_t stride = 16;
  while (stride < max_round_colors) stride *= 2;
  return stride;
}

inline LineCfResult cf_edge_coloring(const Graph& h, const LineCfParams& params) {
  params.validate();
  Rng rng(params.rng_seed);
  LineCfResult res;
  const std::size_t m = h.edge_count();
  res.round_of_edge.assign(m, 0);
  res.round_color.assign(m, -1);
  std::vector<char> labeled(m, 0);

  Graph current = h;
  std::vector<EdgeId> original(m);
  for (std::size_t e = 0; e < m; ++e) original[e] = static_cast<EdgeId>(e);

  std::size_t round = 1;
  std::size_t max_round_colors = 9;
  while (current.edge_count() > 0 && current.max_degree() >= params.delta0) {
    const std::size_t delta = current.max_degree();
    RoundLog entry;
    entry.round = round;
    entry.delta = delta;

    auto residual_max = [&](const RoundState& st) {
      std::size_t worst = 0;
      for (std::size_t v = 0; v < current.vertex_count(); ++v) {
        std::size_t d = 0;
        for (const auto& inc : current.incident(static_cast<Vertex>(v)))
          if (!st.L.contains(inc.edge)) ++d;
        worst = std::max(worst, d);
      }
      return worst;
    };
    auto contracted = [&](double beta, std::size_t after) {
      return static_cast<double>(after) <= (1.0 - beta) * static_cast<double>(delta);
    };

    double beta = params.beta;
    auto outcome = run_round(current, params, beta, rng);
    entry.attempts = outcome.state.attempts;
    std::size_t after = outcome.accepted ? residual_max(outcome.state) : delta;
    bool ok = outcome.accepted && contracted(beta, after);
    if (!ok && params.strict_paper_mode) {
      res.complete = false;
      res.failure = "round " + std::to_string(round) + " at max degree " + std::to_string(delta) +
                    (outcome.accepted ? ": degrees did not contract"
                                      : ": property (a) not met within retry cap");
      entry.beta = beta;
      entry.fallbacks.push_back("strict_failure");
      res.attempts_total += entry.attempts;
      res.log.push_back(entry);
      break;
    }
    if (!ok) {
      entry.fallbacks.push_back("halve_beta");
      beta /= 2.0;
      outcome = run_round(current, params, beta, rng);
      entry.attempts += outcome.state.attempts;
      after = outcome.accepted ? residual_max(outcome.state) : delta;
      ok = outcome.accepted && contracted(beta, after);
    }
    res.attempts_total += entry.attempts;
    entry.beta = beta;
    if (!ok) {
      entry.fallbacks.push_back("early_base_case");
      res.log.push_back(entry);
      break;
    }

    const RoundState& st = outcome.state;
    std::set<Color> used;
    for (std::size_t e = 0; e < current.edge_count(); ++e) {
      auto id = static_cast<EdgeId>(e);
      if (!st.L.contains(id)) continue;
      auto orig = static_cast<std::size_t>(original[e]);
      if (labeled[orig]) throw std::logic_error("edge colored in two rounds");
      labeled[orig] = 1;
      if (st.S.contains(id)) {
        res.round_of_edge[orig] = round;
        res.round_color[orig] = *st.f[id];
        used.insert(*st.f[id]);
      } else {
        res.round_of_edge[orig] = 0;
        res.round_color[orig] = 0;
      }
    }
    entry.selected = st.S.size();
    entry.satisfied = st.L.size();
    entry.colors_used = used.size();
    entry.delta_after = after;
    res.log.push_back(entry);
    ++res.rounds;

    auto removal = remove_edges(current, st.L);
    std::vector<EdgeId> next_original(removal.old_id.size());
    for (std::size_t e = 0; e < removal.old_id.size(); ++e)
      next_original[e] = original[static_cast<std::size_t>(removal.old_id[e])];
    original = std::move(next_original);
    current = std::move(removal.graph);
    ++round;
  }

  if (res.complete && current.edge_count() > 0) {
    RoundLog entry;
    entry.round = round;
    entry.delta = current.max_degree();
    entry.base_case = true;
    auto greedy = greedy_proper_edge_coloring(current);
    std::set<Color> used;
    for (std::size_t e = 0; e < current.edge_count(); ++e) {
      auto orig = static_cast<std::size_t>(original[e]);
      if (labeled[orig]) throw std::logic_error("edge colored in two rounds");
      labeled[orig] = 1;
      res.round_of_edge[orig] = round;
      res.round_color[orig] = *greedy[static_cast<EdgeId>(e)];
      used.insert(res.round_color[orig]);
    }
    entry.selected = current.edge_count();
    entry.satisfied = current.edge_count();
    entry.colors_used = used.size();
    entry.delta_after = 0;
    max_round_colors = std::max(max_round_colors, used.size());
    res.log.push_back(entry);
  }

  res.stride = pairing_stride(max_round_colors);
  res.coloring = EdgeColoring(m);
  for (std::size_t e = 0; e < m; ++e)
    if (labeled[e])
      res.coloring.set(static_cast<EdgeId>(e),
                       static_cast<Color>(res.round_of_edge[e] * res.stride) + res.round_color[e]);
  return res;
}

}  // namespace cfcolor
