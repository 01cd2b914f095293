#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "cfcolor/graph.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

enum class SearchOutcome { found, none, unknown };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::none: return "none";
    case SearchOutcome::unknown: return "unknown";
  }
  return "?";
}

struct ExactLimits {
  /// Total search nodes (single color assignments) allowed per call.
  std::uint64_t node_budget = 200'000'000;
};

struct Decision {
  SearchOutcome outcome = SearchOutcome::unknown;
  std::vector<Color> assignment;  // set iff found
  std::uint64_t nodes = 0;
};

/// Minimal-color search result. When `certified` is false the budget ran out:
/// `k` is then the best upper bound known and `lower_bound` the largest count
/// proven insufficient plus one.
struct ExactResult {
  bool certified = false;
  std::size_t k = 0;
  std::size_t lower_bound = 0;
  std::vector<Color> witness;
  std::uint64_t nodes_explored = 0;

  VertexColoring vertex_witness() const { return VertexColoring{witness}; }
  EdgeColoring edge_witness() const { return EdgeColoring::total(witness); }
};

namespace detail {

/// Backtracking over "every closed neighborhood has a color used exactly once
/// inside it". nb[i] lists the elements of i's closed neighborhood, and the
/// relation is symmetric, so nb[i] is also the set of constraints i touches.
class UniqueColorSearch {
 public:
  UniqueColorSearch(const std::vector<std::vector<std::int32_t>>& nb, std::size_t k,
                    std::uint64_t budget)
      : nb_(nb), k_(k), budget_(budget) {
    order_ = bfs_order();
  }

  Decision run() {
    Decision d;
    const std::size_t n = nb_.size();
    if (n == 0) {
      d.outcome = SearchOutcome::found;
      return d;
    }
    if (k_ == 0) {
      d.outcome = SearchOutcome::none;
      return d;
    }
    color_.assign(n, -1);
    count_.assign(n * k_, 0);
    remaining_.resize(n);
    for (std::size_t i = 0; i < n; ++i) remaining_[i] = static_cast<int>(nb_[i].size());
    bool ok = descend(0, -1);
    d.nodes = nodes_;
    if (ok) {
      d.outcome = SearchOutcome::found;
      d.assignment.assign(color_.begin(), color_.end());
    } else {
      d.outcome = exhausted_ ? SearchOutcome::unknown : SearchOutcome::none;
    }
    return d;
  }

 private:
  std::vector<std::int32_t> bfs_order() const {
    const std::size_t n = nb_.size();
    std::vector<std::int32_t> order;
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::deque<std::int32_t> q{static_cast<std::int32_t>(s)};
      seen[s] = 1;
      while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        order.push_back(x);
        for (auto y : nb_[static_cast<std::size_t>(x)])
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            q.push_back(y);
          }
      }
    }
    return order;
  }

  int& count(std::size_t j, std::size_t c) { return count_[j * k_ + c]; }

  // Constraint j can still be met: some color is unique now, or a color not yet
  // present could be introduced by an unassigned member.
  bool alive(std::size_t j) {
    bool unused = false;
    for (std::size_t c = 0; c < k_; ++c) {
      int x = count(j, c);
      if (x == 1) return true;
      if (x == 0) unused = true;
    }
    return unused && remaining_[j] > 0;
  }

  bool descend(std::size_t pos, int max_used) {
    if (pos == order_.size()) return true;
    auto i = static_cast<std::size_t>(order_[pos]);
    int limit = std::min(max_used + 1, static_cast<int>(k_) - 1);
    for (int c = 0; c <= limit; ++c) {
      if (nodes_ == budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      color_[i] = c;
      for (auto j : nb_[i]) {
        ++count(static_cast<std::size_t>(j), static_cast<std::size_t>(c));
        --remaining_[static_cast<std::size_t>(j)];
      }
      bool feasible = true;
      for (auto j : nb_[i])
        if (!alive(static_cast<std::size_t>(j))) {
          feasible = false;
          break;
        }
      if (feasible && descend(pos + 1, std::max(max_used, c))) return true;
      for (auto j : nb_[i]) {
        --count(static_cast<std::size_t>(j), static_cast<std::size_t>(c));
        ++remaining_[static_cast<std::size_t>(j)];
      }
      color_[i] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const std::vector<std::vector<std::int32_t>>& nb_;
  std::size_t k_;
  std::uint64_t budget_;
  std::vector<std::int32_t> order_;
  std::vector<Color> color_;
  std::vector<int> count_;
  std::vector<int> remaining_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

inline std::vector<std::vector<std::int32_t>> vertex_neighborhoods(const Graph& g) {
  std::vector<std::vector<std::int32_t>> nb(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    nb[v] = g.closed_neighborhood(static_cast<Vertex>(v));
  return nb;
}

inline std::vector<std::vector<std::int32_t>> edge_neighborhoods(const Graph& h) {
  std::vector<std::vector<std::int32_t>> nb(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    nb[e] = h.closed_edge_neighborhood(static_cast<EdgeId>(e));
  return nb;
}

inline std::size_t count_distinct(const std::vector<Color>& colors) {
  std::vector<Color> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

}  // namespace detail

/// Smallest-available-color greedy in vertex id order.
inline VertexColoring greedy_proper_vertex_coloring(const Graph& g) {
  VertexColoring out;
  out.color.assign(g.vertex_count(), -1);
  std::vector<char> used;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    used.assign(g.degree(static_cast<Vertex>(v)) + 1, 0);
    for (const auto& inc : g.incident(static_cast<Vertex>(v))) {
      Color c = out[inc.neighbor];
      if (c >= 0 && static_cast<std::size_t>(c) < used.size()) used[static_cast<std::size_t>(c)] = 1;
    }
    out.color[v] = static_cast<Color>(std::find(used.begin(), used.end(), 0) - used.begin());
  }
  return out;
}

/// Each edge, in id order, takes the smallest color free at both endpoints;
/// at most 2*max_degree - 1 colors.
inline EdgeColoring greedy_proper_edge_coloring(const Graph& h) {
  EdgeColoring f(h.edge_count());
  std::vector<char> used;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const Edge& ed = h.edges()[e];
    used.assign(h.degree(ed.u) + h.degree(ed.v), 0);
    for (Vertex end : {ed.u, ed.v})
      for (const auto& inc : h.incident(end)) {
        const auto& c = f[inc.edge];
        if (c && static_cast<std::size_t>(*c) < used.size()) used[static_cast<std::size_t>(*c)] = 1;
      }
    f.set(static_cast<EdgeId>(e),
          static_cast<Color>(std::find(used.begin(), used.end(), 0) - used.begin()));
  }
  return f;
}

/// Colors are explored in first-use order along a BFS order of vertices, so
/// each color class permutation is visited once.
inline Decision is_cf_vertex_colorable(const Graph& g, std::size_t k, ExactLimits limits = {}) {
  auto nb = detail::vertex_neighborhoods(g);
  return detail::UniqueColorSearch(nb, k, limits.node_budget).run();
}

inline Decision is_cf_edge_colorable(const Graph& h, std::size_t k, ExactLimits limits = {}) {
  auto nb = detail::edge_neighborhoods(h);
  return detail::UniqueColorSearch(nb, k, limits.node_budget).run();
}

namespace detail {

inline ExactResult minimize(const std::vector<std::vector<std::int32_t>>& nb,
                            std::vector<Color> fallback_witness, ExactLimits limits) {
  ExactResult r;
  const std::size_t n = nb.size();
  if (n == 0) {
    r.certified = true;
    return r;
  }
  std::uint64_t left = limits.node_budget;
  for (std::size_t k = 1; k <= n; ++k) {
    auto d = UniqueColorSearch(nb, k, left).run();
    r.nodes_explored += d.nodes;
    left = d.nodes >= left ? 0 : left - d.nodes;
    if (d.outcome == SearchOutcome::found) {
      r.certified = true;
      r.k = k;
      r.lower_bound = k;
      r.witness = std::move(d.assignment);
      return r;
    }
    if (d.outcome == SearchOutcome::unknown) {
      r.certified = false;
      r.lower_bound = k;
      r.witness = std::move(fallback_witness);
      r.k = count_distinct(r.witness);
      return r;
    }
  }
  // Unreachable: n distinct colors always work.
  r.witness = std::move(fallback_witness);
  r.k = count_distinct(r.witness);
  return r;
}

}  // namespace detail

/// Conflict-free chromatic number of g.
inline ExactResult cf_chromatic_number(const Graph& g, ExactLimits limits = {}) {
  return detail::minimize(detail::vertex_neighborhoods(g), greedy_proper_vertex_coloring(g).color,
                          limits);
}

/// Conflict-free chromatic index of h, searched directly on edges.
inline ExactResult cf_chromatic_index(const Graph& h, ExactLimits limits = {}) {
  std::vector<Color> fallback;
  auto greedy = greedy_proper_edge_coloring(h);
  for (std::size_t e = 0; e < h.edge_count(); ++e) fallback.push_back(*greedy[static_cast<EdgeId>(e)]);
  return detail::minimize(detail::edge_neighborhoods(h), std::move(fallback), limits);
}

}  // namespace cfcolor
