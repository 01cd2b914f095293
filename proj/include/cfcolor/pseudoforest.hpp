#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "cfcolor/graph.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

/// Output of the pseudoforest construction. `m` is the per-vertex base color
/// of the construction; `unique_color[v]` is a color carried by exactly one
/// edge at v. Both are empty for isolated vertices.
struct PseudoforestColoring {
  EdgeColoring coloring;
  std::vector<std::optional<int>> m;
  std::vector<std::optional<int>> unique_color;
  std::vector<char> on_cycle;
  std::vector<char> is_root;
};

/// Colors 0,1 alternating, last edge 2. Adjacent edges differ and the two
/// edges at every cycle vertex have distinct colors.
inline std::vector<int> proper_cycle_3coloring(std::size_t length) {
  if (length < 3) throw PreconditionError("cycle length must be at least 3");
  std::vector<int> out(length);
  for (std::size_t i = 0; i + 1 < length; ++i) out[i] = static_cast<int>(i % 2);
  out[length - 1] = 2;
  return out;
}

namespace detail {

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& h) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(h.vertex_count(), 0);
  for (std::size_t s = 0; s < h.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> q{static_cast<Vertex>(s)};
    seen[s] = 1;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      comp.push_back(x);
      for (const auto& inc : h.incident(x))
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = 1;
          q.push_back(inc.neighbor);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Leaf peeling restricted to `comp`; `deg` and `removed` are scratch arrays
/// of size |V(h)| whose entries outside `comp` are left untouched.
inline std::optional<std::vector<Vertex>> cycle_of_component(const Graph& h,
                                                             const std::vector<Vertex>& comp,
                                                             std::vector<std::size_t>& deg,
                                                             std::vector<char>& removed) {
  std::deque<Vertex> leaves;
  for (Vertex v : comp) {
    deg[static_cast<std::size_t>(v)] = h.degree(v);
    removed[static_cast<std::size_t>(v)] = 0;
    if (h.degree(v) <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex x = leaves.front();
    leaves.pop_front();
    if (removed[static_cast<std::size_t>(x)]) continue;
    removed[static_cast<std::size_t>(x)] = 1;
    for (const auto& inc : h.incident(x)) {
      auto y = static_cast<std::size_t>(inc.neighbor);
      if (removed[y]) continue;
      if (--deg[y] == 1) leaves.push_back(inc.neighbor);
    }
  }
  std::vector<Vertex> core;
  for (Vertex v : comp)
    if (!removed[static_cast<std::size_t>(v)]) core.push_back(v);
  if (core.empty()) return std::nullopt;

  auto core_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (const auto& inc : h.incident(v))
      if (!removed[static_cast<std::size_t>(inc.neighbor)]) out.push_back(inc.neighbor);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Vertex> cycle{core.front()};
  Vertex prev = core.front();
  Vertex cur = core_neighbors(core.front()).front();
  while (cur != core.front()) {
    cycle.push_back(cur);
    auto nbrs = core_neighbors(cur);
    Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace detail

/// The cycle of the component containing `start`, in rotation order beginning
/// at its smallest vertex and stepping to that vertex's smaller cycle
/// neighbor. Assumes the component has at most one cycle.
inline std::optional<std::vector<Vertex>> find_cycle(const Graph& h, Vertex start) {
  if (!h.valid_vertex(start)) throw InputError("invalid vertex " + std::to_string(start));
  for (const auto& comp : detail::components(h)) {
    if (!std::binary_search(comp.begin(), comp.end(), start)) continue;
    std::vector<std::size_t> deg(h.vertex_count(), 0);
    std::vector<char> removed(h.vertex_count(), 1);
    return detail::cycle_of_component(h, comp, deg, removed);
  }
  return std::nullopt;
}

/// Conflict-free 3-edge-coloring of a graph whose components each contain at
/// most one cycle, such that every non-isolated vertex sees some color on
/// exactly one incident edge. Deterministic.
inline PseudoforestColoring color_pseudoforest(const Graph& h) {
  const std::size_t n = h.vertex_count();
  PseudoforestColoring out;
  out.coloring = EdgeColoring(h.edge_count());
  out.m.assign(n, std::nullopt);
  out.unique_color.assign(n, std::nullopt);
  out.on_cycle.assign(n, 0);
  out.is_root.assign(n, 0);

  std::vector<std::size_t> deg_scratch(n, 0);
  std::vector<char> removed_scratch(n, 1);
  for (const auto& comp : detail::components(h)) {
    std::size_t degree_sum = 0;
    for (Vertex v : comp) degree_sum += h.degree(v);
    const std::size_t edges = degree_sum / 2;
    if (edges == 0) continue;
    if (edges > comp.size())
      throw PreconditionError("component containing vertex " + std::to_string(comp.front()) +
                              " has " + std::to_string(edges) + " edges on " +
                              std::to_string(comp.size()) +
                              " vertices; more than one cycle");

    std::deque<Vertex> frontier;
    if (edges == comp.size()) {
      auto cycle = *detail::cycle_of_component(h, comp, deg_scratch, removed_scratch);
      auto colors = proper_cycle_3coloring(cycle.size());
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i];
        Vertex b = cycle[(i + 1) % cycle.size()];
        out.coloring.set(*h.find_edge(a, b), colors[i]);
        out.on_cycle[static_cast<std::size_t>(a)] = 1;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int before = colors[(i + cycle.size() - 1) % cycle.size()];
        int after = colors[i];
        int missing = 3 - before - after;
        auto v = static_cast<std::size_t>(cycle[i]);
        out.m[v] = missing;
        out.unique_color[v] = (missing + 1) % 3;
        frontier.push_back(cycle[i]);
      }
    } else {
      Vertex root = -1;
      for (Vertex v : comp)
        if (h.degree(v) == 1) {
          root = v;
          break;
        }
      out.is_root[static_cast<std::size_t>(root)] = 1;
      out.m[static_cast<std::size_t>(root)] = 0;
      out.unique_color[static_cast<std::size_t>(root)] = 0;
      frontier.push_back(root);
    }

    // Orient away from the cycle (or root) in BFS order.
    while (!frontier.empty()) {
      Vertex p = frontier.front();
      frontier.pop_front();
      int mp = *out.m[static_cast<std::size_t>(p)];
      std::vector<Incidence> children;
      for (const auto& inc : h.incident(p))
        if (!out.m[static_cast<std::size_t>(inc.neighbor)]) children.push_back(inc);
      std::sort(children.begin(), children.end(),
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
      for (const auto& inc : children) {
        auto c = static_cast<std::size_t>(inc.neighbor);
        out.m[c] = (mp + 1) % 3;
        out.unique_color[c] = mp;
        out.coloring.set(inc.edge, mp);
        frontier.push_back(inc.neighbor);
      }
    }
  }
  return out;
}

/// True iff every component has at most as many edges as vertices.
inline bool is_pseudoforest(const Graph& h) {
  for (const auto& comp : detail::components(h)) {
    std::size_t degree_sum = 0;
    for (Vertex v : comp) degree_sum += h.degree(v);
    if (degree_sum / 2 > comp.size()) return false;
  }
  return true;
}

}  // namespace cfcolor
