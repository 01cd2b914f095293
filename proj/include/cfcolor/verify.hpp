#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfcolor/graph.hpp"

namespace cfcolor {

/// Opaque color label.
using Color = std::int64_t;

/// Total assignment vertex -> color.
struct VertexColoring {
  std::vector<Color> color;

  std::size_t size() const { return color.size(); }
  Color operator[](Vertex v) const { return color[static_cast<std::size_t>(v)]; }
  std::size_t distinct_colors() const {
    return std::set<Color>(color.begin(), color.end()).size();
  }
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Possibly partial assignment edge -> color.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edges) : color_(edges) {}
  explicit EdgeColoring(std::vector<std::optional<Color>> colors) : color_(std::move(colors)) {}

  static EdgeColoring total(const std::vector<Color>& colors) {
    EdgeColoring c(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) c.color_[i] = colors[i];
    return c;
  }

  std::size_t size() const { return color_.size(); }
  void set(EdgeId e, Color c) { color_.at(static_cast<std::size_t>(e)) = c; }
  void clear(EdgeId e) { color_.at(static_cast<std::size_t>(e)).reset(); }
  const std::optional<Color>& operator[](EdgeId e) const {
    return color_[static_cast<std::size_t>(e)];
  }
  bool colored(EdgeId e) const { return color_[static_cast<std::size_t>(e)].has_value(); }

  bool is_total() const {
    return std::all_of(color_.begin(), color_.end(), [](const auto& c) { return c.has_value(); });
  }
  std::size_t colored_count() const {
    return static_cast<std::size_t>(
        std::count_if(color_.begin(), color_.end(), [](const auto& c) { return c.has_value(); }));
  }
  std::set<Color> palette() const {
    std::set<Color> s;
    for (const auto& c : color_)
      if (c) s.insert(*c);
    return s;
  }
  std::size_t distinct_colors() const { return palette().size(); }

  const std::vector<std::optional<Color>>& raw() const { return color_; }
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<std::optional<Color>> color_;
};

/// `violators` and `witnesses` are keyed by vertex ids or edge ids depending
/// on which verifier produced the report. The witness is the smallest color
/// occurring exactly once in the relevant closed neighborhood.
struct VerificationReport {
  bool ok = true;
  std::vector<std::int64_t> violators;
  std::map<std::int64_t, Color> witnesses;
};

namespace detail {

/// Colors occurring exactly once in `colors`, ascending. Consumes the input.
inline std::vector<Color> singleton_colors(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  std::vector<Color> out;
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    if (j - i == 1) out.push_back(colors[i]);
    i = j;
  }
  return out;
}

inline std::optional<Color> smallest_singleton(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    if (j - i == 1) return colors[i];
    i = j;
  }
  return std::nullopt;
}

inline std::vector<Color> edge_neighborhood_colors(const Graph& h, const EdgeColoring& f, EdgeId e) {
  std::vector<Color> colors;
  const Edge& ed = h.edge(e);
  if (f[e]) colors.push_back(*f[e]);
  for (Vertex end : {ed.u, ed.v})
    for (const auto& inc : h.incident(end))
      if (inc.edge != e && f[inc.edge]) colors.push_back(*f[inc.edge]);
  return colors;
}

}  // namespace detail

inline VerificationReport verify_vertex_cf(const Graph& g, const VertexColoring& col) {
  if (col.size() != g.vertex_count())
    throw InputError("vertex coloring covers " + std::to_string(col.size()) + " of " +
                     std::to_string(g.vertex_count()) + " vertices");
  VerificationReport r;
  std::vector<Color> scratch;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    scratch.clear();
    scratch.push_back(col.color[v]);
    for (const auto& inc : g.incident(static_cast<Vertex>(v))) scratch.push_back(col[inc.neighbor]);
    if (auto w = detail::smallest_singleton(scratch))
      r.witnesses.emplace(static_cast<std::int64_t>(v), *w);
    else
      r.violators.push_back(static_cast<std::int64_t>(v));
  }
  r.ok = r.violators.empty();
  return r;
}

/// Every color occurring exactly once on e's closed edge-neighborhood.
/// Uncolored edges contribute nothing.
inline std::vector<Color> satisfied_with(const Graph& h, const EdgeColoring& f, EdgeId e) {
  if (f.size() != h.edge_count()) throw InputError("edge coloring size does not match graph");
  if (!h.valid_edge(e)) throw InputError("invalid edge id " + std::to_string(e));
  return detail::singleton_colors(detail::edge_neighborhood_colors(h, f, e));
}

inline EdgeSubset satisfied_edges(const Graph& h, const EdgeColoring& f) {
  if (f.size() != h.edge_count()) throw InputError("edge coloring size does not match graph");
  EdgeSubset out(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto id = static_cast<EdgeId>(e);
    if (detail::smallest_singleton(detail::edge_neighborhood_colors(h, f, id))) out.insert(id);
  }
  return out;
}

inline VerificationReport verify_edge_cf(const Graph& h, const EdgeColoring& f) {
  if (f.size() != h.edge_count() || !f.is_total())
    throw InputError("edge coloring must assign a color to every edge");
  VerificationReport r;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto id = static_cast<EdgeId>(e);
    if (auto w = detail::smallest_singleton(detail::edge_neighborhood_colors(h, f, id)))
      r.witnesses.emplace(id, *w);
    else
      r.violators.push_back(id);
  }
  r.ok = r.violators.empty();
  return r;
}

/// Moves an edge coloring of h onto the vertices of line_graph(h).
inline VertexColoring transport_to_line_graph(const LineGraph& lg, const EdgeColoring& f) {
  if (!f.is_total()) throw InputError("edge coloring must be total");
  VertexColoring out;
  out.color.assign(lg.graph.vertex_count(), 0);
  for (std::size_t e = 0; e < f.size(); ++e)
    out.color[static_cast<std::size_t>(lg.vertex_of_edge[e])] = *f[static_cast<EdgeId>(e)];
  return out;
}

inline bool is_proper_vertex_coloring(const Graph& g, const VertexColoring& col) {
  for (const auto& e : g.edges())
    if (col[e.u] == col[e.v]) return false;
  return true;
}

inline bool is_proper_edge_coloring(const Graph& h, const EdgeColoring& f) {
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    std::vector<Color> seen;
    for (const auto& inc : h.incident(static_cast<Vertex>(v))) {
      if (!f[inc.edge]) return false;
      seen.push_back(*f[inc.edge]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

}  // namespace cfcolor
