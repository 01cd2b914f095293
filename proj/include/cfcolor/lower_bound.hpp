#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfcolor/graph.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

/// floor(log2 n - log2 log2 n - 1). Nonpositive values are returned as is.
inline long long theorem_bound(long long n) {
  if (n < 2) throw InputError("theorem_bound needs n >= 2");
  long double l = std::log2(static_cast<long double>(n));
  return static_cast<long long>(std::floor(l - std::log2(l) - 1.0L));
}

/// Vertices of K_n grouped by the set of colors on their incident edges.
struct PaletteClasses {
  std::vector<std::vector<Color>> palette;  // per vertex, sorted
  std::vector<std::vector<Vertex>> classes;  // each sorted, ordered by first vertex
  std::vector<std::size_t> class_of;
  std::size_t largest = 0;  // index into classes; first of maximum size

  const std::vector<Vertex>& largest_class() const { return classes[largest]; }
};

namespace detail {

inline void require_complete_coloring(std::size_t n, const Graph& kn, const EdgeColoring& f) {
  if (kn.edge_count() != n * (n - 1) / 2 || f.size() != kn.edge_count())
    throw InputError("coloring must cover the " + std::to_string(n * (n - 1) / 2) + " edges of K_" +
                     std::to_string(n));
  if (!f.is_total()) throw InputError("coloring of K_n must be total");
}

}  // namespace detail

/// `f` is indexed by the edge ids of complete_graph(n) (lexicographic pairs).
inline PaletteClasses palette_classes(std::size_t n, const EdgeColoring& f) {
  Graph kn = complete_graph(n);
  detail::require_complete_coloring(n, kn, f);
  PaletteClasses pc;
  pc.palette.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& p = pc.palette[v];
    for (const auto& inc : kn.incident(static_cast<Vertex>(v))) p.push_back(*f[inc.edge]);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  std::map<std::vector<Color>, std::size_t> index;
  pc.class_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = index.emplace(pc.palette[v], pc.classes.size());
    if (fresh) pc.classes.emplace_back();
    pc.classes[it->second].push_back(static_cast<Vertex>(v));
    pc.class_of[v] = it->second;
  }
  for (std::size_t i = 0; i < pc.classes.size(); ++i)
    if (pc.classes[i].size() > pc.classes[pc.largest].size()) pc.largest = i;
  return pc;
}

/// Machine-checkable form of the counting argument on the largest class A:
/// for each color c, the edges inside A satisfied with c (a matching), and an
/// edge inside A that none of them covers.
struct GuidedCertificate {
  std::vector<Vertex> class_a;
  std::map<Color, std::vector<EdgeId>> matchings;
  std::optional<EdgeId> uncovered;
};

struct UnsatisfiedSearch {
  std::optional<EdgeId> brute;
  std::optional<EdgeId> guided;
  bool agree = false;
  /// colors used <= theorem_bound(n) and |A| > bound + 1.
  bool guarantee_applies = false;
  std::size_t colors_used = 0;
  GuidedCertificate certificate;
};

/// Two independent searches for an edge of K_n not satisfied by f.
///
/// brute: checks every edge with satisfied_with.
/// guided: per-vertex color counts. Inside a palette class an edge uv can only
/// be satisfied by its own color f(uv), and only when it is the unique edge of
/// that color at both endpoints; classes are scanned largest first, then the
/// edges between classes.
inline UnsatisfiedSearch find_unsatisfied_edge(std::size_t n, const EdgeColoring& f) {
  Graph kn = complete_graph(n);
  detail::require_complete_coloring(n, kn, f);
  UnsatisfiedSearch out;
  out.colors_used = f.distinct_colors();

  for (std::size_t e = 0; e < kn.edge_count() && !out.brute; ++e)
    if (satisfied_with(kn, f, static_cast<EdgeId>(e)).empty()) out.brute = static_cast<EdgeId>(e);

  auto pc = palette_classes(n, f);
  std::vector<std::map<Color, std::size_t>> at(n);
  for (const auto& ed : kn.edges()) {
    Color c = *f[*kn.find_edge(ed.u, ed.v)];
    ++at[static_cast<std::size_t>(ed.u)][c];
    ++at[static_cast<std::size_t>(ed.v)][c];
  }
  auto count_at = [&](Vertex v, Color c) {
    const auto& m = at[static_cast<std::size_t>(v)];
    auto it = m.find(c);
    return it == m.end() ? std::size_t{0} : it->second;
  };
  auto intra_satisfied = [&](Vertex u, Vertex v, Color own) {
    return count_at(u, own) == 1 && count_at(v, own) == 1;
  };

  std::vector<std::size_t> order(pc.classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pc.classes[a].size() > pc.classes[b].size();
  });
  // Largest class is the first of maximum size, which stable_sort keeps first.
  auto& cert = out.certificate;
  cert.class_a = pc.largest_class();
  for (std::size_t ci : order) {
    const auto& cls = pc.classes[ci];
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        EdgeId e = *kn.find_edge(cls[i], cls[j]);
        Color own = *f[e];
        bool sat = intra_satisfied(cls[i], cls[j], own);
        if (ci == pc.largest && sat) cert.matchings[own].push_back(e);
        if (!sat && !out.guided) out.guided = e;
        if (!sat && ci == pc.largest && !cert.uncovered) cert.uncovered = e;
      }
  }
  if (!out.guided) {
    for (const auto& ed : kn.edges()) {
      if (pc.class_of[static_cast<std::size_t>(ed.u)] == pc.class_of[static_cast<std::size_t>(ed.v)])
        continue;
      EdgeId e = *kn.find_edge(ed.u, ed.v);
      Color own = *f[e];
      std::set<Color> candidates(pc.palette[static_cast<std::size_t>(ed.u)].begin(),
                                 pc.palette[static_cast<std::size_t>(ed.u)].end());
      candidates.insert(pc.palette[static_cast<std::size_t>(ed.v)].begin(),
                        pc.palette[static_cast<std::size_t>(ed.v)].end());
      bool sat = false;
      for (Color c : candidates) {
        std::size_t total = count_at(ed.u, c) + count_at(ed.v, c) - (own == c ? 1 : 0);
        if (total == 1) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        out.guided = e;
        break;
      }
    }
  }

  out.agree = out.brute.has_value() == out.guided.has_value();
  if (n >= 2) {
    long long x = theorem_bound(static_cast<long long>(n));
    out.guarantee_applies = x >= 1 && static_cast<long long>(out.colors_used) <= x &&
                            static_cast<long long>(cert.class_a.size()) > x + 1;
  }
  return out;
}

/// Rechecks a certificate with satisfied_with only: every listed edge lies in
/// A and is satisfied with its key color, each list is a matching, every
/// satisfied edge inside A is listed, and the uncovered edge is unsatisfied.
inline bool validate_certificate(std::size_t n, const EdgeColoring& f, const GuidedCertificate& cert,
                                 std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  Graph kn = complete_graph(n);
  detail::require_complete_coloring(n, kn, f);
  std::vector<char> in_a(n, 0);
  for (Vertex v : cert.class_a) in_a[static_cast<std::size_t>(v)] = 1;
  auto inside = [&](EdgeId e) {
    return in_a[static_cast<std::size_t>(kn.edge(e).u)] && in_a[static_cast<std::size_t>(kn.edge(e).v)];
  };
  std::set<EdgeId> listed;
  for (const auto& [c, edges] : cert.matchings) {
    std::set<Vertex> touched;
    for (EdgeId e : edges) {
      if (!inside(e)) return fail("listed edge " + std::to_string(e) + " leaves A");
      auto sat = satisfied_with(kn, f, e);
      if (!std::binary_search(sat.begin(), sat.end(), c))
        return fail("edge " + std::to_string(e) + " not satisfied with color " + std::to_string(c));
      if (!touched.insert(kn.edge(e).u).second || !touched.insert(kn.edge(e).v).second)
        return fail("color " + std::to_string(c) + " class is not a matching");
      listed.insert(e);
    }
  }
  for (std::size_t e = 0; e < kn.edge_count(); ++e) {
    auto id = static_cast<EdgeId>(e);
    if (inside(id) && !satisfied_with(kn, f, id).empty() && !listed.count(id))
      return fail("satisfied edge " + std::to_string(e) + " inside A is not covered");
  }
  if (cert.uncovered) {
    if (!inside(*cert.uncovered)) return fail("uncovered edge leaves A");
    if (!satisfied_with(kn, f, *cert.uncovered).empty()) return fail("uncovered edge is satisfied");
  }
  return true;
}

}  // namespace cfcolor
