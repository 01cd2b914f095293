#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfcolor {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Malformed or out-of-contract input (bad edge list, bad coloring, bad ids).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An algorithm was handed a structurally unsuitable graph.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class DuplicatePolicy { strict, lenient };

/// Simple undirected graph with dense vertex ids [0, n) and dense edge ids
/// [0, m). Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edge ids follow input order after dropping duplicates/loops (lenient) or
  /// rejecting them (strict). Endpoints are stored with u < v.
  static Graph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                     DuplicatePolicy policy = DuplicatePolicy::strict) {
    Graph g;
    g.adj_.resize(n);
    std::vector<std::vector<Vertex>> seen(n);
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      auto [a, b] = edge_list[i];
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
        throw InputError("edge " + std::to_string(i) + " (" + std::to_string(a) + "," +
                         std::to_string(b) + ") references a vertex outside [0," +
                         std::to_string(n) + ")");
      }
      if (a == b) {
        if (policy == DuplicatePolicy::strict)
          throw InputError("self-loop at vertex " + std::to_string(a));
        continue;
      }
      if (a > b) std::swap(a, b);
      auto& s = seen[a];
      if (std::find(s.begin(), s.end(), b) != s.end()) {
        if (policy == DuplicatePolicy::strict)
          throw InputError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        continue;
      }
      s.push_back(b);
      g.add_edge(a, b);
    }
    return g;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  std::size_t degree(Vertex v) const { return incident(v).size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  /// 0 for the empty vertex set.
  std::size_t min_degree() const {
    if (adj_.empty()) return 0;
    std::size_t d = adj_.front().size();
    for (const auto& a : adj_) d = std::min(d, a.size());
    return d;
  }

  bool valid_vertex(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < adj_.size();
  }
  bool valid_edge(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < edges_.size();
  }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    const auto& la = incident(a);
    const auto& lb = incident(b);
    const auto& shorter = la.size() <= lb.size() ? la : lb;
    Vertex target = la.size() <= lb.size() ? b : a;
    for (const auto& inc : shorter)
      if (inc.neighbor == target) return inc.edge;
    return std::nullopt;
  }

  /// N[v], sorted ascending.
  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree(v) + 1);
    out.push_back(v);
    for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edges sharing an endpoint with e, plus e itself; sorted ascending.
  std::vector<EdgeId> closed_edge_neighborhood(EdgeId e) const {
    const Edge& ed = edge(e);
    std::vector<EdgeId> out;
    out.reserve(degree(ed.u) + degree(ed.v) - 1);
    out.push_back(e);
    for (const auto& inc : incident(ed.u))
      if (inc.edge != e) out.push_back(inc.edge);
    for (const auto& inc : incident(ed.v))
      if (inc.edge != e) out.push_back(inc.edge);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<Vertex, Vertex>> edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  void add_edge(Vertex a, Vertex b) {
    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, b});
    adj_[static_cast<std::size_t>(a)].push_back({b, id});
    adj_[static_cast<std::size_t>(b)].push_back({a, id});
  }

  std::vector<std::vector<Incidence>> adj_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                         DuplicatePolicy policy = DuplicatePolicy::strict) {
  return Graph::build(n, edge_list, policy);
}

/// Set of edge ids of a host graph, stored as a membership mask.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t host_edges) : mask_(host_edges, 0) {}

  void insert(EdgeId e) {
    auto& m = mask_.at(static_cast<std::size_t>(e));
    if (!m) {
      m = 1;
      ++size_;
    }
  }
  bool contains(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < mask_.size() &&
           mask_[static_cast<std::size_t>(e)];
  }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t host_size() const { return mask_.size(); }

  std::vector<EdgeId> members() const {
    std::vector<EdgeId> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(static_cast<EdgeId>(i));
    return out;
  }

  bool is_subset_of(const EdgeSubset& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.contains(static_cast<EdgeId>(i))) return false;
    return true;
  }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<char> mask_;
  std::size_t size_ = 0;
};

/// Line graph plus the map from source edge ids to line-graph vertex ids
/// (the identity, kept explicit so callers do not depend on that).
struct LineGraph {
  Graph graph;
  std::vector<Vertex> vertex_of_edge;
};

inline LineGraph line_graph(const Graph& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    const auto& inc = h.incident(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) pairs.emplace_back(inc[i].edge, inc[j].edge);
  }
  LineGraph out;
  // Two simple-graph edges share at most one endpoint, so no pair repeats.
  out.graph = Graph::build(h.edge_count(), pairs);
  out.vertex_of_edge.resize(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) out.vertex_of_edge[e] = static_cast<Vertex>(e);
  return out;
}

struct EdgeRemoval {
  Graph graph;
  /// old edge id -> new edge id, or -1 if removed.
  std::vector<EdgeId> new_id;
  /// new edge id -> old edge id.
  std::vector<EdgeId> old_id;
};

/// (V(h), E(h) \ removed). Surviving edges keep their relative order.
inline EdgeRemoval remove_edges(const Graph& h, const EdgeSubset& removed) {
  if (removed.host_size() != h.edge_count())
    throw InputError("edge subset was built for a graph with " +
                     std::to_string(removed.host_size()) + " edges, host has " +
                     std::to_string(h.edge_count()));
  EdgeRemoval out;
  out.new_id.assign(h.edge_count(), -1);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (removed.contains(static_cast<EdgeId>(e))) continue;
    out.new_id[e] = static_cast<EdgeId>(kept.size());
    out.old_id.push_back(static_cast<EdgeId>(e));
    kept.emplace_back(h.edges()[e].u, h.edges()[e].v);
  }
  out.graph = Graph::build(h.vertex_count(), kept);
  return out;
}

inline EdgeRemoval remove_edges(const Graph& h, const std::vector<EdgeId>& removed) {
  EdgeSubset s(h.edge_count());
  for (EdgeId e : removed) {
    if (!h.valid_edge(e)) throw InputError("invalid edge id " + std::to_string(e));
    s.insert(e);
  }
  return remove_edges(h, s);
}

/// Subgraph on all of h's vertices spanned by the given edges. The i-th edge
/// of the result is members[i].
inline Graph edge_induced(const Graph& h, const std::vector<EdgeId>& members) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(members.size());
  for (EdgeId e : members) pairs.emplace_back(h.edge(e).u, h.edge(e).v);
  return Graph::build(h.vertex_count(), pairs);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::build(n, pairs);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::build(n, pairs);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i)
    pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::build(n, pairs);
}

/// Center 0, leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 1; i <= leaves; ++i) pairs.emplace_back(0, static_cast<Vertex>(i));
  return Graph::build(leaves + 1, pairs);
}

/// Edge-list text: "u v" per line, '#' comments, optional "n <count>" header.
inline Graph read_edge_list(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::strict) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::optional<long long> declared_n;
  long long max_id = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "n") {
      long long count = -1;
      if (!(ls >> count) || count < 0)
        throw InputError("line " + std::to_string(lineno) + ": bad vertex-count header");
      if (declared_n || !pairs.empty())
        throw InputError("line " + std::to_string(lineno) + ": header must precede edges");
      declared_n = count;
      continue;
    }
    long long a = -1, b = -1;
    std::string rest;
    try {
      std::size_t pos = 0;
      a = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(lineno) + ": expected two vertex ids");
    }
    if (!(ls >> b) || (ls >> rest) || a < 0 || b < 0)
      throw InputError("line " + std::to_string(lineno) + ": expected two nonnegative vertex ids");
    max_id = std::max({max_id, a, b});
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  std::size_t n = declared_n ? static_cast<std::size_t>(*declared_n)
                             : static_cast<std::size_t>(max_id + 1);
  return Graph::build(n, pairs, policy);
}

/// The subset of DOT we accept: `graph [name] { a -- b [-- c ...]; n; }` with
/// integer node ids; attributes in brackets are skipped.
inline Graph read_dot_subset(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::strict) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto open = text.find('{');
  auto close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw InputError("dot input: missing { } body");
  if (text.substr(0, open).find("digraph") != std::string::npos)
    throw InputError("dot input: directed graphs are not supported");
  std::string body = text.substr(open + 1, close - open - 1);
  std::string cleaned;
  int bracket = 0;
  for (char c : body) {
    if (c == '[') ++bracket;
    if (bracket == 0) cleaned.push_back(c == ';' || c == '\n' ? ';' : c);
    if (c == ']') --bracket;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  long long max_id = -1;
  std::istringstream stmts(cleaned);
  std::string stmt;
  while (std::getline(stmts, stmt, ';')) {
    std::vector<long long> chain;
    std::size_t pos = 0;
    while (true) {
      auto start = stmt.find_first_not_of(" \t\r", pos);
      if (start == std::string::npos) break;
      auto end = stmt.find("--", start);
      std::string tok = stmt.substr(start, end == std::string::npos ? std::string::npos : end - start);
      tok.erase(tok.find_last_not_of(" \t\r") + 1);
      try {
        std::size_t used = 0;
        long long id = std::stoll(tok, &used);
        if (used != tok.size() || id < 0) throw std::invalid_argument(tok);
        chain.push_back(id);
      } catch (const std::exception&) {
        throw InputError("dot input: unsupported statement '" + stmt + "'");
      }
      if (end == std::string::npos) break;
      pos = end + 2;
    }
    for (long long id : chain) max_id = std::max(max_id, id);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      pairs.emplace_back(static_cast<Vertex>(chain[i]), static_cast<Vertex>(chain[i + 1]));
  }
  return Graph::build(static_cast<std::size_t>(max_id + 1), pairs, policy);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace cfcolor
