#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfcolor/exact.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/line_cf.hpp"
#include "cfcolor/near_regular.hpp"
#include "cfcolor/verify.hpp"

namespace cfcolor {

using nlohmann::json;

enum class GraphFormat { edgelist, dot_subset };

inline Graph read_graph(std::istream& in, GraphFormat format,
                        DuplicatePolicy policy = DuplicatePolicy::strict) {
  return format == GraphFormat::edgelist ? read_edge_list(in, policy) : read_dot_subset(in, policy);
}

inline Graph read_graph_file(const std::string& path, GraphFormat format,
                             DuplicatePolicy policy = DuplicatePolicy::strict) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_graph(in, format, policy);
}

/// "id color" lines; '#' starts a comment line. Returns id -> color.
inline std::map<std::int64_t, Color> read_coloring_entries(std::istream& in) {
  std::map<std::int64_t, Color> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long id = -1, color = 0;
    std::string rest;
    if (!(ls >> id >> color) || (ls >> rest) || id < 0)
      throw InputError("coloring line " + std::to_string(lineno) + ": expected 'id color'");
    if (!out.emplace(id, color).second)
      throw InputError("coloring line " + std::to_string(lineno) + ": id " + std::to_string(id) +
                       " assigned twice");
  }
  return out;
}

inline VertexColoring read_vertex_coloring(std::istream& in, const Graph& g) {
  auto entries = read_coloring_entries(in);
  VertexColoring col;
  col.color.assign(g.vertex_count(), 0);
  for (const auto& [id, c] : entries) {
    if (!g.valid_vertex(static_cast<Vertex>(id)) || id >= static_cast<std::int64_t>(g.vertex_count()))
      throw InputError("coloring names vertex " + std::to_string(id) + " outside the graph");
    col.color[static_cast<std::size_t>(id)] = c;
  }
  if (entries.size() != g.vertex_count())
    throw InputError("vertex coloring is partial: " + std::to_string(entries.size()) + " of " +
                     std::to_string(g.vertex_count()) + " vertices colored");
  return col;
}

/// May be partial.
inline EdgeColoring read_edge_coloring(std::istream& in, const Graph& h) {
  auto entries = read_coloring_entries(in);
  EdgeColoring f(h.edge_count());
  for (const auto& [id, c] : entries) {
    if (id >= static_cast<std::int64_t>(h.edge_count()))
      throw InputError("coloring names edge " + std::to_string(id) + " outside the graph");
    f.set(static_cast<EdgeId>(id), c);
  }
  return f;
}

inline void write_vertex_coloring(std::ostream& out, const VertexColoring& col,
                                  const std::string& header = {}) {
  if (!header.empty()) out << "# " << header << '\n';
  for (std::size_t v = 0; v < col.size(); ++v) out << v << ' ' << col.color[v] << '\n';
}

inline void write_edge_coloring(std::ostream& out, const EdgeColoring& f,
                                const std::string& header = {}) {
  if (!header.empty()) out << "# " << header << '\n';
  for (std::size_t e = 0; e < f.size(); ++e)
    if (f[static_cast<EdgeId>(e)]) out << e << ' ' << *f[static_cast<EdgeId>(e)] << '\n';
}

inline json to_json(const VerificationReport& r) {
  json witnesses = json::object();
  for (const auto& [id, c] : r.witnesses) witnesses[std::to_string(id)] = c;
  return json{{"ok", r.ok}, {"violators", r.violators}, {"witnesses", witnesses}};
}

inline json to_json(const ExactResult& r) {
  return json{{"k", r.k},
              {"witness", r.witness},
              {"certified", r.certified},
              {"lower_bound", r.lower_bound},
              {"nodes_explored", r.nodes_explored}};
}

inline json to_json(const RoundLog& r) {
  json j{{"round", r.round},       {"delta", r.delta},         {"attempts", r.attempts},
         {"S", r.selected},        {"L", r.satisfied},         {"colors_used", r.colors_used},
         {"fallbacks", r.fallbacks}, {"delta_after", r.delta_after}, {"beta", r.beta}};
  if (r.base_case) j["base_case"] = true;
  return j;
}

/// Applies the keys present in `j` on top of `p`; unknown keys are errors.
inline LineCfParams line_cf_params_from_json(const json& j, LineCfParams p = {}) {
  for (const auto& [key, value] : j.items()) {
    if (key == "beta") p.beta = value.get<double>();
    else if (key == "heavy_fraction") p.heavy_fraction = value.get<double>();
    else if (key == "delta0") p.delta0 = value.get<std::size_t>();
    else if (key == "round_retry_cap") p.round_retry_cap = value.get<std::size_t>();
    else if (key == "rng_seed") p.rng_seed = value.get<std::uint64_t>();
    else if (key == "strict_paper_mode") p.strict_paper_mode = value.get<bool>();
    else throw InputError("unknown line-cf parameter '" + key + "'");
  }
  p.validate();
  return p;
}

/// {"preset": "scaled"|"paper", alpha, c_sel, c_lo, c_hi_num, c_col, caps:{...}}
inline NearRegularParams near_regular_params_from_json(const json& j) {
  double alpha = j.value("alpha", 1.0);
  std::string preset = j.value("preset", std::string("scaled"));
  NearRegularParams p;
  if (preset == "scaled") p = NearRegularParams::scaled(alpha);
  else if (preset == "paper") p = NearRegularParams::paper(alpha);
  else throw InputError("unknown near-regular preset '" + preset + "'");
  for (const auto& [key, value] : j.items()) {
    if (key == "preset" || key == "alpha") continue;
    if (key == "c_sel") p.c_sel = value.get<double>();
    else if (key == "c_lo") p.c_lo = value.get<double>();
    else if (key == "c_hi_num") p.c_hi_num = value.get<double>();
    else if (key == "c_col") p.c_col = value.get<double>();
    else if (key == "rng_seed") p.rng_seed = value.get<std::uint64_t>();
    else if (key == "caps") {
      for (const auto& [cap, v] : value.items()) {
        if (cap == "subset") p.subset_step_cap = v.get<std::size_t>();
        else if (cap == "color") p.color_step_cap = v.get<std::size_t>();
        else if (cap == "stage1_runs") p.stage1_runs = v.get<std::size_t>();
        else throw InputError("unknown near-regular cap '" + cap + "'");
      }
    } else {
      throw InputError("unknown near-regular parameter '" + key + "'");
    }
  }
  p.validate();
  return p;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace cfcolor
