#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfcolor/graph.hpp"
#include "cfcolor/random.hpp"

namespace cfcolor {

/// Erdős–Rényi G(n, p): one coin per pair, pairs in lexicographic order.
inline Graph gnp(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::build(n, pairs);
}

/// Uniform-ish random d-regular graph. Pairing model where each pair of points
/// is drawn among the remaining ones and rejected individually if it would
/// create a loop or a parallel edge; the whole pairing restarts if it gets
/// stuck.
inline Graph random_regular(std::size_t n, std::size_t d, Rng& rng, std::size_t max_restarts = 200) {
  if (d >= n && !(n == 0 && d == 0)) throw InputError("regular graph needs d < n");
  if ((n * d) % 2 != 0) throw InputError("n*d must be even for a d-regular graph");
  for (std::size_t restart = 0; restart < max_restarts; ++restart) {
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < d; ++k) points.push_back(static_cast<Vertex>(v));
    std::set<std::pair<Vertex, Vertex>> present;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 200 && !placed; ++tries) {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        Vertex a = points[i], b = points[j];
        if (i == j || a == b) continue;
        auto key = std::minmax(a, b);
        if (present.count(key)) continue;
        present.insert(key);
        pairs.emplace_back(key.first, key.second);
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        placed = true;
      }
      if (!placed) stuck = true;
    }
    if (!stuck) return Graph::build(n, pairs);
  }
  throw std::runtime_error("random_regular: pairing kept getting stuck");
}

/// Random graph whose components are trees or unicyclic, on up to max_n
/// vertices (at least 1). Some vertices stay isolated.
inline Graph random_pseudoforest(std::size_t max_n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(1, max_n));
  const std::size_t n = size_dist(rng);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::bernoulli_distribution coin(0.5);
  std::size_t pos = 0;
  while (pos < n) {
    std::uniform_int_distribution<std::size_t> chunk_dist(1, std::min<std::size_t>(n - pos, 20));
    std::size_t len = chunk_dist(rng);
    std::vector<Vertex> comp(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                             perm.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    std::set<std::pair<Vertex, Vertex>> present;
    for (std::size_t i = 1; i < comp.size(); ++i) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      auto key = std::minmax(comp[i], comp[parent(rng)]);
      present.insert(key);
      pairs.emplace_back(key.first, key.second);
    }
    if (comp.size() >= 3 && coin(rng)) {
      std::vector<std::pair<Vertex, Vertex>> missing;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j) {
          auto key = std::minmax(comp[i], comp[j]);
          if (!present.count(key)) missing.push_back(key);
        }
      if (!missing.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
        pairs.push_back(missing[pick(rng)]);
      }
    }
  }
  return Graph::build(n, pairs);
}

}  // namespace cfcolor
