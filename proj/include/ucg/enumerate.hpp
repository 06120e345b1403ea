#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

/// Calls `fn` on every labeled graph with vertex set {0..n-1}.
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n > 8) throw Error(ErrorCode::BoundExceeded, "labeled enumeration is limited to n <= 8");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint64_t total = 1ULL << pairs.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (m >> e & 1ULL) {
        auto [a, b] = pairs[e];
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
      }
    fn(Graph(n, std::move(adj)));
  }
}

/// Upper-triangle bit code of g under the vertex order `perm` (perm[pos] = vertex).
inline std::uint64_t triangle_code(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < perm.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1U : 0U);
  return code;
}

/// Canonical form for n <= 11: the least triangle code over all vertex
/// orders that list color-refinement cells in their invariant order.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  if (n > 11) throw Error(ErrorCode::BoundExceeded, "canonical codes are limited to n <= 11");
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(color[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      next[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }

  std::vector<std::vector<int>> cells;
  {
    const int ncolors = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    cells.resize(static_cast<std::size_t>(ncolors));
    for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  }
  std::uint64_t best = ~0ULL;
  std::vector<int> perm;
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, triangle_code(g, perm));
      return;
    }
    std::vector<int> order = cells[cell];
    do {
      perm.insert(perm.end(), order.begin(), order.end());
      self(self, cell + 1);
      perm.resize(perm.size() - order.size());
    } while (std::next_permutation(order.begin(), order.end()));
  };
  rec(rec, 0);
  return best;
}

/// One representative of every isomorphism class on exactly n vertices,
/// grown by adding a vertex to each class on n-1 vertices in every way.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n > 9) throw Error(ErrorCode::BoundExceeded, "isomorphism-free enumeration is limited to n <= 9");
  std::vector<Graph> level = {Graph()};
  for (int size = 1; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (std::uint64_t mask = 0; mask < (1ULL << g.n()); ++mask) {
        std::vector<VertexSet> adj = g.adjacency();
        adj.emplace_back(mask);
        for (int v : VertexSet(mask)) adj[static_cast<std::size_t>(v)].insert(size - 1);
        Graph h(size, std::move(adj));
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace ucg
