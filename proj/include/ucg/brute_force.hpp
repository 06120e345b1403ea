#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

struct OracleResult {
  bool found = false;
  int t = -1;      // minimal accepting number of added vertices
  int t_max = 0;
  std::uint64_t graphs_checked = 0;
  std::optional<Graph> witness;  // vertices ordered C, P, added
};

/// Free pairs when t vertices are added: C-P, and every pair touching W.
constexpr int oracle_free_pairs(int nc, int np, int t) { return nc * np + t * (nc + np) + t * (t - 1) / 2; }

namespace detail {

/// Is `adj` (n vertices) a UCG whose center is exactly `cmask` and whose
/// centered periphery is exactly `pmask`?
class OracleCheck {
 public:
  OracleCheck(int n, std::uint64_t cmask, std::uint64_t pmask)
      : n_(n), all_(n >= 64 ? ~0ULL : ((1ULL << n) - 1)), cmask_(cmask), pmask_(pmask) {}

  bool operator()(const std::uint64_t* adj) const {
    int e = -1;
    for (std::uint64_t cs = cmask_; cs; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      std::uint64_t seen = 1ULL << c;
      std::uint64_t frontier = seen;
      int depth = 0;
      std::uint64_t last = frontier;
      while (seen != all_) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~seen;
        if (!next) return false;  // disconnected
        seen |= next;
        frontier = last = next;
        ++depth;
        if (e >= 0 && depth > e) return false;
      }
      if (e < 0) e = depth;
      if (depth != e || last != pmask_) return false;
    }
    // Everything outside C must have eccentricity above e.
    for (std::uint64_t rest = all_ & ~cmask_; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      std::uint64_t seen = 1ULL << v;
      std::uint64_t frontier = seen;
      for (int depth = 0; depth < e && frontier; ++depth) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen == all_) return false;
    }
    return true;
  }

 private:
  int n_;
  std::uint64_t all_;
  std::uint64_t cmask_;
  std::uint64_t pmask_;
};

}  // namespace detail

/// Exhaustive search for the least t <= t_max such that some graph on
/// C ∪ P ∪ {w_1..w_t}, with C and P induced as given, is a UCG with center
/// V(C) and centered periphery V(P). Added vertices are interchangeable, so
/// only graphs whose W-to-(C ∪ P) masks are nondecreasing are visited.
inline OracleResult brute_force_appendage(const Graph& c, const Graph& p, int t_max, int free_pair_bound = 24) {
  const int nc = c.n();
  const int np = p.n();
  const int base = nc + np;
  if (nc == 0) throw Error(ErrorCode::PreconditionViolated, "the center graph must have a vertex");
  OracleResult out;
  out.t_max = t_max;
  for (int t = 0; t <= t_max; ++t) {
    const int f = oracle_free_pairs(nc, np, t);
    if (f > free_pair_bound || base + t > kMaxVertices)
      throw Error(ErrorCode::BoundExceeded, "oracle at t = " + std::to_string(t) + " needs " + std::to_string(f) +
                                                " free pairs; bound is " + std::to_string(free_pair_bound));
    const int n = base + t;
    const std::uint64_t cmask = (1ULL << nc) - 1;
    const std::uint64_t pmask = ((1ULL << base) - 1) & ~cmask;
    const detail::OracleCheck check(n, cmask, pmask);

    std::array<std::uint64_t, kMaxVertices> fixed{};
    for (auto [u, v] : c.edges()) fixed[static_cast<std::size_t>(u)] |= 1ULL << v, fixed[static_cast<std::size_t>(v)] |= 1ULL << u;
    for (auto [u, v] : p.edges())
      fixed[static_cast<std::size_t>(nc + u)] |= 1ULL << (nc + v), fixed[static_cast<std::size_t>(nc + v)] |= 1ULL << (nc + u);

    std::vector<std::pair<int, int>> ww;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b) ww.emplace_back(base + a, base + b);

    std::array<std::uint64_t, kMaxVertices> adj{};
    const std::uint64_t wlimit = 1ULL << base;
    bool hit = false;

    auto test_ww = [&](const std::array<std::uint64_t, kMaxVertices>& partial) {
      const std::uint64_t combos = 1ULL << ww.size();
      for (std::uint64_t m = 0; m < combos; ++m) {
        adj = partial;
        for (std::size_t e = 0; e < ww.size(); ++e)
          if (m >> e & 1ULL) {
            auto [a, b] = ww[e];
            adj[static_cast<std::size_t>(a)] |= 1ULL << b;
            adj[static_cast<std::size_t>(b)] |= 1ULL << a;
          }
        ++out.graphs_checked;
        if (check(adj.data())) return true;
      }
      return false;
    };

    auto choose_w = [&](auto&& self, int w, std::uint64_t lo, std::array<std::uint64_t, kMaxVertices> partial) -> bool {
      if (w == t) return test_ww(partial);
      for (std::uint64_t m = lo; m < wlimit; ++m) {
        auto next = partial;
        next[static_cast<std::size_t>(base + w)] = m;
        for (std::uint64_t s = m; s; s &= s - 1) next[static_cast<std::size_t>(std::countr_zero(s))] |= 1ULL << (base + w);
        if (self(self, w + 1, m, next)) return true;
      }
      return false;
    };

    const int cp_bits = nc * np;
    for (std::uint64_t cp = 0; cp < (1ULL << cp_bits) && !hit; ++cp) {
      auto partial = fixed;
      for (int bit = 0; bit < cp_bits; ++bit)
        if (cp >> bit & 1ULL) {
          const int u = bit / np;
          const int v = nc + bit % np;
          partial[static_cast<std::size_t>(u)] |= 1ULL << v;
          partial[static_cast<std::size_t>(v)] |= 1ULL << u;
        }
      hit = choose_w(choose_w, 0, 0, partial);
    }
    if (hit) {
      std::vector<VertexSet> rows(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = VertexSet(adj[static_cast<std::size_t>(v)]);
      out.found = true;
      out.t = t;
      out.witness = Graph(n, std::move(rows));
      return out;
    }
  }
  return out;
}

}  // namespace ucg
