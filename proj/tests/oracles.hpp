#pragma once

// Independent reference implementations used only by tests. They work on
// plain adjacency lists and BFS distances and share no code with the library
// beyond the Graph container.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "ucg/graph.hpp"

namespace oracle {

constexpr int kInf = INT_MAX / 4;

using Matrix = std::vector<std::vector<int>>;

inline Matrix bfs_all(const ucg::Graph& g) {
  const int n = g.n();
  Matrix d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kInf));
  for (int s = 0; s < n; ++s) {
    auto& row = d[static_cast<std::size_t>(s)];
    std::queue<int> q;
    row[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (g.has_edge(u, v) && row[static_cast<std::size_t>(v)] == kInf) {
          row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

using Set = std::vector<int>;

inline Set members(std::uint64_t mask, int n) {
  Set out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1U) out.push_back(v);
  return out;
}

inline bool in(const Set& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

/// d(S, p); infinite for empty S.
inline int dist(const Matrix& d, const Set& s, int p) {
  int best = kInf;
  for (int q : s) best = std::min(best, d[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)]);
  return best;
}

inline int dist(const Matrix& d, const Set& a, const Set& b) {
  int best = kInf;
  for (int p : b) best = std::min(best, dist(d, a, p));
  return best;
}

struct Cover {
  std::vector<Set> blocks;
  int iota = -1;
  Set q0, q1;
};

inline bool cond_A(const Matrix& d, int n, const Cover& c) {
  for (const Set& b : c.blocks) {
    bool ok = false;
    for (int p = 0; p < n && !ok; ++p) ok = !in(b, p) && dist(d, b, p) >= 2;
    if (!ok) return false;
  }
  return true;
}

inline bool cond_B(const Matrix& d, int n, const Cover& c) {
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    for (int p : c.blocks[i]) {
      bool ok = false;
      for (int q = 0; q < n && !ok; ++q) ok = !in(c.blocks[i], q) && d[p][q] >= 3;
      for (std::size_t j = 0; j < c.blocks.size() && !ok; ++j) ok = j != i && dist(d, c.blocks[j], p) >= 2;
      if (!ok) return false;
    }
  return true;
}

inline bool cond_Aprime(const Matrix& d, int n, const Cover& c) {
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    bool ok = false;
    for (int p = 0; p < n && !ok; ++p) ok = !in(c.blocks[i], p) && dist(d, c.blocks[i], p) >= 3;
    for (std::size_t j = 0; j < c.blocks.size() && !ok; ++j) ok = j != i && dist(d, c.blocks[i], c.blocks[j]) >= 2;
    if (!ok) return false;
  }
  return true;
}

inline bool cond_Bprime(const Matrix& d, int, const Cover& c) {
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    for (int p : c.blocks[i]) {
      bool ok = false;
      for (std::size_t j = 0; j < c.blocks.size() && !ok; ++j) ok = j != i && dist(d, c.blocks[j], p) >= 2;
      if (!ok) return false;
    }
  return true;
}

inline bool cond_Adp(const Matrix& d, int n, const Cover& c) {
  const std::size_t iota = static_cast<std::size_t>(c.iota);
  const Set* q[2] = {&c.q0, &c.q1};
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    if (i == iota) continue;
    const Set& pi = c.blocks[i];
    bool ok = false;
    for (int p = 0; p < n && !ok; ++p) ok = !in(pi, p) && dist(d, pi, p) >= 3;
    for (std::size_t j = 0; j < c.blocks.size() && !ok; ++j) ok = j != iota && dist(d, pi, c.blocks[j]) >= 2;
    for (int l = 0; l < 2 && !ok; ++l) ok = dist(d, pi, *q[l]) >= 2;
    if (!ok) return false;
  }
  for (int l = 0; l < 2; ++l) {
    bool ok = false;
    for (int p = 0; p < n && !ok; ++p) ok = !in(c.blocks[iota], p) && dist(d, *q[l], p) >= 3;
    for (std::size_t j = 0; j < c.blocks.size() && !ok; ++j) ok = j != iota && dist(d, *q[l], c.blocks[j]) >= 2;
    if (!ok) return false;
  }
  return true;
}

// The far witness p' of clauses 1(d) and 2(b) must also sit at distance >= 2
// from the block (resp. part) holding p; otherwise the y-vertex over that
// block gives a path of length 3 in the construction.
inline bool cond_Bdp(const Matrix& d, int, const Cover& c) {
  const std::size_t iota = static_cast<std::size_t>(c.iota);
  const Set* q[2] = {&c.q0, &c.q1};
  auto some_other = [&](int p) {
    for (std::size_t j = 0; j < c.blocks.size(); ++j)
      if (j != iota && dist(d, c.blocks[j], p) >= 2) return true;
    return false;
  };
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    if (i == iota) continue;
    for (int p : c.blocks[i]) {
      bool ok = some_other(p);
      ok = ok || (dist(d, c.q0, p) >= 2 && dist(d, c.q1, p) >= 2);
      for (int l = 0; l < 2 && !ok; ++l) ok = dist(d, *q[l], p) >= 3;
      for (int l = 0; l < 2 && !ok; ++l) {
        if (dist(d, *q[l], p) < 2) continue;
        for (int pp : *q[l]) ok = ok || (d[p][pp] >= 4 && dist(d, c.blocks[i], pp) >= 2);
      }
      if (!ok) return false;
    }
  }
  for (int l = 0; l < 2; ++l)
    for (int p : *q[l]) {
      bool ok = some_other(p);
      if (!ok && dist(d, *q[1 - l], p) >= 2)
        for (int pp : c.blocks[iota]) ok = ok || (!in(*q[l], pp) && d[p][pp] >= 4 && dist(d, *q[l], pp) >= 2);
      if (!ok) return false;
    }
  return true;
}

enum Cond : unsigned { A = 1, B = 2, Ap = 4, Bp = 8, Adp = 16, Bdp = 32 };

inline bool satisfies(const Matrix& d, int n, const Cover& c, unsigned conds) {
  if ((conds & A) && !cond_A(d, n, c)) return false;
  if ((conds & B) && !cond_B(d, n, c)) return false;
  if ((conds & Ap) && !cond_Aprime(d, n, c)) return false;
  if ((conds & Bp) && !cond_Bprime(d, n, c)) return false;
  if ((conds & Adp) && !cond_Adp(d, n, c)) return false;
  if ((conds & Bdp) && !cond_Bdp(d, n, c)) return false;
  return true;
}

/// Calls fn on every covering with exactly k (possibly overlapping, nonempty, distinct)
/// blocks; stops early when fn returns true. Each vertex picks a nonempty
/// membership pattern.
inline bool for_each_cover(int n, int k, const std::function<bool(const Cover&)>& fn) {
  const int patterns = (1 << k) - 1;
  std::vector<int> pick(static_cast<std::size_t>(n), 1);
  while (true) {
    Cover c;
    c.blocks.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < n; ++v)
      for (int b = 0; b < k; ++b)
        if (pick[static_cast<std::size_t>(v)] >> b & 1) c.blocks[static_cast<std::size_t>(b)].push_back(v);
    bool nonempty = true;
    for (const Set& b : c.blocks) nonempty = nonempty && !b.empty();
    // A covering is a set of blocks: no block may repeat.
    bool distinct = true;
    for (int b = 0; b < k && distinct; ++b)
      for (int e = b + 1; e < k && distinct; ++e) distinct = c.blocks[b] != c.blocks[e];
    if (nonempty && distinct && fn(c)) return true;
    int v = 0;
    while (v < n && pick[static_cast<std::size_t>(v)] == patterns) pick[static_cast<std::size_t>(v++)] = 1;
    if (v == n) return false;
    ++pick[static_cast<std::size_t>(v)];
  }
}

/// Calls fn on every refinement (iota, Q0, Q1) of c with Q0 nonempty and
/// Q0 u Q1 = P_iota; stops early when fn returns true.
inline bool for_each_refinement(const Cover& base, const std::function<bool(const Cover&)>& fn) {
  for (std::size_t iota = 0; iota < base.blocks.size(); ++iota) {
    const Set& b = base.blocks[iota];
    std::vector<int> pick(b.size(), 0);  // 0: Q0, 1: Q1, 2: both
    while (true) {
      Cover c = base;
      c.iota = static_cast<int>(iota);
      for (std::size_t t = 0; t < b.size(); ++t) {
        if (pick[t] != 1) c.q0.push_back(b[t]);
        if (pick[t] != 0) c.q1.push_back(b[t]);
      }
      if (!c.q0.empty() && fn(c)) return true;
      std::size_t t = 0;
      while (t < b.size() && pick[t] == 2) pick[t++] = 0;
      if (t == b.size()) break;
      ++pick[t];
    }
  }
  return false;
}

/// Does some covering with exactly k blocks (and some refinement, when A''
/// or B'' is asked for) satisfy `conds`?
inline bool exists_cover(const ucg::Graph& g, int k, unsigned conds) {
  const Matrix d = bfs_all(g);
  const int n = g.n();
  const bool refine = conds & (Adp | Bdp);
  return for_each_cover(n, k, [&](const Cover& c) {
    if (!refine) return satisfies(d, n, c, conds);
    if ((conds & A) && !cond_A(d, n, c)) return false;
    return for_each_refinement(c, [&](const Cover& rc) { return satisfies(d, n, rc, conds); });
  });
}

/// Smallest k in [1, n] with a covering of exactly k blocks satisfying conds.
inline std::optional<int> min_cover(const ucg::Graph& g, unsigned conds) {
  for (int k = 1; k <= g.n(); ++k)
    if (exists_cover(g, k, conds)) return k;
  return std::nullopt;
}

struct Profile {
  int radius = kInf;
  int diameter = kInf;
  std::vector<int> ecc;
};

inline Profile profile(const Matrix& d, int n) {
  Profile p;
  p.radius = kInf;
  p.diameter = 0;
  for (int v = 0; v < n; ++v) {
    int e = 0;
    for (int u = 0; u < n; ++u) e = std::max(e, d[v][u]);
    p.ecc.push_back(e);
    p.radius = std::min(p.radius, e);
    p.diameter = std::max(p.diameter, e);
  }
  return p;
}

/// Every radial path (a shortest path of length r starting at a central
/// vertex), as a vertex sequence.
inline std::vector<std::vector<int>> radial_paths(const ucg::Graph& g) {
  const Matrix d = bfs_all(g);
  const int n = g.n();
  const Profile pr = profile(d, n);
  std::vector<std::vector<int>> out;
  if (pr.radius >= kInf) return out;
  std::vector<int> path;
  std::function<void(int, int)> walk = [&](int start, int v) {
    path.push_back(v);
    const int len = static_cast<int>(path.size()) - 1;
    if (len == pr.radius) {
      out.push_back(path);
    } else {
      for (int w = 0; w < n; ++w)
        if (g.has_edge(v, w) && d[start][w] == len + 1) walk(start, w);
    }
    path.pop_back();
  };
  for (int c = 0; c < n; ++c)
    if (pr.ecc[c] == pr.radius) walk(c, c);
  return out;
}

}  // namespace oracle
