#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ucg/analysis.hpp"
#include "ucg/covering.hpp"
#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

/// Limits for the exhaustive covering decisions.
struct SearchBounds {
  int max_n_k2 = 14;
  int max_n_k3 = 10;
  std::uint64_t work_limit = 50'000'000;

  int max_n(int k) const { return k <= 2 ? max_n_k2 : max_n_k3; }

  /// Defaults, with UCG_BOUND=N replacing both vertex-count limits.
  static SearchBounds defaults() {
    SearchBounds b;
    if (const char* env = std::getenv("UCG_BOUND")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v <= kMaxVertices) b.max_n_k2 = b.max_n_k3 = static_cast<int>(v);
    }
    return b;
  }
};

enum class CovKind { Exact, Infeasible, Unknown, Exhausted };

/// Outcome of a minimum-covering computation or of a single size-k decision.
///
/// Exact: value is the minimum (or, for a decision, the size that was found).
/// Exhausted: a decision proved no covering of size `value` exists.
/// Unknown: the minimum is at least `lower`; `bound` names the limit hit.
struct CovSizeResult {
  CondSet which;
  CovKind kind = CovKind::Unknown;
  int value = 0;
  int lower = 0;
  int bound = 0;
  std::string method;
  std::optional<Covering> witness;
  std::optional<RefinedCovering> refined;

  bool exact() const { return kind == CovKind::Exact; }
  bool is(int k) const { return kind == CovKind::Exact && value == k; }

  std::string describe() const {
    switch (kind) {
      case CovKind::Exact: return std::to_string(value);
      case CovKind::Infeasible: return "infeasible";
      case CovKind::Exhausted: return "none of size " + std::to_string(value);
      case CovKind::Unknown:
        return (lower == 3 ? std::string("!=2") : ">=" + std::to_string(lower)) + " (unknown, bound " +
               std::to_string(bound) + ")";
    }
    return "?";
  }
};

// ---------------------------------------------------------------------------
// Set cover

/// Exact minimum set cover by branch and bound. Returns indices into `sets`,
/// or nullopt when some element of `universe` is in no set.
inline std::optional<std::vector<int>> min_set_cover(VertexSet universe, const std::vector<VertexSet>& sets) {
  VertexSet reach;
  for (VertexSet s : sets) reach |= s & universe;
  if (!reach.subset_of(universe) || reach != universe) return std::nullopt;
  if (universe.empty()) return std::vector<int>{};

  // Drop candidates contained in another (ties keep the lower index).
  std::vector<int> live;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    const VertexSet si = sets[static_cast<std::size_t>(i)] & universe;
    if (si.empty()) continue;
    bool dominated = false;
    for (int j = 0; j < static_cast<int>(sets.size()) && !dominated; ++j) {
      if (j == i) continue;
      const VertexSet sj = sets[static_cast<std::size_t>(j)] & universe;
      dominated = si.subset_of(sj) && (si != sj || j < i);
    }
    if (!dominated) live.push_back(i);
  }

  std::vector<int> best;
  {
    VertexSet left = universe;  // greedy upper bound
    while (!left.empty()) {
      int pick = -1;
      int gain = 0;
      for (int i : live) {
        const int g = (sets[static_cast<std::size_t>(i)] & left).size();
        if (g > gain) gain = g, pick = i;
      }
      best.push_back(pick);
      left -= sets[static_cast<std::size_t>(pick)];
    }
  }

  std::vector<int> cur;
  auto rec = [&](auto&& self, VertexSet left) -> void {
    if (left.empty()) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    int max_gain = 0;
    for (int i : live) max_gain = std::max(max_gain, (sets[static_cast<std::size_t>(i)] & left).size());
    const std::size_t need = static_cast<std::size_t>((left.size() + max_gain - 1) / max_gain);
    if (cur.size() + need >= best.size()) return;

    int pivot = -1;
    int fewest = 1 << 30;
    for (int e : left) {
      int cnt = 0;
      for (int i : live) cnt += sets[static_cast<std::size_t>(i)].contains(e);
      if (cnt < fewest) fewest = cnt, pivot = e;
    }
    std::vector<int> options;
    for (int i : live)
      if (sets[static_cast<std::size_t>(i)].contains(pivot)) options.push_back(i);
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return (sets[static_cast<std::size_t>(a)] & left).size() > (sets[static_cast<std::size_t>(b)] & left).size();
    });
    for (int i : options) {
      cur.push_back(i);
      self(self, left - sets[static_cast<std::size_t>(i)]);
      cur.pop_back();
    }
  };
  rec(rec, universe);
  std::sort(best.begin(), best.end());
  return best;
}

/// Minimum size of a condition-A covering, via set cover over V \ N[v].
/// The witness is a partition: each vertex goes to the first chosen set
/// containing it.
inline CovSizeResult cov_A(const Graph& p) {
  CovSizeResult r;
  r.which = CondSet{Condition::A};
  r.method = "set-cover";
  const Distances& d = p.distances();
  std::vector<VertexSet> cands;
  for (int v = 0; v < p.n(); ++v) cands.push_back(p.vertices() - d.ball(v, 1));
  auto chosen = p.n() == 0 ? std::nullopt : min_set_cover(p.vertices(), cands);
  if (!chosen) {
    r.kind = CovKind::Infeasible;
    return r;
  }
  std::vector<VertexSet> blocks;
  VertexSet taken;
  for (int i : *chosen) {
    const VertexSet b = cands[static_cast<std::size_t>(i)] - taken;
    taken |= b;
    if (!b.empty()) blocks.push_back(b);
  }
  r.kind = CovKind::Exact;
  r.value = static_cast<int>(blocks.size());
  r.witness = Covering(p, std::move(blocks));
  if (!check_A(*r.witness).pass()) throw Error(ErrorCode::InternalAssertion, "set-cover witness fails condition A");
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive decision for a fixed number of blocks

namespace detail {

class KSearch {
 public:
  KSearch(const Graph& g, int k, CondSet conds, std::uint64_t work_limit)
      : g_(g), d_(g.distances()), all_(g.vertices()), n_(g.n()), k_(k), conds_(conds),
        refine_(conds.needs_refinement()), prune_A_(conds.implies_A()), limit_(work_limit),
        blocks_(static_cast<std::size_t>(k)), near_(static_cast<std::size_t>(k)) {}

  std::uint64_t work() const { return work_; }
  const std::vector<VertexSet>& blocks() const { return found_blocks_; }
  VertexSet q0() const { return found_q0_; }
  VertexSet q1() const { return found_q1_; }

  /// Searches partitions into exactly k blocks (refined: P_iota plus k-1 others).
  bool partitions() {
    reset();
    if (refine_) part_refined(0);
    else part_plain(0);
    return found_;
  }

  /// Searches arbitrary coverings (blocks may overlap).
  bool general() {
    reset();
    if (refine_) gen_refined(0);
    else gen_plain(0);
    return found_;
  }

 private:
  void reset() {
    found_ = false;
    used_ = 0;
    std::fill(blocks_.begin(), blocks_.end(), VertexSet{});
    std::fill(near_.begin(), near_.end(), VertexSet{});
  }

  void tick() {
    if (++work_ > limit_)
      throw Error(ErrorCode::BoundExceeded, "covering search exceeded its work budget of " + std::to_string(limit_));
  }

  bool a_ok(int b, int v) const { return !prune_A_ || (near_[static_cast<std::size_t>(b)] | d_.ball(v, 1)) != all_; }

  void add(int b, int v) {
    blocks_[static_cast<std::size_t>(b)].insert(v);
    near_[static_cast<std::size_t>(b)] |= d_.ball(v, 1);
  }
  void remove(int b, int v) {
    auto& blk = blocks_[static_cast<std::size_t>(b)];
    blk.erase(v);
    near_[static_cast<std::size_t>(b)] = d_.ball(blk, 1);
  }

  void accept(VertexSet q0 = {}, VertexSet q1 = {}) {
    found_ = true;
    found_blocks_ = blocks_;
    found_q0_ = q0;
    found_q1_ = q1;
  }

  void part_plain(int v) {
    tick();
    if (v == n_) {
      if (used_ == k_ && distinct_blocks() && satisfies(d_, all_, blocks_, conds_)) accept();
      return;
    }
    if (n_ - v < k_ - used_) return;
    const int limit = std::min(used_ + 1, k_);
    for (int b = 0; b < limit && !found_; ++b) {
      if (!a_ok(b, v)) continue;
      const bool opening = b == used_;
      add(b, v);
      used_ += opening;
      part_plain(v + 1);
      used_ -= opening;
      remove(b, v);
    }
  }

  // Block 0 is P_iota; blocks 1..k-1 are opened in order.
  void part_refined(int v) {
    tick();
    if (v == n_) {
      if (used_ == k_ - 1 && !blocks_[0].empty()) label_blocks();
      return;
    }
    if (n_ - v < (k_ - 1 - used_) + (blocks_[0].empty() ? 1 : 0)) return;
    if (a_ok(0, v)) {
      add(0, v);
      part_refined(v + 1);
      remove(0, v);
    }
    const int limit = std::min(used_ + 2, k_);
    for (int b = 1; b < limit && !found_; ++b) {
      if (!a_ok(b, v)) continue;
      const bool opening = b == used_ + 1;
      add(b, v);
      used_ += opening;
      part_refined(v + 1);
      used_ -= opening;
      remove(b, v);
    }
  }

  // Chooses (Q0, Q1) for the fixed blocks. A vertex of P_iota that every
  // other block touches can only meet B''-2 through clause (b), which forces
  // it and its P_iota-neighbours into the same part, exclusively.
  void label_blocks() {
    if (conds_.has(Condition::A) && !eval_A(d_, all_, blocks_, kStopAtFirst)) return;
    const VertexSet s = blocks_[0];
    std::vector<int> group(static_cast<std::size_t>(n_), -1);
    std::vector<VertexSet> units;
    std::vector<bool> forced;

    if (conds_.has(Condition::Bdp)) {
      std::vector<int> parent(static_cast<std::size_t>(n_));
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
      };
      VertexSet boundary;
      for (int p : s) {
        const VertexSet n1 = d_.ball(p, 1);
        bool free_side = false;
        for (int j = 1; j < k_ && !free_side; ++j) free_side = !n1.intersects(blocks_[static_cast<std::size_t>(j)]);
        if (free_side) continue;
        if ((s - d_.ball(p, 3)).empty()) return;
        boundary.insert(p);
        for (int q : g_.neighbors(p) & s) parent[static_cast<std::size_t>(find(q))] = find(p);
      }
      for (int p : s) {
        const int root = find(p);
        if (group[static_cast<std::size_t>(root)] < 0) {
          group[static_cast<std::size_t>(root)] = static_cast<int>(units.size());
          units.emplace_back();
          forced.push_back(false);
        }
        const auto u = static_cast<std::size_t>(group[static_cast<std::size_t>(root)]);
        units[u].insert(p);
        if (boundary.contains(p)) forced[u] = true;
      }
    } else {
      for (int p : s) {
        units.push_back(VertexSet::singleton(p));
        forced.push_back(false);
      }
    }

    // Options per unit: 0 = Q0 only, 1 = Q1 only, 2 = both. The unit holding
    // the smallest vertex never takes Q1 only, since swapping the parts maps
    // such a labelling to one that does not.
    VertexSet q[2];
    auto rec = [&](auto&& self, std::size_t u) -> void {
      tick();
      if (u == units.size()) {
        if (!q[0].empty() && satisfies(d_, all_, blocks_, conds_, 0, q[0], q[1])) accept(q[0], q[1]);
        return;
      }
      const int options = forced[u] ? 2 : 3;
      for (int o = 0; o < options && !found_; ++o) {
        if (u == 0 && o == 1) continue;
        if (o != 1) q[0] |= units[u];
        if (o != 0) q[1] |= units[u];
        self(self, u + 1);
        if (o != 1) q[0] -= units[u];
        if (o != 0) q[1] -= units[u];
      }
    };
    rec(rec, 0);
  }

  // A covering is a set: overlapping searches must not repeat a block.
  bool distinct_blocks() const {
    for (std::size_t a = 0; a < blocks_.size(); ++a)
      for (std::size_t b = a + 1; b < blocks_.size(); ++b)
        if (blocks_[a] == blocks_[b]) return false;
    return true;
  }

  void gen_plain(int v) {
    tick();
    if (v == n_) {
      if (used_ == k_ && distinct_blocks() && satisfies(d_, all_, blocks_, conds_)) accept();
      return;
    }
    for (unsigned mask = 1; mask < (1U << k_) && !found_; ++mask) {
      const unsigned fresh = mask >> used_;
      if ((fresh & (fresh + 1)) != 0) continue;  // new blocks must open in order
      bool ok = true;
      for (int b = 0; b < k_ && ok; ++b)
        if (mask >> b & 1U) ok = a_ok(b, v);
      if (!ok) continue;
      const int opened = std::popcount(fresh);
      for (int b = 0; b < k_; ++b)
        if (mask >> b & 1U) add(b, v);
      used_ += opened;
      gen_plain(v + 1);
      used_ -= opened;
      for (int b = 0; b < k_; ++b)
        if (mask >> b & 1U) remove(b, v);
    }
  }

  void gen_refined(int v) {
    tick();
    if (v == n_) {
      if (used_ == k_ - 1 && !gq_[0].empty() && !blocks_[0].empty() && distinct_blocks() &&
          satisfies(d_, all_, blocks_, conds_, 0, gq_[0], gq_[1]))
        accept(gq_[0], gq_[1]);
      return;
    }
    const int others = k_ - 1;
    for (unsigned mask = 0; mask < (1U << others) && !found_; ++mask) {
      const unsigned fresh = mask >> used_;
      if ((fresh & (fresh + 1)) != 0) continue;
      for (int status = 0; status < 4 && !found_; ++status) {
        if (mask == 0 && status == 0) continue;
        bool ok = status == 0 || a_ok(0, v);
        for (int b = 0; b < others && ok; ++b)
          if (mask >> b & 1U) ok = a_ok(b + 1, v);
        if (!ok) continue;
        const int opened = std::popcount(fresh);
        for (int b = 0; b < others; ++b)
          if (mask >> b & 1U) add(b + 1, v);
        if (status != 0) add(0, v);
        if (status & 1) gq_[0].insert(v);
        if (status & 2) gq_[1].insert(v);
        used_ += opened;
        gen_refined(v + 1);
        used_ -= opened;
        gq_[0].erase(v);
        gq_[1].erase(v);
        if (status != 0) remove(0, v);
        for (int b = 0; b < others; ++b)
          if (mask >> b & 1U) remove(b + 1, v);
      }
    }
  }

  const Graph& g_;
  const Distances& d_;
  VertexSet all_;
  int n_;
  int k_;
  CondSet conds_;
  bool refine_;
  bool prune_A_;
  std::uint64_t limit_;
  std::uint64_t work_ = 0;

  std::vector<VertexSet> blocks_;
  std::vector<VertexSet> near_;
  VertexSet gq_[2];
  int used_ = 0;
  bool found_ = false;
  std::vector<VertexSet> found_blocks_;
  VertexSet found_q0_;
  VertexSet found_q1_;
};

}  // namespace detail

/// Decides whether `p` has a covering with exactly k blocks satisfying
/// `conds`. When the set names A'' or B'' the search ranges over refined
/// coverings (block 0 of the witness is P_iota).
///
/// All listed conditions survive shrinking a block, so when no condition-A
/// covering with fewer than k blocks exists every block of a valid covering
/// has a private vertex and can be cut down to it: partitions then suffice.
/// Otherwise an unrestricted search runs under the work budget.
inline CovSizeResult decide_cover_k(const Graph& p, int k, CondSet conds,
                                    const SearchBounds& bounds = SearchBounds::defaults()) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  if (conds.empty()) throw Error(ErrorCode::PreconditionViolated, "empty condition set");
  if (p.n() > bounds.max_n(k))
    throw Error(ErrorCode::BoundExceeded, "n = " + std::to_string(p.n()) + " exceeds the k = " + std::to_string(k) +
                                              " search bound " + std::to_string(bounds.max_n(k)));
  CovSizeResult r;
  r.which = conds;
  r.value = k;
  r.kind = CovKind::Exhausted;
  r.method = "decide-k";
  if (p.n() < 31 && k > (1 << p.n()) - 1) return r;  // not enough distinct blocks
  if (k > 20) throw Error(ErrorCode::BoundExceeded, "k = " + std::to_string(k) + " exceeds the block search bound 20");

  auto finish = [&](const detail::KSearch& s) {
    r.kind = CovKind::Exact;
    r.witness = Covering(p, s.blocks());
    if (conds.needs_refinement()) r.refined = RefinedCovering(*r.witness, 0, s.q0(), s.q1());
    return r;
  };

  detail::KSearch search(p, k, conds, bounds.work_limit);
  if (search.partitions()) return finish(search);

  // Is there a condition-A covering with fewer blocks? If so the partition
  // search above is not exhaustive.
  bool smaller = false;
  for (int m = 2; m < k && !smaller; ++m) {
    detail::KSearch probe(p, m, CondSet{Condition::A}, bounds.work_limit);
    smaller = probe.partitions();
  }
  if (!smaller) return r;

  r.method = "decide-k-general";
  detail::KSearch wide(p, k, conds, bounds.work_limit);
  if (wide.general()) return finish(wide);
  return r;
}

// ---------------------------------------------------------------------------
// Structural shortcuts

/// Three vertices (repeats allowed) whose closed 2-balls share no vertex.
inline std::optional<std::array<int, 3>> two_ball_triple_check(const Graph& p) {
  const Distances& d = p.distances();
  for (int a = 0; a < p.n(); ++a)
    for (int b = a; b < p.n(); ++b) {
      const VertexSet ab = d.ball(a, 2) & d.ball(b, 2);
      if (ab.empty()) return std::array<int, 3>{a, b, b};
      for (int c = b; c < p.n(); ++c)
        if (!ab.intersects(d.ball(c, 2))) return std::array<int, 3>{a, b, c};
    }
  return std::nullopt;
}

/// Two-block A/B covering for diam >= 4 and r >= 3, grown from N[x] and N[y]
/// with d(x, y) = 4 (or infinite when no pair is at distance 4).
inline Covering construct_AB_bipartition(const Graph& p) {
  const MetricProfile prof = metric_profile(p);
  if (p.n() == 0 || prof.diameter < 4 || prof.radius < 3)
    throw Error(ErrorCode::PreconditionViolated, "bipartition needs diam >= 4 and r >= 3");
  const Distances& d = p.distances();
  int x = -1;
  int y = -1;
  for (ExtDist want : {ExtDist(4), ExtDist::infinity()}) {
    for (int a = 0; a < p.n() && x < 0; ++a)
      for (int b = a + 1; b < p.n() && x < 0; ++b)
        if (d(a, b) == want) x = a, y = b;
    if (x >= 0) break;
  }
  if (x < 0) throw Error(ErrorCode::InternalAssertion, "no vertex pair at distance 4 or infinity");

  VertexSet p1 = d.ball(x, 1);
  VertexSet p2 = d.ball(y, 1);
  auto far_from = [&](int z, VertexSet s) {
    for (int q : s)
      if (d(z, q) >= 3) return true;
    return false;
  };
  while (!(p.vertices() - (p1 | p2)).empty()) {
    const int z = (p.vertices() - (p1 | p2)).front();
    if (far_from(z, p2)) {
      p1.insert(z);
    } else if (far_from(z, p1)) {
      p2.insert(z);
    } else {
      int partner = -1;
      for (int q : p.vertices() - (p1 | p2))
        if (d(z, q) >= 3) {
          partner = q;
          break;
        }
      if (partner < 0) throw Error(ErrorCode::InternalAssertion, "bipartition: no far partner for a straggler");
      p1.insert(z);
      p2.insert(partner);
    }
  }
  Covering c(p, {p1, p2});
  if (!check_A(c).pass() || !check_B(c).pass())
    throw Error(ErrorCode::InternalAssertion, "bipartition fails condition A or B");
  return c;
}

/// {N_2[u], rest} for the first u with e(u) >= 5.
inline std::optional<Covering> construct_Aprime_split(const Graph& p) {
  const Distances& d = p.distances();
  for (int u = 0; u < p.n(); ++u) {
    if (eccentricity(p, u) < 5) continue;
    const VertexSet near = d.ball(u, 2);
    return Covering(p, {near, p.vertices() - near});
  }
  return std::nullopt;
}

/// {component of vertex 0, rest} for a disconnected graph.
inline std::optional<Covering> construct_component_split(const Graph& p) {
  if (p.n() == 0 || p.is_connected()) return std::nullopt;
  const VertexSet comp = p.distances().ball(0, p.n());
  return Covering(p, {comp, p.vertices() - comp});
}

// ---------------------------------------------------------------------------
// Profile

struct CovProfile {
  CovSizeResult A;
  CovSizeResult AB;
  CovSizeResult Aprime;
  CovSizeResult AprimeBprime;
  CovSizeResult AAdpBdp;
};

inline const CondSet kCondAB{Condition::A, Condition::B};
inline const CondSet kCondAprime{Condition::Aprime};
inline const CondSet kCondAprimeBprime{Condition::Aprime, Condition::Bprime};
inline const CondSet kCondAAdpBdp{Condition::A, Condition::Adp, Condition::Bdp};

namespace detail {

inline CovSizeResult exact_from(CondSet which, Covering c, std::string method,
                                std::optional<RefinedCovering> rc = std::nullopt) {
  CovSizeResult r;
  r.which = which;
  r.kind = CovKind::Exact;
  r.value = static_cast<int>(c.size());
  r.method = std::move(method);
  r.witness = std::move(c);
  r.refined = std::move(rc);
  return r;
}

/// Tries k = lower, lower+1, ... (at least once, at most up to 3 or lower)
/// and reports the first size with a witness.
inline CovSizeResult search_upward(const Graph& p, CondSet which, int lower, const std::string& why,
                                   const SearchBounds& bounds) {
  CovSizeResult r;
  r.which = which;
  r.lower = lower;
  r.method = why;
  if (lower >= p.n()) {
    // Singletons satisfy every condition once r(P) >= 2.
    std::vector<VertexSet> singles;
    for (int v = 0; v < p.n(); ++v) singles.push_back(VertexSet::singleton(v));
    Covering c(p, singles);
    std::optional<RefinedCovering> rc;
    if (which.needs_refinement()) rc = RefinedCovering(c, 0, c.block(0), {});
    return exact_from(which, std::move(c), "singletons", std::move(rc));
  }
  const int top = std::max(3, lower);
  for (int k = lower; k <= top; ++k) {
    try {
      CovSizeResult dk = decide_cover_k(p, k, which, bounds);
      if (dk.exact()) return dk;
      r.lower = k + 1;
      r.method = dk.method;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
      r.kind = CovKind::Unknown;
      r.bound = bounds.max_n(k);
      return r;
    }
  }
  r.kind = CovKind::Unknown;
  r.bound = top;
  r.method = "exhausted";
  return r;
}

}  // namespace detail

/// cov_A exactly, then the other minimum sizes from structural facts where
/// they settle the value and bounded search otherwise.
inline CovProfile cov_profile(const Graph& p, const SearchBounds& bounds = SearchBounds::defaults()) {
  CovProfile out;
  out.A = cov_A(p);
  auto infeasible = [](CondSet which) {
    CovSizeResult r;
    r.which = which;
    r.kind = CovKind::Infeasible;
    r.method = "radius<=1";
    return r;
  };
  if (out.A.kind == CovKind::Infeasible) {
    out.A.method = "radius<=1";
    out.AB = infeasible(kCondAB);
    out.Aprime = infeasible(kCondAprime);
    out.AprimeBprime = infeasible(kCondAprimeBprime);
    out.AAdpBdp = infeasible(kCondAAdpBdp);
    return out;
  }
  const int kappa = out.A.value;
  const MetricProfile prof = metric_profile(p);
  const ExtDist diam = prof.diameter;
  const ExtDist rad = prof.radius;
  if (kappa == 2 && diam >= 3) out.A.method = "shortcut-diam>=3";

  // AB
  if (kappa == 2 && diam >= 4 && rad >= 3) {
    out.AB = detail::exact_from(kCondAB, construct_AB_bipartition(p), "shortcut-bipartition");
  } else if (rad == 2) {
    out.AB = detail::search_upward(p, kCondAB, std::max(kappa, 3), "shortcut-r=2", bounds);
  } else {
    out.AB = detail::search_upward(p, kCondAB, kappa, "decide-k", bounds);
  }

  // A'
  if (auto split = construct_Aprime_split(p)) {
    out.Aprime = detail::exact_from(kCondAprime, *split, "shortcut-diam>=5");
  } else {
    out.Aprime = detail::search_upward(p, kCondAprime, std::max(kappa, 3), "shortcut-diam<5", bounds);
  }

  // A'B'
  if (auto split = construct_component_split(p)) {
    out.AprimeBprime = detail::exact_from(kCondAprimeBprime, *split, "shortcut-disconnected");
  } else {
    out.AprimeBprime = detail::search_upward(p, kCondAprimeBprime, std::max(kappa, 3), "shortcut-connected", bounds);
  }

  // AA''B''
  if (out.AprimeBprime.is(kappa)) {
    const Covering& c = *out.AprimeBprime.witness;
    out.AAdpBdp = detail::exact_from(kCondAAdpBdp, c, "implied-by-A'B'", RefinedCovering(c, 0, c.block(0), {}));
  } else if (diam <= 3 || rad == 2) {
    out.AAdpBdp = detail::search_upward(p, kCondAAdpBdp, std::max(kappa, 3), "shortcut-diam<=3-or-r=2", bounds);
  } else if (diam == 4 && !two_ball_triple_check(p)) {
    out.AAdpBdp = detail::search_upward(p, kCondAAdpBdp, std::max(kappa, 3), "shortcut-two-ball", bounds);
  } else {
    out.AAdpBdp = detail::search_upward(p, kCondAAdpBdp, kappa, "decide-k", bounds);
  }
  return out;
}

}  // namespace ucg
