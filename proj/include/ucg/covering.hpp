#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

/// Distance conditions on coverings. `Aprime`/`Bprime` are the single-primed
/// conditions, `Adp`/`Bdp` the double-primed ones that need a refinement.
enum class Condition : std::uint8_t { A = 1, B = 2, Aprime = 4, Bprime = 8, Adp = 16, Bdp = 32 };

constexpr std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::A: return "A";
    case Condition::B: return "B";
    case Condition::Aprime: return "A'";
    case Condition::Bprime: return "B'";
    case Condition::Adp: return "A''";
    case Condition::Bdp: return "B''";
  }
  return "?";
}

class CondSet {
 public:
  constexpr CondSet() = default;
  constexpr CondSet(std::initializer_list<Condition> cs) {
    for (Condition c : cs) bits_ |= static_cast<std::uint8_t>(c);
  }
  constexpr bool has(Condition c) const { return bits_ & static_cast<std::uint8_t>(c); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool needs_refinement() const { return has(Condition::Adp) || has(Condition::Bdp); }
  /// A' implies A, so either one makes every block an A-block.
  constexpr bool implies_A() const { return has(Condition::A) || has(Condition::Aprime); }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr CondSet with(Condition c) const {
    CondSet out = *this;
    out.bits_ |= static_cast<std::uint8_t>(c);
    return out;
  }
  constexpr bool operator==(const CondSet&) const = default;

  /// "AB", "A'B'", "AA''B''", ...
  std::string tag() const {
    std::string out;
    for (Condition c : {Condition::A, Condition::B, Condition::Aprime, Condition::Bprime, Condition::Adp,
                        Condition::Bdp})
      if (has(c)) out += to_string(c);
    return out;
  }

 private:
  std::uint8_t bits_ = 0;
};

/// A family of nonempty vertex sets whose union is V(host). Blocks may overlap.
class Covering {
 public:
  Covering(Graph host, std::vector<VertexSet> blocks) : host_(std::move(host)), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error(ErrorCode::InvalidCovering, "a covering needs at least one block");
    VertexSet all;
    for (VertexSet b : blocks_) {
      if (b.empty()) throw Error(ErrorCode::InvalidCovering, "empty block");
      if (!b.subset_of(host_.vertices())) throw Error(ErrorCode::InvalidCovering, "block names a vertex outside the host");
      all |= b;
    }
    if (all != host_.vertices()) throw Error(ErrorCode::InvalidCovering, "blocks do not cover every vertex");
  }

  const Graph& host() const { return host_; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  VertexSet block(std::size_t i) const { return blocks_[i]; }

 private:
  Graph host_;
  std::vector<VertexSet> blocks_;
};

/// A covering with block `iota` split as q0 ∪ q1. q1 may be empty.
class RefinedCovering {
 public:
  RefinedCovering(Covering base, std::size_t iota, VertexSet q0, VertexSet q1)
      : base_(std::move(base)), iota_(iota), q0_(q0), q1_(q1) {
    if (iota_ >= base_.size()) throw Error(ErrorCode::InvalidCovering, "refined block index out of range");
    if (q0_.empty()) throw Error(ErrorCode::InvalidCovering, "q0 must be nonempty");
    if ((q0_ | q1_) != base_.block(iota_)) throw Error(ErrorCode::InvalidCovering, "q0 ∪ q1 must equal the refined block");
  }

  const Covering& base() const { return base_; }
  std::size_t iota() const { return iota_; }
  VertexSet q0() const { return q0_; }
  VertexSet q1() const { return q1_; }

 private:
  Covering base_;
  std::size_t iota_;
  VertexSet q0_;
  VertexSet q1_;
};

struct Violation {
  enum class Kind { Block, Vertex, Part };
  Kind kind = Kind::Block;
  std::size_t block = 0;  // block index, or l (0/1) for Part
  int vertex = -1;        // for Vertex violations
  std::string clause;     // e.g. "A", "B", "A''-1", "B''-2"
};

struct ConditionReport {
  Condition condition = Condition::A;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

namespace detail {

// Each evaluator calls `on(violation)` per failure; `on` returns false to stop
// early. The return value is true iff no violation was found.

template <class On>
bool eval_A(const Distances& d, VertexSet all, std::span<const VertexSet> blocks, On&& on) {
  bool ok = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    // p ∉ P_i with d(P_i, p) >= 2  <=>  V \ N[P_i] nonempty.
    if ((all - d.ball(blocks[i], 1)).empty()) {
      ok = false;
      if (!on(Violation{Violation::Kind::Block, i, -1, "A"})) return false;
    }
  }
  return ok;
}

template <class On>
bool eval_B(const Distances& d, VertexSet all, std::span<const VertexSet> blocks, On&& on) {
  bool ok = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int p : blocks[i]) {
      const bool far_vertex = !((all - d.ball(p, 2)) - blocks[i]).empty();
      bool far_block = false;
      for (std::size_t j = 0; j < blocks.size() && !far_block; ++j)
        far_block = j != i && !d.ball(p, 1).intersects(blocks[j]);
      if (!far_vertex && !far_block) {
        ok = false;
        if (!on(Violation{Violation::Kind::Vertex, i, p, "B"})) return false;
      }
    }
  }
  return ok;
}

template <class On>
bool eval_Aprime(const Distances& d, VertexSet all, std::span<const VertexSet> blocks, On&& on) {
  bool ok = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const bool far_vertex = !(all - d.ball(blocks[i], 2)).empty();
    bool far_block = false;
    const VertexSet near = d.ball(blocks[i], 1);
    for (std::size_t j = 0; j < blocks.size() && !far_block; ++j) far_block = j != i && !near.intersects(blocks[j]);
    if (!far_vertex && !far_block) {
      ok = false;
      if (!on(Violation{Violation::Kind::Block, i, -1, "A'"})) return false;
    }
  }
  return ok;
}

template <class On>
bool eval_Bprime(const Distances& d, std::span<const VertexSet> blocks, On&& on) {
  bool ok = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int p : blocks[i]) {
      bool far_block = false;
      for (std::size_t j = 0; j < blocks.size() && !far_block; ++j)
        far_block = j != i && !d.ball(p, 1).intersects(blocks[j]);
      if (!far_block) {
        ok = false;
        if (!on(Violation{Violation::Kind::Vertex, i, p, "B'"})) return false;
      }
    }
  }
  return ok;
}

/// ∃ j ≠ iota with `near` ∩ P_j = ∅. j may equal the block under test; the
/// clause is then false for it automatically unless `near` misses it.
inline bool far_from_some_other(const Distances&, std::span<const VertexSet> blocks, std::size_t iota,
                                VertexSet near) {
  for (std::size_t j = 0; j < blocks.size(); ++j)
    if (j != iota && !near.intersects(blocks[j])) return true;
  return false;
}

template <class On>
bool eval_Adp(const Distances& d, VertexSet all, std::span<const VertexSet> blocks, std::size_t iota,
              VertexSet q0, VertexSet q1, On&& on) {
  bool ok = true;
  const VertexSet q[2] = {q0, q1};
  const VertexSet refined = blocks[iota];
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i == iota) continue;
    const VertexSet near = d.ball(blocks[i], 1);
    const bool a = !(all - d.ball(blocks[i], 2)).empty();
    const bool b = far_from_some_other(d, blocks, iota, near);
    const bool c = !near.intersects(q[0]) || !near.intersects(q[1]);
    if (!a && !b && !c) {
      ok = false;
      if (!on(Violation{Violation::Kind::Block, i, -1, "A''-1"})) return false;
    }
  }
  for (std::size_t l = 0; l < 2; ++l) {
    const bool a = !((all - d.ball(q[l], 2)) - refined).empty();
    const bool b = far_from_some_other(d, blocks, iota, d.ball(q[l], 1));
    if (!a && !b) {
      ok = false;
      if (!on(Violation{Violation::Kind::Part, l, -1, "A''-2"})) return false;
    }
  }
  return ok;
}

template <class On>
bool eval_Bdp(const Distances& d, std::span<const VertexSet> blocks, std::size_t iota, VertexSet q0, VertexSet q1,
              On&& on) {
  bool ok = true;
  const VertexSet q[2] = {q0, q1};
  const VertexSet refined = blocks[iota];
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i == iota) continue;
    const VertexSet block_near = d.ball(blocks[i], 1);
    for (int p : blocks[i]) {
      const VertexSet n1 = d.ball(p, 1);
      const VertexSet n2 = d.ball(p, 2);
      const VertexSet n3 = d.ball(p, 3);
      const bool a = far_from_some_other(d, blocks, iota, n1);
      const bool b = !n1.intersects(q[0]) && !n1.intersects(q[1]);
      const bool c = !n2.intersects(q[0]) || !n2.intersects(q[1]);
      bool dd = false;
      for (int l = 0; l < 2 && !dd; ++l) dd = !n1.intersects(q[l]) && !((q[l] - n3) - block_near).empty();
      if (!a && !b && !c && !dd) {
        ok = false;
        if (!on(Violation{Violation::Kind::Vertex, i, p, "B''-1"})) return false;
      }
    }
  }
  for (std::size_t l = 0; l < 2; ++l) {
    const VertexSet other = q[1 - l];
    const VertexSet part_near = d.ball(q[l], 1);
    for (int p : q[l]) {
      const VertexSet n1 = d.ball(p, 1);
      const bool a = far_from_some_other(d, blocks, iota, n1);
      const bool b = !(((refined - q[l]) - d.ball(p, 3)) - part_near).empty() && !n1.intersects(other);
      if (!a && !b) {
        ok = false;
        if (!on(Violation{Violation::Kind::Vertex, iota, p, l == 0 ? "B''-2(Q0)" : "B''-2(Q1)"})) return false;
      }
    }
  }
  return ok;
}

inline constexpr auto kStopAtFirst = [](const Violation&) { return false; };

/// Fast yes/no evaluation of a condition set on raw blocks. Refinement
/// arguments are ignored unless the set names A'' or B''.
inline bool satisfies(const Distances& d, VertexSet all, std::span<const VertexSet> blocks, CondSet conds,
                      std::size_t iota = 0, VertexSet q0 = {}, VertexSet q1 = {}) {
  if (conds.has(Condition::A) && !eval_A(d, all, blocks, kStopAtFirst)) return false;
  if (conds.has(Condition::Aprime) && !eval_Aprime(d, all, blocks, kStopAtFirst)) return false;
  if (conds.has(Condition::Bprime) && !eval_Bprime(d, blocks, kStopAtFirst)) return false;
  if (conds.has(Condition::B) && !eval_B(d, all, blocks, kStopAtFirst)) return false;
  if (conds.has(Condition::Adp) && !eval_Adp(d, all, blocks, iota, q0, q1, kStopAtFirst)) return false;
  if (conds.has(Condition::Bdp) && !eval_Bdp(d, blocks, iota, q0, q1, kStopAtFirst)) return false;
  return true;
}

template <class Eval>
ConditionReport collect(Condition c, Eval&& eval) {
  ConditionReport r;
  r.condition = c;
  eval([&](const Violation& v) {
    r.violations.push_back(v);
    return true;
  });
  return r;
}

}  // namespace detail

/// Every block has a vertex outside it at distance >= 2 (∞ counts).
inline ConditionReport check_A(const Covering& c) {
  const Distances& d = c.host().distances();
  return detail::collect(Condition::A, [&](auto&& on) { detail::eval_A(d, c.host().vertices(), c.blocks(), on); });
}

inline ConditionReport check_B(const Covering& c) {
  const Distances& d = c.host().distances();
  return detail::collect(Condition::B, [&](auto&& on) { detail::eval_B(d, c.host().vertices(), c.blocks(), on); });
}

inline ConditionReport check_Aprime(const Covering& c) {
  const Distances& d = c.host().distances();
  return detail::collect(Condition::Aprime,
                         [&](auto&& on) { detail::eval_Aprime(d, c.host().vertices(), c.blocks(), on); });
}

inline ConditionReport check_Bprime(const Covering& c) {
  const Distances& d = c.host().distances();
  return detail::collect(Condition::Bprime, [&](auto&& on) { detail::eval_Bprime(d, c.blocks(), on); });
}

/// Evaluates A'' and B'' clause by clause, with d(∅, ·) = ∞ so an empty q1
/// satisfies every clause asking for distance from q1. In B''-1(d) and
/// B''-2(b) the far vertex p' must also be at distance >= 2 from the block or
/// part holding p: without that, the y-vertex over it leaves e(p) = 3.
inline std::pair<ConditionReport, ConditionReport> check_AdpBdp(const RefinedCovering& rc) {
  const Covering& c = rc.base();
  const Distances& d = c.host().distances();
  auto adp = detail::collect(Condition::Adp, [&](auto&& on) {
    detail::eval_Adp(d, c.host().vertices(), c.blocks(), rc.iota(), rc.q0(), rc.q1(), on);
  });
  auto bdp = detail::collect(Condition::Bdp,
                             [&](auto&& on) { detail::eval_Bdp(d, c.blocks(), rc.iota(), rc.q0(), rc.q1(), on); });
  return {std::move(adp), std::move(bdp)};
}

}  // namespace ucg
