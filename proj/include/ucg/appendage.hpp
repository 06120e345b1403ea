#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucg/analysis.hpp"
#include "ucg/construction.hpp"
#include "ucg/cover_search.hpp"
#include "ucg/covering.hpp"
#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

/// A value in N ∪ {∞}, or an interval when the covering decisions ran out of
/// budget.
struct AppendageValue {
  enum class Kind { Finite, Infinite, Unresolved };
  Kind kind = Kind::Finite;
  int value = 0;
  int lo = 0;
  int hi = 0;

  static AppendageValue finite(int v) { return {Kind::Finite, v, v, v}; }
  static AppendageValue infinite() { return {Kind::Infinite, 0, 0, 0}; }
  static AppendageValue unresolved(int lo, int hi) { return {Kind::Unresolved, 0, lo, hi}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const AppendageValue&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::Finite: return std::to_string(value);
      case Kind::Infinite: return "inf";
      case Kind::Unresolved: return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
    return "?";
  }
};

struct AppendageOptions {
  /// Settle values straight from the (diam, r) rows when a row applies.
  bool use_table_shortcuts = true;
  SearchBounds bounds = SearchBounds::defaults();
};

struct AppendageResult {
  AppendageValue value;
  std::string case_tag;
  std::string table_row;  // (diam, r) row of P, "" when none applies
  int kappa = 0;
  bool conjecture_zone = false;
  std::vector<CovSizeResult> certificates;  // decisions and coverings used
  std::optional<Scaffold> witness;
  std::optional<VerificationReport> verification;
  std::vector<std::string> notes;
};

namespace detail {

inline void attach_witness(AppendageResult& r, Scaffold s, const Graph& c, const Graph& p) {
  VerificationReport rep = verify_construction(s, c, p);
  if (!rep.verified() || rep.intermediate_count != r.value.value)
    throw Error(ErrorCode::InternalAssertion, "witness for " + r.case_tag + " does not verify with |I| = " +
                                                   std::to_string(r.value.value));
  r.witness = std::move(s);
  r.verification = rep;
}

inline std::string kn_row(ExtDist diam, ExtDist rad) {
  if (diam >= 4 && rad >= 3) return "diam>=4,r>=3";
  if (diam >= 3 && rad == 2) return "diam>=3,r=2";
  if (diam == 3 && rad == 3) return "diam=r=3";
  return "";
}

inline std::string c_row(ExtDist diam, ExtDist rad) {
  if (diam.is_infinite()) return "diam=inf";
  if (diam >= 5) return "5<=diam<inf";
  if (diam == 4 && rad == 4) return "diam=4,r=4";
  if (diam == 4 && rad == 3) return "diam=4,r=3";
  if (diam == 4 && rad == 2) return "diam=4,r=2";
  if (diam == 3) return "diam=3";
  return "";
}

inline CovSizeResult note_cover(CondSet which, const Covering& c, const std::string& method) {
  CovSizeResult r;
  r.which = which;
  r.kind = CovKind::Exact;
  r.value = static_cast<int>(c.size());
  r.method = method;
  r.witness = c;
  return r;
}

inline void complete_case(AppendageResult& r, const Graph& c, const Graph& p, const CovSizeResult& ka,
                          const MetricProfile& prof, const AppendageOptions& opt) {
  const int kappa = ka.value;
  const Covering& acover = *ka.witness;
  r.table_row = kn_row(prof.diameter, prof.radius);
  r.conjecture_zone = r.table_row == "diam=r=3";

  auto exact_kappa = [&](const Covering& ab) {
    r.value = AppendageValue::finite(kappa);
    attach_witness(r, build_scaffold(c, p, ab, 1, {1}), c, p);
  };
  auto kappa_plus_one = [&] {
    r.value = AppendageValue::finite(kappa + 1);
    attach_witness(r, build_scaffold(c, p, acover, 1), c, p);
  };

  if (opt.use_table_shortcuts && r.table_row == "diam>=4,r>=3") {
    r.case_tag = "KnAppend:diam>=4,r>=3";
    Covering ab = construct_AB_bipartition(p);
    r.certificates.push_back(note_cover(kCondAB, ab, "shortcut-bipartition"));
    exact_kappa(ab);
    return;
  }
  if (opt.use_table_shortcuts && r.table_row == "diam>=3,r=2") {
    r.case_tag = "KnAppend:diam>=3,r=2";
    kappa_plus_one();
    return;
  }

  CovSizeResult dec;
  try {
    dec = decide_cover_k(p, kappa, kCondAB, opt.bounds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundExceeded) throw;
    r.case_tag = "Knrange:undecided";
    r.value = AppendageValue::unresolved(kappa, kappa + 1);
    r.notes.push_back(e.what());
    return;
  }
  r.certificates.push_back(dec);
  if (dec.exact()) {
    r.case_tag = "Knrange:cov_AB=kappa";
    exact_kappa(*dec.witness);
  } else {
    r.case_tag = "Knrange:cov_AB>kappa";
    kappa_plus_one();
  }
}

inline void general_case(AppendageResult& r, const Graph& c, const Graph& p, const CovSizeResult& ka,
                         const MetricProfile& prof, const AppendageOptions& opt) {
  const int kappa = ka.value;
  const Covering& acover = *ka.witness;
  r.table_row = c_row(prof.diameter, prof.radius);
  r.conjecture_zone = r.table_row == "diam=4,r=3";

  auto two_kappa = [&](const Covering& cov) {
    r.value = AppendageValue::finite(2 * kappa);
    attach_witness(r, build_scaffold(c, p, cov, 2, {1, 2}), c, p);
  };
  auto via_Aprime = [&](const Covering& cov) {
    r.value = AppendageValue::finite(2 * kappa + 1);
    attach_witness(r, build_scaffold(c, p, cov, 2, {2}), c, p);
  };
  auto via_refined = [&](const RefinedCovering& rc) {
    r.value = AppendageValue::finite(2 * kappa + 1);
    attach_witness(r, build_refined_scaffold(c, p, rc), c, p);
  };
  auto two_kappa_plus_two = [&] {
    r.value = AppendageValue::finite(2 * kappa + 2);
    attach_witness(r, build_scaffold(c, p, acover, 2), c, p);
  };

  if (opt.use_table_shortcuts) {
    const std::string& row = r.table_row;
    if (row == "diam=inf") {
      r.case_tag = "CAppend:diam=inf";
      Covering split = *construct_component_split(p);
      r.certificates.push_back(note_cover(kCondAprimeBprime, split, "shortcut-disconnected"));
      two_kappa(split);
      return;
    }
    if (row == "5<=diam<inf") {
      r.case_tag = "CAppend:5<=diam<inf";
      Covering split = *construct_Aprime_split(p);
      r.certificates.push_back(note_cover(kCondAprime, split, "shortcut-diam>=5"));
      via_Aprime(split);
      return;
    }
    if (row == "diam=4,r=2" || row == "diam=3") {
      r.case_tag = "CAppend:" + row;
      two_kappa_plus_two();
      return;
    }
  }

  struct Step {
    CondSet conds;
    const char* tag;
  };
  const Step steps[] = {{kCondAprimeBprime, "CRange:cov_A'B'=kappa"},
                        {kCondAprime, "CRange:cov_A'=kappa"},
                        {kCondAAdpBdp, "CRange:cov_AA''B''=kappa"}};
  for (std::size_t s = 0; s < 3; ++s) {
    CovSizeResult dec;
    try {
      dec = decide_cover_k(p, kappa, steps[s].conds, opt.bounds);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
      r.case_tag = "CRange:undecided";
      r.value = AppendageValue::unresolved(s == 0 ? 2 * kappa : 2 * kappa + 1, 2 * kappa + 2);
      r.notes.push_back(e.what());
      return;
    }
    r.certificates.push_back(dec);
    if (!dec.exact()) continue;
    r.case_tag = steps[s].tag;
    if (s == 0) two_kappa(*dec.witness);
    else if (s == 1) via_Aprime(*dec.witness);
    else via_refined(*dec.refined);
    return;
  }
  r.case_tag = "CRange:otherwise";
  two_kappa_plus_two();
}

}  // namespace detail

/// A_ucg(C, P): the fewest vertices to add to C ∪ P so that the result is a
/// UCG with center C and centered periphery P. Every finite answer carries a
/// witness graph that has been re-analysed.
inline AppendageResult appendage_number(const Graph& c, const Graph& p,
                                        const AppendageOptions& opt = AppendageOptions{}) {
  if (c.n() == 0) throw Error(ErrorCode::PreconditionViolated, "the center graph must have a vertex");
  AppendageResult r;
  const CovSizeResult ka = cov_A(p);
  r.certificates.push_back(ka);
  if (ka.kind == CovKind::Infeasible) {
    r.case_tag = "r(P)<=1";
    r.value = AppendageValue::infinite();
    return r;
  }
  r.kappa = ka.value;
  if (c.n() == 1) {
    r.case_tag = "Appendv";
    r.value = AppendageValue::finite(0);
    detail::attach_witness(r, build_cone(p), c, p);
    return r;
  }
  const MetricProfile prof = metric_profile(p);
  if (c.is_complete()) detail::complete_case(r, c, p, ka, prof, opt);
  else detail::general_case(r, c, p, ka, prof, opt);
  if (r.conjecture_zone)
    r.notes.push_back("open zone " + r.table_row + ": value " + r.value.str() + " via " + r.case_tag);
  return r;
}

struct CenterOnlyResult {
  int value = 0;  // added vertices: |I| plus |V(P)|
  Scaffold witness;
  VerificationReport verification;
};

/// A_ucg(C, -): minimum over all P of A_ucg(C, P) + |V(P)|, realised with P
/// two isolated vertices.
inline CenterOnlyResult appendage_center_only(const Graph& c) {
  if (c.n() == 0) throw Error(ErrorCode::PreconditionViolated, "the center graph must have a vertex");
  const Graph p2 = Graph::from_edges(2, {}, {"u", "v"});
  const Covering split(p2, {VertexSet{0}, VertexSet{1}});
  CenterOnlyResult out;
  if (c.n() == 1) out.witness = build_cone(p2);
  else if (c.is_complete()) out.witness = build_scaffold(c, p2, split, 1, {1});
  else out.witness = build_scaffold(c, p2, split, 2, {1, 2});
  out.verification = verify_construction(out.witness, c, p2);
  out.value = out.verification.intermediate_count + p2.n();
  if (!out.verification.verified())
    throw Error(ErrorCode::InternalAssertion, "center-only witness does not verify");
  return out;
}

struct PeripheryOnlyResult {
  AppendageValue value;
  std::optional<Scaffold> witness;
};

/// A_ucg(-, P): one apex suffices unless r(P) <= 1.
inline PeripheryOnlyResult appendage_periphery_only(const Graph& p) {
  PeripheryOnlyResult out;
  if (p.n() == 0 || metric_profile(p).radius <= 1) {
    out.value = AppendageValue::infinite();
    return out;
  }
  Scaffold cone = build_cone(p);
  const Graph apex = Graph::from_edges(1, {}, {"v"});
  if (!verify_construction(cone, apex, p).verified())
    throw Error(ErrorCode::InternalAssertion, "cone over P does not verify");
  out.value = AppendageValue::finite(1);
  out.witness = std::move(cone);
  return out;
}

}  // namespace ucg
