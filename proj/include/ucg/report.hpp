#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "ucg/analysis.hpp"
#include "ucg/appendage.hpp"
#include "ucg/brute_force.hpp"
#include "ucg/construction.hpp"
#include "ucg/cover_search.hpp"
#include "ucg/covering.hpp"
#include "ucg/io.hpp"

namespace ucg {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ucg-report/1";

inline json to_json(VertexSet s) { return s.to_vector(); }

inline json to_json(ExtDist d) { return d.is_infinite() ? json("inf") : json(d.value()); }

inline json to_json(const AppendageValue& v) {
  switch (v.kind) {
    case AppendageValue::Kind::Finite: return v.value;
    case AppendageValue::Kind::Infinite: return "inf";
    case AppendageValue::Kind::Unresolved: return json{{"lo", v.lo}, {"hi", v.hi}};
  }
  return nullptr;
}

inline json to_json(const Covering& c) {
  json blocks = json::array();
  for (VertexSet b : c.blocks()) blocks.push_back(to_json(b));
  return json{{"blocks", blocks}};
}

inline json to_json(const RefinedCovering& rc) {
  json j = to_json(rc.base());
  j["iota"] = rc.iota();
  j["q0"] = to_json(rc.q0());
  j["q1"] = to_json(rc.q1());
  return j;
}

inline json to_json(const ConditionReport& r) {
  json v = json::array();
  for (const Violation& x : r.violations) {
    json e{{"clause", x.clause}, {"block", x.block}};
    if (x.vertex >= 0) e["vertex"] = x.vertex;
    v.push_back(e);
  }
  return json{{"condition", std::string(to_string(r.condition))}, {"pass", r.pass()}, {"violations", v}};
}

inline json to_json(const CovSizeResult& r) {
  json j{{"which", r.which.tag()}};
  switch (r.kind) {
    case CovKind::Exact: j["value"] = r.value; break;
    case CovKind::Infeasible: j["value"] = "infeasible"; break;
    case CovKind::Exhausted: j["value"] = "none"; j["k"] = r.value; break;
    case CovKind::Unknown: j["value"] = json{{"unknown", json{{"lower", r.lower}, {"bound", r.bound}}}}; break;
  }
  j["method"] = r.method;
  if (r.refined) j["witness"] = to_json(*r.refined);
  else if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline json to_json(const CovProfile& p) {
  return json{{"A", to_json(p.A)},
              {"AB", to_json(p.AB)},
              {"A'", to_json(p.Aprime)},
              {"A'B'", to_json(p.AprimeBprime)},
              {"AA''B''", to_json(p.AAdpBdp)}};
}

inline json to_json(const UcgAnalysis& a, const Graph& g) {
  auto named = [&](VertexSet s) {
    json out = json::array();
    for (int v : s) out.push_back(g.has_labels() ? json(g.label(v)) : json(v));
    return out;
  };
  json ec = json::object();
  for (const auto& [c, set] : a.ec_map) ec[g.label(c)] = named(set);
  json strata = json::array();
  for (VertexSet s : a.strata) strata.push_back(named(s));
  const MetricProfile prof = metric_profile(g);
  return json{{"n", g.n()},
              {"radius", to_json(prof.radius)},
              {"diameter", to_json(prof.diameter)},
              {"center", named(a.center)},
              {"periphery", named(periphery(g))},
              {"centeredPeriphery", named(a.centered_periphery)},
              {"intermediate", named(a.intermediate)},
              {"ecMap", ec},
              {"strata", strata},
              {"isUcg", a.is_ucg}};
}

inline json to_json(const VerificationReport& v) {
  return json{{"isUcg", v.is_ucg},
              {"centerMatches", v.center_matches},
              {"peripheryMatches", v.periphery_matches},
              {"radius", to_json(v.radius)},
              {"intermediateCount", v.intermediate_count},
              {"verified", v.verified()}};
}

inline json to_json(const Scaffold& s) {
  json labels = json::array();
  for (int v = 0; v < s.graph.n(); ++v) labels.push_back(s.graph.label(v));
  return json{{"kind", s.kind}, {"n", s.graph.n()}, {"graph6", encode_graph6(s.graph)}, {"labels", labels}};
}

inline json to_json(const AppendageResult& r) {
  json certs = json::array();
  for (const CovSizeResult& c : r.certificates) certs.push_back(to_json(c));
  json j{{"value", to_json(r.value)},  {"caseTag", r.case_tag}, {"tableRow", r.table_row},
         {"kappa", r.kappa},           {"conjectureZone", r.conjecture_zone}, {"certificates", certs}};
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["verification"] = to_json(*r.verification);
  }
  j["notes"] = r.notes;
  return j;
}

inline json to_json(const OracleResult& r) {
  json j{{"found", r.found}, {"tMax", r.t_max}, {"graphsChecked", r.graphs_checked}};
  j["value"] = r.found ? json(r.t) : json("not-found");
  if (r.witness) j["witness"] = encode_graph6(*r.witness);
  return j;
}

/// DOT rendering, colored by role.
inline std::string to_dot(const Scaffold& s) {
  std::ostringstream os;
  os << "graph ucg {\n  node [style=filled];\n";
  for (int v = 0; v < s.graph.n(); ++v) {
    const char* color = s.center_set.contains(v) ? "gold" : s.periphery_set.contains(v) ? "lightblue" : "lightgray";
    os << "  n" << v << " [label=\"" << s.graph.label(v) << "\", fillcolor=" << color << "];\n";
  }
  for (auto [u, v] : s.graph.edges()) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

/// DOT rendering of a plain graph, with its center and centered periphery
/// colored when the graph is analysed.
inline std::string to_dot(const Graph& g) {
  const UcgAnalysis a = ucg_analysis(g);
  Scaffold s;
  s.graph = g;
  s.center_set = a.center;
  s.periphery_set = a.centered_periphery;
  return to_dot(s);
}

}  // namespace ucg
