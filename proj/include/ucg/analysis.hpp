#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

/// The all-pairs distance table of `g` (cached on the graph).
inline const Distances& distance_matrix(const Graph& g) { return g.distances(); }

struct MetricProfile {
  std::vector<ExtDist> ecc;
  ExtDist radius;
  ExtDist diameter;
};

inline ExtDist eccentricity(const Graph& g, int v) {
  const Distances& d = g.distances();
  ExtDist e = 0;
  for (int u = 0; u < g.n(); ++u) e = std::max(e, d(v, u));
  return e;
}

/// Eccentricities, radius and diameter. A disconnected graph has every
/// eccentricity infinite. The empty graph reports radius = diameter = 0.
inline MetricProfile metric_profile(const Graph& g) {
  MetricProfile p;
  p.ecc.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) p.ecc.push_back(eccentricity(g, v));
  if (p.ecc.empty()) return p;
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  return p;
}

/// Vertices of maximum eccentricity.
inline VertexSet periphery(const Graph& g) {
  const MetricProfile p = metric_profile(g);
  VertexSet out;
  for (int v = 0; v < g.n(); ++v)
    if (p.ecc[static_cast<std::size_t>(v)] == p.diameter) out.insert(v);
  return out;
}

/// EC(v): vertices at distance exactly e(v) from v.
inline VertexSet eccentric_set(const Graph& g, int v) {
  const Distances& d = g.distances();
  const ExtDist e = eccentricity(g, v);
  VertexSet out;
  for (int u = 0; u < g.n(); ++u)
    if (d(v, u) == e) out.insert(u);
  return out;
}

struct UcgAnalysis {
  VertexSet center;
  std::map<int, VertexSet> ec_map;  // central vertex -> EC(c)
  VertexSet centered_periphery;
  VertexSet intermediate;
  std::vector<VertexSet> strata;  // D_0 .. D_r, D_m = {u : d(u, center) = m}
  ExtDist radius;
  bool is_ucg = false;
};

/// Center, eccentric sets of central vertices, centered periphery,
/// intermediate set and distance strata from the center.
///
/// Disconnected graphs: every eccentricity is infinite, so the center is all
/// of V, strata collapse to [V] and the graph is never reported as a UCG.
inline UcgAnalysis ucg_analysis(const Graph& g) {
  UcgAnalysis a;
  const MetricProfile prof = metric_profile(g);
  a.radius = prof.radius;
  for (int v = 0; v < g.n(); ++v)
    if (prof.ecc[static_cast<std::size_t>(v)] == prof.radius) a.center.insert(v);
  for (int c : a.center) {
    VertexSet ec = eccentric_set(g, c);
    a.ec_map.emplace(c, ec);
    a.centered_periphery |= ec;
  }
  a.intermediate = g.vertices() - (a.center | a.centered_periphery);

  if (g.n() == 0) return a;
  if (prof.radius.is_infinite()) {
    a.strata = {g.vertices()};
    a.is_ucg = false;
    return a;
  }

  const Distances& d = g.distances();
  a.strata.assign(static_cast<std::size_t>(prof.radius.value()) + 1, VertexSet{});
  for (int u = 0; u < g.n(); ++u) a.strata[static_cast<std::size_t>(d.to_set(a.center, u).value())].insert(u);

  a.is_ucg = std::all_of(a.ec_map.begin(), a.ec_map.end(),
                         [&](const auto& kv) { return kv.second == a.centered_periphery; });
  return a;
}

/// The covering of CP(h) induced by the first stratum D_1 of a UCG.
///
/// Block i holds the centered-periphery vertices reached by a radial path
/// through x_i, which for x_i in D_1 is {p in CP : d(x_i, p) = r - 1}.
/// Blocks and witnesses are expressed in h's vertex indices.
struct InducedCoverResult {
  std::vector<int> d1;                 // all of D_1, ascending
  std::vector<int> owners;             // x_i for each nonempty block
  std::vector<VertexSet> blocks;       // P_i, parallel to owners
  std::vector<std::size_t> irredundant;  // indices into blocks that survive reduction
  std::vector<int> witnesses;          // private vertex of each kept block, parallel to irredundant
  VertexSet centered_periphery;
  int radius = 0;
};

inline InducedCoverResult induced_covering(const Graph& h) {
  const UcgAnalysis a = ucg_analysis(h);
  if (!a.is_ucg) throw Error(ErrorCode::NotUcg, "induced covering needs a uniform central graph");
  if (a.radius.value() <= 1) throw Error(ErrorCode::RadiusTooSmall, "radius must be at least 2");

  InducedCoverResult out;
  out.radius = a.radius.value();
  out.centered_periphery = a.centered_periphery;
  out.d1 = a.strata[1].to_vector();
  const Distances& d = h.distances();
  for (int x : out.d1) {
    VertexSet block = a.centered_periphery & d.sphere(x, out.radius - 1);
    if (block.empty()) continue;
    out.owners.push_back(x);
    out.blocks.push_back(block);
  }

  // Drop the lowest-indexed block covered by the others until none is.
  std::vector<std::size_t> kept(out.blocks.size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  auto union_except = [&](std::size_t skip) {
    VertexSet u;
    for (std::size_t j : kept)
      if (j != skip) u |= out.blocks[j];
    return u;
  };
  for (bool dropped = true; dropped;) {
    dropped = false;
    for (auto it = kept.begin(); it != kept.end(); ++it) {
      if (out.blocks[*it].subset_of(union_except(*it))) {
        kept.erase(it);
        dropped = true;
        break;
      }
    }
  }
  out.irredundant = kept;
  for (std::size_t i : kept) out.witnesses.push_back((out.blocks[i] - union_except(i)).front());
  return out;
}

/// True iff every distance from a vertex of `center_set` is the same in the
/// spanning subgraph g as in h.
inline bool distance_preserving_spanning_check(const Graph& h, const Graph& g, VertexSet center_set) {
  if (h.n() != g.n()) throw Error(ErrorCode::NotSpanningSubgraph, "vertex counts differ");
  for (int v = 0; v < g.n(); ++v)
    if (!g.neighbors(v).subset_of(h.neighbors(v)))
      throw Error(ErrorCode::NotSpanningSubgraph, "edge of g missing from h at vertex " + std::to_string(v));
  const Distances& dh = h.distances();
  const Distances& dg = g.distances();
  for (int c : center_set)
    for (int x = 0; x < g.n(); ++x)
      if (dh(c, x) != dg(c, x)) return false;
  return true;
}

}  // namespace ucg
