#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

struct Fixture {
  std::string name;
  Graph graph;
  std::string provenance;
  std::map<std::string, VertexSet> extras;
};

/// P^alpha: e_1..e_alpha, f_1..f_alpha with e_ie_j, f_if_j, e_if_j for i != j.
inline Fixture gen_P_alpha(int alpha) {
  if (alpha < 2) throw Error(ErrorCode::DomainError, "alpha must be at least 2");
  if (2 * alpha > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "alpha too large");
  std::vector<std::string> labels;
  for (int i = 1; i <= alpha; ++i) labels.push_back("e" + std::to_string(i));
  for (int i = 1; i <= alpha; ++i) labels.push_back("f" + std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < alpha; ++i)
    for (int j = 0; j < alpha; ++j) {
      if (i == j) continue;
      if (i < j) {
        edges.emplace_back(i, j);
        edges.emplace_back(alpha + i, alpha + j);
      }
      edges.emplace_back(i, alpha + j);
    }
  return {"p_alpha_" + std::to_string(alpha), Graph::from_edges(2 * alpha, edges, labels), "family P^alpha", {}};
}

/// P^{alpha,beta}: P^alpha plus g_1..g_beta, each adjacent to e_k and f_k for k >= 2.
inline Fixture gen_P_alpha_beta(int alpha, int beta) {
  if (alpha < 2 || beta < 1) throw Error(ErrorCode::DomainError, "need alpha >= 2 and beta >= 1");
  if (2 * alpha + beta > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "alpha/beta too large");
  const Fixture base = gen_P_alpha(alpha);
  std::vector<std::string> labels = base.graph.labels();
  std::vector<Graph::Edge> edges = base.graph.edges();
  for (int l = 0; l < beta; ++l) {
    const int g = 2 * alpha + l;
    labels.push_back("g" + std::to_string(l + 1));
    for (int k = 1; k < alpha; ++k) {
      edges.emplace_back(k, g);
      edges.emplace_back(alpha + k, g);
    }
  }
  return {"p_alpha_beta_" + std::to_string(alpha) + "_" + std::to_string(beta),
          Graph::from_edges(2 * alpha + beta, edges, labels), "family P^{alpha,beta}", {}};
}

/// Inner cycle v_0..v_{m-1} (indices 0..m-1), outer cycle u_0..u_{m-1}
/// (indices m..2m-1), spokes v_iu_i.
inline Fixture gen_prism(int m) {
  if (m < 3) throw Error(ErrorCode::DomainError, "prism needs m >= 3");
  if (2 * m > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "prism too large");
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m + i, m + (i + 1) % m);
    edges.emplace_back(i, m + i);
  }
  std::string name = m == 6 ? "hex_prism" : m == 7 ? "hept_prism" : "prism_" + std::to_string(m);
  return {name, Graph::from_edges(2 * m, edges, labels), "prism over C_" + std::to_string(m), {}};
}

/// Transcription of the 13-vertex drawing where periphery and centered
/// periphery differ.
inline Fixture fixture_figure1() {
  const std::vector<std::string> names = {"c", "a1", "a2", "b1", "b2", "p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7"};
  auto id = [&](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw Error(ErrorCode::InternalAssertion, "unknown figure label " + s);
  };
  const std::pair<const char*, const char*> es[] = {
      {"c", "a1"},  {"c", "a2"},  {"a1", "b1"}, {"a2", "b2"}, {"a1", "p0"}, {"a2", "p7"},
      {"b1", "p1"}, {"b1", "p2"}, {"b1", "p3"}, {"b2", "p4"}, {"b2", "p5"}, {"b2", "p6"},
      {"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}, {"p4", "p5"}, {"p5", "p6"}};
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : es) edges.emplace_back(id(a), id(b));
  return {"figure1", Graph::from_edges(static_cast<int>(names.size()), edges, names),
          "transcribed drawing: periphery differs from centered periphery", {}};
}

/// Heptagonal prism with the drawn three-part refinement.
inline Fixture fixture_fig5_partition() {
  Fixture f = gen_prism(7);
  f.name = "hept_prism_partition";
  f.provenance = "transcribed drawing: two-block refined covering of the heptagonal prism";
  auto v = [](int i) { return i; };
  auto u = [](int i) { return 7 + i; };
  f.extras["Q0"] = VertexSet{v(0), v(1), u(0), u(1)};
  f.extras["Q1"] = VertexSet{v(2), v(3), u(2), u(3), u(4)};
  f.extras["P2"] = VertexSet{v(4), v(5), v(6), u(5), u(6)};
  return f;
}

// Small named graphs.

inline Graph complete_graph(int n) {
  std::vector<Graph::Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
  std::vector<Graph::Edge> e;
  for (int a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::DomainError, "cycle needs n >= 3");
  std::vector<Graph::Edge> e;
  for (int a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<Graph::Edge> e;
  for (int a = 1; a <= leaves; ++a) e.emplace_back(0, a);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

/// Disjoint union, second graph's vertices shifted past the first's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Graph::Edge> e = a.edges();
  for (auto [x, y] : b.edges()) e.emplace_back(a.n() + x, a.n() + y);
  return Graph::from_edges(a.n() + b.n(), e);
}

/// Fixtures written by `ucg families`.
inline std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  out.push_back(fixture_figure1());
  out.push_back(gen_prism(6));
  out.push_back(gen_prism(7));
  for (int a : {2, 3, 4}) out.push_back(gen_P_alpha(a));
  out.push_back(gen_P_alpha_beta(2, 1));
  out.push_back(gen_P_alpha_beta(3, 2));
  out.push_back({"2k1", empty_graph(2), "two isolated vertices", {}});
  out.push_back({"2k2", disjoint_union(complete_graph(2), complete_graph(2)), "two disjoint edges", {}});
  out.push_back({"p4", path_graph(4), "path on 4 vertices", {}});
  out.push_back({"c4", cycle_graph(4), "4-cycle", {}});
  out.push_back({"c6", cycle_graph(6), "6-cycle", {}});
  out.push_back({"c7", cycle_graph(7), "7-cycle", {}});
  out.push_back({"k13", star_graph(3), "star with three leaves", {}});
  return out;
}

}  // namespace ucg
