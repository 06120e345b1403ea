#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucg/analysis.hpp"
#include "ucg/covering.hpp"
#include "ucg/error.hpp"
#include "ucg/graph.hpp"

namespace ucg {

enum class Role { Center, Periphery, Spine, ApexSpine, RefinedX, RefinedY };

struct RoleTag {
  Role role = Role::Center;
  int i = -1;  // block index (spines), or -1 for y_Q0
  int j = -1;  // position along the spine
};

/// A built graph plus the role of every vertex. Vertices come in the order
/// C, P, then the added vertices.
struct Scaffold {
  Graph graph;
  std::vector<RoleTag> roles;
  VertexSet center_set;
  VertexSet periphery_set;
  std::string kind;  // "G", "G'" or "cone"
};

struct VerificationReport {
  bool is_ucg = false;
  bool center_matches = false;
  bool periphery_matches = false;
  ExtDist radius;
  int intermediate_count = 0;

  bool verified() const { return is_ucg && center_matches && periphery_matches; }
};

namespace detail {

inline std::string vertex_name(const Graph& g, int v, const char* prefix) {
  return g.has_labels() ? g.label(v) : std::string(prefix) + std::to_string(v);
}

/// Adjacency builder for the scaffolds.
class ScaffoldBuilder {
 public:
  ScaffoldBuilder(const Graph& c, const Graph& p) : nc_(c.n()), np_(p.n()) {
    for (int v = 0; v < c.n(); ++v) add(vertex_name(c, v, "c"), {Role::Center});
    for (int v = 0; v < p.n(); ++v) add(vertex_name(p, v, "p"), {Role::Periphery});
    for (auto [u, v] : c.edges()) edge(u, v);
    for (auto [u, v] : p.edges()) edge(nc_ + u, nc_ + v);
  }

  int add(std::string label, RoleTag tag) {
    if (static_cast<int>(adj_.size()) >= kMaxVertices)
      throw Error(ErrorCode::TooManyVertices, "construction would exceed 64 vertices");
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    roles_.push_back(tag);
    return static_cast<int>(adj_.size()) - 1;
  }
  void edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }
  int center(int c) const { return c; }
  int periph(int p) const { return nc_ + p; }

  Scaffold finish(std::string kind) {
    Scaffold s;
    const int n = static_cast<int>(adj_.size());
    s.graph = Graph(n, std::move(adj_), std::move(labels_));
    s.roles = std::move(roles_);
    s.center_set = VertexSet::range(nc_);
    s.periphery_set = VertexSet::range(nc_ + np_) - VertexSet::range(nc_);
    s.kind = std::move(kind);
    return s;
  }

 private:
  int nc_;
  int np_;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
  std::vector<RoleTag> roles_;
};

}  // namespace detail

/// G(C, P, cover, rho): a spine x_{i,1..rho} per block i = 1..k plus the apex
/// spine i = 0. Every C vertex meets every x_{i,1}; x_{i,rho} meets P_i.
/// `drop` lists positions j of apex-spine vertices x_{0,j} to leave out.
inline Scaffold build_scaffold(const Graph& c, const Graph& p, const Covering& cover, int rho,
                               const std::vector<int>& drop = {}) {
  if (rho < 1) throw Error(ErrorCode::PreconditionViolated, "rho must be at least 1");
  if (cover.host().n() != p.n() || !cover.host().same_edges(p))
    throw Error(ErrorCode::InvalidCovering, "covering is not over the periphery graph");
  std::vector<bool> dropped(static_cast<std::size_t>(rho) + 1, false);
  for (int j : drop) {
    if (j < 1 || j > rho) throw Error(ErrorCode::InvalidDrop, "x_{0," + std::to_string(j) + "} does not exist");
    if (dropped[static_cast<std::size_t>(j)]) throw Error(ErrorCode::InvalidDrop, "duplicate drop entry");
    dropped[static_cast<std::size_t>(j)] = true;
  }

  detail::ScaffoldBuilder b(c, p);
  const int k = static_cast<int>(cover.size());
  std::vector<int> prev(static_cast<std::size_t>(k) + 1, -1);
  for (int i = 0; i <= k; ++i) {
    for (int j = 1; j <= rho; ++j) {
      if (i == 0 && dropped[static_cast<std::size_t>(j)]) {
        prev[0] = -1;
        continue;
      }
      const int x = b.add("x" + std::to_string(i) + "," + std::to_string(j), {i == 0 ? Role::ApexSpine : Role::Spine, i, j});
      if (j == 1)
        for (int v = 0; v < c.n(); ++v) b.edge(b.center(v), x);
      if (prev[static_cast<std::size_t>(i)] >= 0) b.edge(prev[static_cast<std::size_t>(i)], x);
      if (i >= 1 && j == rho)
        for (int q : cover.block(static_cast<std::size_t>(i - 1))) b.edge(x, b.periph(q));
      prev[static_cast<std::size_t>(i)] = x;
    }
  }
  return b.finish("G");
}

/// G'(C, P, Q): x_i and y_i per block, plus y_Q0 hanging off x_iota. y_iota
/// serves Q1, y_Q0 serves Q0, every other y_i serves P_i.
inline Scaffold build_refined_scaffold(const Graph& c, const Graph& p, const RefinedCovering& rc) {
  const Covering& cover = rc.base();
  if (cover.host().n() != p.n() || !cover.host().same_edges(p))
    throw Error(ErrorCode::InvalidCovering, "covering is not over the periphery graph");
  detail::ScaffoldBuilder b(c, p);
  const int k = static_cast<int>(cover.size());
  const int iota = static_cast<int>(rc.iota());
  std::vector<int> xs;
  for (int i = 0; i < k; ++i) {
    const int x = b.add("x" + std::to_string(i), {Role::RefinedX, i, 1});
    for (int v = 0; v < c.n(); ++v) b.edge(b.center(v), x);
    xs.push_back(x);
  }
  const int yq0 = b.add("yQ0", {Role::RefinedY, -1, 2});
  b.edge(xs[static_cast<std::size_t>(iota)], yq0);
  for (int q : rc.q0()) b.edge(yq0, b.periph(q));
  for (int i = 0; i < k; ++i) {
    const int y = b.add("y" + std::to_string(i), {Role::RefinedY, i, 2});
    b.edge(xs[static_cast<std::size_t>(i)], y);
    const VertexSet served = i == iota ? rc.q1() : cover.block(static_cast<std::size_t>(i));
    for (int q : served) b.edge(y, b.periph(q));
  }
  return b.finish("G'");
}

/// P plus one apex adjacent to every vertex of P.
inline Scaffold build_cone(const Graph& p) {
  detail::ScaffoldBuilder b(Graph::from_edges(1, {}, {"v"}), p);
  for (int q = 0; q < p.n(); ++q) b.edge(b.center(0), b.periph(q));
  return b.finish("cone");
}

/// Re-derives center and centered periphery of the built graph and compares
/// them, edges included, with the tagged C and P blocks.
inline VerificationReport verify_construction(const Scaffold& s, const Graph& c, const Graph& p) {
  VerificationReport rep;
  const UcgAnalysis a = ucg_analysis(s.graph);
  rep.is_ucg = a.is_ucg;
  rep.radius = a.radius;
  rep.intermediate_count = a.intermediate.size();
  rep.center_matches = a.center == s.center_set && s.graph.induced(s.center_set).same_edges(c);
  rep.periphery_matches = a.centered_periphery == s.periphery_set && s.graph.induced(s.periphery_set).same_edges(p);
  return rep;
}

}  // namespace ucg
