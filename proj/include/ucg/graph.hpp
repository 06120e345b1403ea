#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ucg/error.hpp"

namespace ucg {

/// Graphs are stored as one 64-bit adjacency word per vertex.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64).
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (int v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  return os << '}';
}

/// A distance in N ∪ {∞}. Infinity compares above every finite value and
/// absorbs addition.
class ExtDist {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  constexpr ExtDist() = default;
  constexpr ExtDist(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtDist infinity() { return ExtDist(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return value_ != kInfinite; }
  constexpr int value() const { return value_; }

  constexpr ExtDist operator+(ExtDist o) const {
    return (is_infinite() || o.is_infinite()) ? infinity() : ExtDist(value_ + o.value_);
  }
  constexpr auto operator<=>(const ExtDist&) const = default;

 private:
  int value_ = 0;
};

inline std::string to_string(ExtDist d) {
  return d.is_infinite() ? std::string("inf") : std::to_string(d.value());
}

inline std::ostream& operator<<(std::ostream& os, ExtDist d) { return os << to_string(d); }

class Graph;

/// All-pairs BFS distances plus the closed balls N_s[v] as bitsets.
class Distances {
 public:
  explicit Distances(const Graph& g);

  int n() const { return n_; }
  ExtDist operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u * n_ + v)]; }

  /// N_s[v]: vertices at finite distance <= s from v.
  VertexSet ball(int v, int s) const {
    const auto& layers = balls_[static_cast<std::size_t>(v)];
    if (s < 0) return {};
    return layers[static_cast<std::size_t>(std::min<int>(s, static_cast<int>(layers.size()) - 1))];
  }

  /// Union of N_s[v] over v in `from`.
  VertexSet ball(VertexSet from, int s) const {
    VertexSet out;
    for (int v : from) out |= ball(v, s);
    return out;
  }

  /// Vertices at distance exactly `d` from v (d finite).
  VertexSet sphere(int v, int d) const { return ball(v, d) - ball(v, d - 1); }

  /// d(S, p) with d(∅, p) = ∞.
  ExtDist to_set(VertexSet from, int p) const {
    ExtDist best = ExtDist::infinity();
    for (int v : from) best = std::min(best, (*this)(v, p));
    return best;
  }

  /// d(S, T) with the empty-set convention.
  ExtDist between(VertexSet a, VertexSet b) const {
    ExtDist best = ExtDist::infinity();
    for (int v : b) best = std::min(best, to_set(a, v));
    return best;
  }

  /// d(S, p) >= t, evaluated with bitsets.
  bool set_far(VertexSet from, int p, int t) const { return !ball(p, t - 1).intersects(from); }
  /// d(S, T) >= t.
  bool sets_far(VertexSet a, VertexSet b, int t) const { return !ball(a, t - 1).intersects(b); }

 private:
  int n_ = 0;
  std::vector<ExtDist> dist_;
  std::vector<std::vector<VertexSet>> balls_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with optional labels.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() : Graph(0, std::vector<VertexSet>{}) {}

  /// Builds from adjacency rows; throws InvalidGraph on loops or asymmetry.
  Graph(int n, std::vector<VertexSet> adjacency, std::vector<std::string> labels = {})
      : data_(std::make_shared<Data>()) {
    if (n < 0 || n > kMaxVertices)
      throw Error(ErrorCode::TooManyVertices, "graph has " + std::to_string(n) + " vertices; at most 64 supported");
    if (static_cast<int>(adjacency.size()) != n) throw Error(ErrorCode::InvalidGraph, "adjacency size mismatch");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw Error(ErrorCode::InvalidGraph, "label count mismatch");
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
      const VertexSet row = adjacency[static_cast<std::size_t>(v)];
      if (!row.subset_of(all)) throw Error(ErrorCode::InvalidGraph, "neighbor index out of range");
      if (row.contains(v)) throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(v));
      for (int u : row)
        if (!adjacency[static_cast<std::size_t>(u)].contains(v))
          throw Error(ErrorCode::InvalidGraph, "asymmetric adjacency");
    }
    data_->n = n;
    data_->adj = std::move(adjacency);
    data_->labels = std::move(labels);
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {}) {
    if (n < 0 || n > kMaxVertices)
      throw Error(ErrorCode::TooManyVertices, "graph has " + std::to_string(n) + " vertices; at most 64 supported");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
      if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
    }
    return Graph(n, std::move(adj), std::move(labels));
  }

  int n() const { return data_->n; }
  VertexSet vertices() const { return VertexSet::range(n()); }
  VertexSet neighbors(int v) const { return data_->adj[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(int v) const { return neighbors(v) | VertexSet::singleton(v); }
  bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  const std::vector<VertexSet>& adjacency() const { return data_->adj; }

  int edge_count() const {
    int twice = 0;
    for (const auto& row : data_->adj) twice += row.size();
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u)
      for (int v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const { return !data_->labels.empty(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::string label(int v) const {
    return has_labels() ? data_->labels[static_cast<std::size_t>(v)] : std::to_string(v);
  }

  Graph with_labels(std::vector<std::string> labels) const { return Graph(n(), data_->adj, std::move(labels)); }

  /// True for K_n with n >= 1 (every pair adjacent).
  bool is_complete() const {
    for (int v = 0; v < n(); ++v)
      if (neighbors(v) != vertices() - VertexSet::singleton(v)) return false;
    return n() >= 1;
  }

  bool is_connected() const {
    if (n() == 0) return true;
    return distances().ball(0, n()) == vertices();
  }

  /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in ascending order of
  /// the original index. Labels carry over.
  Graph induced(VertexSet keep) const {
    std::vector<int> old_index = keep.to_vector();
    std::vector<int> new_index(static_cast<std::size_t>(n()), -1);
    for (std::size_t i = 0; i < old_index.size(); ++i) new_index[static_cast<std::size_t>(old_index[i])] = static_cast<int>(i);
    std::vector<VertexSet> adj(old_index.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < old_index.size(); ++i) {
      for (int u : neighbors(old_index[i]) & keep) adj[i].insert(new_index[static_cast<std::size_t>(u)]);
      if (has_labels()) labels.push_back(label(old_index[i]));
    }
    return Graph(static_cast<int>(old_index.size()), std::move(adj), std::move(labels));
  }

  /// Same vertex count and identical edge sets (labels ignored).
  bool same_edges(const Graph& other) const { return n() == other.n() && adjacency() == other.adjacency(); }

  /// Shortest-path distances; computed once per graph value and shared by copies.
  const Distances& distances() const {
    std::call_once(data_->dist_once, [this] { data_->dist = std::make_unique<Distances>(*this); });
    return *data_->dist;
  }

 private:
  struct Data {
    int n = 0;
    std::vector<VertexSet> adj;
    std::vector<std::string> labels;
    std::once_flag dist_once;
    std::unique_ptr<Distances> dist;
  };
  std::shared_ptr<Data> data_;
};

inline Distances::Distances(const Graph& g)
    : n_(g.n()),
      dist_(static_cast<std::size_t>(g.n() * g.n()), ExtDist::infinity()),
      balls_(static_cast<std::size_t>(g.n())) {
  for (int s = 0; s < n_; ++s) {
    auto& cumulative = balls_[static_cast<std::size_t>(s)];
    VertexSet seen = VertexSet::singleton(s);
    VertexSet frontier = seen;
    int depth = 0;
    cumulative.push_back(seen);
    dist_[static_cast<std::size_t>(s * n_ + s)] = 0;
    while (true) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      next -= seen;
      if (next.empty()) break;
      ++depth;
      for (int v : next) dist_[static_cast<std::size_t>(s * n_ + v)] = depth;
      seen |= next;
      frontier = next;
      cumulative.push_back(seen);
    }
  }
}

}  // namespace ucg
