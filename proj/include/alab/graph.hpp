#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace alab {

using Vertex = std::int32_t;

/// Unordered vertex pair in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t pair_key(Vertex a, Vertex b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

/// Immutable simple graph on vertices 0..n-1 with a sorted edge list and a
/// CSR adjacency index.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : Graph(n, {}) {}

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                std::to_string(e.v));
      e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge");
    build_index();
  }

  static Graph complete(int n) {
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) es.push_back({a, b});
    return Graph(n, std::move(es));
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    auto na = neighbors(a);
    auto nb = neighbors(b);
    if (na.size() > nb.size()) return std::binary_search(nb.begin(), nb.end(), a);
    return std::binary_search(na.begin(), na.end(), b);
  }

  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  // Uniform host interface shared with UniformHypergraph (tuples are sorted).
  int uniformity() const noexcept { return 2; }
  std::size_t edge_degree(Vertex v) const { return degree(v); }
  bool contains(std::span<const Vertex> tuple) const {
    return tuple.size() == 2 && has_edge(tuple[0], tuple[1]);
  }
  std::optional<std::size_t> edge_id(std::span<const Vertex> tuple) const {
    if (tuple.size() != 2) return std::nullopt;
    return edge_id(tuple[0], tuple[1]);
  }
  /// Graph on the same vertex set keeping only the given edge ids.
  Graph keep_edges(std::span<const std::size_t> ids) const {
    std::vector<Edge> es;
    es.reserve(ids.size());
    for (auto id : ids) es.push_back(edges_.at(id));
    return Graph(n_, std::move(es));
  }

  /// Induced subgraph relabeled to 0..|vs|-1 in the order of `vs`.
  Graph induced(std::span<const Vertex> vs) const {
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      check_vertex(vs[i]);
      if (pos[vs[i]] != -1) throw std::invalid_argument("repeated vertex in induced()");
      pos[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& e : edges_)
      if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back(make_edge(pos[e.u], pos[e.v]));
    return Graph(static_cast<int>(vs.size()), std::move(es));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
  }

  void build_index() {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.assign(edges_.size() * 2, 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n_; ++v)
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

}  // namespace alab
