#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "alab/graph.hpp"

namespace alab {

/// Mutable simple graph used while a game or a sequential alteration is in
/// progress. The vertex set grows on demand.
class Board {
 public:
  Board() = default;
  explicit Board(int n) { ensure_vertex(n - 1); }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int uniformity() const noexcept { return 2; }
  std::size_t edge_count() const noexcept { return keys_.size(); }

  void ensure_vertex(Vertex v) {
    if (v >= vertex_count()) adj_.resize(static_cast<std::size_t>(v) + 1);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    if (v < 0 || v >= vertex_count()) return {};
    return adj_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t edge_degree(Vertex v) const { return degree(v); }

  bool has_edge(Vertex a, Vertex b) const { return a != b && keys_.count(pair_key(a, b)) != 0; }
  bool contains(std::span<const Vertex> t) const { return t.size() == 2 && has_edge(t[0], t[1]); }

  void add_edge(Edge e) {
    if (e.u == e.v || e.u < 0) throw std::invalid_argument("invalid edge");
    if (!keys_.insert(pair_key(e.u, e.v)).second) throw std::invalid_argument("edge already present");
    ensure_vertex(e.v);
    insert_sorted(adj_[e.u], e.v);
    insert_sorted(adj_[e.v], e.u);
  }

  void remove_edge(Edge e) {
    if (keys_.erase(pair_key(e.u, e.v)) == 0) throw std::invalid_argument("edge not present");
    erase_sorted(adj_[e.u], e.v);
    erase_sorted(adj_[e.v], e.u);
  }

  Graph to_graph(int n = -1) const {
    std::vector<Edge> es;
    es.reserve(edge_count());
    for (Vertex a = 0; a < vertex_count(); ++a)
      for (auto b : adj_[a])
        if (a < b) es.push_back({a, b});
    return Graph(std::max(n, vertex_count()), std::move(es));
  }

 private:
  static void insert_sorted(std::vector<Vertex>& v, Vertex x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }
  static void erase_sorted(std::vector<Vertex>& v, Vertex x) {
    v.erase(std::lower_bound(v.begin(), v.end(), x));
  }

  std::vector<std::vector<Vertex>> adj_;
  std::unordered_set<std::uint64_t> keys_;
};

}  // namespace alab
