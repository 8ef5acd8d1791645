#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "alab/graph.hpp"

namespace alab {

/// Immutable r-uniform hypergraph. Edges are sorted r-tuples stored flat in
/// lexicographic order, so lookups are binary searches.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;

  UniformHypergraph(int n, int r) : UniformHypergraph(n, r, {}) {}

  UniformHypergraph(int n, int r, std::vector<std::vector<Vertex>> edges) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    for (auto& e : edges) {
      if (static_cast<int>(e.size()) != r)
        throw std::invalid_argument("edge of size " + std::to_string(e.size()) +
                                    " in a " + std::to_string(r) + "-uniform hypergraph");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("edge with repeated vertex");
      if (e.front() < 0 || e.back() >= n) throw std::out_of_range("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    flat_.reserve(edges.size() * static_cast<std::size_t>(r));
    for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
    build_index();
  }

  static UniformHypergraph from_graph(const Graph& g) {
    std::vector<std::vector<Vertex>> es;
    es.reserve(g.edge_count());
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    return UniformHypergraph(g.vertex_count(), 2, std::move(es));
  }

  Graph to_graph() const {
    if (r_ != 2) throw std::invalid_argument("to_graph requires a 2-uniform hypergraph");
    std::vector<Edge> es;
    es.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) es.push_back({flat_[2 * i], flat_[2 * i + 1]});
    return Graph(n_, std::move(es));
  }

  static UniformHypergraph complete(int n, int r) {
    std::vector<std::vector<Vertex>> es;
    std::vector<Vertex> t(static_cast<std::size_t>(r));
    if (n >= r) {
      for (int i = 0; i < r; ++i) t[i] = i;
      while (true) {
        es.push_back(t);
        int i = r - 1;
        while (i >= 0 && t[i] == n - r + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < r; ++j) t[j] = t[j - 1] + 1;
      }
    }
    return UniformHypergraph(n, r, std::move(es));
  }

  int vertex_count() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return r_ ? flat_.size() / r_ : 0; }

  std::span<const Vertex> edge(std::size_t id) const {
    if (id >= edge_count()) throw std::out_of_range("edge id out of range");
    return {flat_.data() + id * r_, static_cast<std::size_t>(r_)};
  }

  std::vector<std::vector<Vertex>> edge_list() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) {
      auto e = edge(i);
      out.emplace_back(e.begin(), e.end());
    }
    return out;
  }

  /// Vertices sharing at least one edge with v, sorted.
  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {nbr_.data() + nbr_off_[v], nbr_.data() + nbr_off_[v + 1]};
  }

  /// Ids of edges containing v.
  std::span<const std::size_t> incident(Vertex v) const {
    check_vertex(v);
    return {inc_.data() + inc_off_[v], inc_.data() + inc_off_[v + 1]};
  }
  std::size_t edge_degree(Vertex v) const { return incident(v).size(); }

  std::optional<std::size_t> edge_id(std::span<const Vertex> tuple) const {
    if (static_cast<int>(tuple.size()) != r_) return std::nullopt;
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto e = edge(mid);
      if (std::lexicographical_compare(e.begin(), e.end(), tuple.begin(), tuple.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < edge_count() && std::ranges::equal(edge(lo), tuple)) return lo;
    return std::nullopt;
  }
  bool contains(std::span<const Vertex> tuple) const { return edge_id(tuple).has_value(); }

  UniformHypergraph keep_edges(std::span<const std::size_t> ids) const {
    std::vector<std::vector<Vertex>> es;
    for (auto id : ids) {
      auto e = edge(id);
      es.emplace_back(e.begin(), e.end());
    }
    return UniformHypergraph(n_, r_, std::move(es));
  }

  UniformHypergraph induced(std::span<const Vertex> vs) const {
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      check_vertex(vs[i]);
      if (pos[vs[i]] != -1) throw std::invalid_argument("repeated vertex in induced()");
      pos[vs[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<Vertex>> es;
    for (std::size_t i = 0; i < edge_count(); ++i) {
      auto e = edge(i);
      std::vector<Vertex> t;
      for (auto v : e) {
        if (pos[v] < 0) break;
        t.push_back(pos[v]);
      }
      if (t.size() == e.size()) es.push_back(std::move(t));
    }
    return UniformHypergraph(static_cast<int>(vs.size()), r_, std::move(es));
  }

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.flat_ == b.flat_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
  }

  void build_index() {
    const auto n = static_cast<std::size_t>(n_);
    std::vector<std::vector<std::size_t>> inc(n);
    std::vector<std::vector<Vertex>> nb(n);
    for (std::size_t i = 0; i < edge_count(); ++i) {
      auto e = edge(i);
      for (auto v : e) {
        inc[v].push_back(i);
        for (auto w : e)
          if (w != v) nb[v].push_back(w);
      }
    }
    inc_off_.assign(n + 1, 0);
    nbr_off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(nb[v].begin(), nb[v].end());
      nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
      inc_off_[v + 1] = inc_off_[v] + inc[v].size();
      nbr_off_[v + 1] = nbr_off_[v] + nb[v].size();
      inc_.insert(inc_.end(), inc[v].begin(), inc[v].end());
      nbr_.insert(nbr_.end(), nb[v].begin(), nb[v].end());
    }
  }

  int n_ = 0;
  int r_ = 2;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> inc_off_{0}, inc_;
  std::vector<std::size_t> nbr_off_{0};
  std::vector<Vertex> nbr_;
};

}  // namespace alab
