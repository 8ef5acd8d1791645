#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"

namespace alab {

/// Anything the embedding search can run on: a graph, a hypergraph, or a
/// mutable game board.
template <class H>
concept HostGraph = requires(const H& h, Vertex v, std::span<const Vertex> t) {
  { h.vertex_count() } -> std::convertible_to<int>;
  { h.uniformity() } -> std::convertible_to<int>;
  { h.neighbors(v) };
  { h.edge_degree(v) } -> std::convertible_to<std::size_t>;
  { h.contains(t) } -> std::convertible_to<bool>;
};

/// Pattern preprocessed for embedding search.
struct Pattern {
  int n = 0;
  int r = 2;
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::vector<Vertex>> neighbors;
  std::vector<std::size_t> edge_degree;

  Pattern() = default;

  explicit Pattern(const UniformHypergraph& h)
      : n(h.vertex_count()), r(h.uniformity()), edges(h.edge_list()) {
    neighbors.resize(static_cast<std::size_t>(n));
    edge_degree.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges)
      for (auto v : e) {
        ++edge_degree[v];
        for (auto w : e)
          if (w != v) neighbors[v].push_back(w);
      }
    for (auto& nb : neighbors) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  explicit Pattern(const Graph& g) : Pattern(UniformHypergraph::from_graph(g)) {}

  std::size_t edge_count() const noexcept { return edges.size(); }
};

namespace detail {

struct SearchPlan {
  std::vector<Vertex> order;                    // pattern vertices in placement order
  std::vector<int> anchor;                      // earlier-placed pattern neighbor or -1
  std::vector<std::vector<std::size_t>> checks;  // pattern edges completed at each step
};

inline SearchPlan make_plan(const Pattern& p, std::span<const Vertex> first) {
  const auto n = static_cast<std::size_t>(p.n);
  SearchPlan plan;
  std::vector<int> pos(n, -1);
  std::vector<int> placed_nbrs(n, 0);
  auto place = [&](Vertex v) {
    pos[v] = static_cast<int>(plan.order.size());
    plan.order.push_back(v);
    for (auto w : p.neighbors[v]) ++placed_nbrs[w];
  };
  for (auto v : first) place(v);
  while (plan.order.size() < n) {
    Vertex best = -1;
    for (Vertex v = 0; v < p.n; ++v) {
      if (pos[v] >= 0) continue;
      if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && p.edge_degree[v] > p.edge_degree[best]))
        best = v;
    }
    place(best);
  }
  plan.anchor.assign(n, -1);
  plan.checks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = plan.order[i];
    int earliest = -1;
    for (auto w : p.neighbors[v])
      if (pos[w] >= 0 && static_cast<std::size_t>(pos[w]) < i && (earliest < 0 || pos[w] < earliest))
        earliest = pos[w];
    plan.anchor[i] = earliest < 0 ? -1 : plan.order[earliest];
  }
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    int last = -1;
    for (auto v : p.edges[e]) last = std::max(last, pos[v]);
    plan.checks[last].push_back(e);
  }
  return plan;
}

template <HostGraph H, class Visit>
struct EmbeddingSearch {
  const H& host;
  const Pattern& p;
  const SearchPlan& plan;
  std::span<const Vertex> fixed_images;
  Visit& visit;
  std::vector<Vertex> image;
  std::vector<Vertex> tuple;

  bool edges_ok(std::size_t step) {
    for (auto e : plan.checks[step]) {
      tuple.clear();
      for (auto v : p.edges[e]) tuple.push_back(image[v]);
      std::sort(tuple.begin(), tuple.end());
      if (!host.contains(std::span<const Vertex>(tuple))) return false;
    }
    return true;
  }

  bool used(Vertex x, std::size_t step) const {
    for (std::size_t j = 0; j < step; ++j)
      if (image[plan.order[j]] == x) return true;
    return false;
  }

  bool try_vertex(std::size_t step, Vertex x) {
    const Vertex pv = plan.order[step];
    if (host.edge_degree(x) < p.edge_degree[pv] || used(x, step)) return true;
    image[pv] = x;
    if (!edges_ok(step)) return true;
    return descend(step + 1);
  }

  // Returns false once the visitor asks to stop.
  bool descend(std::size_t step) {
    if (step == plan.order.size()) return visit(std::span<const Vertex>(image));
    if (step < fixed_images.size()) return try_vertex(step, fixed_images[step]);
    const int a = plan.anchor[step];
    if (a >= 0) {
      for (Vertex x : host.neighbors(image[a]))
        if (!try_vertex(step, x)) return false;
    } else {
      for (Vertex x = 0; x < host.vertex_count(); ++x)
        if (!try_vertex(step, x)) return false;
    }
    return true;
  }
};

}  // namespace detail

/// Visits every injective edge-preserving map V(pattern) -> V(host). The
/// visitor receives the image indexed by pattern vertex and returns false to
/// stop. `fixed` pins pattern vertices to host vertices before the search.
/// Returns false iff the visitor stopped the search.
template <HostGraph H, class Visit>
bool for_each_embedding(const H& host, const Pattern& p,
                        std::span<const std::pair<Vertex, Vertex>> fixed, Visit&& visit) {
  if (host.uniformity() != p.r) throw std::invalid_argument("host and pattern uniformity differ");
  if (p.n == 0) return visit(std::span<const Vertex>());
  if (p.n > host.vertex_count()) return true;
  std::vector<Vertex> first, images;
  for (auto [pv, hv] : fixed) {
    if (pv < 0 || pv >= p.n) throw std::out_of_range("fixed pattern vertex out of range");
    if (hv < 0 || hv >= host.vertex_count()) return true;
    first.push_back(pv);
    images.push_back(hv);
  }
  const auto plan = detail::make_plan(p, first);
  detail::EmbeddingSearch<H, std::remove_reference_t<Visit>> search{
      host, p, plan, images, visit, std::vector<Vertex>(static_cast<std::size_t>(p.n), -1), {}};
  return search.descend(0);
}

template <HostGraph H, class Visit>
bool for_each_embedding(const H& host, const Pattern& p, Visit&& visit) {
  return for_each_embedding(host, p, std::span<const std::pair<Vertex, Vertex>>(),
                            std::forward<Visit>(visit));
}

/// Visits embeddings whose image contains the given host edge (a sorted
/// tuple). One copy may be visited several times through different pattern
/// edges and orientations.
template <HostGraph H, class Visit>
bool for_each_embedding_through(const H& host, const Pattern& p, std::span<const Vertex> host_edge,
                                Visit&& visit) {
  if (static_cast<int>(host_edge.size()) != p.r)
    throw std::invalid_argument("host edge size differs from pattern uniformity");
  std::vector<Vertex> perm(host_edge.begin(), host_edge.end());
  std::sort(perm.begin(), perm.end());
  std::vector<std::pair<Vertex, Vertex>> fixed(perm.size());
  for (const auto& pe : p.edges) {
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) fixed[i] = {pe[i], perm[i]};
      if (!for_each_embedding(host, p, std::span<const std::pair<Vertex, Vertex>>(fixed), visit))
        return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

template <HostGraph H>
bool has_copy(const H& host, const Pattern& p) {
  return !for_each_embedding(host, p, [](std::span<const Vertex>) { return false; });
}

template <HostGraph H>
bool has_copy_through(const H& host, const Pattern& p, std::span<const Vertex> host_edge) {
  return !for_each_embedding_through(host, p, host_edge,
                                     [](std::span<const Vertex>) { return false; });
}

inline bool has_copy_through(const Graph& host, const Pattern& p, Edge e) {
  const std::array<Vertex, 2> t{e.u, e.v};
  return has_copy_through(host, p, std::span<const Vertex>(t));
}

}  // namespace alab
