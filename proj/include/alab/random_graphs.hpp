#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"
#include "alab/random.hpp"

namespace alab {

namespace detail {

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("probability must lie in [0,1], got " + std::to_string(p));
}

inline std::uint64_t tuple_key(std::span<const Vertex> t) noexcept {
  std::uint64_t h = 0x8A5CD789635D2DFFull ^ t.size();
  for (auto v : t) h = splitmix64(h ^ static_cast<std::uint32_t>(v));
  return h;
}

}  // namespace detail

/// Uniform label u_e in [0,1) for every pair of an n-vertex ground set. Labels
/// are computed on demand from the stream key and the canonical pair, so a
/// pair's label never changes and no table is preallocated.
class EdgeLabelTable {
 public:
  EdgeLabelTable(int n, RandomStream stream) : n_(n), stream_(stream) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int vertex_count() const noexcept { return n_; }

  double label(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
      throw std::out_of_range("label queried for an invalid pair");
    return stream_.uniform_at(pair_key(a, b));
  }

  /// The graph {e : u_e < p}. Monotone in p for a fixed table.
  Graph threshold(double p) const {
    detail::check_probability(p);
    std::vector<Edge> es;
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        if (stream_.uniform_at(pair_key(a, b)) < p) es.push_back({a, b});
    return Graph(n_, std::move(es));
  }

 private:
  int n_;
  RandomStream stream_;
};

inline EdgeLabelTable derive_labels(int n, const RandomStream& rng) { return EdgeLabelTable(n, rng); }

/// Binomial random graph G(n,p). Pair {u,v} is present iff its label is below
/// p, so samples from one stream are nested in both n and p.
inline Graph sample_gnp(int n, double p, const RandomStream& rng) {
  detail::check_probability(p);
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return EdgeLabelTable(n, rng).threshold(p);
}

/// Binomial r-uniform hypergraph: every r-subset present independently.
inline UniformHypergraph sample_uniform_hypergraph(int n, int r, double p, const RandomStream& rng) {
  detail::check_probability(p);
  if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (n < r)
    throw std::invalid_argument("hypergraph needs n >= r (n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
  std::vector<std::vector<Vertex>> es;
  std::vector<Vertex> t(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) t[i] = i;
  while (true) {
    if (rng.uniform_at(detail::tuple_key(t)) < p) es.push_back(t);
    int i = r - 1;
    while (i >= 0 && t[i] == n - r + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < r; ++j) t[j] = t[j - 1] + 1;
  }
  return UniformHypergraph(n, r, std::move(es));
}

}  // namespace alab
