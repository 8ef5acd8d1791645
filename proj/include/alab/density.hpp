#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"

namespace alab {

/// Exact rational with arbitrary-precision numerator and denominator, always
/// kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

struct DensityReport {
  Rational value;
  std::vector<Vertex> witness;  // vertex set whose induced subgraph attains `value`
  bool strictly_balanced = false;
  int uniformity = 2;
};

/// Maximum pattern size accepted by the brute-force density routines.
inline constexpr int kMaxDensityVertices = 24;

/// The bracketed density term for a sub(hyper)graph with v vertices and e
/// edges in the r-uniform setting (r = 2 gives the graph case).
inline Rational density_term(int v, std::size_t e, int r) {
  if (v >= r + 1) return Rational(static_cast<long long>(e) - 1, v - r);
  if (v == r && e == 1) return Rational(1, r);
  return Rational(0);
}

namespace detail {

struct MaskedPattern {
  int n = 0;
  int r = 2;
  std::vector<std::uint32_t> edges;
};

inline MaskedPattern mask_pattern(const UniformHypergraph& h) {
  if (h.vertex_count() > kMaxDensityVertices)
    throw std::invalid_argument("pattern has " + std::to_string(h.vertex_count()) +
                                " vertices; density brute force supports at most " +
                                std::to_string(kMaxDensityVertices));
  MaskedPattern mp{h.vertex_count(), h.uniformity(), {}};
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::uint32_t m = 0;
    for (auto v : h.edge(i)) m |= 1u << v;
    mp.edges.push_back(m);
  }
  return mp;
}

inline std::size_t edges_inside(const MaskedPattern& mp, std::uint32_t set) {
  std::size_t c = 0;
  for (auto e : mp.edges) c += (e & ~set) == 0;
  return c;
}

inline std::vector<Vertex> mask_vertices(std::uint32_t m) {
  std::vector<Vertex> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1u) out.push_back(v);
  return out;
}

}  // namespace detail

/// Maximum r-density over all sub-hypergraphs, with strict-balancedness
/// verdict. Induced sub-hypergraphs dominate for a fixed vertex set, so the
/// search runs over vertex subsets only.
inline DensityReport mr_report(const UniformHypergraph& h) {
  if (h.edge_count() == 0) throw std::invalid_argument("density undefined for an edgeless pattern");
  const auto mp = detail::mask_pattern(h);
  const std::uint32_t full = mp.n == 32 ? ~0u : (1u << mp.n) - 1;

  Rational best(-1);
  std::uint32_t best_mask = 0;
  Rational best_proper(-1);
  for (std::uint64_t s = 0; s <= full; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    const int v = std::popcount(set);
    const Rational d = density_term(v, detail::edges_inside(mp, set), mp.r);
    if (d > best || (d == best && std::popcount(best_mask) > v)) {
      best = d;
      best_mask = set;
    }
    if (set != full && d > best_proper) best_proper = d;
  }
  // Proper spanning subgraphs: removing an edge from the full vertex set.
  const Rational spanning = density_term(mp.n, mp.edges.size() - 1, mp.r);
  if (spanning > best_proper) best_proper = spanning;

  DensityReport rep;
  rep.value = best;
  rep.witness = detail::mask_vertices(best_mask);
  rep.strictly_balanced = best_proper < best;
  rep.uniformity = mp.r;
  return rep;
}

inline DensityReport m2_report(const Graph& g) {
  return mr_report(UniformHypergraph::from_graph(g));
}

/// Edge-minimal subgraph H0 with m2(H0) = m2(H), searched by ascending edge
/// count and then lexicographically over the sorted edge list. Returns H
/// unchanged when it is already strictly 2-balanced; otherwise the result is
/// relabeled onto the vertices it touches, in increasing original order.
inline Graph minimal_balanced_core(const Graph& h) {
  const auto full = m2_report(h);
  if (full.strictly_balanced) return h;

  const auto& es = h.edges();
  const std::size_t m = es.size();
  std::vector<std::size_t> pick;
  for (std::size_t s = 1; s <= m; ++s) {
    pick.resize(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      std::uint64_t vmask = 0;
      for (auto i : pick) vmask |= (1ull << es[i].u) | (1ull << es[i].v);
      if (density_term(std::popcount(vmask), s, 2) == full.value) {
        std::vector<Vertex> relabel(static_cast<std::size_t>(h.vertex_count()), -1);
        int next = 0;
        for (int v = 0; v < h.vertex_count(); ++v)
          if (vmask >> v & 1u) relabel[v] = next++;
        std::vector<Edge> core;
        for (auto i : pick) core.push_back(make_edge(relabel[es[i].u], relabel[es[i].v]));
        Graph out(next, std::move(core));
        const auto check = m2_report(out);
        if (!check.strictly_balanced || check.value != full.value)
          throw std::logic_error("balanced core search produced a non-balanced subgraph");
        return out;
      }
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == m - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("no balanced core found");
}

inline nlohmann::json to_json(const DensityReport& r) {
  return {{"value", to_string(r.value)},
          {"numerator", boost::multiprecision::numerator(r.value).str()},
          {"denominator", boost::multiprecision::denominator(r.value).str()},
          {"approx", to_double(r.value)},
          {"witness", r.witness},
          {"strictly_balanced", r.strictly_balanced},
          {"uniformity", r.uniformity}};
}

}  // namespace alab
