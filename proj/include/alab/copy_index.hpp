#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "alab/embedding.hpp"
#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"

namespace alab {

/// One subgraph of the host isomorphic to the pattern. Edge ids index the
/// host's sorted edge list; ordering is lexicographic on (edges, vertices).
struct Copy {
  std::vector<std::size_t> edges;
  std::vector<Vertex> vertices;

  friend auto operator<=>(const Copy&, const Copy&) = default;
};

/// All copies of a pattern in a host, with per-edge coverage and the
/// copy-degree maxima.
class CopyIndex {
 public:
  CopyIndex(UniformHypergraph host, UniformHypergraph pattern, std::vector<Copy> copies)
      : host_(std::move(host)), pattern_(std::move(pattern)), copies_(std::move(copies)) {
    coverage_.resize(host_.edge_count());
    for (std::size_t c = 0; c < copies_.size(); ++c)
      for (auto e : copies_[c].edges) coverage_[e].push_back(c);
    for (const auto& cov : coverage_) delta_ = std::max(delta_, cov.size());
    std::unordered_map<std::uint64_t, std::size_t> pair_count;
    const std::uint64_t m = host_.edge_count();
    for (const auto& cp : copies_)
      for (std::size_t i = 0; i < cp.edges.size(); ++i)
        for (std::size_t j = i + 1; j < cp.edges.size(); ++j) {
          auto& c = pair_count[cp.edges[i] * m + cp.edges[j]];
          delta2_ = std::max(delta2_, ++c);
        }
  }

  const UniformHypergraph& host() const noexcept { return host_; }
  const UniformHypergraph& pattern() const noexcept { return pattern_; }
  const std::vector<Copy>& copies() const noexcept { return copies_; }
  std::size_t size() const noexcept { return copies_.size(); }

  /// Ids of copies containing the host edge.
  std::span<const std::size_t> coverage(std::size_t edge_id) const { return coverage_.at(edge_id); }
  bool covered(std::size_t edge_id) const { return !coverage_.at(edge_id).empty(); }

  /// Maximum number of copies through one edge.
  std::size_t delta() const noexcept { return delta_; }
  /// Maximum number of copies through a pair of distinct edges.
  std::size_t delta2() const noexcept { return delta2_; }

  /// Host edges lying in at least one copy.
  std::vector<std::size_t> covered_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < coverage_.size(); ++e)
      if (!coverage_[e].empty()) out.push_back(e);
    return out;
  }

 private:
  UniformHypergraph host_;
  UniformHypergraph pattern_;
  std::vector<Copy> copies_;
  std::vector<std::vector<std::size_t>> coverage_;
  std::size_t delta_ = 0;
  std::size_t delta2_ = 0;
};

namespace detail {

template <HostGraph H>
Copy copy_from_image(const H& host, const Pattern& p, std::span<const Vertex> image) {
  Copy c;
  c.vertices.assign(image.begin(), image.end());
  std::sort(c.vertices.begin(), c.vertices.end());
  std::vector<Vertex> t;
  for (const auto& pe : p.edges) {
    t.clear();
    for (auto v : pe) t.push_back(image[v]);
    std::sort(t.begin(), t.end());
    c.edges.push_back(*host.edge_id(std::span<const Vertex>(t)));
  }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

template <HostGraph H>
std::vector<Copy> collect_copies(const H& host, const Pattern& p) {
  std::set<Copy> seen;
  for_each_embedding(host, p, [&](std::span<const Vertex> image) {
    seen.insert(copy_from_image(host, p, image));
    return true;
  });
  return {seen.begin(), seen.end()};
}

}  // namespace detail

inline CopyIndex enumerate_copies(const UniformHypergraph& host, const UniformHypergraph& pattern) {
  if (pattern.edge_count() == 0) throw std::invalid_argument("pattern must have at least one edge");
  if (host.uniformity() != pattern.uniformity())
    throw std::invalid_argument("host and pattern uniformity differ");
  auto copies = detail::collect_copies(host, Pattern(pattern));
  return CopyIndex(host, pattern, std::move(copies));
}

inline CopyIndex enumerate_copies(const Graph& host, const Graph& pattern) {
  if (pattern.edge_count() == 0) throw std::invalid_argument("pattern must have at least one edge");
  auto copies = detail::collect_copies(host, Pattern(pattern));
  return CopyIndex(UniformHypergraph::from_graph(host), UniformHypergraph::from_graph(pattern),
                   std::move(copies));
}

struct KSetStats {
  std::vector<Vertex> k_set;
  std::size_t x = 0;                    // host edges inside K
  std::size_t y = 0;                    // of those, covered by a copy
  std::optional<std::size_t> y_prime;  // covered by a copy of any family member
};

namespace detail {

inline std::vector<Vertex> normalize_k_set(std::span<const Vertex> k_set, int n) {
  std::vector<Vertex> k(k_set.begin(), k_set.end());
  for (auto v : k)
    if (v < 0 || v >= n) throw std::out_of_range("K-set vertex out of range: " + std::to_string(v));
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

inline std::vector<char> membership(std::span<const Vertex> k, int n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (auto v : k) in[v] = 1;
  return in;
}

inline bool edge_inside(std::span<const Vertex> e, const std::vector<char>& in) {
  return std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; });
}

}  // namespace detail

/// X_K, Y_K and (with a family of indices over the same host) Y'_K. Y'_K
/// counts edges covered by the primary index or any family member.
inline KSetStats k_set_stats(const CopyIndex& index, std::span<const Vertex> k_set,
                             std::span<const CopyIndex> family = {}) {
  const auto& host = index.host();
  for (const auto& f : family)
    if (!(f.host() == host)) throw std::invalid_argument("family indices must share the host");
  KSetStats s;
  s.k_set = detail::normalize_k_set(k_set, host.vertex_count());
  const auto in = detail::membership(s.k_set, host.vertex_count());
  std::size_t yp = 0;
  for (std::size_t e = 0; e < host.edge_count(); ++e) {
    if (!detail::edge_inside(host.edge(e), in)) continue;
    ++s.x;
    const bool cov = index.covered(e);
    s.y += cov;
    if (!family.empty())
      yp += cov || std::any_of(family.begin(), family.end(),
                               [&](const CopyIndex& f) { return f.covered(e); });
  }
  if (!family.empty()) s.y_prime = yp;
  return s;
}

struct GlobalCopyStats {
  std::size_t y = 0;                // total copies
  std::vector<std::size_t> y_v;     // copies through each vertex
};

inline GlobalCopyStats global_copy_stats(const CopyIndex& index) {
  GlobalCopyStats g;
  g.y = index.size();
  g.y_v.assign(static_cast<std::size_t>(index.host().vertex_count()), 0);
  for (const auto& c : index.copies())
    for (auto v : c.vertices) ++g.y_v[v];
  return g;
}

inline nlohmann::json summary_json(const CopyIndex& index) {
  return {{"host_n", index.host().vertex_count()},
          {"host_m", index.host().edge_count()},
          {"pattern_v", index.pattern().vertex_count()},
          {"pattern_e", index.pattern().edge_count()},
          {"copies", index.size()},
          {"covered_edges", index.covered_edges().size()},
          {"delta", index.delta()},
          {"delta2", index.delta2()}};
}

inline nlohmann::json to_json(const KSetStats& s) {
  nlohmann::json j = {{"K", s.k_set}, {"X_K", s.x}, {"Y_K", s.y}};
  if (s.y_prime) j["Y_prime_K"] = *s.y_prime;
  return j;
}

}  // namespace alab
