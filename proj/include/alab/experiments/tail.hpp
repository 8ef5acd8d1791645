#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "alab/copy_index.hpp"
#include "alab/experiments/runner.hpp"
#include "alab/packing.hpp"
#include "alab/random_graphs.hpp"

namespace alab {

struct TailPoint {
  std::size_t x = 0;
  std::size_t hits = 0;      // trials with Z >= x
  double frequency = 0;
  double bound = 0;          // (e mu / x)^x
  double sigma = 0;          // binomial-proportion standard error at the bound
  bool holds = false;        // frequency <= bound + 3 sigma
};

struct TailSummary {
  int n = 0;
  std::vector<Vertex> k_set;
  double p = 0;
  std::size_t trials = 0;
  std::size_t collection_size = 0;  // |S|
  std::size_t edges_per_set = 0;
  double mu = 0;
  std::size_t packing_bound = 0;    // maximum packing of all of S
  std::vector<std::size_t> z_histogram;
  std::vector<TailPoint> grid;
  bool all_hold = true;
};

/// Edge sets (ids in K_n) of the H-copies of K_n meeting K in exactly r
/// vertices with an edge inside K.
inline std::vector<std::vector<std::size_t>> tail_collection(int n, const Graph& h,
                                                             std::span<const Vertex> k_set) {
  const auto kn = Graph::complete(n);
  const auto index = enumerate_copies(kn, h);
  const auto k = detail::normalize_k_set(k_set, n);
  const auto in = detail::membership(k, n);
  std::vector<std::vector<std::size_t>> s;
  for (const auto& c : index.copies()) {
    std::size_t inside = 0;
    for (auto v : c.vertices) inside += in[v] != 0;
    if (inside != 2) continue;
    const bool touches = std::any_of(c.edges.begin(), c.edges.end(), [&](std::size_t e) {
      return detail::edge_inside(index.host().edge(e), in);
    });
    if (touches) s.push_back(c.edges);
  }
  return s;
}

/// Monte Carlo check of Pr(Z >= x) <= (e mu / x)^x, where Z is the largest
/// edge-disjoint subfamily of S present in G(n,p). An empty grid means
/// every integer x with mu < x <= packing bound.
inline TailSummary run_tail_check(int n, const Graph& h, std::span<const Vertex> k_set, double p,
                                  std::vector<std::size_t> grid, std::size_t trials,
                                  std::uint64_t seed, const PackingOptions& opt = {}) {
  detail::check_probability(p);
  TailSummary sum;
  sum.n = n;
  sum.k_set = detail::normalize_k_set(k_set, n);
  sum.p = p;
  sum.trials = trials;
  const auto s = tail_collection(n, h, sum.k_set);
  sum.collection_size = s.size();
  sum.edges_per_set = h.edge_count();
  sum.mu = static_cast<double>(s.size()) * std::pow(p, static_cast<double>(h.edge_count()));
  sum.packing_bound = max_disjoint_packing(s, opt).size();
  if (grid.empty())
    for (std::size_t x = static_cast<std::size_t>(std::floor(sum.mu)) + 1; x <= sum.packing_bound; ++x)
      if (static_cast<double>(x) > sum.mu) grid.push_back(x);

  const RandomSource src(seed);
  const auto kn = Graph::complete(n);
  const auto zs = run_trials(trials, [&](std::size_t t) -> std::size_t {
    const auto labels = derive_labels(n, src.stream("tail", t));
    std::vector<char> present(kn.edge_count());
    for (std::size_t e = 0; e < kn.edge_count(); ++e)
      present[e] = labels.label(kn.edge(e).u, kn.edge(e).v) < p;
    std::vector<std::vector<std::size_t>> live;
    for (const auto& set : s)
      if (std::all_of(set.begin(), set.end(), [&](std::size_t e) { return present[e] != 0; }))
        live.push_back(set);
    return max_disjoint_packing(live, opt).size();
  });

  sum.z_histogram.assign(sum.packing_bound + 1, 0);
  for (auto z : zs) ++sum.z_histogram[z];
  const double T = static_cast<double>(std::max<std::size_t>(trials, 1));
  for (auto x : grid) {
    TailPoint pt;
    pt.x = x;
    for (auto z : zs) pt.hits += z >= x;
    pt.frequency = static_cast<double>(pt.hits) / T;
    pt.bound = x == 0 ? 1.0 : std::pow(std::numbers::e * sum.mu / static_cast<double>(x), static_cast<double>(x));
    const double b = std::clamp(pt.bound, 0.0, 1.0);
    pt.sigma = std::sqrt(b * (1 - b) / T);
    pt.holds = pt.frequency <= pt.bound + 3 * pt.sigma;
    sum.all_hold &= pt.holds;
    sum.grid.push_back(pt);
  }
  return sum;
}

inline nlohmann::json to_json(const TailSummary& s) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& g : s.grid)
    grid.push_back({{"x", g.x},
                    {"hits", g.hits},
                    {"frequency", g.frequency},
                    {"bound", g.bound},
                    {"sigma", g.sigma},
                    {"holds", g.holds}});
  return {{"experiment", "tail"},
          {"n", s.n},
          {"K", s.k_set},
          {"p", s.p},
          {"trials", s.trials},
          {"collection_size", s.collection_size},
          {"mu", s.mu},
          {"packing_bound", s.packing_bound},
          {"z_histogram", s.z_histogram},
          {"grid", std::move(grid)},
          {"all_hold", s.all_hold}};
}

}  // namespace alab
