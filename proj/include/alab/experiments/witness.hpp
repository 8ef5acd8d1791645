#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alab/alteration.hpp"
#include "alab/experiments/params.hpp"
#include "alab/experiments/runner.hpp"
#include "alab/io.hpp"
#include "alab/patterns.hpp"

namespace alab {

struct AppendixWitness {
  int k = 0, n = 0, v_h = 0;
  double p = 0, delta = 0;
  double target = 0;        // δ C(k,2) p
  std::size_t t = 0;
  std::size_t t_power = 0;  // t^{v_H}
  std::size_t h_k = 0;      // copies with an edge inside K, counted exactly
  bool chain_holds = false; // |H_K| >= t^{v_H} >= target
  Graph planted;
};

/// Smallest t >= 1 with t^v >= target, by integer search.
inline std::size_t appendix_t(double target, int v) {
  std::size_t t = 1;
  auto power = [v](std::size_t x) {
    long double r = 1;
    for (int i = 0; i < v; ++i) r *= static_cast<long double>(x);
    return r;
  };
  while (power(t) < static_cast<long double>(target)) ++t;
  return t;
}

/// Plants the complete v_H-partite graph on v_H disjoint t-subsets of
/// K = {0..k-1} inside an n-vertex host and counts the H-copies touching K.
inline AppendixWitness run_appendix_witness(const Graph& h, int k, int n, double p, double delta) {
  if (k < 2 || n < k) throw std::invalid_argument("need 2 <= k <= n");
  if (!(delta > 0 && delta <= 1)) throw std::invalid_argument("delta must lie in (0, 1]");
  if (!(p > 0 && p <= 1)) throw std::invalid_argument("p must lie in (0, 1]");
  AppendixWitness w;
  w.k = k;
  w.n = n;
  w.p = p;
  w.delta = delta;
  w.v_h = h.vertex_count();
  w.target = delta * binomial(k, 2) * p;
  w.t = appendix_t(w.target, w.v_h);
  if (static_cast<std::size_t>(w.v_h) * w.t > static_cast<std::size_t>(k))
    throw std::invalid_argument("infeasible: v_H * t = " + std::to_string(w.v_h * w.t) +
                                " exceeds k = " + std::to_string(k));
  w.t_power = 1;
  for (int i = 0; i < w.v_h; ++i) w.t_power *= w.t;

  std::vector<Edge> es;
  const auto t = static_cast<Vertex>(w.t);
  for (Vertex a = 0; a < w.v_h * t; ++a)
    for (Vertex b = a + 1; b < w.v_h * t; ++b)
      if (a / t != b / t) es.push_back({a, b});
  w.planted = Graph(n, std::move(es));

  const auto index = enumerate_copies(w.planted, h);
  std::vector<Vertex> kset(static_cast<std::size_t>(k));
  std::iota(kset.begin(), kset.end(), 0);
  const auto in = detail::membership(kset, n);
  for (const auto& c : index.copies())
    w.h_k += std::any_of(c.edges.begin(), c.edges.end(), [&](std::size_t e) {
      return detail::edge_inside(index.host().edge(e), in);
    });
  w.chain_holds = w.h_k >= w.t_power && static_cast<double>(w.t_power) >= w.target;
  return w;
}

inline nlohmann::json to_json(const AppendixWitness& w) {
  return {{"experiment", "witness"}, {"k", w.k},         {"n", w.n},
          {"v_H", w.v_h},           {"p", w.p},         {"delta", w.delta},
          {"target", w.target},     {"t", w.t},         {"t_pow_vH", w.t_power},
          {"H_K", w.h_k},           {"chain_holds", w.chain_holds}};
}

struct RamseyCell {
  double C = 0, c = 0;
  int n = 0;
  double p = 0;
  bool p_clamped = false;
  std::size_t certified = 0, refuted = 0, undetermined = 0;
};

struct RamseySearchResult {
  int k = 0;
  std::vector<RamseyCell> cells;
  std::optional<Graph> best;  // largest certified witness
  int best_n = 0;
  double best_C = 0, best_c = 0;
  std::size_t best_trial = 0;
  std::optional<std::size_t> best_alpha;
};

/// Refined alteration of G(n,p) over a (C, c) grid, keeping the largest
/// certified witness for R(H, k) > n.
inline RamseySearchResult run_ramsey_search(const Graph& h, const std::string& name, int k,
                                            const std::vector<double>& C_grid,
                                            const std::vector<double>& c_grid, std::size_t trials,
                                            std::uint64_t seed,
                                            std::uint64_t budget = kDefaultIndependenceBudget) {
  RamseySearchResult res;
  res.k = k;
  const RandomSource src(seed);
  std::size_t cell_id = 0;
  for (double C : C_grid)
    for (double c : c_grid) {
      const auto ps =
          derive_parameters({UniformHypergraph::from_graph(h)}, {name}, 2, k, C, c);
      RamseyCell cell{C, c, ps.n, ps.p, ps.p_clamped, 0, 0, 0};
      struct Outcome {
        Verdict verdict = Verdict::undetermined;
        Graph g;
        std::size_t alpha = 0;
      };
      const auto outs = run_trials(trials, [&](std::size_t t) {
        const auto g = sample_gnp(ps.n, ps.p, src.stream("ramsey", cell_id * 1'000'003 + t));
        const auto altered = refined_alteration(g, h).output;
        const auto cert = ramsey_certificate(altered, h, static_cast<std::size_t>(k), budget);
        Outcome o;
        o.verdict = cert.verdict;
        if (cert.certified()) {
          o.g = altered;
          o.alpha = cert.independence->alpha;
        }
        return o;
      });
      for (std::size_t t = 0; t < outs.size(); ++t) {
        const auto& o = outs[t];
        if (o.verdict == Verdict::certified) {
          ++cell.certified;
          if (!res.best || ps.n > res.best_n) {
            res.best = o.g;
            res.best_n = ps.n;
            res.best_C = C;
            res.best_c = c;
            res.best_trial = t;
            res.best_alpha = o.alpha;
          }
        } else if (o.verdict == Verdict::refuted) {
          ++cell.refuted;
        } else {
          ++cell.undetermined;
        }
      }
      res.cells.push_back(cell);
      ++cell_id;
    }
  return res;
}

inline nlohmann::json to_json(const RamseySearchResult& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"C", c.C},
                     {"c", c.c},
                     {"n", c.n},
                     {"p", c.p},
                     {"p_clamped", c.p_clamped},
                     {"certified", c.certified},
                     {"refuted", c.refuted},
                     {"undetermined", c.undetermined}});
  nlohmann::json j = {{"experiment", "ramsey-search"}, {"k", r.k}, {"cells", std::move(cells)}};
  if (r.best) {
    j["best"] = {{"n", r.best_n},
                 {"C", r.best_C},
                 {"c", r.best_c},
                 {"trial", r.best_trial},
                 {"alpha", *r.best_alpha},
                 {"graph", to_json(*r.best)}};
  } else {
    j["best"] = nullptr;
  }
  return j;
}

}  // namespace alab
