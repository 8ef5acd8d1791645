#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alab/clique.hpp"
#include "alab/copy_index.hpp"

namespace alab {

class PackingInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PackingOptions {
  std::size_t copy_cap = 5000;        // largest conflict graph solved exactly
  std::uint64_t node_budget = 10'000'000;
};

namespace detail {

/// max sum x s.t. sum of x over the columns touching each row <= 1, x >= 0,
/// by dense primal simplex. Returns nullopt if the pivot cap is hit.
inline std::optional<double> packing_lp(const std::vector<std::vector<std::size_t>>& cols, std::size_t m,
                                        std::vector<double>& x) {
  const std::size_t n = cols.size();
  const std::size_t w = n + m + 1;
  std::vector<double> t((m + 1) * w, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * w + c]; };
  for (std::size_t j = 0; j < n; ++j) {
    for (auto r : cols[j]) at(r, j) = 1;
    at(m, j) = -1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    at(i, n + i) = 1;
    at(i, w - 1) = 1;
    basis[i] = n + i;
  }
  constexpr double eps = 1e-9;
  const std::size_t cap = 50 * (n + m) + 100;
  std::size_t stall = 0;
  for (std::size_t it = 0;; ++it) {
    if (it == cap) return std::nullopt;
    const bool bland = stall > n + m;
    std::size_t enter = w;
    double most = -eps;
    for (std::size_t c = 0; c + 1 < w; ++c)
      if (at(m, c) < most) {
        enter = c;
        if (bland) break;
        most = at(m, c);
      }
    if (enter == w) break;
    std::size_t leave = m;
    double ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double a = at(i, enter);
      if (a <= eps) continue;
      const double r = at(i, w - 1) / a;
      if (leave == m || r < ratio - eps || (r <= ratio + eps && basis[i] < basis[leave])) {
        leave = i;
        ratio = r;
      }
    }
    if (leave == m) return std::nullopt;  // unbounded cannot happen; treat as failure
    stall = ratio <= eps ? stall + 1 : 0;
    const double piv = at(leave, enter);
    for (std::size_t c = 0; c < w; ++c) at(leave, c) /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (std::abs(f) <= eps) continue;
      for (std::size_t c = 0; c < w; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[leave] = enter;
  }
  x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = at(i, w - 1);
  return at(m, w - 1);
}

/// Branch and bound on the set-packing LP relaxation.
class PackingSearch {
 public:
  PackingSearch(std::span<const std::vector<std::size_t>> sets, const std::vector<Bitset>& conflict,
                std::uint64_t budget, std::vector<std::size_t> incumbent)
      : sets_(sets), conflict_(conflict), budget_(budget), best_(std::move(incumbent)) {}

  bool run() {
    Bitset alive(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) alive.set(i);
    node(alive);
    return !aborted_;
  }
  std::vector<std::size_t> best() const {
    auto b = best_;
    std::sort(b.begin(), b.end());
    return b;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::span<const std::vector<std::size_t>> sets_;
  const std::vector<Bitset>& conflict_;
  std::uint64_t budget_, nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> best_, cur_;

  void offer(const std::vector<std::size_t>& extra) {
    if (cur_.size() + extra.size() <= best_.size()) return;
    best_ = cur_;
    best_.insert(best_.end(), extra.begin(), extra.end());
  }

  void node(Bitset alive) {
    if (aborted_) return;
    if (nodes_++ >= budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t depth = cur_.size();
    // Sets with no live conflict belong to some optimum.
    alive.for_each([&](std::size_t s) {
      if ((conflict_[s] & alive).none()) {
        cur_.push_back(s);
        alive.reset(s);
      }
    });
    explore(alive);
    cur_.resize(depth);
  }

  void explore(Bitset& alive) {
    std::vector<std::size_t> ids;
    alive.for_each([&](std::size_t s) { ids.push_back(s); });
    if (ids.empty()) {
      offer({});
      return;
    }
    // Rows: elements shared by at least two live sets.
    std::map<std::size_t, std::vector<std::size_t>> holders;
    for (std::size_t j = 0; j < ids.size(); ++j)
      for (auto e : sets_[ids[j]]) holders[e].push_back(j);
    std::vector<std::vector<std::size_t>> cols(ids.size());
    std::size_t m = 0;
    for (const auto& [e, hs] : holders) {
      if (hs.size() < 2) continue;
      for (auto j : hs) cols[j].push_back(m);
      ++m;
    }
    std::vector<double> x;
    const auto lp = packing_lp(cols, m, x);
    const std::size_t ub = lp ? static_cast<std::size_t>(std::floor(*lp + 1e-6)) : ids.size();
    if (cur_.size() + ub <= best_.size()) return;
    if (!lp) x.assign(ids.size(), 0.5);

    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
    std::vector<std::size_t> greedy;
    Bitset blocked(sets_.size());
    for (auto j : order) {
      const auto s = ids[j];
      if (blocked.test(s)) continue;
      greedy.push_back(s);
      conflict_[s].for_each([&](std::size_t o) { blocked.set(o); });
    }
    offer(greedy);
    if (cur_.size() + ub <= best_.size()) return;

    std::size_t pick = order.front();
    double frac = 1;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const double f = std::abs(x[j] - 0.5);
      if (f < frac - 1e-9) {
        frac = f;
        pick = j;
      }
    }
    const auto s = ids[pick];
    Bitset take = alive;
    take.subtract(conflict_[s]);
    take.reset(s);
    cur_.push_back(s);
    node(take);
    cur_.pop_back();
    alive.reset(s);
    node(alive);
  }
};

}  // namespace detail

/// Exact maximum collection of pairwise edge-disjoint edge sets. A clique
/// search settles most instances; the rest go to LP-bounded branch and
/// bound. Throws PackingInfeasible when the instance exceeds the cap or the
/// combined node budget.
inline std::vector<std::size_t> max_disjoint_packing(std::span<const std::vector<std::size_t>> sets,
                                                     const PackingOptions& opt = {}) {
  const std::size_t n = sets.size();
  if (n > opt.copy_cap)
    throw PackingInfeasible("exact packing infeasible: " + std::to_string(n) +
                            " candidate sets exceed the cap of " + std::to_string(opt.copy_cap));
  std::vector<Bitset> conflict(n, Bitset(n));
  std::vector<std::pair<std::size_t, std::size_t>> incidence;
  for (std::size_t i = 0; i < n; ++i)
    for (auto e : sets[i]) incidence.push_back({e, i});
  std::sort(incidence.begin(), incidence.end());
  for (std::size_t a = 0; a < incidence.size();) {
    std::size_t b = a;
    while (b < incidence.size() && incidence[b].first == incidence[a].first) ++b;
    for (std::size_t i = a; i < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j) {
        conflict[incidence[i].second].set(incidence[j].second);
        conflict[incidence[j].second].set(incidence[i].second);
      }
    a = b;
  }
  const std::uint64_t first = std::min<std::uint64_t>(opt.node_budget, 20'000);
  auto res = max_independent_set(conflict, first);
  if (res.exact) return res.clique;
  const std::uint64_t rest = opt.node_budget > res.nodes ? opt.node_budget - res.nodes : 0;
  detail::PackingSearch search(sets, conflict, rest, res.clique);
  if (!search.run())
    throw PackingInfeasible("exact packing infeasible: search budget of " +
                            std::to_string(opt.node_budget) + " nodes exhausted");
  return search.best();
}

/// Greedy inclusion-maximal edge-disjoint selection in the given order.
inline std::vector<std::size_t> greedy_disjoint_packing(std::span<const std::vector<std::size_t>> sets) {
  std::set<std::size_t> used;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (std::any_of(sets[i].begin(), sets[i].end(), [&](std::size_t e) { return used.count(e); }))
      continue;
    used.insert(sets[i].begin(), sets[i].end());
    chosen.push_back(i);
  }
  return chosen;
}

/// The copy classes around a vertex set K and the three packings bounding Y_K.
struct PackingReport {
  std::vector<Vertex> k_set;
  std::size_t h_k = 0;       // copies with an edge inside K
  std::size_t h_star_k = 0;  // of those, meeting K in exactly r vertices
  std::vector<std::size_t> i_k;                           // maximum packing of H*_K (copy ids)
  std::vector<std::size_t> t_k;                           // maximal packing of H_K \ H*_K
  std::vector<std::pair<std::size_t, std::size_t>> p_k;   // maximal packing of qualifying unions
  std::size_t y_k = 0;
  std::size_t e_h = 0;
  std::size_t delta = 0;
  std::uint64_t claim2_rhs = 0;
  bool claim2_holds = false;
};

/// Claim-2 audit: Y_K <= |I_K| + 2 e_H^2 (|T_K| + |P_K|) Delta_H.
inline PackingReport packing_report(const CopyIndex& index, std::span<const Vertex> k_set,
                                    const PackingOptions& opt = {}) {
  const auto& host = index.host();
  const int r = host.uniformity();
  PackingReport rep;
  rep.k_set = detail::normalize_k_set(k_set, host.vertex_count());
  const auto in = detail::membership(rep.k_set, host.vertex_count());
  rep.y_k = k_set_stats(index, rep.k_set).y;
  rep.e_h = index.pattern().edge_count();
  rep.delta = index.delta();

  std::vector<std::size_t> star, other;  // copy ids in lexicographic copy order
  std::vector<std::vector<Vertex>> star_trace;  // V(copy) ∩ K for star copies
  for (std::size_t c = 0; c < index.size(); ++c) {
    const auto& cp = index.copies()[c];
    const bool touches = std::any_of(cp.edges.begin(), cp.edges.end(), [&](std::size_t e) {
      return detail::edge_inside(host.edge(e), in);
    });
    if (!touches) continue;
    ++rep.h_k;
    std::vector<Vertex> trace;
    for (auto v : cp.vertices)
      if (in[v]) trace.push_back(v);
    if (static_cast<int>(trace.size()) == r) {
      star.push_back(c);
      star_trace.push_back(std::move(trace));
    } else {
      other.push_back(c);
    }
  }
  rep.h_star_k = star.size();

  std::vector<std::vector<std::size_t>> star_edges;
  for (auto c : star) star_edges.push_back(index.copies()[c].edges);
  for (auto i : max_disjoint_packing(star_edges, opt)) rep.i_k.push_back(star[i]);

  std::vector<std::vector<std::size_t>> other_edges;
  for (auto c : other) other_edges.push_back(index.copies()[c].edges);
  for (auto i : greedy_disjoint_packing(other_edges)) rep.t_k.push_back(other[i]);

  // Pairs of distinct H*_K copies sharing an edge with different traces on K.
  std::vector<std::size_t> pos(index.size(), SIZE_MAX);
  for (std::size_t i = 0; i < star.size(); ++i) pos[star[i]] = i;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t e = 0; e < host.edge_count(); ++e) {
    std::vector<std::size_t> local;
    for (auto c : index.coverage(e))
      if (pos[c] != SIZE_MAX) local.push_back(pos[c]);
    for (std::size_t a = 0; a < local.size(); ++a)
      for (std::size_t b = a + 1; b < local.size(); ++b) {
        const auto i = std::min(local[a], local[b]), j = std::max(local[a], local[b]);
        if (star_trace[i] != star_trace[j]) pairs.insert({i, j});
      }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pair_list(pairs.begin(), pairs.end());
  std::vector<std::vector<std::size_t>> unions;
  for (auto [i, j] : pair_list) {
    std::vector<std::size_t> u;
    std::set_union(star_edges[i].begin(), star_edges[i].end(), star_edges[j].begin(),
                   star_edges[j].end(), std::back_inserter(u));
    unions.push_back(std::move(u));
  }
  for (auto idx : greedy_disjoint_packing(unions))
    rep.p_k.push_back({star[pair_list[idx].first], star[pair_list[idx].second]});

  const std::uint64_t e_h = rep.e_h;
  rep.claim2_rhs = rep.i_k.size() + 2 * e_h * e_h * (rep.t_k.size() + rep.p_k.size()) * rep.delta;
  rep.claim2_holds = rep.y_k <= rep.claim2_rhs;
  return rep;
}

inline nlohmann::json to_json(const PackingReport& r) {
  return {{"K", r.k_set},
          {"H_K", r.h_k},
          {"H_star_K", r.h_star_k},
          {"I_K", r.i_k.size()},
          {"T_K", r.t_k.size()},
          {"P_K", r.p_k.size()},
          {"Y_K", r.y_k},
          {"e_H", r.e_h},
          {"delta_H", r.delta},
          {"claim2_rhs", r.claim2_rhs},
          {"claim2_holds", r.claim2_holds}};
}

}  // namespace alab
