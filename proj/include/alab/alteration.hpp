#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alab/board.hpp"
#include "alab/clique.hpp"
#include "alab/copy_index.hpp"
#include "alab/embedding.hpp"
#include "alab/graph.hpp"

namespace alab {

enum class AlterationMethod { refined, greedy, krivelevich };

inline std::string to_string(AlterationMethod m) {
  switch (m) {
    case AlterationMethod::refined: return "refined";
    case AlterationMethod::greedy: return "greedy";
    case AlterationMethod::krivelevich: return "krivelevich";
  }
  return "?";
}

inline AlterationMethod parse_alteration_method(const std::string& s) {
  if (s == "refined") return AlterationMethod::refined;
  if (s == "greedy") return AlterationMethod::greedy;
  if (s == "krivelevich") return AlterationMethod::krivelevich;
  throw std::invalid_argument("unknown alteration method '" + s + "'");
}

struct AlterationResult {
  Graph input;
  Graph output;
  std::vector<Edge> removed;
  AlterationMethod method = AlterationMethod::refined;
  std::vector<Copy> collection;  // krivelevich only: the edge-disjoint copies deleted
};

namespace detail {

inline AlterationResult finish(const Graph& g, std::vector<std::size_t> removed_ids,
                               AlterationMethod m) {
  std::sort(removed_ids.begin(), removed_ids.end());
  AlterationResult res;
  res.input = g;
  res.method = m;
  std::vector<std::size_t> kept;
  std::size_t j = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (j < removed_ids.size() && removed_ids[j] == e) {
      res.removed.push_back(g.edge(e));
      ++j;
    } else {
      kept.push_back(e);
    }
  }
  res.output = g.keep_edges(kept);
  return res;
}

}  // namespace detail

/// Deletes every edge of G that lies in some H-copy.
inline AlterationResult refined_alteration(const Graph& g, const Graph& h) {
  const auto index = enumerate_copies(g, h);
  return detail::finish(g, index.covered_edges(), AlterationMethod::refined);
}

/// Scans `order` and accepts an edge unless it completes an H-copy together
/// with the edges accepted so far. The classical procedure is the H = K3
/// case; other patterns are an extension.
inline AlterationResult greedy_alteration(const Graph& g, const Graph& h, std::vector<Edge> order) {
  if (h.edge_count() == 0) throw std::invalid_argument("pattern must have at least one edge");
  for (auto& e : order) e = make_edge(e.u, e.v);
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.edges()) throw std::invalid_argument("order is not a permutation of E(G)");
  }
  const Pattern p(h);
  Board accepted(g.vertex_count());
  std::vector<std::size_t> rejected;
  for (const auto& e : order) {
    accepted.add_edge(e);
    const std::array<Vertex, 2> t{e.u, e.v};
    if (has_copy_through(accepted, p, std::span<const Vertex>(t))) {
      accepted.remove_edge(e);
      rejected.push_back(*g.edge_id(e.u, e.v));
    }
  }
  return detail::finish(g, std::move(rejected), AlterationMethod::greedy);
}

inline AlterationResult greedy_alteration(const Graph& g, const Graph& h) {
  return greedy_alteration(g, h, g.edges());
}

/// Deletes the edges of an inclusion-maximal collection of edge-disjoint
/// copies, chosen greedily in lexicographic copy order.
inline AlterationResult krivelevich_alteration(const Graph& g, const Graph& h) {
  const auto index = enumerate_copies(g, h);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> removed;
  std::vector<Copy> collection;
  for (const auto& c : index.copies()) {
    if (std::any_of(c.edges.begin(), c.edges.end(), [&](std::size_t e) { return used[e]; })) continue;
    for (auto e : c.edges) {
      used[e] = 1;
      removed.push_back(e);
    }
    collection.push_back(c);
  }
  auto res = detail::finish(g, std::move(removed), AlterationMethod::krivelevich);
  res.collection = std::move(collection);
  return res;
}

inline AlterationResult alter(const Graph& g, const Graph& h, AlterationMethod m) {
  switch (m) {
    case AlterationMethod::refined: return refined_alteration(g, h);
    case AlterationMethod::greedy: return greedy_alteration(g, h);
    case AlterationMethod::krivelevich: return krivelevich_alteration(g, h);
  }
  throw std::invalid_argument("unknown alteration method");
}

struct IndependenceResult {
  std::size_t alpha = 0;            // exact value, or best lower bound when inexact
  std::size_t upper_bound = 0;
  std::vector<Vertex> witness;      // an independent set of size `alpha`
  bool exact = false;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultIndependenceBudget = 10'000'000;

/// Independence number via maximum clique on the complement. Budget
/// exhaustion yields certified bounds with exact == false.
inline IndependenceResult independence_number(const Graph& g,
                                              std::uint64_t budget = kDefaultIndependenceBudget) {
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Bitset> comp(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w && !g.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(w))) comp[v].set(w);
  const auto res = MaxCliqueSolver(comp).solve(budget);
  IndependenceResult out;
  out.alpha = res.clique.size();
  out.upper_bound = res.upper_bound;
  out.exact = res.exact;
  out.nodes = res.nodes;
  for (auto v : res.clique) out.witness.push_back(static_cast<Vertex>(v));
  return out;
}

enum class Verdict { certified, refuted, undetermined };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

struct RamseyCertificate {
  Verdict verdict = Verdict::undetermined;
  std::optional<Copy> violating_copy;         // present when G contains H
  std::optional<IndependenceResult> independence;
  bool certified() const noexcept { return verdict == Verdict::certified; }
};

/// Certifies that G is H-free with alpha(G) < k, i.e. that G witnesses R(H,k) > n.
inline RamseyCertificate ramsey_certificate(const Graph& g, const Graph& h, std::size_t k,
                                            std::uint64_t budget = kDefaultIndependenceBudget) {
  RamseyCertificate cert;
  const Pattern p(h);
  std::optional<Copy> found;
  for_each_embedding(g, p, [&](std::span<const Vertex> image) {
    found = detail::copy_from_image(g, p, image);
    return false;
  });
  if (found) {
    cert.verdict = Verdict::refuted;
    cert.violating_copy = std::move(found);
    return cert;
  }
  auto ind = independence_number(g, budget);
  if (ind.alpha >= k)
    cert.verdict = Verdict::refuted;
  else if (ind.exact || ind.upper_bound < k)
    cert.verdict = Verdict::certified;
  else
    cert.verdict = Verdict::undetermined;
  cert.independence = std::move(ind);
  return cert;
}

inline nlohmann::json to_json(const IndependenceResult& r) {
  return {{"alpha", r.alpha},
          {"upper_bound", r.upper_bound},
          {"witness", r.witness},
          {"exact", r.exact},
          {"nodes", r.nodes}};
}

inline nlohmann::json to_json(const RamseyCertificate& c) {
  nlohmann::json j = {{"verdict", to_string(c.verdict)}};
  if (c.violating_copy) j["violating_copy_vertices"] = c.violating_copy->vertices;
  if (c.independence) j["independence"] = to_json(*c.independence);
  return j;
}

}  // namespace alab
