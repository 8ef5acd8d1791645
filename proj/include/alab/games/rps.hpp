#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "alab/board.hpp"
#include "alab/copy_index.hpp"
#include "alab/embedding.hpp"
#include "alab/games/transcript.hpp"
#include "alab/random.hpp"
#include "alab/random_graphs.hpp"

namespace alab {

/// Ramsey, Paper, Scissors position. `legal` holds the unproposed pairs whose
/// acceptance would not complete an H-copy, in lexicographic order.
struct RpsState {
  int n = 0;
  Board graph;
  std::unordered_set<std::uint64_t> proposed;
  std::vector<Edge> legal;
  std::size_t turn = 0;

  bool is_legal(Edge e) const { return std::binary_search(legal.begin(), legal.end(), e); }
};

class ProposerStrategy {
 public:
  virtual ~ProposerStrategy() = default;
  virtual std::string name() const = 0;
  /// A legal pair, or nullopt to signal that none remains.
  virtual std::optional<Edge> propose(const RpsState& state, RandomStream& rng) = 0;
};

/// The Decider never sees the pending proposal; (pair, decision) is revealed
/// through observe() once the turn is over.
class DeciderStrategy {
 public:
  virtual ~DeciderStrategy() = default;
  virtual std::string name() const = 0;
  virtual bool decide(std::size_t turn, std::span<const char> own_history, RandomStream& rng) = 0;
  virtual void observe(std::size_t /*turn*/, Edge /*pair*/, bool /*accepted*/) {}
};

class RandomLegalProposer final : public ProposerStrategy {
 public:
  std::string name() const override { return "random"; }
  std::optional<Edge> propose(const RpsState& s, RandomStream& rng) override {
    if (s.legal.empty()) return std::nullopt;
    return s.legal[rng.below(s.legal.size())];
  }
};

/// Prefers pairs among the lowest-indexed vertices: minimizes (max, min).
class DenseFirstProposer final : public ProposerStrategy {
 public:
  std::string name() const override { return "dense-first"; }
  std::optional<Edge> propose(const RpsState& s, RandomStream&) override {
    if (s.legal.empty()) return std::nullopt;
    return *std::min_element(s.legal.begin(), s.legal.end(), [](Edge a, Edge b) {
      return std::pair(a.v, a.u) < std::pair(b.v, b.u);
    });
  }
};

/// Accepts every proposal independently with probability p.
class RandomDecider final : public DeciderStrategy {
 public:
  explicit RandomDecider(double p) : p_(p) { detail::check_probability(p); }
  std::string name() const override { return "random"; }
  bool decide(std::size_t, std::span<const char>, RandomStream& rng) override {
    return rng.bernoulli(p_);
  }

 private:
  double p_;
};

class ConstantDecider final : public DeciderStrategy {
 public:
  explicit ConstantDecider(bool accept) : accept_(accept) {}
  std::string name() const override { return accept_ ? "always-accept" : "always-reject"; }
  bool decide(std::size_t, std::span<const char>, RandomStream&) override { return accept_; }

 private:
  bool accept_;
};

namespace detail {

inline bool completes_copy(Board& b, const Pattern& p, Edge e) {
  b.add_edge(e);
  const std::array<Vertex, 2> t{e.u, e.v};
  const bool hit = has_copy_through(b, p, std::span<const Vertex>(t));
  b.remove_edge(e);
  return hit;
}

/// Turn loop shared by the blind engine and the coupling harness. `decide`
/// receives the pair only so the harness can consult edge labels.
class RpsEngine {
 public:
  RpsEngine(int n, const Graph& h) : pattern_(h) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (h.edge_count() == 0) throw std::invalid_argument("pattern must have at least one edge");
    state_.n = n;
    state_.graph = Board(n);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (!completes_copy(state_.graph, pattern_, {a, b})) state_.legal.push_back({a, b});
  }

  const RpsState& state() const noexcept { return state_; }

  template <class Decide>
  GameTranscript run(ProposerStrategy& proposer, RandomStream& prng, RandomStream& drng,
                     Decide&& decide) {
    GameTranscript t;
    t.game = "rps";
    while (true) {
      const auto before = prng.position() + drng.position();
      auto pick = proposer.propose(state_, prng);
      if (!pick) {
        if (!state_.legal.empty())
          throw RuleViolation(state_.turn, "proposer gave up while legal pairs remain");
        break;
      }
      const Edge e = make_edge(pick->u, pick->v);
      if (e.v >= state_.n) throw RuleViolation(state_.turn, "pair outside the vertex set");
      if (state_.proposed.count(pair_key(e.u, e.v)))
        throw RuleViolation(state_.turn, "pair proposed twice");
      if (!state_.is_legal(e)) throw RuleViolation(state_.turn, "pair would complete an H-copy");
      const bool accept = decide(state_.turn, e);
      apply(e, accept);
      t.turns.push_back({e, accept ? 1 : 0, prng.position() + drng.position() - before});
    }
    t.outcome = Outcome::exhausted;
    t.final_graph = state_.graph.to_graph(state_.n);
    return t;
  }

  void apply(Edge e, bool accept) {
    state_.proposed.insert(pair_key(e.u, e.v));
    state_.legal.erase(std::lower_bound(state_.legal.begin(), state_.legal.end(), e));
    if (accept) {
      state_.graph.add_edge(e);
      std::erase_if(state_.legal,
                    [&](const Edge& f) { return completes_copy(state_.graph, pattern_, f); });
    }
    ++state_.turn;
  }

 private:
  Pattern pattern_;
  RpsState state_;
};

}  // namespace detail

/// Plays one game until no legal proposal remains. The proposer and the
/// decider draw from separate substreams of `rng`.
inline GameTranscript run_rps(int n, const Graph& h, ProposerStrategy& proposer,
                              DeciderStrategy& decider, const RandomStream& rng) {
  detail::RpsEngine engine(n, h);
  auto prng = rng.split(1), drng = rng.split(2);
  std::vector<char> history;
  auto t = engine.run(proposer, prng, drng, [&](std::size_t turn, Edge) {
    const bool d = decider.decide(turn, history, drng);
    history.push_back(d ? 1 : 0);
    return d;
  });
  for (std::size_t i = 0; i < t.turns.size(); ++i)
    decider.observe(i, t.turns[i].pair, t.turns[i].decision != 0);
  return t;
}

/// Re-applies a transcript under the rules and returns the final graph.
/// Throws RuleViolation if any recorded proposal was illegal.
inline Graph replay_rps(int n, const Graph& h, const GameTranscript& t) {
  detail::RpsEngine engine(n, h);
  for (const auto& turn : t.turns) {
    const Edge e = make_edge(turn.pair.u, turn.pair.v);
    if (!engine.state().is_legal(e))
      throw RuleViolation(engine.state().turn, "illegal proposal in transcript");
    engine.apply(e, turn.decision != 0);
  }
  if (!engine.state().legal.empty())
    throw RuleViolation(engine.state().turn, "transcript ends while legal pairs remain");
  return engine.state().graph.to_graph(n);
}

struct CouplingReport {
  Graph game_graph;  // G
  Graph gnp;         // G_{n,p} from the same labels
  bool property_a = false;
  bool property_b = false;
  std::vector<Edge> difference;          // E(G_{n,p}) \ E(G)
  std::vector<Copy> witnesses;           // one H-copy of G_{n,p} per difference edge
  std::optional<Edge> counterexample;
  GameTranscript transcript;
};

/// Plays RPS with the decider "accept e iff u_e < p" and checks
/// E(G) ⊆ E(G_{n,p}) and that each edge of E(G_{n,p}) \ E(G) lies in an
/// H-copy of G_{n,p}.
inline CouplingReport coupled_rps_check(int n, const Graph& h, ProposerStrategy& proposer,
                                        double p, const EdgeLabelTable& labels,
                                        const RandomStream& rng) {
  detail::check_probability(p);
  if (labels.vertex_count() != n) throw std::invalid_argument("labels cover a different vertex set");
  detail::RpsEngine engine(n, h);
  auto prng = rng.split(1), drng = rng.split(2);
  CouplingReport rep;
  rep.transcript =
      engine.run(proposer, prng, drng, [&](std::size_t, Edge e) { return labels.label(e.u, e.v) < p; });
  rep.game_graph = rep.transcript.final_graph;
  rep.gnp = labels.threshold(p);

  rep.property_a = std::all_of(rep.game_graph.edges().begin(), rep.game_graph.edges().end(),
                               [&](const Edge& e) { return rep.gnp.has_edge(e.u, e.v); });
  if (!rep.property_a)
    for (const auto& e : rep.game_graph.edges())
      if (!rep.gnp.has_edge(e.u, e.v)) {
        rep.counterexample = e;
        break;
      }

  rep.property_b = true;
  const Pattern pat(h);
  for (const auto& e : rep.gnp.edges()) {
    if (rep.game_graph.has_edge(e.u, e.v)) continue;
    rep.difference.push_back(e);
    std::optional<Copy> w;
    const std::array<Vertex, 2> t{e.u, e.v};
    for_each_embedding_through(rep.gnp, pat, std::span<const Vertex>(t),
                               [&](std::span<const Vertex> image) {
                                 w = detail::copy_from_image(rep.gnp, pat, image);
                                 return false;
                               });
    if (!w) {
      rep.property_b = false;
      if (!rep.counterexample) rep.counterexample = e;
      continue;
    }
    rep.witnesses.push_back(std::move(*w));
  }
  return rep;
}

inline std::unique_ptr<ProposerStrategy> make_proposer(const std::string& name) {
  if (name == "random") return std::make_unique<RandomLegalProposer>();
  if (name == "dense-first") return std::make_unique<DenseFirstProposer>();
  throw std::invalid_argument("unknown proposer '" + name + "'");
}

}  // namespace alab
