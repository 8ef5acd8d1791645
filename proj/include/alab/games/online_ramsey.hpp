#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alab/board.hpp"
#include "alab/clique.hpp"
#include "alab/density.hpp"
#include "alab/embedding.hpp"
#include "alab/games/transcript.hpp"
#include "alab/random.hpp"
#include "alab/random_graphs.hpp"

namespace alab {

enum class Color : int { blue = 0, red = 1 };

/// L = floor((k-1)/4).
inline int online_ramsey_l(int k) { return (k - 1) / 4; }

/// N = floor(L n / 2).
inline std::size_t online_ramsey_n(int k, std::size_t n) {
  return static_cast<std::size_t>(online_ramsey_l(k)) * n / 2;
}

/// Position of the Builder/Painter game on a lazily grown pool of vertices
/// 0..pool_cap-1. U is the set of vertices incident to at least L placed
/// edges, refreshed at the end of each turn.
struct OnlineRamseyState {
  int k = 0;
  int L = 0;
  int pool_cap = 0;
  Board placed, red, blue;
  std::vector<std::size_t> builder_degree;
  std::vector<char> in_u;
  std::size_t u_size = 0;
  std::size_t turn = 0;

  bool in_U(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < in_u.size() && in_u[v];
  }
};

class BuilderStrategy {
 public:
  virtual ~BuilderStrategy() = default;
  virtual std::string name() const = 0;
  /// A new pair inside the pool, or nullopt to stop.
  virtual std::optional<Edge> place(const OnlineRamseyState& s, RandomStream& rng) = 0;
};

class PainterStrategy {
 public:
  virtual ~PainterStrategy() = default;
  virtual std::string name() const = 0;
  virtual Color paint(const OnlineRamseyState& s, Edge e, RandomStream& rng) = 0;
};

/// Uniformly random unplaced pair inside the first `pool` vertices.
class RandomBuilder final : public BuilderStrategy {
 public:
  explicit RandomBuilder(int pool) : pool_(pool) {
    if (pool < 2) throw std::invalid_argument("builder pool needs at least two vertices");
  }
  std::string name() const override { return "random"; }

  std::optional<Edge> place(const OnlineRamseyState& s, RandomStream& rng) override {
    const int pool = std::min(pool_, s.pool_cap);
    if (pool < 2) return std::nullopt;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(pool)));
      const auto b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(pool)));
      if (a != b && !s.placed.has_edge(a, b)) return make_edge(a, b);
    }
    std::vector<Edge> free;
    for (Vertex a = 0; a < pool; ++a)
      for (Vertex b = a + 1; b < pool; ++b)
        if (!s.placed.has_edge(a, b)) free.push_back({a, b});
    if (free.empty()) return std::nullopt;
    return free[rng.below(free.size())];
  }

 private:
  int pool_;
};

/// Raises hubs 0..2k-1 into U with stars on fresh leaves, then fills in the
/// pairs among hubs 0..k-1, then among all 2k hubs.
class PumpBuilder final : public BuilderStrategy {
 public:
  explicit PumpBuilder(int k) : k_(k) {
    if (k < 2) throw std::invalid_argument("pump builder needs k >= 2");
  }
  std::string name() const override { return "pump"; }

  std::optional<Edge> place(const OnlineRamseyState& s, RandomStream&) override {
    const int hubs = std::min(2 * k_, s.pool_cap);
    next_leaf_ = std::max(next_leaf_, hubs);
    for (Vertex h = 0; h < hubs; ++h) {
      if (s.placed.degree(h) >= static_cast<std::size_t>(s.L)) continue;
      if (next_leaf_ >= s.pool_cap) break;
      return Edge{h, next_leaf_++};
    }
    for (int top : {std::min(k_, hubs), hubs})
      for (Vertex a = 0; a < top; ++a)
        for (Vertex b = a + 1; b < top; ++b)
          if (!s.placed.has_edge(a, b)) return Edge{a, b};
    return std::nullopt;
  }

 private:
  int k_;
  Vertex next_leaf_ = 0;
};

/// Blue by default; an edge inside U is, with probability p, colored red
/// unless that would complete a red copy of `core`.
class ThresholdPainter final : public PainterStrategy {
 public:
  ThresholdPainter(const Graph& core, double p) : core_(core), p_(p) {
    detail::check_probability(p);
  }
  std::string name() const override { return "threshold"; }

  Color paint(const OnlineRamseyState& s, Edge e, RandomStream& rng) override {
    if (!s.in_U(e.u) || !s.in_U(e.v)) return Color::blue;
    if (!rng.bernoulli(p_)) return Color::blue;
    ++attempts_;
    red_.add_edge(e);
    const std::array<Vertex, 2> t{e.u, e.v};
    if (has_copy_through(red_, core_, std::span<const Vertex>(t))) {
      red_.remove_edge(e);
      ++discarded_;
      return Color::blue;
    }
    return Color::red;
  }

  std::size_t attempts() const noexcept { return attempts_; }
  std::size_t discarded() const noexcept { return discarded_; }

 private:
  Pattern core_;
  double p_;
  Board red_;
  std::size_t attempts_ = 0, discarded_ = 0;
};

class ConstantPainter final : public PainterStrategy {
 public:
  explicit ConstantPainter(Color c) : c_(c) {}
  std::string name() const override { return c_ == Color::red ? "always-red" : "always-blue"; }
  Color paint(const OnlineRamseyState&, Edge, RandomStream&) override { return c_; }

 private:
  Color c_;
};

namespace detail {

/// Whether `b` has a K_k containing the edge e (which must be present).
inline bool has_clique_through(const Board& b, Edge e, int k) {
  if (k <= 2) return true;
  std::vector<Vertex> common;
  std::set_intersection(b.neighbors(e.u).begin(), b.neighbors(e.u).end(), b.neighbors(e.v).begin(),
                        b.neighbors(e.v).end(), std::back_inserter(common));
  const auto need = static_cast<std::size_t>(k - 2);
  if (common.size() < need) return false;
  std::vector<Bitset> adj(common.size(), Bitset(common.size()));
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (b.has_edge(common[i], common[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return MaxCliqueSolver(adj).solve(std::numeric_limits<std::uint64_t>::max(), need).clique.size() >=
         need;
}

class OnlineRamseyEngine {
 public:
  OnlineRamseyEngine(const Graph& h, int k, int pool_cap) : pattern_(h) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (pool_cap < 2) throw std::invalid_argument("pool cap must be at least 2");
    s_.k = k;
    s_.L = online_ramsey_l(k);
    s_.pool_cap = pool_cap;
  }

  const OnlineRamseyState& state() const noexcept { return s_; }

  /// Places and colors one edge; returns the outcome if the game ends.
  std::optional<Outcome> apply(Edge e, Color c) {
    if (e.u == e.v || e.u < 0 || e.v < 0) throw RuleViolation(s_.turn, "invalid pair");
    e = make_edge(e.u, e.v);
    if (e.v >= s_.pool_cap) throw RuleViolation(s_.turn, "vertex outside the pool");
    if (s_.placed.has_edge(e.u, e.v)) throw RuleViolation(s_.turn, "edge placed twice");
    s_.placed.add_edge(e);
    (c == Color::red ? s_.red : s_.blue).add_edge(e);
    if (s_.builder_degree.size() <= static_cast<std::size_t>(e.v)) {
      s_.builder_degree.resize(static_cast<std::size_t>(e.v) + 1, 0);
      s_.in_u.resize(static_cast<std::size_t>(e.v) + 1, 0);
    }
    for (auto v : {e.u, e.v})
      if (++s_.builder_degree[v] >= static_cast<std::size_t>(s_.L) && !s_.in_u[v]) {
        s_.in_u[v] = 1;
        ++s_.u_size;
      }
    ++s_.turn;
    const std::array<Vertex, 2> t{e.u, e.v};
    if (c == Color::red && has_copy_through(s_.red, pattern_, std::span<const Vertex>(t)))
      return Outcome::red_h;
    if (c == Color::blue && has_clique_through(s_.blue, e, s_.k)) return Outcome::blue_k;
    return std::nullopt;
  }

  GameTranscript finish(GameTranscript t, Outcome o) const {
    t.game = "builder";
    t.outcome = o;
    const int n = std::max(s_.placed.vertex_count(), 0);
    t.final_graph = s_.red.to_graph(n);
    t.blue = s_.blue.to_graph(n);
    return t;
  }

 private:
  Pattern pattern_;
  OnlineRamseyState s_;
};

}  // namespace detail

/// Plays until a red H, a blue K_k, builder exhaustion, or `turn_cap` turns.
/// U is seeded empty and every vertex starts with builder-degree 0; with
/// L = 0 a vertex joins U after its first edge.
inline GameTranscript run_online_ramsey(const Graph& h, int k, BuilderStrategy& builder,
                                        PainterStrategy& painter, std::size_t turn_cap,
                                        int pool_cap, const RandomStream& rng) {
  detail::OnlineRamseyEngine engine(h, k, pool_cap);
  auto brng = rng.split(1), prng = rng.split(2);
  GameTranscript t;
  while (true) {
    if (engine.state().turn >= turn_cap) return engine.finish(std::move(t), Outcome::turn_cap);
    const auto before = brng.position() + prng.position();
    const auto pick = builder.place(engine.state(), brng);
    if (!pick) return engine.finish(std::move(t), Outcome::exhausted);
    const Edge e = make_edge(pick->u, pick->v);
    if (e.v >= pool_cap) throw RuleViolation(engine.state().turn, "vertex outside the pool");
    if (engine.state().placed.has_edge(e.u, e.v))
      throw RuleViolation(engine.state().turn, "edge placed twice");
    const Color c = painter.paint(engine.state(), e, prng);
    const auto end = engine.apply(e, c);
    t.turns.push_back({e, static_cast<int>(c), brng.position() + prng.position() - before});
    if (end) return engine.finish(std::move(t), *end);
  }
}

/// Rebuilds the game from its turn list, recomputing the outcome.
inline GameTranscript replay_online_ramsey(const Graph& h, int k, int pool_cap,
                                           const GameTranscript& t, std::size_t turn_cap) {
  detail::OnlineRamseyEngine engine(h, k, pool_cap);
  GameTranscript out;
  for (const auto& turn : t.turns) {
    if (engine.state().turn >= turn_cap)
      throw RuleViolation(engine.state().turn, "transcript exceeds the turn cap");
    out.turns.push_back(turn);
    if (auto end = engine.apply(turn.pair, static_cast<Color>(turn.decision)))
      return engine.finish(std::move(out), *end);
  }
  const Outcome o = engine.state().turn >= turn_cap ? Outcome::turn_cap : Outcome::exhausted;
  return engine.finish(std::move(out), o);
}

inline std::unique_ptr<BuilderStrategy> make_builder(const std::string& name, int k, int pool) {
  if (name == "random") return std::make_unique<RandomBuilder>(pool);
  if (name == "pump") return std::make_unique<PumpBuilder>(k);
  throw std::invalid_argument("unknown builder '" + name + "'");
}

}  // namespace alab
