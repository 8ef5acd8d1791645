#include <catch2/catch_amalgamated.hpp>

#include "alab/alteration.hpp"
#include "alab/games/online_ramsey.hpp"
#include "alab/games/rps.hpp"
#include "alab/patterns.hpp"
#include "oracles.hpp"

using namespace alab;

namespace {

bool h_free(const Graph& g, const Graph& h) { return enumerate_copies(g, h).size() == 0; }

std::vector<int> decisions(const GameTranscript& t) {
  std::vector<int> d;
  for (const auto& x : t.turns) d.push_back(x.decision);
  return d;
}

class RepeatingProposer final : public ProposerStrategy {
 public:
  std::string name() const override { return "repeat"; }
  std::optional<Edge> propose(const RpsState&, RandomStream&) override { return Edge{0, 1}; }
};

class ScriptedBuilder final : public BuilderStrategy {
 public:
  explicit ScriptedBuilder(std::vector<Edge> script) : script_(std::move(script)) {}
  std::string name() const override { return "scripted"; }
  std::optional<Edge> place(const OnlineRamseyState&, RandomStream&) override {
    if (i_ == script_.size()) return std::nullopt;
    return script_[i_++];
  }

 private:
  std::vector<Edge> script_;
  std::size_t i_ = 0;
};

}  // namespace

TEST_CASE("RPS small examples", "[rps]") {
  const RandomSource src(1);
  RandomLegalProposer prop;
  ConstantDecider yes(true), no(false);

  const auto t = run_rps(3, Graph::complete(3), prop, yes, src.stream("a"));
  CHECK(t.final_graph.edge_count() == 2);
  CHECK(t.turns.size() == 2);
  CHECK(independence_number(t.final_graph).alpha == 2);

  const auto r = run_rps(6, Graph::complete(3), prop, no, src.stream("b"));
  CHECK(r.turns.size() == 15);
  CHECK(r.final_graph.edge_count() == 0);
  CHECK(independence_number(r.final_graph).alpha == 6);

  // Single-edge pattern: nothing is ever legal.
  CHECK(run_rps(4, Graph::complete(2), prop, yes, src.stream("c")).turns.empty());

  RepeatingProposer bad;
  try {
    run_rps(4, Graph::complete(3), bad, no, src.stream("d"));
    FAIL("expected a rule violation");
  } catch (const RuleViolation& e) {
    CHECK(e.turn() == 1);
  }
}

TEST_CASE("RPS final graphs are H-free and replay exactly", "[rps]") {
  const RandomSource src(2);
  for (int seed = 0; seed < 100; ++seed) {
    RandomLegalProposer prop;
    RandomDecider dec(0.3);
    const auto t = run_rps(20, Graph::complete(3), prop, dec, src.stream("game", seed));
    CHECK(h_free(t.final_graph, Graph::complete(3)));
    CHECK(replay_rps(20, Graph::complete(3), t) == t.final_graph);

    RandomLegalProposer prop2;
    RandomDecider dec2(0.3);
    CHECK(run_rps(20, Graph::complete(3), prop2, dec2, src.stream("game", seed)) == t);
  }
  DenseFirstProposer dense;
  RandomDecider dec(0.5);
  const auto t = run_rps(12, patterns::cycle(4), dense, dec, src.stream("dense"));
  CHECK(h_free(t.final_graph, patterns::cycle(4)));
  CHECK(t.turns.front().pair == Edge{0, 1});
}

TEST_CASE("Decider decisions ignore the proposals", "[rps]") {
  const RandomSource src(3);
  for (int seed = 0; seed < 30; ++seed) {
    RandomLegalProposer a;
    DenseFirstProposer b;
    RandomDecider da(0.4), db(0.4);
    const auto ta = run_rps(15, Graph::complete(3), a, da, src.stream("blind", seed));
    const auto tb = run_rps(15, Graph::complete(3), b, db, src.stream("blind", seed));
    auto xa = decisions(ta), xb = decisions(tb);
    const auto m = std::min(xa.size(), xb.size());
    xa.resize(m);
    xb.resize(m);
    CHECK(xa == xb);
  }
}

TEST_CASE("Coupling properties (a) and (b)", "[rps][coupling]") {
  RandomLegalProposer prop;
  const RandomSource src(4);

  auto rep = coupled_rps_check(8, Graph::complete(3), prop, 0.0, derive_labels(8, src.stream("l")),
                               src.stream("g"));
  CHECK(rep.gnp.edge_count() == 0);
  CHECK(rep.game_graph.edge_count() == 0);
  CHECK(rep.property_a);
  CHECK(rep.property_b);

  rep = coupled_rps_check(4, Graph::complete(3), prop, 1.0, derive_labels(4, src.stream("l")),
                          src.stream("g"));
  CHECK(rep.gnp == Graph::complete(4));
  CHECK(h_free(rep.game_graph, Graph::complete(3)));
  CHECK(rep.property_a);
  CHECK(rep.property_b);
  CHECK(rep.witnesses.size() == rep.difference.size());
  CHECK(rep.difference.size() + rep.game_graph.edge_count() == 6);

  for (int t = 0; t < 300; ++t) {
    const int n = 6 + t % 25;
    const Graph h = t % 2 ? patterns::cycle(4) : Graph::complete(3);
    const auto r = coupled_rps_check(n, h, prop, 0.1 + 0.05 * (t % 6),
                                     derive_labels(n, src.stream("labels", t)), src.stream("run", t));
    INFO("run " << t);
    CHECK(r.property_a);
    CHECK(r.property_b);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("Online Ramsey parameters", "[builder]") {
  CHECK(online_ramsey_l(5) == 1);
  CHECK(online_ramsey_l(9) == 2);
  CHECK(online_ramsey_l(4) == 0);
  CHECK(online_ramsey_n(5, 21) == 10);
  CHECK(online_ramsey_n(9, 21) == 21);
}

TEST_CASE("Online Ramsey small examples", "[builder]") {
  const RandomSource src(5);
  RandomBuilder builder(10);
  ThresholdPainter painter(Graph::complete(3), 1.0);
  const auto t0 = run_online_ramsey(Graph::complete(3), 5, builder, painter, 0, 10, src.stream("z"));
  CHECK(t0.outcome == Outcome::turn_cap);
  CHECK(t0.turns.empty());

  // Make 0..5 enter U (L = 1), then place the rest of K6.
  std::vector<Edge> script{{0, 1}, {2, 3}, {4, 5}};
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (std::find(script.begin(), script.end(), Edge{a, b}) == script.end()) script.push_back({a, b});
  ScriptedBuilder sb(script);
  ThresholdPainter tp(Graph::complete(3), 1.0);
  const auto t = run_online_ramsey(Graph::complete(3), 7, sb, tp, 100, 6, src.stream("k6"));
  CHECK(t.outcome == Outcome::exhausted);
  CHECK(t.turns.size() == 15);
  CHECK(h_free(t.final_graph, Graph::complete(3)));
  CHECK(t.final_graph.edge_count() > 0);
  CHECK(tp.attempts() == 12);

  ScriptedBuilder dup({{0, 1}, {1, 0}});
  ConstantPainter blue(Color::blue);
  CHECK_THROWS_AS(run_online_ramsey(Graph::complete(3), 5, dup, blue, 10, 4, src.stream("d")),
                  RuleViolation);

  ScriptedBuilder tri({{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  ConstantPainter red(Color::red);
  const auto rt = run_online_ramsey(Graph::complete(3), 5, tri, red, 10, 4, src.stream("r"));
  CHECK(rt.outcome == Outcome::red_h);
  CHECK(rt.turns.size() == 3);

  ScriptedBuilder k4({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto bt = run_online_ramsey(Graph::complete(3), 4, k4, blue, 10, 4, src.stream("b"));
  CHECK(bt.outcome == Outcome::blue_k);
  CHECK(bt.turns.size() == 6);
}

TEST_CASE("Random builder games replay exactly", "[builder]") {
  const RandomSource src(6);
  const int k = 5, n = 20;
  const auto N = online_ramsey_n(k, n);
  for (int g = 0; g < 200; ++g) {
    RandomBuilder b(static_cast<int>(2 * N));
    ThresholdPainter p(Graph::complete(3), 0.6);
    const auto t = run_online_ramsey(Graph::complete(3), k, b, p, N, static_cast<int>(4 * N),
                                     src.stream("rb", g));
    CHECK(t.outcome != Outcome::red_h);
    CHECK(replay_online_ramsey(Graph::complete(3), k, static_cast<int>(4 * N), t, N) == t);
    CHECK(transcript_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
  }
}

TEST_CASE("Threshold painter never completes a red core", "[builder]") {
  // Triangle with a pendant edge is not strictly balanced; its core is K3.
  const Graph h(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const auto core = minimal_balanced_core(h);
  REQUIRE(core == Graph::complete(3));
  const RandomSource src(7);
  for (int g = 0; g < 50; ++g) {
    PumpBuilder b(9);
    ThresholdPainter p(core, 1.0);
    const auto t = run_online_ramsey(h, 9, b, p, 400, 200, src.stream("pump", g));
    CHECK(t.outcome != Outcome::red_h);
    CHECK(h_free(t.final_graph, core));
  }
}

TEST_CASE("Blue clique detection matches brute force", "[builder]") {
  const RandomSource src(8);
  for (int t = 0; t < 120; ++t) {
    const int k = 3 + t % 6;
    auto rng = src.stream("clique", t);
    Board b(12);
    std::vector<Edge> es;
    bool found = false;
    for (int step = 0; step < 66 && !found; ++step) {
      Edge e{static_cast<Vertex>(rng.below(12)), static_cast<Vertex>(rng.below(12))};
      if (e.u == e.v || b.has_edge(e.u, e.v)) continue;
      e = make_edge(e.u, e.v);
      b.add_edge(e);
      es.push_back(e);
      const bool fast = detail::has_clique_through(b, e, k);
      const bool slow = oracle::clique_number(Graph(12, es)) >= static_cast<std::size_t>(k);
      REQUIRE(fast == slow);
      found = fast;
    }
  }
}
