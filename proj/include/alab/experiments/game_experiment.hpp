#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "alab/clique.hpp"
#include "alab/density.hpp"
#include "alab/experiments/params.hpp"
#include "alab/experiments/runner.hpp"
#include "alab/games/online_ramsey.hpp"
#include "alab/games/rps.hpp"
#include "alab/random.hpp"

namespace alab {

enum class GameMode { rps, builder };

struct GameOptions {
  GameMode mode = GameMode::rps;
  std::string proposer = "random";   // rps
  std::optional<double> decider_p;   // rps; defaults to the derived p
  std::string builder = "random";    // builder
  std::optional<int> pool;           // builder's pool; defaults to 2N
  std::optional<int> pool_cap;       // vertex cap; defaults to 4N
  bool keep_transcripts = false;
};

struct GameRecord {
  std::size_t trial = 0;
  std::size_t turns = 0;
  Outcome outcome = Outcome::exhausted;
  std::string digest;           // FNV-1a of the transcript JSON
  bool win = false;             // rps: alpha >= k; builder: painter survived
  bool undetermined = false;    // rps: independence search hit its budget
  std::size_t final_edges = 0;  // rps: accepted; builder: red
  std::size_t red_core_copies = 0;
  std::optional<GameTranscript> transcript;
};

struct GameSummary {
  ExperimentParams params;
  GameOptions options;
  double p = 0;
  int L = 0;
  std::size_t N = 0;
  std::string core;  // H_0 edge list when it differs from H
  double win_frequency = 0;
  std::size_t undetermined = 0;
  std::size_t red_core_violations = 0;
  std::vector<GameRecord> records;
};

inline std::string transcript_digest(const GameTranscript& t) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(detail::fnv1a(to_json(t).dump())));
  return buf;
}

/// Whether g has an independent set of size k; nullopt if the budget ran out.
inline std::optional<bool> has_independent_set(const Graph& g, std::size_t k,
                                               std::uint64_t budget = kDefaultIndependenceBudget) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (k > n) return false;
  std::vector<Bitset> comp(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w && !g.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(w))) comp[v].set(w);
  const auto res = MaxCliqueSolver(comp).solve(budget, k);
  if (res.clique.size() >= k) return true;
  if (res.exact || res.upper_bound < k) return false;
  return std::nullopt;
}

/// RPS: how often the final graph still has an independent k-set against the
/// random Decider. Builder: how often the threshold Painter survives N turns.
inline GameSummary run_game_experiment(const ExperimentParams& ps, const GameOptions& opt) {
  if (ps.r != 2) throw std::invalid_argument("games are played on graphs (r = 2)");
  GameSummary sum;
  sum.params = ps;
  sum.options = opt;
  const Graph h = ps.patterns[0].to_graph();
  const RandomSource src(ps.seed);

  if (opt.mode == GameMode::rps) {
    sum.p = opt.decider_p.value_or(ps.p);
    sum.records = run_trials(ps.trials, [&](std::size_t t) {
      auto proposer = make_proposer(opt.proposer);
      RandomDecider decider(sum.p);
      const auto tr = run_rps(ps.n, h, *proposer, decider, src.stream("rps", t));
      GameRecord rec;
      rec.trial = t;
      rec.turns = tr.turns.size();
      rec.outcome = tr.outcome;
      rec.digest = transcript_digest(tr);
      rec.final_edges = tr.final_graph.edge_count();
      rec.red_core_copies = enumerate_copies(tr.final_graph, h).size();
      const auto ind = has_independent_set(tr.final_graph, static_cast<std::size_t>(ps.k));
      rec.undetermined = !ind.has_value();
      rec.win = ind.value_or(false);
      if (opt.keep_transcripts) rec.transcript = tr;
      return rec;
    });
  } else {
    sum.p = ps.p;
    sum.L = online_ramsey_l(ps.k);
    sum.N = online_ramsey_n(ps.k, static_cast<std::size_t>(ps.n));
    const Graph core = mr_report(ps.patterns[0]).strictly_balanced ? h : minimal_balanced_core(h);
    if (!(core == h)) sum.core = to_text(core);
    const int pool = opt.pool.value_or(static_cast<int>(std::max<std::size_t>(2 * sum.N, 2)));
    const int cap = opt.pool_cap.value_or(static_cast<int>(std::max<std::size_t>(4 * sum.N, 2)));
    sum.records = run_trials(ps.trials, [&](std::size_t t) {
      auto builder = make_builder(opt.builder, ps.k, pool);
      ThresholdPainter painter(core, sum.p);
      const auto tr = run_online_ramsey(h, ps.k, *builder, painter, sum.N, cap, src.stream("builder", t));
      GameRecord rec;
      rec.trial = t;
      rec.turns = tr.turns.size();
      rec.outcome = tr.outcome;
      rec.digest = transcript_digest(tr);
      rec.final_edges = tr.final_graph.edge_count();
      rec.red_core_copies = enumerate_copies(tr.final_graph, core).size();
      rec.win = tr.outcome != Outcome::red_h && tr.outcome != Outcome::blue_k &&
                rec.red_core_copies == 0;
      if (opt.keep_transcripts) rec.transcript = tr;
      return rec;
    });
  }
  std::size_t wins = 0;
  for (const auto& r : sum.records) {
    wins += r.win;
    sum.undetermined += r.undetermined;
    sum.red_core_violations += r.red_core_copies > 0;
  }
  sum.win_frequency =
      static_cast<double>(wins) / static_cast<double>(std::max<std::size_t>(sum.records.size(), 1));
  return sum;
}

inline nlohmann::json to_json(const GameRecord& r) {
  nlohmann::json j = {{"trial", r.trial},
                      {"turns", r.turns},
                      {"outcome", to_string(r.outcome)},
                      {"digest", r.digest},
                      {"win", r.win},
                      {"undetermined", r.undetermined},
                      {"final_edges", r.final_edges},
                      {"forbidden_copies", r.red_core_copies}};
  if (r.transcript) j["transcript"] = to_json(*r.transcript);
  return j;
}

inline nlohmann::json to_json(const GameSummary& s) {
  nlohmann::json j = {{"experiment", s.options.mode == GameMode::rps ? "rps" : "builder-game"},
                      {"params", to_json(s.params)},
                      {"p", s.p},
                      {"win_frequency", s.win_frequency},
                      {"undetermined", s.undetermined},
                      {"forbidden_copy_violations", s.red_core_violations}};
  if (s.options.mode == GameMode::rps) {
    j["proposer"] = s.options.proposer;
  } else {
    j["builder"] = s.options.builder;
    j["L"] = s.L;
    j["N"] = s.N;
    if (!s.core.empty()) j["core"] = s.core;
  }
  return j;
}

}  // namespace alab
