#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alab/graph.hpp"
#include "alab/io.hpp"

namespace alab {

/// A strategy broke the rules of the game. `turn` is zero-based.
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(std::size_t turn, const std::string& what)
      : std::runtime_error("rule violation at turn " + std::to_string(turn) + ": " + what),
        turn_(turn) {}
  std::size_t turn() const noexcept { return turn_; }

 private:
  std::size_t turn_;
};

enum class Outcome { red_h, blue_k, exhausted, turn_cap };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::red_h: return "red-H";
    case Outcome::blue_k: return "blue-K_k";
    case Outcome::exhausted: return "exhausted";
    case Outcome::turn_cap: return "turn-cap";
  }
  return "?";
}

inline Outcome parse_outcome(const std::string& s) {
  for (auto o : {Outcome::red_h, Outcome::blue_k, Outcome::exhausted, Outcome::turn_cap})
    if (to_string(o) == s) return o;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

// decision: RPS 1 = accepted; online Ramsey 1 = red, 0 = blue.
struct Turn {
  Edge pair;
  int decision = 0;
  std::uint64_t draws = 0;  // random values consumed by both players this turn
  friend bool operator==(const Turn&, const Turn&) = default;
};

struct GameTranscript {
  std::string game;  // "rps" or "builder"
  std::vector<Turn> turns;
  Outcome outcome = Outcome::exhausted;
  Graph final_graph;               // RPS: accepted edges; builder: red edges
  std::optional<Graph> blue;       // builder only
  friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

inline nlohmann::json to_json(const GameTranscript& t) {
  nlohmann::json turns = nlohmann::json::array();
  for (const auto& x : t.turns) turns.push_back({x.pair.u, x.pair.v, x.decision, x.draws});
  nlohmann::json j = {{"game", t.game},
                      {"outcome", to_string(t.outcome)},
                      {"turns", std::move(turns)},
                      {"final", to_json(t.final_graph)}};
  if (t.blue) j["blue"] = to_json(*t.blue);
  return j;
}

inline GameTranscript transcript_from_json(const nlohmann::json& j) {
  GameTranscript t;
  t.game = j.at("game").get<std::string>();
  t.outcome = parse_outcome(j.at("outcome").get<std::string>());
  for (const auto& x : j.at("turns"))
    t.turns.push_back({{x.at(0).get<Vertex>(), x.at(1).get<Vertex>()},
                       x.at(2).get<int>(),
                       x.at(3).get<std::uint64_t>()});
  t.final_graph = graph_from_json(j.at("final"));
  if (j.contains("blue")) t.blue = graph_from_json(j.at("blue"));
  return t;
}

}  // namespace alab
