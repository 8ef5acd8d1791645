#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alab/density.hpp"
#include "alab/hypergraph.hpp"
#include "alab/patterns.hpp"

namespace alab {

/// One operating point. Logarithms are natural.
struct ExperimentParams {
  std::vector<std::string> pattern_names;
  std::vector<UniformHypergraph> patterns;  // patterns[0] is the primary H
  int r = 2;
  int k = 0;
  double C = 1, c = 1, delta = 0.5;
  std::size_t trials = 100;
  std::size_t k_samples = 50;
  std::uint64_t seed = 1;

  // derived
  Rational exponent;  // m_r(H), or the minimum over the family
  int n = 0;
  double p = 0;
  bool p_clamped = false;
  std::vector<std::string> warnings;

  bool family_mode() const noexcept { return patterns.size() > 1; }
};

inline UniformHypergraph as_hypergraph(const AnyGraph& g) {
  if (const auto* x = std::get_if<Graph>(&g)) return UniformHypergraph::from_graph(*x);
  return std::get<UniformHypergraph>(g);
}

/// C(a, b) as a double.
inline double binomial(long long a, int b) {
  if (b < 0 || a < b) return 0;
  double r = 1;
  for (int i = 0; i < b; ++i) r = r * static_cast<double>(a - i) / (i + 1);
  return r;
}

/// n = floor(c (k^{r-1}/log k)^{m}), p = min(1, C log k / k^{r-1}).
inline ExperimentParams derive_parameters(std::vector<UniformHypergraph> patterns,
                                          std::vector<std::string> names, int r, int k, double C,
                                          double c, double delta = 0.5) {
  if (patterns.empty()) throw std::invalid_argument("at least one pattern is required");
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  if (!(C > 0) || !(c > 0)) throw std::invalid_argument("C and c must be positive");
  if (!(delta > 0 && delta <= 1)) throw std::invalid_argument("delta must lie in (0, 1]");
  ExperimentParams ps;
  ps.r = r;
  ps.k = k;
  ps.C = C;
  ps.c = c;
  ps.delta = delta;
  ps.pattern_names = std::move(names);
  ps.pattern_names.resize(patterns.size());
  bool first = true;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& h = patterns[i];
    if (h.uniformity() != r)
      throw std::invalid_argument("pattern " + std::to_string(i) + " is " +
                                  std::to_string(h.uniformity()) + "-uniform, expected r = " +
                                  std::to_string(r));
    const auto rep = mr_report(h);
    if (!rep.strictly_balanced) {
      if (patterns.size() > 1)
        throw std::invalid_argument("family member " + ps.pattern_names[i] +
                                    " is not strictly balanced");
      ps.warnings.push_back("pattern is not strictly balanced; the density exponent is still m_r(H)");
    }
    if (first || rep.value < ps.exponent) ps.exponent = rep.value;
    first = false;
  }
  ps.patterns = std::move(patterns);

  const long double lk = std::log(static_cast<long double>(k));
  const long double kr = std::pow(static_cast<long double>(k), r - 1);
  const long double base = kr / lk;
  const long double raw_n = c * std::pow(base, static_cast<long double>(to_double(ps.exponent)));
  if (!(raw_n < static_cast<long double>(std::numeric_limits<int>::max())))
    throw std::invalid_argument("derived n is too large");
  ps.n = static_cast<int>(std::floor(raw_n));
  const long double raw_p = C * lk / kr;
  if (raw_p > 1) {
    ps.p = 1.0;
    ps.p_clamped = true;
    ps.warnings.push_back("p = " + std::to_string(static_cast<double>(raw_p)) + " clamped to 1");
  } else {
    ps.p = static_cast<double>(raw_p);
  }
  return ps;
}

/// Parses pattern names (K3, C4, K4^3, ...) and derives parameters.
inline ExperimentParams derive_parameters(const std::vector<std::string>& names, int r, int k,
                                          double C, double c, double delta = 0.5) {
  std::vector<UniformHypergraph> hs;
  for (const auto& s : names) hs.push_back(as_hypergraph(patterns::named(s)));
  return derive_parameters(std::move(hs), names, r, k, C, c, delta);
}

/// δ·C(k, r)·p and (1−δ)·C(k, r)·p.
inline double y_threshold(const ExperimentParams& ps) {
  return ps.delta * binomial(ps.k, ps.r) * ps.p;
}
inline double x_threshold(const ExperimentParams& ps) {
  return (1 - ps.delta) * binomial(ps.k, ps.r) * ps.p;
}

inline nlohmann::json to_json(const ExperimentParams& ps) {
  return {{"patterns", ps.pattern_names},
          {"r", ps.r},
          {"k", ps.k},
          {"C", ps.C},
          {"c", ps.c},
          {"delta", ps.delta},
          {"trials", ps.trials},
          {"k_samples", ps.k_samples},
          {"seed", ps.seed},
          {"exponent", to_string(ps.exponent)},
          {"n", ps.n},
          {"p", ps.p},
          {"p_clamped", ps.p_clamped},
          {"warnings", ps.warnings}};
}

}  // namespace alab
