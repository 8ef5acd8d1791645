#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alab/copy_index.hpp"
#include "alab/experiments/params.hpp"
#include "alab/experiments/runner.hpp"
#include "alab/random.hpp"
#include "alab/random_graphs.hpp"

namespace alab {

enum class KPolicy { uniform, adversarial, both };

inline KPolicy parse_k_policy(const std::string& s) {
  if (s == "uniform") return KPolicy::uniform;
  if (s == "adversarial") return KPolicy::adversarial;
  if (s == "both") return KPolicy::both;
  throw std::invalid_argument("unknown K policy '" + s + "'");
}

inline std::string to_string(KPolicy p) {
  switch (p) {
    case KPolicy::uniform: return "uniform";
    case KPolicy::adversarial: return "adversarial";
    case KPolicy::both: return "both";
  }
  return "?";
}

struct KSample {
  std::string policy;
  std::vector<Vertex> k_set;
  std::size_t x = 0, y = 0;
  std::optional<std::size_t> y_prime;
  std::vector<std::size_t> member_y;  // Y_K of each family member alone (family mode)
  bool y_ok = false;                  // Y_K <= δ C(k,r) p
  bool x_ok = false;                  // X_K >= (1−δ) C(k,r) p
};

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t host_edges = 0;
  std::size_t copies = 0;  // global Y for the primary pattern
  std::size_t max_y_v = 0;
  std::size_t delta = 0;
  std::vector<KSample> samples;
  bool all_y_ok = true, all_x_ok = true;
  bool family_ok = true;  // Y'_K >= every member's Y_K on every sample
  double runtime_ms = 0;
};

struct ConcentrationSummary {
  ExperimentParams params;
  KPolicy policy = KPolicy::both;
  std::size_t adversarial_samples = 0;
  bool vacuous = false;  // n < k: no k-vertex sets exist
  double y_threshold = 0, x_threshold = 0;
  double freq_y = 0, freq_x = 0;
  double freq_y_uniform = 0, freq_y_adversarial = 0;
  double mean_x = 0, mean_y = 0, mean_y_prime = 0;
  std::size_t family_violations = 0;
  std::vector<TrialRecord> records;
};

namespace detail {

inline UniformHypergraph sample_host(const ExperimentParams& ps, const RandomSource& src,
                                     std::size_t trial) {
  const auto s = src.stream("host", trial);
  if (ps.r == 2) return UniformHypergraph::from_graph(sample_gnp(ps.n, ps.p, s));
  return sample_uniform_hypergraph(ps.n, ps.r, ps.p, s);
}

/// Rejects operating points whose expected host or copy count would not fit
/// a desk run.
inline void check_resources(const ExperimentParams& ps, double limit = 2e7) {
  const double edges = binomial(ps.n, ps.r) * ps.p;
  double copies = 0;
  for (const auto& h : ps.patterns)
    copies = std::max(copies, std::pow(static_cast<double>(ps.n), h.vertex_count()) *
                                  std::pow(ps.p, static_cast<double>(h.edge_count())));
  if (edges > limit || copies > limit)
    throw std::invalid_argument(
        "operating point too large: about " + std::to_string(static_cast<long long>(edges)) +
        " host edges and up to " + std::to_string(static_cast<long long>(copies)) +
        " pattern copies per trial (limit " + std::to_string(static_cast<long long>(limit)) + ")");
}

inline std::vector<Vertex> random_k_set(int n, int k, RandomStream& rng) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (int i = 0; i < k; ++i) std::swap(v[i], v[i + rng.below(static_cast<std::uint64_t>(n - i))]);
  v.resize(static_cast<std::size_t>(k));
  std::sort(v.begin(), v.end());
  return v;
}

/// K-sets grown greedily from the most-covered edges: each step adds the
/// vertex closing the most covered edges with the current set.
inline std::vector<std::vector<Vertex>> adversarial_k_sets(const CopyIndex& index, int k,
                                                           std::size_t count) {
  const auto& host = index.host();
  const int n = host.vertex_count();
  std::vector<std::size_t> seeds;
  for (std::size_t e = 0; e < host.edge_count(); ++e)
    if (index.covered(e)) seeds.push_back(e);
  std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) {
    return index.coverage(a).size() > index.coverage(b).size();
  });
  if (seeds.size() > count) seeds.resize(count);

  std::vector<std::vector<Vertex>> out;
  for (auto s : seeds) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> kset(host.edge(s).begin(), host.edge(s).end());
    for (auto v : kset) in[v] = 1;
    while (static_cast<int>(kset.size()) < k) {
      Vertex best = -1;
      std::size_t best_gain = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (in[v]) continue;
        std::size_t gain = 0;
        for (auto e : host.incident(v)) {
          if (!index.covered(e)) continue;
          const auto ed = host.edge(e);
          gain += std::all_of(ed.begin(), ed.end(), [&](Vertex w) { return w == v || in[w]; });
        }
        if (best < 0 || gain > best_gain) {
          best = v;
          best_gain = gain;
        }
      }
      in[best] = 1;
      kset.push_back(best);
    }
    std::sort(kset.begin(), kset.end());
    out.push_back(std::move(kset));
  }
  return out;
}

}  // namespace detail

/// Samples `params.trials` hosts and evaluates X_K, Y_K and Y'_K on the
/// K-sets chosen by `policy`. Trial t always uses the same substreams for a
/// given seed, so operating points with the same seed are paired.
inline ConcentrationSummary run_concentration_experiment(const ExperimentParams& ps,
                                                         KPolicy policy = KPolicy::both,
                                                         std::size_t adversarial_samples = 5) {
  detail::check_resources(ps);
  ConcentrationSummary sum;
  sum.params = ps;
  sum.policy = policy;
  sum.adversarial_samples = adversarial_samples;
  sum.vacuous = ps.n < ps.k;
  sum.y_threshold = y_threshold(ps);
  sum.x_threshold = x_threshold(ps);
  const RandomSource src(ps.seed);

  sum.records = run_trials(ps.trials, [&](std::size_t t) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial = t;
    const auto host = detail::sample_host(ps, src, t);
    rec.host_edges = host.edge_count();
    std::vector<CopyIndex> indices;
    for (const auto& h : ps.patterns) indices.push_back(enumerate_copies(host, h));
    const auto g = global_copy_stats(indices[0]);
    rec.copies = g.y;
    rec.max_y_v = g.y_v.empty() ? 0 : *std::max_element(g.y_v.begin(), g.y_v.end());
    rec.delta = indices[0].delta();

    if (!sum.vacuous) {
      std::vector<std::pair<std::string, std::vector<Vertex>>> ks;
      if (policy != KPolicy::adversarial) {
        auto rng = src.stream("kset", t);
        for (std::size_t i = 0; i < ps.k_samples; ++i)
          ks.push_back({"uniform", detail::random_k_set(ps.n, ps.k, rng)});
      }
      if (policy != KPolicy::uniform)
        for (auto& s : detail::adversarial_k_sets(indices[0], ps.k, adversarial_samples))
          ks.push_back({"adversarial", std::move(s)});

      const std::span<const CopyIndex> family =
          ps.family_mode() ? std::span<const CopyIndex>(indices).subspan(1)
                           : std::span<const CopyIndex>();
      for (auto& [pol, kset] : ks) {
        KSample s;
        s.policy = pol;
        const auto st = k_set_stats(indices[0], kset, family);
        s.k_set = st.k_set;
        s.x = st.x;
        s.y = st.y;
        s.y_prime = st.y_prime;
        if (ps.family_mode()) {
          for (const auto& idx : indices) s.member_y.push_back(k_set_stats(idx, s.k_set).y);
          rec.family_ok &= *s.y_prime >= *std::max_element(s.member_y.begin(), s.member_y.end());
        }
        s.y_ok = static_cast<double>(s.y) <= sum.y_threshold;
        s.x_ok = static_cast<double>(s.x) >= sum.x_threshold;
        rec.all_y_ok &= s.y_ok;
        rec.all_x_ok &= s.x_ok;
        rec.samples.push_back(std::move(s));
      }
    }
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
  });

  std::size_t ny = 0, nx = 0, nyu = 0, nya = 0, count = 0;
  double sx = 0, sy = 0, syp = 0;
  for (const auto& r : sum.records) {
    ny += r.all_y_ok;
    nx += r.all_x_ok;
    sum.family_violations += !r.family_ok;
    bool uok = true, aok = true;
    for (const auto& s : r.samples) {
      (s.policy == "uniform" ? uok : aok) &= s.y_ok;
      sx += static_cast<double>(s.x);
      sy += static_cast<double>(s.y);
      syp += static_cast<double>(s.y_prime.value_or(s.y));
      ++count;
    }
    nyu += uok;
    nya += aok;
  }
  const double T = static_cast<double>(std::max<std::size_t>(sum.records.size(), 1));
  sum.freq_y = static_cast<double>(ny) / T;
  sum.freq_x = static_cast<double>(nx) / T;
  sum.freq_y_uniform = static_cast<double>(nyu) / T;
  sum.freq_y_adversarial = static_cast<double>(nya) / T;
  if (count) {
    sum.mean_x = sx / static_cast<double>(count);
    sum.mean_y = sy / static_cast<double>(count);
    sum.mean_y_prime = syp / static_cast<double>(count);
  }
  return sum;
}

/// Recomputes a record's flags from its raw counts.
inline bool audit_record(const TrialRecord& r, double y_thr, double x_thr) {
  bool all_y = true, all_x = true, fam = true;
  for (const auto& s : r.samples) {
    if (s.y_ok != (static_cast<double>(s.y) <= y_thr)) return false;
    if (s.x_ok != (static_cast<double>(s.x) >= x_thr)) return false;
    if (s.y > s.x) return false;
    all_y &= s.y_ok;
    all_x &= s.x_ok;
    if (!s.member_y.empty())
      fam &= s.y_prime.value_or(0) >= *std::max_element(s.member_y.begin(), s.member_y.end());
  }
  return all_y == r.all_y_ok && all_x == r.all_x_ok && fam == r.family_ok;
}

inline nlohmann::json to_json(const KSample& s) {
  nlohmann::json j = {{"policy", s.policy}, {"K", s.k_set}, {"X_K", s.x},
                      {"Y_K", s.y},         {"y_ok", s.y_ok}, {"x_ok", s.x_ok}};
  if (s.y_prime) j["Y_prime_K"] = *s.y_prime;
  if (!s.member_y.empty()) j["member_Y_K"] = s.member_y;
  return j;
}

inline nlohmann::json to_json(const TrialRecord& r, bool timing = false) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  nlohmann::json j = {{"trial", r.trial},       {"host_edges", r.host_edges},
                      {"Y", r.copies},          {"max_Y_v", r.max_y_v},
                      {"delta_H", r.delta},     {"all_y_ok", r.all_y_ok},
                      {"all_x_ok", r.all_x_ok}, {"family_ok", r.family_ok},
                      {"samples", std::move(samples)}};
  if (timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline nlohmann::json to_json(const ConcentrationSummary& s) {
  return {{"experiment", "concentration"},
          {"params", to_json(s.params)},
          {"k_policy", to_string(s.policy)},
          {"adversarial_samples", s.adversarial_samples},
          {"vacuous", s.vacuous},
          {"y_threshold", s.y_threshold},
          {"x_threshold", s.x_threshold},
          {"freq_y", s.freq_y},
          {"freq_x", s.freq_x},
          {"freq_y_uniform", s.freq_y_uniform},
          {"freq_y_adversarial", s.freq_y_adversarial},
          {"mean_x", s.mean_x},
          {"mean_y", s.mean_y},
          {"mean_y_prime", s.mean_y_prime},
          {"family_violations", s.family_violations}};
}

struct Lemma5Record {
  std::size_t trial = 0;
  std::size_t y = 0, max_y_v = 0, sum_y_v = 0;
  bool identity = false;  // sum_v Y_v == v_H * Y
  bool y_v_ok = false;    // max_v Y_v <= δ n p
  bool y_ok = false;      // Y <= δ C(n,2) p
};

struct Lemma5Summary {
  ExperimentParams params;
  double y_v_threshold = 0, y_threshold = 0;
  double freq_y_v = 0, freq_y = 0, freq_both = 0;
  std::size_t identity_violations = 0;
  std::vector<Lemma5Record> records;
};

/// Global copy counts Y and Y_v against δ n p and δ C(n,2) p.
inline Lemma5Summary run_lemma5_experiment(const ExperimentParams& ps) {
  if (ps.r != 2) throw std::invalid_argument("the lemma5 experiment is for graphs (r = 2)");
  if (ps.exponent <= 1)
    throw std::invalid_argument("the lemma5 experiment needs m_2(H) > 1, got " +
                                to_string(ps.exponent));
  detail::check_resources(ps);
  Lemma5Summary sum;
  sum.params = ps;
  sum.y_v_threshold = ps.delta * ps.n * ps.p;
  sum.y_threshold = ps.delta * binomial(ps.n, 2) * ps.p;
  const RandomSource src(ps.seed);
  const auto& h = ps.patterns[0];
  sum.records = run_trials(ps.trials, [&](std::size_t t) {
    Lemma5Record rec;
    rec.trial = t;
    const auto g = global_copy_stats(enumerate_copies(detail::sample_host(ps, src, t), h));
    rec.y = g.y;
    rec.max_y_v = g.y_v.empty() ? 0 : *std::max_element(g.y_v.begin(), g.y_v.end());
    rec.sum_y_v = std::accumulate(g.y_v.begin(), g.y_v.end(), std::size_t{0});
    rec.identity = rec.sum_y_v == static_cast<std::size_t>(h.vertex_count()) * rec.y;
    rec.y_v_ok = static_cast<double>(rec.max_y_v) <= sum.y_v_threshold;
    rec.y_ok = static_cast<double>(rec.y) <= sum.y_threshold;
    return rec;
  });
  std::size_t a = 0, b = 0, both = 0;
  for (const auto& r : sum.records) {
    a += r.y_v_ok;
    b += r.y_ok;
    both += r.y_v_ok && r.y_ok;
    sum.identity_violations += !r.identity;
  }
  const double T = static_cast<double>(std::max<std::size_t>(sum.records.size(), 1));
  sum.freq_y_v = static_cast<double>(a) / T;
  sum.freq_y = static_cast<double>(b) / T;
  sum.freq_both = static_cast<double>(both) / T;
  return sum;
}

inline nlohmann::json to_json(const Lemma5Record& r) {
  return {{"trial", r.trial},     {"Y", r.y},           {"max_Y_v", r.max_y_v},
          {"sum_Y_v", r.sum_y_v}, {"identity", r.identity}, {"y_v_ok", r.y_v_ok},
          {"y_ok", r.y_ok}};
}

inline nlohmann::json to_json(const Lemma5Summary& s) {
  return {{"experiment", "lemma5"},
          {"params", to_json(s.params)},
          {"y_v_threshold", s.y_v_threshold},
          {"y_threshold", s.y_threshold},
          {"freq_y_v", s.freq_y_v},
          {"freq_y", s.freq_y},
          {"freq_both", s.freq_both},
          {"identity_violations", s.identity_violations}};
}

}  // namespace alab
