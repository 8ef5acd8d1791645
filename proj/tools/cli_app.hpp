#pragma once

// alteration-lab command line. Kept in a header so the test suite can drive
// it in-process.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alab/alab.hpp"

namespace alab::cli {

/// Reads config files written as JSON objects. Top-level keys go to the
/// subcommand being run; a nested object named after a subcommand, e.g.
/// {"rps": {"k": 40}}, applies only when that subcommand runs.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root = nullptr) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    nlohmann::json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const auto& name = opt->get_lnames()[0];
      if (opt->count() > 0)
        j[name] = opt->results().size() == 1 ? nlohmann::json(opt->results()[0])
                                             : nlohmann::json(opt->results());
      else if (default_also && !opt->get_default_str().empty())
        j[name] = opt->get_default_str();
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::string selected;
    if (root_ && !root_->get_subcommands().empty()) selected = root_->get_subcommands().front()->get_name();
    std::vector<CLI::ConfigItem> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object()) {
        if (it.key() == selected) collect(*it, {selected}, out);
        continue;
      }
      collect(nlohmann::json{{it.key(), *it}}, selected.empty() ? std::vector<std::string>{}
                                                                : std::vector<std::string>{selected},
              out);
    }
    return out;
  }

 private:
  const CLI::App* root_;

  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("unsupported config value " + v.dump());
  }

  static void collect(const nlohmann::json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object()) {
        throw CLI::ConversionError("nested config section " + it.key() + " is not a subcommand");
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = it.key();
      if (it->is_array())
        for (const auto& v : *it) item.inputs.push_back(scalar(v));
      else
        item.inputs.push_back(scalar(*it));
      out.push_back(std::move(item));
    }
  }
};

struct Options {
  std::string pattern = "K3";
  std::vector<std::string> family;
  int k = 10;
  std::vector<double> C{1.0};
  std::vector<double> c{1.0};
  double delta = 0.5;
  int r = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t k_samples = 50;
  std::string out_dir;
  std::string format = "json";

  std::string host;
  std::optional<int> n;
  std::optional<double> p;
  std::string method = "refined";
  std::vector<Vertex> k_set;
  std::optional<int> k_size;
  bool packing = false;
  std::uint64_t budget = kDefaultIndependenceBudget;
  std::string output;
  std::string certify;
  std::string k_policy = "both";
  std::size_t adversarial = 5;
  std::vector<std::size_t> grid;
  std::string proposer = "random";
  std::optional<double> decider_p;
  std::string builder = "random";
  std::optional<int> pool;
  bool transcripts = false;
  bool timing = false;
};

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Refined alteration experiments for Ramsey-type random graph bounds",
                 "alteration-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.config_formatter(std::make_shared<JsonConfig>(&app));
    app.set_config("--config", "", "JSON file with option values; command-line flags win");
    build(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit(e, out_, err_);
    }
    try {
      return dispatch();
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return 1;
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  std::string command_;

  CLI::App* sub(CLI::App& app, const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([this, name] { command_ = name; });
    return s;
  }

  void pattern_flag(CLI::App* s) {
    s->add_option("--pattern", o_.pattern, "Named pattern (K3, C5, P3, K2,3, K4^3, C3^3, E^3) or a text-format file")
        ->capture_default_str();
  }

  void science_flags(CLI::App* s, bool family = true) {
    pattern_flag(s);
    if (family)
      s->add_option("--family", o_.family, "Comma-separated pattern family (overrides --pattern)")
          ->delimiter(',');
    s->add_option("--k", o_.k, "Target independent-set size k")->capture_default_str();
    s->add_option("--C", o_.C, "Constant(s) C in p = C log k / k^{r-1}")->delimiter(',')->capture_default_str();
    s->add_option("--c", o_.c, "Constant(s) c in n = c (k^{r-1}/log k)^{m_r}")->delimiter(',')->capture_default_str();
    s->add_option("--delta", o_.delta, "delta in (0, 1]")->capture_default_str();
    s->add_option("--r", o_.r, "Uniformity")->capture_default_str();
    s->add_option("--trials", o_.trials, "Number of trials")->capture_default_str();
    s->add_option("--seed", o_.seed, "Master seed")->capture_default_str();
    s->add_option("--k-samples", o_.k_samples, "Uniform K-sets per trial")->capture_default_str();
    output_flags(s);
  }

  void output_flags(CLI::App* s) {
    s->add_option("--out", o_.out_dir, "Directory for JSONL/CSV output files");
    s->add_option("--format", o_.format, "Summary format on stdout")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  }

  void host_flags(CLI::App* s) {
    s->add_option("--host", o_.host, "Host graph in text format ('-' for stdin)");
    s->add_option("--n", o_.n, "Sample the host as G(n,p) when --host is absent");
    s->add_option("--p", o_.p, "Edge probability for a sampled host");
    s->add_option("--seed", o_.seed, "Seed for a sampled host")->capture_default_str();
  }

  void build(CLI::App& app) {
    auto* d = sub(app, "density", "m_r(H), a witness subgraph and strict balancedness");
    pattern_flag(d);
    output_flags(d);

    auto* cp = sub(app, "copies", "Enumerate pattern copies in a host");
    pattern_flag(cp);
    host_flags(cp);
    cp->add_option("--k-set", o_.k_set, "Comma-separated K for X_K / Y_K")->delimiter(',');
    cp->add_flag("--packing", o_.packing, "Also report the I_K / T_K / P_K packings");
    output_flags(cp);

    auto* al = sub(app, "alter", "Make a host H-free by alteration");
    pattern_flag(al);
    host_flags(al);
    al->add_option("--method", o_.method, "refined, greedy or krivelevich")
        ->check(CLI::IsMember({"refined", "greedy", "krivelevich"}))
        ->capture_default_str();
    al->add_option("--output", o_.output, "Write the altered graph here instead of stdout");

    auto* a = sub(app, "alpha", "Exact independence number of a host");
    host_flags(a);
    a->add_option("--budget", o_.budget, "Branch-and-bound node budget")->capture_default_str();
    a->add_option("--certify", o_.certify, "Pattern H: certify that the host is H-free with alpha < k");
    a->add_option("--k", o_.k, "Independent-set size for --certify")->capture_default_str();
    output_flags(a);

    auto* co = sub(app, "concentration", "X_K / Y_K / Y'_K statistics over sampled K-sets");
    science_flags(co);
    co->add_option("--k-policy", o_.k_policy, "uniform, adversarial or both")
        ->check(CLI::IsMember({"uniform", "adversarial", "both"}))
        ->capture_default_str();
    co->add_option("--adversarial", o_.adversarial, "Adversarial K-sets per trial")->capture_default_str();
    co->add_flag("--timing", o_.timing, "Include per-trial runtimes in the JSONL output");

    auto* l5 = sub(app, "lemma5", "Global copy counts Y and Y_v against their thresholds");
    science_flags(l5, false);

    auto* t = sub(app, "tail", "Monte Carlo check of the packing tail bound");
    pattern_flag(t);
    t->add_option("--n", o_.n, "Host size")->required();
    t->add_option("--p", o_.p, "Edge probability")->required();
    t->add_option("--k-set", o_.k_set, "Comma-separated K")->delimiter(',');
    t->add_option("--k-size", o_.k_size, "Use K = {0..k-1}");
    t->add_option("--grid", o_.grid, "Comma-separated x values (default: all integers in (mu, packing bound])")
        ->delimiter(',');
    t->add_option("--trials", o_.trials, "Number of trials")->capture_default_str();
    t->add_option("--seed", o_.seed, "Master seed")->capture_default_str();
    output_flags(t);

    auto* w = sub(app, "witness", "Planted complete multipartite witness");
    pattern_flag(w);
    w->add_option("--k", o_.k, "k")->capture_default_str();
    w->add_option("--n", o_.n, "Host size (default k)");
    w->add_option("--p", o_.p, "Edge probability (default C log k / k)");
    w->add_option("--C", o_.C, "C when --p is absent")->delimiter(',')->capture_default_str();
    w->add_option("--delta", o_.delta, "delta")->capture_default_str();
    output_flags(w);

    auto* rs = sub(app, "ramsey-search", "Search for certified Ramsey witnesses over a (C, c) grid");
    science_flags(rs, false);
    rs->add_option("--budget", o_.budget, "Independence search budget")->capture_default_str();

    auto* rp = sub(app, "rps", "Ramsey, Paper, Scissors against the random Decider");
    science_flags(rp, false);
    rp->add_option("--proposer", o_.proposer, "random or dense-first")
        ->check(CLI::IsMember({"random", "dense-first"}))
        ->capture_default_str();
    rp->add_option("--decider-p", o_.decider_p, "Override the Decider's acceptance probability");
    rp->add_flag("--transcripts", o_.transcripts, "Write full transcripts to the JSONL output");

    auto* bg = sub(app, "builder-game", "Online Ramsey game against the threshold Painter");
    science_flags(bg, false);
    bg->add_option("--builder", o_.builder, "random or pump")
        ->check(CLI::IsMember({"random", "pump"}))
        ->capture_default_str();
    bg->add_option("--pool", o_.pool, "Vertices available to the random builder (default 2N)");
    bg->add_flag("--transcripts", o_.transcripts, "Write full transcripts to the JSONL output");
  }

  // ---- helpers -----------------------------------------------------------

  static AnyGraph load_pattern(const std::string& s) {
    if (std::filesystem::exists(s)) {
      std::ifstream in(s);
      return read_text_any(in);
    }
    return patterns::named(s);
  }

  static Graph pattern_graph(const std::string& s) {
    auto g = load_pattern(s);
    if (auto* x = std::get_if<Graph>(&g)) return *x;
    const auto& h = std::get<UniformHypergraph>(g);
    if (h.uniformity() == 2) return h.to_graph();
    throw std::invalid_argument("pattern " + s + " is not a graph");
  }

  Graph load_host() const {
    if (!o_.host.empty()) {
      if (o_.host == "-") return read_graph_text(std::cin);
      std::ifstream in(o_.host);
      if (!in) throw std::runtime_error("cannot read " + o_.host);
      return read_graph_text(in);
    }
    if (!o_.n || !o_.p) throw std::invalid_argument("give --host, or --n and --p to sample one");
    return sample_gnp(*o_.n, *o_.p, RandomSource(o_.seed).stream("cli-host"));
  }

  std::vector<ExperimentParams> operating_points(bool allow_family) {
    std::vector<std::string> names = allow_family && !o_.family.empty()
                                         ? o_.family
                                         : std::vector<std::string>{o_.pattern};
    std::vector<UniformHypergraph> hs;
    for (const auto& s : names) hs.push_back(as_hypergraph(load_pattern(s)));
    std::vector<ExperimentParams> out;
    for (double C : o_.C)
      for (double c : o_.c) {
        auto ps = derive_parameters(hs, names, o_.r, o_.k, C, c, o_.delta);
        ps.trials = o_.trials;
        ps.seed = o_.seed;
        ps.k_samples = o_.k_samples;
        for (const auto& w : ps.warnings) err_ << "warning: " << w << '\n';
        out.push_back(std::move(ps));
      }
    return out;
  }

  void emit(const std::vector<nlohmann::json>& summaries) {
    if (o_.format == "csv") {
      out_ << to_csv(summaries);
    } else {
      for (const auto& s : summaries) out_ << s.dump() << '\n';
    }
  }

  std::filesystem::path out_path(const std::string& file) const {
    return std::filesystem::path(o_.out_dir) / file;
  }

  void write_files(const std::vector<nlohmann::json>& summaries,
                   const std::vector<nlohmann::json>& records,
                   const std::vector<PlotPoint>& plot, const std::string& x_name) {
    if (o_.out_dir.empty()) return;
    write_jsonl(out_path(command_ + ".jsonl"), records);
    write_csv(out_path(command_ + "_summary.csv"), summaries);
    if (!plot.empty()) write_plot_csv(out_path(command_ + "_plot.csv"), x_name, plot);
  }

  // Sweeps vary C or c; the plot's x axis follows whichever has several values.
  std::string sweep_axis() const { return o_.c.size() > 1 || o_.C.size() == 1 ? "c" : "C"; }
  static double axis_value(const ExperimentParams& ps, const std::string& axis) {
    return axis == "c" ? ps.c : ps.C;
  }

  // ---- subcommands -------------------------------------------------------

  int dispatch() {
    if (command_ == "density") return cmd_density();
    if (command_ == "copies") return cmd_copies();
    if (command_ == "alter") return cmd_alter();
    if (command_ == "alpha") return cmd_alpha();
    if (command_ == "concentration") return cmd_concentration();
    if (command_ == "lemma5") return cmd_lemma5();
    if (command_ == "tail") return cmd_tail();
    if (command_ == "witness") return cmd_witness();
    if (command_ == "ramsey-search") return cmd_ramsey();
    if (command_ == "rps" || command_ == "builder-game") return cmd_game();
    throw std::logic_error("unhandled subcommand " + command_);
  }

  int cmd_density() {
    const auto h = as_hypergraph(load_pattern(o_.pattern));
    const auto rep = mr_report(h);
    auto j = to_json(rep);
    j["pattern"] = o_.pattern;
    if (h.uniformity() == 2 && !rep.strictly_balanced)
      j["core"] = to_json(minimal_balanced_core(h.to_graph()));
    emit({j});
    return 0;
  }

  int cmd_copies() {
    const auto host = load_host();
    const auto h = pattern_graph(o_.pattern);
    const auto index = enumerate_copies(host, h);
    auto j = summary_json(index);
    const auto g = global_copy_stats(index);
    j["Y"] = g.y;
    j["max_Y_v"] = g.y_v.empty() ? 0 : *std::max_element(g.y_v.begin(), g.y_v.end());
    if (!o_.k_set.empty()) {
      j["k_set"] = to_json(k_set_stats(index, o_.k_set));
      if (o_.packing) j["packing"] = to_json(packing_report(index, o_.k_set));
    }
    emit({j});
    return 0;
  }

  int cmd_alter() {
    const auto host = load_host();
    const auto h = pattern_graph(o_.pattern);
    const auto res = alter(host, h, parse_alteration_method(o_.method));
    if (o_.output.empty()) {
      write_text(out_, res.output);
    } else {
      std::ofstream os(o_.output);
      if (!os) throw std::runtime_error("cannot write " + o_.output);
      write_text(os, res.output);
    }
    err_ << o_.method << ": removed " << res.removed.size() << " of " << host.edge_count()
         << " edges\n";
    return 0;
  }

  int cmd_alpha() {
    const auto host = load_host();
    nlohmann::json j;
    if (!o_.certify.empty()) {
      if (o_.k < 1) throw std::invalid_argument("--k must be positive");
      j = to_json(ramsey_certificate(host, pattern_graph(o_.certify), static_cast<std::size_t>(o_.k), o_.budget));
    } else {
      j = to_json(independence_number(host, o_.budget));
    }
    emit({j});
    return 0;
  }

  int cmd_concentration() {
    const auto policy = parse_k_policy(o_.k_policy);
    std::vector<nlohmann::json> summaries, records;
    std::vector<PlotPoint> plot;
    const auto axis = sweep_axis();
    std::size_t point = 0;
    for (const auto& ps : operating_points(true)) {
      const auto s = run_concentration_experiment(ps, policy, o_.adversarial);
      if (s.vacuous) err_ << "note: n = " << ps.n << " < k = " << ps.k << ", statement is vacuous\n";
      summaries.push_back(to_json(s));
      for (const auto& r : s.records) {
        auto j = to_json(r, o_.timing);
        j["point"] = point;
        records.push_back(std::move(j));
      }
      plot.push_back({"Y_K<=thr", axis_value(ps, axis), s.freq_y});
      plot.push_back({"X_K>=thr", axis_value(ps, axis), s.freq_x});
      ++point;
    }
    emit(summaries);
    write_files(summaries, records, plot, axis);
    return 0;
  }

  int cmd_lemma5() {
    std::vector<nlohmann::json> summaries, records;
    std::vector<PlotPoint> plot;
    const auto axis = sweep_axis();
    std::size_t point = 0;
    for (const auto& ps : operating_points(false)) {
      const auto s = run_lemma5_experiment(ps);
      summaries.push_back(to_json(s));
      for (const auto& r : s.records) {
        auto j = to_json(r);
        j["point"] = point;
        records.push_back(std::move(j));
      }
      plot.push_back({"Y_v<=thr", axis_value(ps, axis), s.freq_y_v});
      plot.push_back({"Y<=thr", axis_value(ps, axis), s.freq_y});
      ++point;
    }
    emit(summaries);
    write_files(summaries, records, plot, axis);
    return 0;
  }

  int cmd_tail() {
    std::vector<Vertex> k = o_.k_set;
    if (k.empty()) {
      if (!o_.k_size) throw std::invalid_argument("give --k-set or --k-size");
      for (Vertex v = 0; v < *o_.k_size; ++v) k.push_back(v);
    }
    const auto s = run_tail_check(*o_.n, pattern_graph(o_.pattern), k, *o_.p, o_.grid, o_.trials, o_.seed);
    const auto j = to_json(s);
    emit({j});
    if (!o_.out_dir.empty()) {
      std::vector<nlohmann::json> rows;
      std::vector<PlotPoint> plot;
      for (const auto& g : j["grid"]) rows.push_back(g);
      for (const auto& g : s.grid) {
        plot.push_back({"empirical", static_cast<double>(g.x), g.frequency});
        plot.push_back({"bound", static_cast<double>(g.x), g.bound});
      }
      write_jsonl(out_path("tail.jsonl"), {j});
      write_csv(out_path("tail_summary.csv"), rows);
      write_plot_csv(out_path("tail_plot.csv"), "x", plot);
    }
    return s.all_hold ? 0 : 3;
  }

  int cmd_witness() {
    const auto h = pattern_graph(o_.pattern);
    const double p = o_.p ? *o_.p
                          : std::min(1.0, o_.C.front() * std::log(static_cast<double>(o_.k)) / o_.k);
    const auto w = run_appendix_witness(h, o_.k, o_.n.value_or(o_.k), p, o_.delta);
    emit({to_json(w)});
    if (!o_.out_dir.empty()) {
      std::filesystem::create_directories(o_.out_dir);
      std::ofstream os(out_path("witness_planted.txt"));
      write_text(os, w.planted);
    }
    return w.chain_holds ? 0 : 3;
  }

  int cmd_ramsey() {
    const auto h = pattern_graph(o_.pattern);
    const auto r = run_ramsey_search(h, o_.pattern, o_.k, o_.C, o_.c, o_.trials, o_.seed, o_.budget);
    auto j = to_json(r);
    if (!r.best) err_ << "no certified witness found on this grid\n";
    emit({j});
    if (!o_.out_dir.empty()) {
      std::vector<nlohmann::json> rows(j["cells"].begin(), j["cells"].end());
      write_csv(out_path("ramsey-search_summary.csv"), rows);
      write_jsonl(out_path("ramsey-search.jsonl"), {j});
      if (r.best) {
        std::ofstream os(out_path("ramsey_witness.txt"));
        write_text(os, *r.best);
      }
    }
    return 0;
  }

  int cmd_game() {
    GameOptions opt;
    opt.mode = command_ == "rps" ? GameMode::rps : GameMode::builder;
    opt.proposer = o_.proposer;
    opt.decider_p = o_.decider_p;
    opt.builder = o_.builder;
    opt.pool = o_.pool;
    opt.keep_transcripts = o_.transcripts;
    std::vector<nlohmann::json> summaries, records;
    std::vector<PlotPoint> plot;
    const auto axis = sweep_axis();
    std::size_t point = 0;
    for (const auto& ps : operating_points(false)) {
      const auto s = run_game_experiment(ps, opt);
      summaries.push_back(to_json(s));
      for (const auto& r : s.records) {
        auto j = to_json(r);
        j["point"] = point;
        records.push_back(std::move(j));
      }
      plot.push_back({opt.mode == GameMode::rps ? "proposer_win" : "painter_survival",
                      axis_value(ps, axis), s.win_frequency});
      ++point;
    }
    emit(summaries);
    write_files(summaries, records, plot, axis);
    return 0;
  }
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return App(out, err).run(argc, argv);
}

}  // namespace alab::cli
