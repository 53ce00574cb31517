#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dlpeval/core.hpp"
#include "dlpeval/diagrams.hpp"
#include "dlpeval/metrics.hpp"
#include "dlpeval/partition.hpp"
#include "dlpeval/sampling.hpp"
#include "dlpeval/score_exchange.hpp"
#include "dlpeval/scorers.hpp"

namespace dlpeval::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kOutDirEnv = "DLPEVAL_OUT_DIR";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string data;
  std::string name;
  std::string schema = "minimal";
  std::string graph = "directed";
  bool allow_self_loops = false;
  double test_ratio = 0.15;
  std::size_t batch_size = 200;
  std::string strategies = "HE,OE,IE";
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string policy = "skip";
  // eval / metrics / plot
  std::string scorer = "edgebank";
  std::vector<std::string> external_logs;
  std::string log;
  std::string period = "test";
  std::size_t bins = 50;
  std::optional<double> t_split;
  // sweep
  std::vector<double> ratios{0.1, 0.15, 0.2, 0.3, 0.4, 0.5};
  // bd
  std::size_t max_points = 100000;
  bool role_facets = false;
};

json config_json(const RunConfig& c) {
  json j;
  j["data"] = c.data;
  j["name"] = c.name;
  j["schema"] = c.schema;
  j["graph"] = c.graph;
  j["allow_self_loops"] = c.allow_self_loops;
  j["test_ratio"] = c.test_ratio;
  j["batch_size"] = c.batch_size;
  j["strategies"] = c.strategies;
  j["k"] = c.k;
  j["seed"] = c.seed;
  j["policy"] = c.policy;
  j["scorer"] = c.scorer;
  j["external_logs"] = c.external_logs;
  j["log"] = c.log;
  j["period"] = c.period;
  j["bins"] = c.bins;
  j["t_split"] = c.t_split ? json(*c.t_split) : json(nullptr);
  j["ratios"] = c.ratios;
  j["max_points"] = c.max_points;
  j["role_facets"] = c.role_facets;
  return j;
}

class Session {
 public:
  Session(std::string command, RunConfig& config, std::ostream& out, std::ostream& err)
      : command_(std::move(command)), config_(config), out_(out), err_(err) {
    std::string dir = config.out_dir;
    if (dir.empty()) {
      const char* env = std::getenv(kOutDirEnv);
      dir = env && *env ? env : "dlpeval_out";
    }
    config_.out_dir = dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory '" + dir + "': " + ec.message());
    dir_ = dir;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }
  const RunConfig& config() const { return config_; }

  void write(const std::string& file, const std::string& content) {
    fs::path p = dir_ / file;
    std::ofstream f(p, std::ios::binary);
    f << content;
    if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
    outputs_.push_back(p.string());
  }

  void finish() {
    json m;
    m["tool"] = "dlpeval";
    m["version"] = kVersion;
    m["command"] = command_;
    m["config"] = config_json(config_);
    m["outputs"] = outputs_;
    const std::string manifest = command_ + ".manifest.json";
    std::ofstream f(dir_ / manifest, std::ios::binary);
    f << m.dump(2) << '\n';
    out_ << "wrote " << outputs_.size() << " file(s) to " << dir_.string() << " (manifest "
         << manifest << ")\n";
  }

 private:
  std::string command_;
  RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  fs::path dir_;
  std::vector<std::string> outputs_;
};

GraphKind graph_kind(const RunConfig& c) {
  if (c.graph == "directed") return GraphKind::directed_graph();
  if (c.graph == "undirected") return GraphKind::undirected_graph();
  if (c.graph == "bipartite") return GraphKind::bipartite_graph();
  throw InputError("unknown graph kind '" + c.graph + "'");
}

History load(const RunConfig& c) {
  if (c.data.empty()) throw InputError("--data is required");
  if (!fs::exists(c.data)) throw InputError("dataset '" + c.data + "' does not exist");
  IngestOptions opts;
  opts.schema = c.schema == "jodie" ? CsvSchema::Jodie : CsvSchema::Minimal;
  opts.kind = graph_kind(c);
  opts.allow_self_loops = c.allow_self_loops;
  return ingest_csv_file(c.data, opts);
}

std::string dataset_name(const RunConfig& c) {
  if (!c.name.empty()) return c.name;
  return c.data.empty() ? std::string("dataset") : fs::path(c.data).stem().string();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string fmt_surprise(const std::optional<double>& v) { return v ? fixed(*v) : "undef"; }

template <typename F>
std::string render(F&& f) {
  std::ostringstream s;
  f(s);
  return s.str();
}

std::vector<KeyKind> report_kinds(const History& h) {
  std::vector<KeyKind> kinds{KeyKind::Node, KeyKind::Edge};
  if (h.kind().bipartite) {
    kinds.push_back(KeyKind::SourceNode);
    kinds.push_back(KeyKind::DestinationNode);
  }
  return kinds;
}

// ---------------------------------------------------------------------------

void cmd_stats(Session& s) {
  const RunConfig& c = s.config();
  History h = load(c);
  Timestamp t_split = compute_cutoff(h, c.test_ratio);
  PartitionReport report = partition_report(h, t_split, report_kinds(h));
  s.write("partition.csv", render([&](std::ostream& o) { write_partition_csv(report, o); }));

  const CategoryCounts& n = *report.find(KeyKind::Node);
  const CategoryCounts& e = *report.find(KeyKind::Edge);
  auto& o = s.out();
  o << "dataset | events | nodes: total historical overlap inductive surprise | edges: total "
       "historical overlap inductive surprise\n";
  o << dataset_name(c) << " | " << h.size() << " | " << n.total << ' ' << n.historical << ' '
    << n.overlap << ' ' << n.inductive << ' ' << fmt_surprise(n.surprise()) << " | " << e.total << ' '
    << e.historical << ' ' << e.overlap << ' ' << e.inductive << ' ' << fmt_surprise(e.surprise())
    << '\n';
  o << "t_split=" << format_exact(t_split) << " test_ratio=" << c.test_ratio << '\n';
}

void cmd_split(Session& s) {
  const RunConfig& c = s.config();
  History h = load(c);
  Timestamp t_split = c.t_split ? *c.t_split : compute_cutoff(h, c.test_ratio);
  TrainTestSplit parts = split(h, t_split);
  s.write("train.csv", render([&](std::ostream& o) { write_minimal_csv(parts.train, o); }));
  s.write("test.csv", render([&](std::ostream& o) { write_minimal_csv(parts.test, o); }));
  s.out() << "t_split=" << format_exact(t_split) << " train=" << parts.train.size()
          << " test=" << parts.test.size() << '\n';
}

void cmd_bd(Session& s) {
  const RunConfig& c = s.config();
  History h = load(c);
  Timestamp t_split = c.t_split ? *c.t_split : compute_cutoff(h, c.test_ratio);
  BDOptions opts;
  opts.max_points = c.max_points;
  opts.seed = c.seed;
  NodeLabeler labeler = [&h](NodeId u) { return h.label(u); };
  const std::string name = dataset_name(c);

  auto emit = [&](const std::string& stem, const std::vector<LabeledTable>& panels, const std::string& title) {
    opts.title = title;
    RenderedDiagram d = bd_diagram(panels, t_split, opts, labeler);
    s.write(stem + ".svg", d.svg);
    s.write(stem + ".csv", d.csv);
  };
  LifetimeTable nodes = lifetimes(h, KeyKind::Node);
  LifetimeTable edges = lifetimes(h, KeyKind::Edge);
  emit("bd_nodes", {{"Nodes", &nodes}}, name + ": nodes");
  emit("bd_edges", {{"Edges", &edges}}, name + ": edges");
  if (h.kind().bipartite || c.role_facets) {
    if (!h.kind().directed()) throw InputError("--roles requires a directed or bipartite graph");
    LifetimeTable sources = lifetimes(h, KeyKind::SourceNode);
    LifetimeTable destinations = lifetimes(h, KeyKind::DestinationNode);
    emit("bd_roles", {{"Sources (users)", &sources}, {"Destinations (items)", &destinations}},
         name + ": nodes by role");
  }
  s.out() << "t_split=" << format_exact(t_split) << " nodes=" << nodes.size()
          << " edges=" << edges.size() << '\n';
}

void cmd_sweep(Session& s) {
  const RunConfig& c = s.config();
  History h = load(c);
  auto sweep = surprise_sweep(h, c.ratios);
  s.write("sweep.csv", render([&](std::ostream& o) { write_sweep_csv(sweep, o); }));
  SurpriseSeries series{dataset_name(c), sweep, c.test_ratio};
  s.write("surprise.svg", surprise_curve({series}));
  for (const auto& p : sweep) {
    s.out() << "ratio=" << p.ratio << " node_surprise=" << fmt_surprise(p.node_surprise)
            << " edge_surprise=" << fmt_surprise(p.edge_surprise) << '\n';
  }
}

void warn_source_strategies(Session& s, const History& h, const std::vector<NegativeStrategy>& strategies) {
  if (!h.kind().bipartite) return;
  for (auto st : strategies) {
    if (replaces_source(st)) {
      s.err() << "warning: " << to_string(st)
              << " replaces sources on a bipartite graph; source-role candidates are used\n";
    }
  }
}

void cmd_sample(Session& s) {
  const RunConfig& c = s.config();
  History h = load(c);
  Timestamp t_split = c.t_split ? *c.t_split : compute_cutoff(h, c.test_ratio);
  auto strategies = parse_strategy_list(c.strategies);
  const auto period = parse_period(c.period);
  if (!period) throw InputError("unknown period '" + c.period + "'");
  warn_source_strategies(s, h, strategies);
  CandidateIndex index(h, t_split);
  std::ostringstream o;
  write_negatives_header(o);
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Event& e = h[i];
    const bool in_test = e.t >= t_split;
    if ((*period == Period::Test && !in_test) || (*period == Period::Train && in_test)) continue;
    for (auto st : strategies) {
      try {
        write_negatives_rows(i, sample_negatives(e, st, c.k, index, event_stream_seed(c.seed, i, st)), o);
      } catch (const EmptyCandidateSet& ex) {
        if (c.policy == "abort") throw;
        ++skipped;
      }
    }
  }
  s.write("negatives.csv", o.str());
  s.write("labels.csv", render([&](std::ostream& os) { write_label_map(h, os); }));
  if (skipped) s.err() << "warning: " << skipped << " (event, strategy) pairs had no legal candidate\n";
  s.out() << "t_split=" << format_exact(t_split) << '\n';
}

struct StrategySummary {
  NegativeStrategy strategy;
  SeedSummary auc;
  std::size_t batches = 0;
  std::size_t excluded = 0;
};

std::string summary_csv(const std::vector<StrategySummary>& rows, const std::string& period) {
  std::ostringstream o;
  o << "strategy,period,mean_auc,std_auc,seeds,batches,excluded_batches\n";
  for (const auto& r : rows) {
    o << to_string(r.strategy) << ',' << period << ',' << format_exact(r.auc.mean) << ','
      << format_exact(r.auc.stddev) << ',' << r.auc.seeds << ',' << r.batches << ',' << r.excluded
      << '\n';
  }
  return o.str();
}

void print_summary(std::ostream& o, const std::vector<StrategySummary>& rows, const std::string& period) {
  for (const auto& r : rows) {
    o << to_string(r.strategy) << ": mean " << period << " AUC " << fixed(r.auc.mean, 4);
    if (r.auc.seeds > 1) o << " +- " << fixed(r.auc.stddev, 4) << " over " << r.auc.seeds << " seeds";
    o << " (" << r.batches << " batches";
    if (r.excluded) o << ", " << r.excluded << " excluded";
    o << ")\n";
  }
}

// Writes per-batch AUC, MAR series and plot for one log; returns per-strategy
// reports.
std::vector<BatchAUCReport> analyse_log(Session& s, const ScoredEventLog& log, Timestamp t_split,
                                        Period period, std::size_t bins, const std::string& suffix) {
  std::vector<BatchAUCReport> reports;
  for (NegativeStrategy st : log.strategies()) {
    reports.push_back(mean_auc_over_batches(log, st, period, t_split));
  }
  s.write("auc" + suffix + ".csv", render([&](std::ostream& o) { write_auc_csv(reports, o); }));
  MARSeries mar = mar_time_series(log, bins);
  s.write("mar" + suffix + ".csv", render([&](std::ostream& o) { write_mar_csv(mar, o); }));
  s.write("mar" + suffix + ".svg", mar_plot(mar, t_split));
  return reports;
}

Period require_period(const RunConfig& c) {
  auto p = parse_period(c.period);
  if (!p) throw InputError("unknown period '" + c.period + "'");
  return *p;
}

void cmd_eval(Session& s) {
  const RunConfig& c = s.config();
  const Period period = require_period(c);
  std::vector<StrategySummary> rows;

  if (!c.external_logs.empty()) {
    std::vector<std::vector<BatchAUCReport>> per_seed;
    for (std::size_t i = 0; i < c.external_logs.size(); ++i) {
      LoadedScoreLog loaded = read_score_log_file(c.external_logs[i]);
      std::optional<Timestamp> t = c.t_split ? c.t_split : loaded.meta.t_split;
      if (!t) throw InputError("external log '" + c.external_logs[i] + "' has no t_split; pass --t-split");
      per_seed.push_back(analyse_log(s, loaded.log, *t, period, c.bins, "_seed" + std::to_string(i)));
    }
    for (const auto& first : per_seed.front()) {
      std::vector<double> means;
      StrategySummary row{first.strategy, {}, 0, 0};
      for (const auto& seed_reports : per_seed) {
        auto it = std::find_if(seed_reports.begin(), seed_reports.end(),
                               [&](const BatchAUCReport& r) { return r.strategy == first.strategy; });
        if (it == seed_reports.end()) {
          throw InputError("strategy " + std::string(to_string(first.strategy)) + " missing from a seed log");
        }
        means.push_back(it->mean_auc);
        row.batches += it->batches.size();
        row.excluded += it->excluded_batches;
      }
      row.auc = summarize_over_seeds(means);
      rows.push_back(row);
    }
  } else {
    History h = load(c);
    auto scorer = parse_scorer(c.scorer);
    if (!scorer || *scorer == ScorerKind::External) {
      throw InputError("--scorer must be pa or edgebank (use --external for score logs)");
    }
    StreamingEvalConfig cfg;
    cfg.t_split = c.t_split ? *c.t_split : compute_cutoff(h, c.test_ratio);
    cfg.scorer = *scorer;
    cfg.strategies = parse_strategy_list(c.strategies);
    warn_source_strategies(s, h, cfg.strategies);
    cfg.k_per_strategy = c.k;
    cfg.batch_size = c.batch_size;
    cfg.seed = c.seed;
    cfg.policy = c.policy == "abort" ? EmptyCandidatePolicy::Abort : EmptyCandidatePolicy::Skip;
    auto result = run_streaming_eval(h, cfg, [&](const std::string& msg) { s.err() << msg << '\n'; });

    ScoreLogMeta meta;
    meta.dataset = dataset_name(c);
    meta.scorer = std::string(to_string(*scorer));
    meta.t_split = cfg.t_split;
    meta.batch_size = cfg.batch_size;
    meta.strategies = cfg.strategies;
    meta.k = cfg.k_per_strategy;
    meta.seed = cfg.seed;
    s.write("scores.csv", render([&](std::ostream& o) { write_score_log(result.log, meta, o); }));
    s.write("labels.csv", render([&](std::ostream& o) { write_label_map(h, o); }));
    for (const auto& rep : analyse_log(s, result.log, cfg.t_split, period, c.bins, "")) {
      const double m = rep.mean_auc;
      rows.push_back({rep.strategy, summarize_over_seeds(std::span<const double>(&m, 1)),
                      rep.batches.size(), rep.excluded_batches});
    }
    if (!result.skipped.empty()) {
      s.err() << "warning: " << result.skipped.size() << " (event, strategy) pairs skipped\n";
    }
  }
  s.write("auc_summary.csv", summary_csv(rows, c.period));
  print_summary(s.out(), rows, c.period);
}

void cmd_metrics(Session& s) {
  const RunConfig& c = s.config();
  if (c.log.empty()) throw InputError("--log is required");
  LoadedScoreLog loaded = read_score_log_file(c.log);
  std::optional<Timestamp> t = c.t_split ? c.t_split : loaded.meta.t_split;
  if (!t) throw InputError("score log has no t_split; pass --t-split");
  const Period period = require_period(c);
  std::vector<StrategySummary> rows;
  std::vector<BatchAUCReport> reports;
  for (NegativeStrategy st : loaded.log.strategies()) {
    reports.push_back(mean_auc_over_batches(loaded.log, st, period, *t));
    const double m = reports.back().mean_auc;
    rows.push_back({st, summarize_over_seeds(std::span<const double>(&m, 1)),
                    reports.back().batches.size(), reports.back().excluded_batches});
  }
  s.write("auc.csv", render([&](std::ostream& o) { write_auc_csv(reports, o); }));
  s.write("auc_summary.csv", summary_csv(rows, c.period));
  MARSeries mar = mar_time_series(loaded.log, c.bins);
  s.write("mar.csv", render([&](std::ostream& o) { write_mar_csv(mar, o); }));
  print_summary(s.out(), rows, c.period);
}

void cmd_plot(Session& s) {
  const RunConfig& c = s.config();
  if (c.log.empty()) throw InputError("--log is required");
  LoadedScoreLog loaded = read_score_log_file(c.log);
  std::optional<Timestamp> t = c.t_split ? c.t_split : loaded.meta.t_split;
  if (!t) throw InputError("score log has no t_split; pass --t-split");
  MARSeries mar = mar_time_series(loaded.log, c.bins);
  s.write("mar.svg", mar_plot(mar, *t));
  s.write("mar.csv", render([&](std::ostream& o) { write_mar_csv(mar, o); }));
}

void add_dataset_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--data", c.data, "Event CSV file");
  sub->add_option("--name", c.name, "Dataset name used in reports (default: file stem)");
  sub->add_option("--schema", c.schema, "CSV schema")->check(CLI::IsMember({"minimal", "jodie"}));
  sub->add_option("--graph", c.graph, "Graph kind")
      ->check(CLI::IsMember({"directed", "undirected", "bipartite"}));
  sub->add_flag("--allow-self-loops", c.allow_self_loops, "Accept events with source == destination");
  sub->add_option("--test-ratio", c.test_ratio, "Fraction of events in the test set")
      ->check(CLI::Range(0.0, 1.0));
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--out", c.out_dir, std::string("Output directory (default: $") + kOutDirEnv +
                                          " or ./dlpeval_out)");
  sub->add_option("--seed", c.seed, "Seed for all randomness");
}

void add_sampling_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--strategies", c.strategies, "Comma-separated: HS,OS,IS,HD,OD,ID,HE,OE,IE,RND");
  sub->add_option("--k", c.k, "Negatives per strategy per positive")->check(CLI::PositiveNumber);
  sub->add_option("--policy", c.policy, "On an empty candidate set")
      ->check(CLI::IsMember({"skip", "abort"}));
  sub->add_option("--t-split", c.t_split, "Explicit cutoff (overrides --test-ratio)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Evaluation toolkit for dynamic link prediction on continuous-time dynamic graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Command {
    CLI::App* app;
    void (*fn)(Session&);
  };
  std::vector<Command> commands;

  auto* stats = app.add_subcommand("stats", "Partition counts and surprise indices at the cutoff");
  add_dataset_options(stats, config);
  add_common_options(stats, config);
  commands.push_back({stats, cmd_stats});

  auto* split_cmd = app.add_subcommand("split", "Write the train and test event files");
  add_dataset_options(split_cmd, config);
  add_common_options(split_cmd, config);
  split_cmd->add_option("--t-split", config.t_split, "Explicit cutoff (overrides --test-ratio)");
  commands.push_back({split_cmd, cmd_split});

  auto* bd = app.add_subcommand("bd", "Birth-Death diagrams for nodes and edges");
  add_dataset_options(bd, config);
  add_common_options(bd, config);
  bd->add_option("--t-split", config.t_split, "Explicit cutoff (overrides --test-ratio)");
  bd->add_option("--max-points", config.max_points, "Per-panel cap on drawn points");
  bd->add_flag("--roles", config.role_facets, "Also draw source/destination panels");
  commands.push_back({bd, cmd_bd});

  auto* sweep = app.add_subcommand("sweep", "Surprise indices over a range of test ratios");
  add_dataset_options(sweep, config);
  add_common_options(sweep, config);
  sweep->add_option("--ratios", config.ratios, "Test ratios")->delimiter(',');
  commands.push_back({sweep, cmd_sweep});

  auto* sample = app.add_subcommand("sample", "Export negative samples");
  add_dataset_options(sample, config);
  add_common_options(sample, config);
  add_sampling_options(sample, config);
  sample->add_option("--period", config.period, "Events to sample for")
      ->check(CLI::IsMember({"train", "test", "all"}));
  commands.push_back({sample, cmd_sample});

  auto* eval = app.add_subcommand("eval", "Score with a heuristic (or import external logs) and report metrics");
  add_dataset_options(eval, config);
  add_common_options(eval, config);
  add_sampling_options(eval, config);
  eval->add_option("--scorer", config.scorer, "Heuristic scorer")->check(CLI::IsMember({"pa", "edgebank"}));
  eval->add_option("--external", config.external_logs, "Score log(s) from an external model, one per seed");
  eval->add_option("--batch-size", config.batch_size, "Events per score-then-ingest batch")
      ->check(CLI::PositiveNumber);
  eval->add_option("--period", config.period, "Period for AUC")->check(CLI::IsMember({"train", "test", "all"}));
  eval->add_option("--bins", config.bins, "MAR time bins")->check(CLI::PositiveNumber);
  commands.push_back({eval, cmd_eval});

  auto* metrics = app.add_subcommand("metrics", "AUC and MAR tables from a score log");
  add_common_options(metrics, config);
  metrics->add_option("--log", config.log, "Score log");
  metrics->add_option("--t-split", config.t_split, "Cutoff (default: from the log header)");
  metrics->add_option("--period", config.period, "Period for AUC")->check(CLI::IsMember({"train", "test", "all"}));
  metrics->add_option("--bins", config.bins, "MAR time bins")->check(CLI::PositiveNumber);
  commands.push_back({metrics, cmd_metrics});

  auto* plot = app.add_subcommand("plot", "MAR-over-time plot from a score log");
  add_common_options(plot, config);
  plot->add_option("--log", config.log, "Score log");
  plot->add_option("--t-split", config.t_split, "Cutoff (default: from the log header)");
  plot->add_option("--bins", config.bins, "MAR time bins")->check(CLI::PositiveNumber);
  commands.push_back({plot, cmd_plot});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      Session session(cmd.app->get_name(), config, out, err);
      cmd.fn(session);
      session.finish();
      return kExitOk;
    } catch (const EmptyCandidateSet& e) {
      err << "error: " << e.what() << '\n';
      return kExitPolicy;
    } catch (const UndefinedMetric& e) {
      err << "error: " << e.what() << '\n';
      return kExitPolicy;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return kExitInput;
}

}  // namespace dlpeval::cli
