#include "autobva/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "autobva/harness.hpp"
#include "autobva/io.hpp"
#include "autobva/report.hpp"

namespace autobva::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("AUTOBVA_SEED");
  if (env == nullptr || *env == '\0') return flag;
  std::uint64_t value = 0;
  const std::string_view text(env);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw UsageError("AUTOBVA_SEED is not an unsigned integer: " + std::string(text));
  }
  return value;
}

// "0", "3/4" or a plain decimal such as "0.25".
Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto num = parse_value(text.substr(0, slash));
    auto den = parse_value(text.substr(slash + 1));
    if (!num || !den || num->is_boolean() || den->is_boolean() || den->value() == 0) {
      throw UsageError("bad rational: " + text);
    }
    return Rational(num->value(), den->value());
  }
  const auto dot = text.find('.');
  std::string digits = text;
  BigInt scale = 1;
  if (dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    digits = text.substr(0, dot) + frac;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  }
  auto v = parse_value(digits);
  if (!v || v->is_boolean() || digits.empty() || digits == "-") {
    throw UsageError("bad number: " + text);
  }
  return Rational(v->value(), scale);
}

bool parse_switch(const std::string& text, const char* what) {
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  throw UsageError(std::string(what) + " must be on or off, got " + text);
}

struct SamplerFlags {
  std::string sampling = "bituniform";
  std::string cts = "on";
  unsigned big_int_bits = 128;

  void add(CLI::App* app) {
    app->add_option("--sampling", sampling, "uniform | bituniform")->capture_default_str();
    app->add_option("--cts", cts, "compatible type sampling: on | off")->capture_default_str();
    app->add_option("--big-int-bits", big_int_bits, "bit cap for BigInt sampling")
        ->capture_default_str();
  }

  SamplerConfig config() const {
    SamplerConfig c;
    c.method = parse_sampling_method(sampling);
    c.cts_enabled = parse_switch(cts, "--cts");
    c.big_int_bit_cap = big_int_bits;
    if (c.big_int_bit_cap < 64) throw UsageError("--big-int-bits must be at least 64");
    return c;
  }
};

struct SutFlags {
  std::string sut;
  std::size_t arity = 1;
  int timeout_ms = 5000;

  void add(CLI::App* app) {
    app->add_option("--sut", sut, "bytecount | bmi | bmi-class | date | external:<command>")
        ->required();
    app->add_option("--arity", arity, "argument count for external SUTs")->capture_default_str();
    app->add_option("--timeout-ms", timeout_ms, "external SUT timeout")->capture_default_str();
  }

  SutDescriptor resolve() const {
    try {
      return resolve_sut(sut, arity, std::chrono::milliseconds(timeout_ms));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

struct BudgetFlags {
  std::optional<double> seconds;
  std::optional<std::uint64_t> iterations;

  void add(CLI::App* app) {
    auto* s = app->add_option("--seconds", seconds, "wall-clock budget");
    auto* i = app->add_option("--iterations", iterations, "sample/search rounds");
    s->excludes(i);
  }

  Budget budget(Budget fallback) const {
    if (seconds) {
      if (!(*seconds > 0.0)) throw UsageError("--seconds must be positive");
      return Budget::seconds(*seconds);
    }
    if (iterations) return Budget::iterations(*iterations);
    return fallback;
  }
};

OutputDistance parse_distance(const std::string& name) {
  try {
    return OutputDistance::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct LoadedSet {
  std::vector<BoundaryCandidate> candidates;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::string> strategies;
};

LoadedSet load_all(const std::vector<std::string>& files) {
  LoadedSet out;
  for (const auto& f : files) {
    auto loaded = load_archive(f);
    const std::string label = loaded.manifest ? loaded.manifest->strategy : "unknown";
    if (std::find(out.strategies.begin(), out.strategies.end(), label) == out.strategies.end()) {
      out.strategies.push_back(label);
    }
    merge_candidates(out.candidates, out.labels, loaded.candidates, label);
  }
  return out;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_detect(const SutFlags& sut_flags, const SamplerFlags& sampler_flags,
               const BudgetFlags& budget_flags, const std::string& strategy, std::uint64_t seed_flag,
               const std::string& distance, const std::string& threshold, unsigned max_doublings,
               const std::string& out_dir, std::ostream& out) {
  const auto sut = sut_flags.resolve();
  DetectionConfig config;
  config.strategy = parse_strategy(strategy);
  config.budget = budget_flags.budget(Budget::seconds(30));
  config.distance = parse_distance(distance);
  config.threshold = Boundariness(parse_rational(threshold));
  config.sampler = sampler_flags.config();
  config.bcs_max_doublings = max_doublings;
  const std::uint64_t seed = effective_seed(seed_flag);
  config.sampler.seed = seed;

  Rng rng(seed);
  const auto result = detect(sut, config, rng);
  const auto manifest = make_manifest(sut.name, config, seed, result);

  const fs::path dir(out_dir);
  std::ostringstream csv;
  write_archive_csv(csv, result.archive.entries());
  write_text_file(dir / "archive.csv", csv.str());
  write_text_file(dir / "archive.json", dump(archive_to_json(result.archive.entries(), manifest)));
  write_text_file(dir / "manifest.json", dump(manifest_to_json(manifest)));

  out << sut.name << " " << manifest.strategy << ": " << manifest.candidates << " candidates, "
      << manifest.executions << " executions, " << manifest.samples << " samples in "
      << manifest.elapsed_seconds << " s -> " << dir.string() << "\n";
  return kExitOk;
}

int cmd_summarize(const std::vector<std::string>& files, std::size_t restarts,
                  std::uint64_t seed_flag, const std::string& out_dir, std::ostream& out) {
  auto set = load_all(files);
  SummaryConfig config;
  config.restarts = restarts;
  Rng rng(effective_seed(seed_flag));
  auto report = summarize(set.candidates, rng, config);
  count_strategies(report, set.labels);

  const auto md = report_markdown(report, set.candidates, set.strategies);
  const fs::path dir(out_dir);
  write_text_file(dir / "report.md", md);
  write_text_file(dir / "report.json", dump(report_json(report, set.candidates, set.strategies)));
  out << md;
  return kExitOk;
}

int cmd_rank(const std::vector<std::string>& files, const std::string& distance,
             std::optional<std::size_t> top, bool per_cluster, std::size_t restarts,
             std::uint64_t seed_flag, const std::string& out_dir, std::ostream& out) {
  const auto set = load_all(files);
  const auto d = parse_distance(distance);
  std::vector<RankedRow> rows;
  if (per_cluster) {
    SummaryConfig config;
    config.restarts = restarts;
    Rng rng(effective_seed(seed_flag));
    const auto report = summarize(set.candidates, rng, config);
    const auto ids = cluster_ids(report, set.candidates.size());
    rows = rank_candidates(set.candidates, d, top, &ids);
  } else {
    rows = rank_candidates(set.candidates, d, top);
  }
  std::ostringstream csv;
  write_ranked_csv(csv, set.candidates, rows);
  write_text_file(fs::path(out_dir) / "ranked.csv", csv.str());
  out << csv.str();
  return kExitOk;
}

int cmd_oracle(const SutFlags& sut_flags, const std::string& from, const std::string& to,
               std::size_t argument, const std::string& fixed, const std::string& distance,
               bool force, const std::string& out_file, std::ostream& out) {
  const auto sut = sut_flags.resolve();
  OracleConfig config;
  const auto lo = parse_value(from);
  const auto hi = parse_value(to);
  if (!lo || !hi || lo->is_boolean() || hi->is_boolean()) throw UsageError("--from/--to must be integers");
  config.from = lo->value();
  config.to = hi->value();
  config.argument = argument;
  config.distance = parse_distance(distance);
  if (fixed.empty()) {
    config.fixed.assign(sut.arity(), SutValue::integer(std::int64_t{0}));
  } else {
    auto values = parse_tuple(fixed);
    if (!values) throw UsageError("--fixed must be a comma-separated tuple");
    config.fixed = std::move(*values);
  }
  if (force) config.max_evaluations = std::numeric_limits<std::uint64_t>::max();
  if (config.fixed.size() != sut.arity()) {
    throw UsageError("--fixed needs " + std::to_string(sut.arity()) + " values");
  }
  const auto pairs = oracle_scan(sut, config);
  std::ostringstream csv;
  write_archive_csv(csv, pairs);
  if (out_file.empty()) {
    out << csv.str();
  } else {
    write_text_file(out_file, csv.str());
    out << pairs.size() << " boundary pairs -> " << out_file << "\n";
  }
  return kExitOk;
}

int cmd_experiment(const SutFlags& sut_flags, const SamplerFlags& sampler_flags,
                   const BudgetFlags& budget_flags, const std::vector<std::string>& strategies,
                   std::size_t repetitions, std::uint64_t seed_flag, const std::string& distance,
                   std::size_t restarts, unsigned jobs, const std::string& out_dir,
                   std::ostream& out) {
  const auto sut = sut_flags.resolve();
  ExperimentConfig config;
  config.strategies.clear();
  for (const auto& s : strategies) config.strategies.push_back(parse_strategy(s));
  if (config.strategies.empty()) throw UsageError("--strategies is empty");
  config.repetitions = repetitions;
  config.seed = effective_seed(seed_flag);
  config.detection.budget = budget_flags.budget(Budget::iterations(2000));
  config.detection.distance = parse_distance(distance);
  config.detection.sampler = sampler_flags.config();
  config.summary.restarts = restarts;
  config.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;

  const auto result = run_experiment(sut, config);
  const auto md = experiment_markdown(result, sut.name);
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    write_text_file(dir / "experiment.md", md);
    std::ostringstream csv;
    write_archive_csv(csv, result.merged);
    write_text_file(dir / "archive.csv", csv.str());
    std::vector<std::string> names;
    for (auto s : config.strategies) names.emplace_back(to_string(s));
    write_text_file(dir / "report.md", report_markdown(result.report, result.merged, names));
    write_text_file(dir / "report.json", dump(report_json(result.report, result.merged, names)));
  }
  out << md;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Black-box boundary value exploration", "autobva"};
  app.require_subcommand(1);

  SutFlags sut_flags;
  SamplerFlags sampler_flags;
  BudgetFlags budget_flags;
  std::string strategy = "bcs";
  std::uint64_t seed = 0;
  std::string distance = "strlen";
  std::string threshold = "0";
  unsigned max_doublings = 96;
  std::string out_dir = ".";

  auto* detect_cmd = app.add_subcommand("detect", "search a SUT for boundary candidates");
  sut_flags.add(detect_cmd);
  sampler_flags.add(detect_cmd);
  budget_flags.add(detect_cmd);
  detect_cmd->add_option("--strategy", strategy, "lns | bcs")->capture_default_str();
  detect_cmd->add_option("--seed", seed, "rng seed (AUTOBVA_SEED overrides)")->capture_default_str();
  detect_cmd->add_option("--distance", distance, "strlen | jaccardN | levenshtein")
      ->capture_default_str();
  detect_cmd->add_option("--threshold", threshold, "archive scores strictly above this")
      ->capture_default_str();
  detect_cmd->add_option("--max-doublings", max_doublings, "BCS expansion limit")
      ->capture_default_str();
  detect_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

  std::vector<std::string> files;
  std::size_t restarts = 100;
  std::string summary_dir = ".";
  std::uint64_t summary_seed = 0;
  auto* summarize_cmd = app.add_subcommand("summarize", "cluster archived candidates");
  summarize_cmd->add_option("archives", files, "archive .csv or .json files")->required();
  summarize_cmd->add_option("--restarts", restarts, "k-means runs")->capture_default_str();
  summarize_cmd->add_option("--seed", summary_seed, "rng seed")->capture_default_str();
  summarize_cmd->add_option("--out", summary_dir, "output directory")->capture_default_str();

  std::vector<std::string> rank_files;
  std::string rank_distance = "jaccard2";
  std::optional<std::size_t> top;
  bool per_cluster = false;
  std::size_t rank_restarts = 100;
  std::uint64_t rank_seed = 0;
  std::string rank_dir = ".";
  auto* rank_cmd = app.add_subcommand("rank", "order candidates by boundariness");
  rank_cmd->add_option("archives", rank_files, "archive .csv or .json files")->required();
  rank_cmd->add_option("--distance", rank_distance, "output distance")->capture_default_str();
  rank_cmd->add_option("--top", top, "rows to keep (per cluster with --per-cluster)");
  rank_cmd->add_flag("--per-cluster", per_cluster, "rank within clusters");
  rank_cmd->add_option("--restarts", rank_restarts, "k-means runs for --per-cluster")
      ->capture_default_str();
  rank_cmd->add_option("--seed", rank_seed, "rng seed")->capture_default_str();
  rank_cmd->add_option("--out", rank_dir, "output directory")->capture_default_str();

  SutFlags oracle_sut;
  std::string from = "0";
  std::string to = "0";
  std::size_t argument = 0;
  std::string fixed;
  std::string oracle_distance = "strlen";
  bool force = false;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive scan of adjacent input pairs");
  oracle_sut.add(oracle_cmd);
  oracle_cmd->add_option("--from", from, "first value")->required();
  oracle_cmd->add_option("--to", to, "last value")->required();
  oracle_cmd->add_option("--arg", argument, "scanned argument index")->capture_default_str();
  oracle_cmd->add_option("--fixed", fixed, "values for all arguments, e.g. 2000,1,1");
  oracle_cmd->add_option("--distance", oracle_distance, "output distance")->capture_default_str();
  oracle_cmd->add_flag("--force", force, "allow more than 1e8 evaluations");
  oracle_cmd->add_option("--out", oracle_out, "CSV file (default stdout)");

  SutFlags experiment_sut;
  SamplerFlags experiment_sampler;
  BudgetFlags experiment_budget;
  std::vector<std::string> strategies = {"lns", "bcs"};
  std::size_t repetitions = 3;
  std::uint64_t experiment_seed = 1;
  std::string experiment_distance = "strlen";
  std::size_t experiment_restarts = 100;
  unsigned jobs = 0;
  std::string experiment_dir;
  auto* experiment_cmd = app.add_subcommand("experiment", "repeated runs per strategy");
  experiment_sut.add(experiment_cmd);
  experiment_sampler.add(experiment_cmd);
  experiment_budget.add(experiment_cmd);
  experiment_cmd->add_option("--strategies", strategies, "strategies to compare")
      ->delimiter(',')
      ->capture_default_str();
  experiment_cmd->add_option("--repetitions", repetitions, "runs per strategy")
      ->capture_default_str();
  experiment_cmd->add_option("--seed", experiment_seed, "base seed")->capture_default_str();
  experiment_cmd->add_option("--distance", experiment_distance, "output distance")
      ->capture_default_str();
  experiment_cmd->add_option("--restarts", experiment_restarts, "k-means runs")
      ->capture_default_str();
  experiment_cmd->add_option("--jobs", jobs, "parallel runs (0 = hardware threads)")
      ->capture_default_str();
  experiment_cmd->add_option("--out", experiment_dir, "directory for tables and merged archive");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "autobva: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (detect_cmd->parsed()) {
      return cmd_detect(sut_flags, sampler_flags, budget_flags, strategy, seed, distance, threshold,
                        max_doublings, out_dir, out);
    }
    if (summarize_cmd->parsed()) return cmd_summarize(files, restarts, summary_seed, summary_dir, out);
    if (rank_cmd->parsed()) {
      return cmd_rank(rank_files, rank_distance, top, per_cluster, rank_restarts, rank_seed,
                      rank_dir, out);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle(oracle_sut, from, to, argument, fixed, oracle_distance, force, oracle_out,
                        out);
    }
    if (experiment_cmd->parsed()) {
      return cmd_experiment(experiment_sut, experiment_sampler, experiment_budget, strategies,
                            repetitions, experiment_seed, experiment_distance, experiment_restarts,
                            jobs, experiment_dir, out);
    }
  } catch (const DataError& e) {
    err << "autobva: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "autobva: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "autobva: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace autobva::cli
