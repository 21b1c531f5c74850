#include "autobva/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace autobva {

std::vector<BoundaryCandidate> oracle_scan(const SutDescriptor& sut, const OracleConfig& config) {
  if (config.to < config.from) throw ConfigError("oracle window is reversed");
  if (config.argument >= sut.arity()) throw ConfigError("oracle argument index out of range");
  if (config.fixed.size() != sut.arity()) {
    throw ConfigError("oracle needs a value for each of the " + std::to_string(sut.arity()) +
                      " arguments");
  }
  if (BigInt(config.to - config.from + 1) > config.max_evaluations) {
    throw ConfigError("oracle window needs more than " + std::to_string(config.max_evaluations) +
                      " evaluations");
  }
  std::vector<BoundaryCandidate> out;
  if (config.to == config.from) return out;

  InputTuple current = config.fixed;
  current[config.argument] = SutValue::integer(config.from);
  ExecutionOutcome current_out = execute(sut, current);
  for (BigInt x = config.from; x < config.to; ++x) {
    InputTuple next = current;
    next[config.argument] = SutValue::integer(BigInt(x + 1));
    ExecutionOutcome next_out = execute(sut, next);
    if (config.distance.positive(current_out.text, next_out.text)) {
      out.push_back(make_candidate(current, current_out, next, next_out, config.distance));
    }
    current = std::move(next);
    current_out = std::move(next_out);
  }
  return out;
}

std::uint64_t run_seed(std::uint64_t base, std::size_t slot, std::size_t rep) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(slot), static_cast<std::uint32_t>(rep)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

void merge_candidates(std::vector<BoundaryCandidate>& into,
                      std::vector<std::vector<std::string>>& labels,
                      const std::vector<BoundaryCandidate>& from, const std::string& label) {
  labels.resize(into.size());
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(into.size() + from.size());
  for (std::size_t i = 0; i < into.size(); ++i) index.emplace(into[i].key(), i);
  for (const auto& c : from) {
    auto [it, fresh] = index.try_emplace(c.key(), into.size());
    if (fresh) {
      into.push_back(c);
      labels.emplace_back();
    }
    auto& l = labels[it->second];
    if (std::find(l.begin(), l.end(), label) == l.end()) l.push_back(label);
  }
}

ExperimentResult run_experiment(const SutDescriptor& sut, const ExperimentConfig& config) {
  if (config.repetitions == 0) throw ConfigError("repetitions must be positive");
  const std::size_t slots = config.strategies.size();
  const std::size_t total = slots * config.repetitions;
  std::vector<DetectionResult> runs(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      const std::size_t slot = job / config.repetitions;
      const std::size_t rep = job % config.repetitions;
      DetectionConfig dc = config.detection;
      dc.strategy = config.strategies[slot];
      Rng rng(run_seed(config.seed, slot, rep));
      runs[job] = detect(sut, dc, rng);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ExperimentResult result;
  std::vector<std::unordered_set<std::string>> seen(slots);
  for (std::size_t slot = 0; slot < slots; ++slot) {
    StrategyStats stats;
    stats.strategy = config.strategies[slot];
    const std::string label(to_string(stats.strategy));
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      const auto& archive = runs[slot * config.repetitions + rep].archive;
      stats.found.push_back(archive.size());
      for (const auto& c : archive.entries()) seen[slot].insert(c.key());
      merge_candidates(result.merged, result.labels, archive.entries(), label);
    }
    double sum = 0.0;
    for (auto f : stats.found) sum += static_cast<double>(f);
    stats.mean = sum / static_cast<double>(stats.found.size());
    double sq = 0.0;
    for (auto f : stats.found) sq += (static_cast<double>(f) - stats.mean) * (static_cast<double>(f) - stats.mean);
    stats.stddev = stats.found.size() > 1 ? std::sqrt(sq / static_cast<double>(stats.found.size() - 1)) : 0.0;
    stats.union_size = seen[slot].size();
    result.strategies.push_back(std::move(stats));
  }
  result.union_total = result.merged.size();
  for (std::size_t slot = 0; slot < slots; ++slot) {
    std::size_t unique = 0;
    for (const auto& key : seen[slot]) {
      bool elsewhere = false;
      for (std::size_t other = 0; other < slots && !elsewhere; ++other) {
        elsewhere = other != slot && seen[other].contains(key);
      }
      if (!elsewhere) ++unique;
    }
    result.strategies[slot].unique = unique;
  }

  Rng summary_rng(run_seed(config.seed, slots, config.repetitions));
  result.report = summarize(result.merged, summary_rng, config.summary);
  count_strategies(result.report, result.labels);
  result.clusters_total = result.report.cluster_count();
  for (auto& s : result.strategies) {
    const std::string label(to_string(s.strategy));
    for (const auto& g : result.report.groups) {
      for (const auto& c : g.clusters) {
        const auto it = c.strategy_counts.find(label);
        if (it != c.strategy_counts.end() && it->second > 0) ++s.clusters_covered;
      }
    }
  }
  return result;
}

std::string experiment_markdown(const ExperimentResult& result, const std::string& sut_name) {
  std::ostringstream out;
  char buf[64];
  out << "# Experiment: " << sut_name << "\n\n";
  out << "| strategy | runs | found (mean ± sd) | union | unique |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& s : result.strategies) {
    std::snprintf(buf, sizeof buf, "%.1f ± %.1f", s.mean, s.stddev);
    out << "| " << to_string(s.strategy) << " | " << s.found.size() << " | " << buf << " | "
        << s.union_size << " | " << s.unique << " |\n";
  }
  out << "\nTotal distinct candidates: " << result.union_total << "\n\n";
  out << "| strategy | clusters covered | of |\n|---|---|---|\n";
  for (const auto& s : result.strategies) {
    out << "| " << to_string(s.strategy) << " | " << s.clusters_covered << " | "
        << result.clusters_total << " |\n";
  }
  return out.str();
}

}  // namespace autobva
