#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autobva/detection.hpp"
#include "autobva/summarization.hpp"

namespace autobva {

struct OracleConfig {
  BigInt from = 0;
  BigInt to = 0;
  std::size_t argument = 0;   // which argument is scanned
  InputTuple fixed;           // values for all arguments; the scanned one is overwritten
  OutputDistance distance = OutputDistance::strlen_distance();
  std::uint64_t max_evaluations = 100'000'000;
};

/// Every adjacent pair (x, x+1) with from <= x < to whose outputs are at
/// positive distance, in increasing x. Throws ConfigError for a reversed
/// window, a bad argument index, or a window above max_evaluations.
std::vector<BoundaryCandidate> oracle_scan(const SutDescriptor& sut, const OracleConfig& config);

struct ExperimentConfig {
  std::vector<Strategy> strategies = {Strategy::lns, Strategy::bcs};
  std::size_t repetitions = 3;
  std::uint64_t seed = 1;
  DetectionConfig detection;  // strategy is overridden per run
  SummaryConfig summary;
  unsigned jobs = 1;
};

struct StrategyStats {
  Strategy strategy = Strategy::bcs;
  std::vector<std::uint64_t> found;  // per repetition
  double mean = 0.0;
  double stddev = 0.0;               // sample standard deviation, 0 for one run
  std::size_t union_size = 0;        // distinct candidates over all repetitions
  std::size_t unique = 0;            // found by this strategy only
  std::size_t clusters_covered = 0;
};

struct ExperimentResult {
  std::vector<StrategyStats> strategies;
  std::size_t union_total = 0;
  std::size_t clusters_total = 0;
  std::vector<BoundaryCandidate> merged;
  std::vector<std::vector<std::string>> labels;  // strategies that found merged[i]
  ClusterReport report;
};

/// Derives the seed of repetition `rep` for strategy slot `slot`.
std::uint64_t run_seed(std::uint64_t base, std::size_t slot, std::size_t rep);

ExperimentResult run_experiment(const SutDescriptor& sut, const ExperimentConfig& config);

std::string experiment_markdown(const ExperimentResult& result, const std::string& sut_name);

/// Merges archives keeping the first occurrence of each key; labels follow.
void merge_candidates(std::vector<BoundaryCandidate>& into,
                      std::vector<std::vector<std::string>>& labels,
                      const std::vector<BoundaryCandidate>& from, const std::string& label);

}  // namespace autobva
