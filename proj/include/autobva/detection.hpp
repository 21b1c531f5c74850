#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "autobva/distances.hpp"
#include "autobva/sampling.hpp"
#include "autobva/sut.hpp"

namespace autobva {

/// Ordered input pair with both outcomes and its boundariness under the
/// configured output distance.
struct BoundaryCandidate {
  InputTuple i1;
  ExecutionOutcome o1;
  InputTuple i2;
  ExecutionOutcome o2;
  Boundariness score;

  /// Ordered identity: tuple_key(i1) + '|' + tuple_key(i2).
  std::string key() const;

  friend bool operator==(const BoundaryCandidate&, const BoundaryCandidate&) = default;
};

BoundaryCandidate make_candidate(InputTuple i1, ExecutionOutcome o1, InputTuple i2,
                                 ExecutionOutcome o2, const OutputDistance& distance);

enum class Direction : std::uint8_t { increment, decrement };

struct MutationOperator {
  Direction direction = Direction::increment;
  std::size_t argument_index = 0;
};

/// Adds or subtracts `steps` on one argument. Booleans only move between
/// false and true; anything else is inapplicable and yields nullopt.
std::optional<InputTuple> mutate(const InputTuple& input, MutationOperator op,
                                 const BigInt& steps = 1);

/// Deduplicating, insertion-ordered set of candidates whose score exceeds the
/// threshold.
class Archive {
 public:
  explicit Archive(Boundariness threshold = {}) : threshold_(std::move(threshold)) {}

  /// Inserts iff score > threshold and the key is unseen.
  bool insert(BoundaryCandidate candidate);
  bool contains(const std::string& key) const { return keys_.contains(key); }

  const std::vector<BoundaryCandidate>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Boundariness& threshold() const noexcept { return threshold_; }

 private:
  Boundariness threshold_;
  std::vector<BoundaryCandidate> entries_;
  std::unordered_set<std::string> keys_;
};

/// Executes a SUT and counts invocations.
class CountingExecutor {
 public:
  explicit CountingExecutor(const SutDescriptor& sut) : sut_(&sut) {}

  ExecutionOutcome operator()(const InputTuple& input) {
    ++count_;
    return execute(*sut_, input);
  }
  std::uint64_t count() const noexcept { return count_; }
  const SutDescriptor& sut() const noexcept { return *sut_; }

 private:
  const SutDescriptor* sut_;
  std::uint64_t count_ = 0;
};

/// Local Neighbor Sampling: every applicable +-1 neighbour of `input`, unfiltered.
std::vector<BoundaryCandidate> lns_search(CountingExecutor& exec, const InputTuple& input,
                                          const OutputDistance& distance);
std::vector<BoundaryCandidate> lns_search(const SutDescriptor& sut, const InputTuple& input,
                                          const OutputDistance& distance);

/// Boundary Crossing Search: random direction, exponential expansion until the
/// output changes, then bisection down to an adjacent pair. Returns the
/// initial pair when no change is reachable within 2^max_doublings steps.
std::vector<BoundaryCandidate> bcs_search(CountingExecutor& exec, const OutputDistance& distance,
                                          const InputTuple& input, Rng& rng,
                                          unsigned max_doublings = 96);
std::vector<BoundaryCandidate> bcs_search(const SutDescriptor& sut, const OutputDistance& distance,
                                          const InputTuple& input, Rng& rng,
                                          unsigned max_doublings = 96);

/// BCS with a fixed direction; used by bcs_search after the random choice.
std::vector<BoundaryCandidate> bcs_search_direction(CountingExecutor& exec,
                                                    const OutputDistance& distance,
                                                    const InputTuple& input, MutationOperator op,
                                                    unsigned max_doublings = 96);

enum class Strategy : std::uint8_t { lns, bcs };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

/// Stop criterion: wall-clock seconds or a fixed number of sample/search rounds.
struct Budget {
  std::variant<std::chrono::duration<double>, std::uint64_t> limit = std::uint64_t{0};

  static Budget seconds(double s) { return Budget{std::chrono::duration<double>(s)}; }
  static Budget iterations(std::uint64_t n) { return Budget{n}; }
  bool is_time() const noexcept { return limit.index() == 0; }
};

struct DetectionConfig {
  Strategy strategy = Strategy::bcs;
  Budget budget = Budget::seconds(30);
  Boundariness threshold;
  OutputDistance distance = OutputDistance::strlen_distance();
  SamplerConfig sampler;
  unsigned bcs_max_doublings = 96;
};

struct RunStats {
  std::chrono::duration<double> elapsed{0};
  std::uint64_t executions = 0;
  std::uint64_t samples = 0;
};

struct DetectionResult {
  Archive archive;
  RunStats stats;
};

/// Swaps the sides so that i1 precedes i2. Scores are symmetric, so only the
/// orientation changes.
BoundaryCandidate lower_first(BoundaryCandidate c);

/// Two-step detection: sample globally, search locally, archive candidates above
/// the threshold until the budget is spent. Candidates are archived lower
/// input first, so (x, x+1) and (x+1, x) are one boundary. Throws ConfigError
/// on bad config.
DetectionResult detect(const SutDescriptor& sut, const DetectionConfig& config, Rng& rng);

}  // namespace autobva
