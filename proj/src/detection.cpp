#include "autobva/detection.hpp"

namespace autobva {

namespace {

std::uint64_t pick(std::uint64_t n, Rng& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

}  // namespace

std::string BoundaryCandidate::key() const { return tuple_key(i1) + "|" + tuple_key(i2); }

BoundaryCandidate make_candidate(InputTuple i1, ExecutionOutcome o1, InputTuple i2,
                                 ExecutionOutcome o2, const OutputDistance& distance) {
  Boundariness score = pdq(i1, o1, i2, o2, distance);
  return BoundaryCandidate{std::move(i1), std::move(o1), std::move(i2), std::move(o2),
                           std::move(score)};
}

std::optional<InputTuple> mutate(const InputTuple& input, MutationOperator op,
                                 const BigInt& steps) {
  if (op.argument_index >= input.size()) return std::nullopt;
  const SutValue& target = input[op.argument_index];
  InputTuple out = input;
  if (target.is_boolean()) {
    if (steps != 1) return std::nullopt;
    const bool now = target.value() != 0;
    if (op.direction == Direction::increment && now) return std::nullopt;
    if (op.direction == Direction::decrement && !now) return std::nullopt;
    out[op.argument_index] = SutValue::boolean(!now);
    return out;
  }
  out[op.argument_index] = SutValue::integer(
      op.direction == Direction::increment ? BigInt(target.value() + steps)
                                           : BigInt(target.value() - steps));
  return out;
}

bool Archive::insert(BoundaryCandidate candidate) {
  const bool above = threshold_.is_zero() ? !candidate.score.is_zero() : candidate.score > threshold_;
  if (!above) return false;
  auto key = candidate.key();
  if (!keys_.insert(std::move(key)).second) return false;
  entries_.push_back(std::move(candidate));
  return true;
}

std::vector<BoundaryCandidate> lns_search(CountingExecutor& exec, const InputTuple& input,
                                          const OutputDistance& distance) {
  std::vector<BoundaryCandidate> out;
  const ExecutionOutcome origin = exec(input);
  for (std::size_t a = 0; a < input.size(); ++a) {
    for (const Direction dir : {Direction::increment, Direction::decrement}) {
      auto neighbour = mutate(input, {dir, a});
      if (!neighbour) continue;
      ExecutionOutcome outcome = exec(*neighbour);
      out.push_back(make_candidate(input, origin, std::move(*neighbour), std::move(outcome),
                                   distance));
    }
  }
  return out;
}

std::vector<BoundaryCandidate> lns_search(const SutDescriptor& sut, const InputTuple& input,
                                          const OutputDistance& distance) {
  CountingExecutor exec(sut);
  return lns_search(exec, input, distance);
}

std::vector<BoundaryCandidate> bcs_search_direction(CountingExecutor& exec,
                                                    const OutputDistance& distance,
                                                    const InputTuple& input, MutationOperator op,
                                                    unsigned max_doublings) {
  auto next = mutate(input, op);
  if (!next) return {};
  const ExecutionOutcome origin = exec(input);
  ExecutionOutcome next_outcome = exec(*next);
  BoundaryCandidate initial = make_candidate(input, origin, *next, next_outcome, distance);
  if (!initial.score.is_zero()) return {std::move(initial)};

  // Expansion: probe input + 2^k until the output leaves the origin's partition.
  BigInt below = 1;  // largest probed step known to stay in the partition
  ExecutionOutcome below_outcome = next_outcome;
  std::optional<BigInt> above;
  ExecutionOutcome above_outcome;
  for (unsigned k = 1; k <= max_doublings; ++k) {
    const BigInt step = BigInt(1) << k;
    auto probe = mutate(input, op, step);
    if (!probe) break;
    ExecutionOutcome outcome = exec(*probe);
    if (distance.positive(origin.text, outcome.text)) {
      above = step;
      above_outcome = std::move(outcome);
      break;
    }
    below = step;
    below_outcome = std::move(outcome);
  }
  if (!above) return {std::move(initial)};

  // Squeeze: keep `below` inside and `above` outside until they are adjacent.
  BigInt hi = *above;
  while (hi - below > 1) {
    const BigInt mid = (below + hi) / 2;
    auto probe = mutate(input, op, mid);
    ExecutionOutcome outcome = exec(*probe);
    if (distance.positive(origin.text, outcome.text)) {
      hi = mid;
      above_outcome = std::move(outcome);
    } else {
      below = mid;
      below_outcome = std::move(outcome);
    }
  }
  auto first = mutate(input, op, below);
  auto second = mutate(input, op, hi);
  return {make_candidate(std::move(*first), std::move(below_outcome), std::move(*second),
                         std::move(above_outcome), distance)};
}

std::vector<BoundaryCandidate> bcs_search(CountingExecutor& exec, const OutputDistance& distance,
                                          const InputTuple& input, Rng& rng,
                                          unsigned max_doublings) {
  if (input.empty()) return {};
  const auto arg = static_cast<std::size_t>(pick(input.size(), rng));
  std::vector<MutationOperator> options;
  for (const Direction dir : {Direction::increment, Direction::decrement}) {
    if (mutate(input, {dir, arg})) options.push_back({dir, arg});
  }
  if (options.empty()) return {};
  const MutationOperator op = options.size() == 1 ? options.front() : options[pick(options.size(), rng)];
  return bcs_search_direction(exec, distance, input, op, max_doublings);
}

std::vector<BoundaryCandidate> bcs_search(const SutDescriptor& sut, const OutputDistance& distance,
                                          const InputTuple& input, Rng& rng,
                                          unsigned max_doublings) {
  CountingExecutor exec(sut);
  return bcs_search(exec, distance, input, rng, max_doublings);
}

std::string_view to_string(Strategy s) { return s == Strategy::lns ? "lns" : "bcs"; }

Strategy parse_strategy(std::string_view name) {
  if (name == "lns") return Strategy::lns;
  if (name == "bcs") return Strategy::bcs;
  throw ConfigError("unknown strategy: " + std::string(name));
}

namespace {

// lns_search followed by archiving, without building candidates that the
// archive would reject: zero distance never beats a nonnegative threshold.
void lns_archive(CountingExecutor& exec, const InputTuple& input, const OutputDistance& distance,
                 Archive& archive) {
  const ExecutionOutcome origin = exec(input);
  for (std::size_t a = 0; a < input.size(); ++a) {
    for (const Direction dir : {Direction::increment, Direction::decrement}) {
      auto neighbour = mutate(input, {dir, a});
      if (!neighbour) continue;
      ExecutionOutcome outcome = exec(*neighbour);
      if (!distance.positive(origin.text, outcome.text)) continue;
      archive.insert(lower_first(make_candidate(input, origin, std::move(*neighbour),
                                                std::move(outcome), distance)));
    }
  }
}

}  // namespace

BoundaryCandidate lower_first(BoundaryCandidate c) {
  if (tuple_less(c.i2, c.i1)) {
    std::swap(c.i1, c.i2);
    std::swap(c.o1, c.o2);
  }
  return c;
}

DetectionResult detect(const SutDescriptor& sut, const DetectionConfig& config, Rng& rng) {
  if (config.budget.is_time() &&
      std::get<0>(config.budget.limit).count() <= 0.0) {
    throw ConfigError("time budget must be positive");
  }
  const Sampler sampler(sut, config.sampler);
  CountingExecutor exec(sut);
  DetectionResult result{Archive(config.threshold), {}};

  const auto start = std::chrono::steady_clock::now();
  const auto exhausted = [&](std::uint64_t rounds) {
    if (config.budget.is_time()) {
      return std::chrono::steady_clock::now() - start >= std::get<0>(config.budget.limit);
    }
    return rounds >= std::get<1>(config.budget.limit);
  };

  std::uint64_t rounds = 0;
  while (!exhausted(rounds)) {
    const InputTuple input = sampler.sample(result.archive, rng);
    if (config.strategy == Strategy::lns) {
      lns_archive(exec, input, config.distance, result.archive);
    } else {
      auto found = bcs_search(exec, config.distance, input, rng, config.bcs_max_doublings);
      for (auto& candidate : found) result.archive.insert(lower_first(std::move(candidate)));
    }
    ++rounds;
  }
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  result.stats.executions = exec.count();
  result.stats.samples = rounds;
  return result;
}

}  // namespace autobva
