#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace autobva {

enum class ErrorKind : std::uint8_t {
  bounds_error,
  argument_error,
  domain_error,
  inexact_error,
  process_error,
};

std::string_view to_string(ErrorKind kind);
std::optional<ErrorKind> parse_error_kind(std::string_view name);

using ErrorPayload = std::map<std::string, std::string>;

/// Result of running a SUT on one input: the rendered return value, or the
/// rendered error that was raised. Errors are data here, never exceptions.
struct ExecutionOutcome {
  bool valid = true;
  std::string text;
  std::optional<ErrorKind> error_kind;
  ErrorPayload payload;

  static ExecutionOutcome ok(std::string text);

  /// BoundsError("kMGTPE", 7)
  static ExecutionOutcome bounds_error(std::string_view accessed, std::int64_t index);
  /// ArgumentError("Day: 0 out of range (1:29)")
  static ExecutionOutcome argument_error(std::string_view message);
  /// DomainError("height or weight negative")
  static ExecutionOutcome domain_error(std::string_view message);
  /// InexactError(:Int64, Int64, 100000000000000000000)
  static ExecutionOutcome inexact_error(std::string_view target, std::string_view value);
  /// ProcessError(1, "stderr text")
  static ExecutionOutcome process_error(int exit_code, std::string_view stderr_text);

  friend bool operator==(const ExecutionOutcome&, const ExecutionOutcome&) = default;
};

/// Recovers kind and payload from a canonical error text produced by one of
/// the factories above. Returns nullopt for text that is not an error form.
std::optional<ExecutionOutcome> parse_error_text(std::string_view text);

}  // namespace autobva
