#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autobva/outcome.hpp"
#include "autobva/value.hpp"

namespace autobva {

/// A black-box program under test. `invoke` maps an input tuple to an outcome;
/// anything it throws is captured by execute().
struct SutDescriptor {
  std::string name;
  std::vector<std::string> argument_types;  // abstract type per argument, e.g. "Integer"
  std::function<ExecutionOutcome(std::span<const SutValue>)> invoke;

  std::size_t arity() const noexcept { return argument_types.size(); }
};

/// Runs the SUT. Throws std::invalid_argument only on an arity mismatch; SUT
/// failures come back as error outcomes.
ExecutionOutcome execute(const SutDescriptor& sut, const InputTuple& input);

// Built-in subject programs.

ExecutionOutcome bytecount(const SutValue& bytes);
ExecutionOutcome bmi_value(const SutValue& height, const SutValue& weight);
ExecutionOutcome bmi_classification(const SutValue& height, const SutValue& weight);
ExecutionOutcome date_ctor(const SutValue& year, const SutValue& month, const SutValue& day);

/// Julia-style shortest round-trip float text: "9.8", "930000.0", "1.0e6",
/// "Inf", "NaN".
std::string render_float(double x);

/// Days in month for the proleptic Gregorian calendar; year 0 is a leap year.
int days_in_month(std::int64_t year, int month);

/// Serial day number with 0001-01-01 = 1, computed with wrapping 64-bit
/// arithmetic.
std::int64_t rata_die(std::int64_t year, std::int64_t month, std::int64_t day);

/// Inverse of rata_die (also wrapping), rendered as yyyy-mm-dd.
std::string render_rata_die(std::int64_t days);

/// bytecount | bmi | bmi-class | date
SutDescriptor builtin_sut(std::string_view name);
std::vector<std::string> builtin_sut_names();

// External programs: argv carries the rendered arguments, stdout the output,
// exit status 0 marks a valid outcome.

ExecutionOutcome run_external(const std::string& command, const InputTuple& input,
                              std::chrono::milliseconds timeout = std::chrono::seconds(5));

SutDescriptor external_sut(std::string command, std::size_t arity,
                           std::chrono::milliseconds timeout = std::chrono::seconds(5));

/// Resolves "bytecount", "bmi", ..., or "external:<command>".
SutDescriptor resolve_sut(std::string_view spec, std::size_t external_arity = 1,
                          std::chrono::milliseconds timeout = std::chrono::seconds(5));

}  // namespace autobva
