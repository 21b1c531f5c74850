#include "autobva/outcome.hpp"

#include <array>
#include <charconv>

namespace autobva {

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {
    "bounds_error", "argument_error", "domain_error", "inexact_error", "process_error"};

// Julia-style string literal: quotes and backslashes escaped, newlines as \n.
std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

// Parses a quoted literal at the front of s; advances s past it.
std::optional<std::string> unquote(std::string_view& s) {
  if (s.empty() || s.front() != '"') return std::nullopt;
  std::string out;
  std::size_t k = 1;
  for (; k < s.size(); ++k) {
    const char c = s[k];
    if (c == '"') break;
    if (c == '\\' && k + 1 < s.size()) {
      const char e = s[++k];
      switch (e) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        default: out += e;
      }
    } else {
      out += c;
    }
  }
  if (k >= s.size()) return std::nullopt;
  s.remove_prefix(k + 1);
  return out;
}

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::optional<std::string> integer_token(std::string_view& s) {
  std::size_t k = 0;
  if (k < s.size() && s[k] == '-') ++k;
  const std::size_t digits = k;
  while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
  if (k == digits) return std::nullopt;
  std::string out(s.substr(0, k));
  s.remove_prefix(k);
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<ErrorKind> parse_error_kind(std::string_view name) {
  for (std::size_t k = 0; k < kKindNames.size(); ++k) {
    if (kKindNames[k] == name) return static_cast<ErrorKind>(k);
  }
  return std::nullopt;
}

ExecutionOutcome ExecutionOutcome::ok(std::string text) {
  return ExecutionOutcome{true, std::move(text), std::nullopt, {}};
}

ExecutionOutcome ExecutionOutcome::bounds_error(std::string_view accessed, std::int64_t index) {
  return ExecutionOutcome{
      false,
      "BoundsError(" + quoted(accessed) + ", " + std::to_string(index) + ")",
      ErrorKind::bounds_error,
      {{"string", std::string(accessed)}, {"index", std::to_string(index)}}};
}

ExecutionOutcome ExecutionOutcome::argument_error(std::string_view message) {
  return ExecutionOutcome{false, "ArgumentError(" + quoted(message) + ")",
                          ErrorKind::argument_error, {{"message", std::string(message)}}};
}

ExecutionOutcome ExecutionOutcome::domain_error(std::string_view message) {
  return ExecutionOutcome{false, "DomainError(" + quoted(message) + ")", ErrorKind::domain_error,
                          {{"message", std::string(message)}}};
}

ExecutionOutcome ExecutionOutcome::inexact_error(std::string_view target, std::string_view value) {
  return ExecutionOutcome{
      false,
      "InexactError(:" + std::string(target) + ", " + std::string(target) + ", " +
          std::string(value) + ")",
      ErrorKind::inexact_error,
      {{"target", std::string(target)}, {"value", std::string(value)}}};
}

ExecutionOutcome ExecutionOutcome::process_error(int exit_code, std::string_view stderr_text) {
  return ExecutionOutcome{false,
                          "ProcessError(" + std::to_string(exit_code) + ", " +
                              quoted(stderr_text) + ")",
                          ErrorKind::process_error,
                          {{"exit_code", std::to_string(exit_code)},
                           {"stderr", std::string(stderr_text)}}};
}

std::optional<ExecutionOutcome> parse_error_text(std::string_view text) {
  std::string_view s = text;
  if (consume(s, "BoundsError(")) {
    auto accessed = unquote(s);
    if (!accessed || !consume(s, ", ")) return std::nullopt;
    auto index = integer_token(s);
    if (!index || s != ")") return std::nullopt;
    std::int64_t value = 0;
    const auto res = std::from_chars(index->data(), index->data() + index->size(), value);
    if (res.ec != std::errc{}) return std::nullopt;
    return ExecutionOutcome::bounds_error(*accessed, value);
  }
  if (consume(s, "ArgumentError(")) {
    auto message = unquote(s);
    if (!message || s != ")") return std::nullopt;
    return ExecutionOutcome::argument_error(*message);
  }
  if (consume(s, "DomainError(")) {
    auto message = unquote(s);
    if (!message || s != ")") return std::nullopt;
    return ExecutionOutcome::domain_error(*message);
  }
  if (consume(s, "InexactError(:")) {
    const auto comma = s.find(", ");
    if (comma == std::string_view::npos) return std::nullopt;
    const std::string target(s.substr(0, comma));
    s.remove_prefix(comma + 2);
    if (!consume(s, target) || !consume(s, ", ")) return std::nullopt;
    auto value = integer_token(s);
    if (!value || s != ")") return std::nullopt;
    return ExecutionOutcome::inexact_error(target, *value);
  }
  if (consume(s, "ProcessError(")) {
    auto code = integer_token(s);
    if (!code || !consume(s, ", ")) return std::nullopt;
    auto err = unquote(s);
    if (!err || s != ")") return std::nullopt;
    int exit_code = 0;
    const auto res = std::from_chars(code->data(), code->data() + code->size(), exit_code);
    if (res.ec != std::errc{}) return std::nullopt;
    return ExecutionOutcome::process_error(exit_code, *err);
  }
  return std::nullopt;
}

}  // namespace autobva
