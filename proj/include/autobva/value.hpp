#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace autobva {

using BigInt = boost::multiprecision::cpp_int;

/// An argument value fed to a SUT. Booleans are integers restricted to {0, 1}
/// that render as "false"/"true".
class SutValue {
 public:
  enum class Kind : std::uint8_t { boolean, integer };

  SutValue() = default;

  static SutValue boolean(bool b) { return SutValue(Kind::boolean, b ? 1 : 0); }
  static SutValue integer(BigInt v) { return SutValue(Kind::integer, std::move(v)); }
  static SutValue integer(std::int64_t v) { return SutValue(Kind::integer, BigInt(v)); }

  Kind kind() const noexcept { return kind_; }
  bool is_boolean() const noexcept { return kind_ == Kind::boolean; }
  const BigInt& value() const noexcept { return value_; }

  friend bool operator==(const SutValue&, const SutValue&) = default;

 private:
  SutValue(Kind kind, BigInt value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_ = Kind::integer;
  BigInt value_ = 0;
};

using InputTuple = std::vector<SutValue>;

std::string render_value(const SutValue& v);

/// "5" for a single argument, "(1,2,3)" otherwise.
std::string render_tuple(const InputTuple& t);

/// Rendered values joined by ';'. Used as the archive identity key.
std::string tuple_key(const InputTuple& t);

std::optional<SutValue> parse_value(std::string_view text);

/// Accepts both the render_tuple and tuple_key forms.
std::optional<InputTuple> parse_tuple(std::string_view text);

/// Lexicographic numeric order (booleans as 0/1).
bool tuple_less(const InputTuple& a, const InputTuple& b);

/// Converts to binary64 with round-to-nearest, ties-to-even. Values beyond the
/// finite range become +-infinity.
double to_binary64(const BigInt& v);

std::optional<std::int64_t> to_int64(const BigInt& v);

}  // namespace autobva
