#include "autobva/value.hpp"

#include <cmath>
#include <limits>

namespace autobva {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string render_value(const SutValue& v) {
  if (v.is_boolean()) return v.value() == 0 ? "false" : "true";
  return v.value().str();
}

std::string render_tuple(const InputTuple& t) {
  if (t.size() == 1) return render_value(t.front());
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ',';
    out += render_value(t[k]);
  }
  out += ')';
  return out;
}

std::string tuple_key(const InputTuple& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ';';
    out += render_value(t[k]);
  }
  return out;
}

std::optional<SutValue> parse_value(std::string_view text) {
  text = trim(text);
  if (text == "true") return SutValue::boolean(true);
  if (text == "false") return SutValue::boolean(false);
  if (!is_decimal(text)) return std::nullopt;
  return SutValue::integer(BigInt(std::string(text)));
}

std::optional<InputTuple> parse_tuple(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  InputTuple out;
  while (true) {
    const auto cut = text.find_first_of(",;");
    auto v = parse_value(text.substr(0, cut));
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

bool tuple_less(const InputTuple& a, const InputTuple& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].value() != b[k].value()) return a[k].value() < b[k].value();
    if (a[k].kind() != b[k].kind()) return a[k].is_boolean();
  }
  return a.size() < b.size();
}

double to_binary64(const BigInt& v) {
  if (v.is_zero()) return 0.0;
  const bool negative = v.sign() < 0;
  const BigInt mag = negative ? BigInt(-v) : v;
  const std::size_t bits = boost::multiprecision::msb(mag) + 1;
  double result;
  if (bits <= 53) {
    result = static_cast<double>(mag.convert_to<std::uint64_t>());
  } else {
    std::size_t shift = bits - 53;
    std::uint64_t top = static_cast<BigInt>(mag >> shift).convert_to<std::uint64_t>();
    const BigInt rem = mag & ((BigInt(1) << shift) - 1);
    const BigInt half = BigInt(1) << (shift - 1);
    if (rem > half || (rem == half && (top & 1u))) ++top;
    if (top == (std::uint64_t{1} << 53)) {
      top >>= 1;
      ++shift;
    }
    if (shift > 1024) {
      result = std::numeric_limits<double>::infinity();
    } else {
      result = std::ldexp(static_cast<double>(top), static_cast<int>(shift));
    }
  }
  return negative ? -result : result;
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) return std::nullopt;
  return v.convert_to<std::int64_t>();
}

}  // namespace autobva
