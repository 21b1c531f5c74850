#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "autobva/sut.hpp"

namespace autobva {

namespace {

constexpr std::string_view kPrefixes = "kMGTPE";

std::string format_one_decimal(double x) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

// Value of b / 1000^exp as binary64. Above the petabyte scale the quotient is
// taken in two steps (exact integer division by 1000 first).
double scaled(const BigInt& b, std::int64_t exp) {
  if (exp > 4) return to_binary64(b / 1000) / std::pow(1000.0, static_cast<double>(exp - 1));
  return to_binary64(b) / std::pow(1000.0, static_cast<double>(exp));
}

// Two's-complement wrapping arithmetic on int64.
std::int64_t wadd(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
std::int64_t wsub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
std::int64_t wmul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}
std::int64_t fld(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

bool is_leap(std::int64_t y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

constexpr std::array<int, 12> kDaysBeforeMonth = {0,   31,  59,  90,  120, 151,
                                                  181, 212, 243, 273, 304, 334};
constexpr std::array<int, 12> kMonthDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

std::string lpad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

constexpr std::string_view kNegativeMessage = "height or weight negative";

std::optional<double> bmi_number(const SutValue& height, const SutValue& weight) {
  if (height.value().sign() < 0 || weight.value().sign() < 0) return std::nullopt;
  const double h = to_binary64(height.value()) / 100.0;
  const double bmi = to_binary64(weight.value()) / (h * h);
  const double scaled10 = bmi * 10.0;
  if (!std::isfinite(scaled10)) return bmi;
  return std::nearbyint(scaled10) / 10.0;
}

}  // namespace

ExecutionOutcome execute(const SutDescriptor& sut, const InputTuple& input) {
  if (input.size() != sut.arity()) {
    throw std::invalid_argument("input arity " + std::to_string(input.size()) +
                                " does not match " + sut.name + " arity " +
                                std::to_string(sut.arity()));
  }
  try {
    return sut.invoke(input);
  } catch (const std::exception& e) {
    return ExecutionOutcome::argument_error(e.what());
  } catch (...) {
    return ExecutionOutcome::argument_error("unknown exception");
  }
}

ExecutionOutcome bytecount(const SutValue& bytes) {
  const BigInt& b = bytes.value();
  if (b < 1000) return ExecutionOutcome::ok(render_value(bytes) + "B");

  const double ratio = std::log(to_binary64(b)) / std::log(1000.0);
  if (!std::isfinite(ratio)) return ExecutionOutcome::inexact_error("Int64", "Inf");
  auto exp = static_cast<std::int64_t>(std::floor(ratio));

  std::string value;
  if (exp < 6) {
    value = format_one_decimal(scaled(b, exp));
    if (std::strtod(value.c_str(), nullptr) >= 1000.0) {
      ++exp;
      value = format_one_decimal(scaled(b, exp));
    }
  }
  if (exp > static_cast<std::int64_t>(kPrefixes.size())) {
    return ExecutionOutcome::bounds_error(kPrefixes, exp);
  }
  if (value.empty()) value = format_one_decimal(scaled(b, exp));
  std::string text = std::move(value);
  text += ' ';
  text += kPrefixes[static_cast<std::size_t>(exp - 1)];
  text += 'B';
  return ExecutionOutcome::ok(std::move(text));
}

std::string render_float(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Inf" : "-Inf";
  if (x == 0.0) return std::signbit(x) ? "-0.0" : "0.0";

  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
  const std::string_view sci(buf, static_cast<std::size_t>(res.ptr - buf));

  const bool negative = sci.front() == '-';
  const auto e_pos = sci.find('e');
  std::string digits;
  for (char c : sci.substr(negative ? 1 : 0, e_pos - (negative ? 1 : 0))) {
    if (c != '.') digits += c;
  }
  const int exponent = std::atoi(std::string(sci.substr(e_pos + 1)).c_str());
  const int point = exponent + 1;  // digits before the decimal point

  std::string out = negative ? "-" : "";
  if (point > -4 && point <= 6) {
    if (point <= 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-point), '0');
      out += digits;
    } else if (static_cast<std::size_t>(point) >= digits.size()) {
      out += digits;
      out.append(static_cast<std::size_t>(point) - digits.size(), '0');
      out += ".0";
    } else {
      out += digits.substr(0, static_cast<std::size_t>(point));
      out += '.';
      out += digits.substr(static_cast<std::size_t>(point));
    }
  } else {
    out += digits.substr(0, 1);
    out += '.';
    out += digits.size() > 1 ? digits.substr(1) : "0";
    out += 'e';
    out += std::to_string(exponent);
  }
  return out;
}

ExecutionOutcome bmi_value(const SutValue& height, const SutValue& weight) {
  const auto bmi = bmi_number(height, weight);
  if (!bmi) return ExecutionOutcome::domain_error(kNegativeMessage);
  return ExecutionOutcome::ok(render_float(*bmi));
}

ExecutionOutcome bmi_classification(const SutValue& height, const SutValue& weight) {
  const auto bmi = bmi_number(height, weight);
  if (!bmi) return ExecutionOutcome::domain_error(kNegativeMessage);
  const double v = *bmi;
  // NaN falls through every comparison.
  if (v < 18.5) return ExecutionOutcome::ok("Underweight");
  if (v < 23.0) return ExecutionOutcome::ok("Normal");
  if (v < 25.0) return ExecutionOutcome::ok("Overweight");
  if (v < 30.0) return ExecutionOutcome::ok("Obese");
  return ExecutionOutcome::ok("Severely obese");
}

int days_in_month(std::int64_t year, int month) {
  if (month == 2 && is_leap(year)) return 29;
  return kMonthDays[static_cast<std::size_t>(month - 1)];
}

std::int64_t rata_die(std::int64_t year, std::int64_t month, std::int64_t day) {
  const std::int64_t y = wsub(year, 1);
  std::int64_t before = kDaysBeforeMonth[static_cast<std::size_t>(month - 1)];
  if (month > 2 && is_leap(year)) ++before;
  std::int64_t days = wadd(day, before);
  days = wadd(days, wmul(365, y));
  days = wadd(days, fld(y, 4));
  days = wsub(days, fld(y, 100));
  days = wadd(days, fld(y, 400));
  return days;
}

std::string render_rata_die(std::int64_t days) {
  const std::int64_t z = wadd(days, 306);
  const std::int64_t h = wsub(wmul(100, z), 25);
  const std::int64_t a = fld(h, 3652425);
  const std::int64_t b = a - fld(a, 4);
  std::int64_t y = fld(wadd(wmul(100, b), h), 36525);
  const std::int64_t c = wsub(wsub(wadd(b, z), wmul(365, y)), fld(y, 4));
  std::int64_t m = wadd(wmul(5, c), 456) / 153;
  const std::int64_t d = wsub(c, wsub(wmul(153, m), 457) / 5);
  if (m > 12) {
    y = wadd(y, 1);
    m -= 12;
  }

  std::string yy;
  if (y < 0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%05lld", static_cast<long long>(y));
    yy = buf;
  } else {
    yy = lpad(std::to_string(y), 4);
  }
  return yy + "-" + lpad(std::to_string(m), 2) + "-" + lpad(std::to_string(d), 2);
}

ExecutionOutcome date_ctor(const SutValue& year, const SutValue& month, const SutValue& day) {
  std::array<std::int64_t, 3> parts{};
  const std::array<const SutValue*, 3> args = {&year, &month, &day};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto v = to_int64(args[k]->value());
    if (!v) return ExecutionOutcome::inexact_error("Int64", args[k]->value().str());
    parts[k] = *v;
  }
  const auto [y, m, d] = parts;
  if (m < 1 || m > 12) {
    return ExecutionOutcome::argument_error("Month: " + std::to_string(m) +
                                            " out of range (1:12)");
  }
  const int max_day = days_in_month(y, static_cast<int>(m));
  if (d < 1 || d > max_day) {
    return ExecutionOutcome::argument_error("Day: " + std::to_string(d) + " out of range (1:" +
                                            std::to_string(max_day) + ")");
  }
  return ExecutionOutcome::ok(render_rata_die(rata_die(y, m, d)));
}

SutDescriptor builtin_sut(std::string_view name) {
  if (name == "bytecount") {
    return {"bytecount", {"Integer"},
            [](std::span<const SutValue> a) { return bytecount(a[0]); }};
  }
  if (name == "bmi") {
    return {"bmi", {"Integer", "Integer"},
            [](std::span<const SutValue> a) { return bmi_value(a[0], a[1]); }};
  }
  if (name == "bmi-class") {
    return {"bmi-class", {"Integer", "Integer"},
            [](std::span<const SutValue> a) { return bmi_classification(a[0], a[1]); }};
  }
  if (name == "date") {
    return {"date", {"Integer", "Integer", "Integer"},
            [](std::span<const SutValue> a) { return date_ctor(a[0], a[1], a[2]); }};
  }
  throw std::invalid_argument("unknown SUT: " + std::string(name));
}

std::vector<std::string> builtin_sut_names() { return {"bytecount", "bmi", "bmi-class", "date"}; }

SutDescriptor resolve_sut(std::string_view spec, std::size_t external_arity,
                          std::chrono::milliseconds timeout) {
  constexpr std::string_view kExternal = "external:";
  if (spec.substr(0, kExternal.size()) == kExternal) {
    return external_sut(std::string(spec.substr(kExternal.size())), external_arity, timeout);
  }
  return builtin_sut(spec);
}

}  // namespace autobva
