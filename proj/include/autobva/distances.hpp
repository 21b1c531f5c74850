#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autobva/outcome.hpp"
#include "autobva/value.hpp"

namespace autobva {

using Rational = boost::multiprecision::cpp_rational;

/// Number of Unicode scalar values in a UTF-8 string.
std::size_t scalar_count(std::string_view s);

/// Distinct contiguous n-grams of Unicode scalars, sorted. A non-empty string
/// shorter than n yields itself as its only gram.
std::vector<std::string_view> ngram_set(std::string_view s, std::size_t n);

std::size_t strlendist(std::string_view a, std::string_view b);

/// 1 - |A & B| / |A | B| over n-gram sets, as an exact fraction.
Rational jaccard_ngram_exact(std::size_t n, std::string_view a, std::string_view b);
double jaccard_ngram(std::size_t n, std::string_view a, std::string_view b);

/// Jaccard distance between two precomputed sorted gram sets.
double jaccard_sets(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// Output distance d_o used by the boundariness quantifier.
class OutputDistance {
 public:
  enum class Kind { strlendist, jaccard, levenshtein };

  OutputDistance() = default;
  static OutputDistance strlen_distance() { return OutputDistance(Kind::strlendist, 0); }
  static OutputDistance jaccard(std::size_t n);
  static OutputDistance levenshtein_distance() { return OutputDistance(Kind::levenshtein, 0); }

  /// "strlen", "jaccardN" (N >= 1) or "levenshtein". Throws std::invalid_argument.
  static OutputDistance parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  std::string name() const;

  Rational operator()(std::string_view a, std::string_view b) const;

  /// True iff the distance is strictly positive; cheaper than operator().
  bool positive(std::string_view a, std::string_view b) const;

 private:
  OutputDistance(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

  Kind kind_ = Kind::strlendist;
  std::size_t n_ = 0;
};

/// L1 distance over arbitrary-precision values (booleans as 0/1).
BigInt input_distance(const InputTuple& a, const InputTuple& b);

/// Exact, nonnegative boundariness value d_o / d_i.
class Boundariness {
 public:
  Boundariness() = default;
  explicit Boundariness(Rational value);

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const;
  BigInt denominator() const;
  double to_double() const;
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const Boundariness&, const Boundariness&) = default;
  friend auto operator<=>(const Boundariness& a, const Boundariness& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : b.value_ < a.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Rational value_ = 0;
};

/// Program difference quotient of two executions. Error outcomes are compared
/// through their rendered text. Throws std::invalid_argument when the inputs
/// are at distance zero.
Boundariness pdq(const InputTuple& i1, const ExecutionOutcome& o1, const InputTuple& i2,
                 const ExecutionOutcome& o2, const OutputDistance& distance);

}  // namespace autobva
