#include "autobva/distances.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace autobva {

namespace {

bool is_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0u) == 0x80u; }

// Byte offsets of every scalar start, plus the end offset.
std::vector<std::size_t> scalar_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!is_continuation(s[k])) offsets.push_back(k);
  }
  offsets.push_back(s.size());
  return offsets;
}

std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size();) {
    const auto c = static_cast<unsigned char>(s[k]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
    char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
    std::size_t j = 1;
    for (; j < len && k + j < s.size() && is_continuation(s[k + j]); ++j) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[k + j]) & 0x3F);
    }
    out.push_back(cp);
    k += j;
  }
  return out;
}

std::pair<std::size_t, std::size_t> overlap(const std::vector<std::string_view>& a,
                                            const std::vector<std::string_view>& b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return {common, a.size() + b.size() - common};
}

}  // namespace

std::size_t scalar_count(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return !is_continuation(c); }));
}

std::vector<std::string_view> ngram_set(std::string_view s, std::size_t n) {
  std::vector<std::string_view> grams;
  if (s.empty()) return grams;
  const auto offsets = scalar_offsets(s);
  const std::size_t scalars = offsets.size() - 1;
  if (scalars < n) {
    grams.push_back(s);
    return grams;
  }
  grams.reserve(scalars - n + 1);
  for (std::size_t k = 0; k + n <= scalars; ++k) {
    grams.push_back(s.substr(offsets[k], offsets[k + n] - offsets[k]));
  }
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
  return grams;
}

std::size_t strlendist(std::string_view a, std::string_view b) {
  const std::size_t la = scalar_count(a);
  const std::size_t lb = scalar_count(b);
  return la > lb ? la - lb : lb - la;
}

Rational jaccard_ngram_exact(std::size_t n, std::string_view a, std::string_view b) {
  if (n == 0) throw std::invalid_argument("n-gram size must be positive");
  const auto [common, total] = overlap(ngram_set(a, n), ngram_set(b, n));
  if (total == 0) return 0;
  return Rational(total - common, total);
}

double jaccard_sets(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  const auto [common, total] = overlap(a, b);
  if (total == 0) return 0.0;
  return static_cast<double>(total - common) / static_cast<double>(total);
}

double jaccard_ngram(std::size_t n, std::string_view a, std::string_view b) {
  if (n == 0) throw std::invalid_argument("n-gram size must be positive");
  return jaccard_sets(ngram_set(a, n), ngram_set(b, n));
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const auto x = decode(a);
  const auto y = decode(b);
  std::vector<std::size_t> row(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[y.size()];
}

OutputDistance OutputDistance::jaccard(std::size_t n) {
  if (n == 0) throw std::invalid_argument("jaccard n-gram size must be >= 1");
  return OutputDistance(Kind::jaccard, n);
}

OutputDistance OutputDistance::parse(std::string_view name) {
  if (name == "strlen" || name == "strlendist") return strlen_distance();
  if (name == "levenshtein") return levenshtein_distance();
  constexpr std::string_view kJaccard = "jaccard";
  if (name.substr(0, kJaccard.size()) == kJaccard) {
    const auto digits = name.substr(kJaccard.size());
    std::size_t n = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (!digits.empty() && res.ec == std::errc{} && res.ptr == digits.data() + digits.size() &&
        n >= 1) {
      return jaccard(n);
    }
  }
  throw std::invalid_argument("unknown output distance: " + std::string(name));
}

std::string OutputDistance::name() const {
  switch (kind_) {
    case Kind::strlendist: return "strlen";
    case Kind::jaccard: return "jaccard" + std::to_string(n_);
    case Kind::levenshtein: return "levenshtein";
  }
  return {};
}

Rational OutputDistance::operator()(std::string_view a, std::string_view b) const {
  switch (kind_) {
    case Kind::strlendist: return Rational(strlendist(a, b));
    case Kind::jaccard: return jaccard_ngram_exact(n_, a, b);
    case Kind::levenshtein: return Rational(levenshtein(a, b));
  }
  return 0;
}

bool OutputDistance::positive(std::string_view a, std::string_view b) const {
  switch (kind_) {
    case Kind::strlendist: return scalar_count(a) != scalar_count(b);
    case Kind::jaccard: return ngram_set(a, n_) != ngram_set(b, n_);
    case Kind::levenshtein: return a != b;
  }
  return false;
}

BigInt input_distance(const InputTuple& a, const InputTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("input arity mismatch");
  BigInt total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const BigInt d = a[k].value() - b[k].value();
    total += d.sign() < 0 ? BigInt(-d) : d;
  }
  return total;
}

Boundariness::Boundariness(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw std::invalid_argument("boundariness must be nonnegative");
}

BigInt Boundariness::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Boundariness::denominator() const { return boost::multiprecision::denominator(value_); }

double Boundariness::to_double() const {
  // Quotient of the rounded parts is within a few ulps; enough for display and features.
  return to_binary64(numerator()) / to_binary64(denominator());
}

Boundariness pdq(const InputTuple& i1, const ExecutionOutcome& o1, const InputTuple& i2,
                 const ExecutionOutcome& o2, const OutputDistance& distance) {
  const BigInt di = input_distance(i1, i2);
  if (di.is_zero()) throw std::invalid_argument("pdq requires distinct inputs");
  Rational d = distance(o1.text, o2.text);
  if (d.is_zero() || di == 1) return Boundariness(std::move(d));
  return Boundariness(d / Rational(di));
}

}  // namespace autobva
