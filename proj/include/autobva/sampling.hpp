#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autobva/sut.hpp"
#include "autobva/value.hpp"

namespace autobva {

using Rng = std::mt19937_64;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Signedness : std::uint8_t { signed_integer, unsigned_integer, boolean, big };

/// A concrete integer type that can be sampled.
struct TypeDomain {
  std::string name;
  Signedness signedness = Signedness::signed_integer;
  unsigned bit_width = 64;  // for big: the configured bit cap

  /// Bits available for the magnitude: w-1 signed, w unsigned, cap for big, 1 for Bool.
  unsigned magnitude_bits() const noexcept;
  BigInt min_value() const;
  BigInt max_value() const;
  bool contains(const SutValue& v) const;

  friend bool operator==(const TypeDomain&, const TypeDomain&) = default;
};

enum class SamplingMethod : std::uint8_t { uniform, bituniform };

std::string_view to_string(SamplingMethod m);
SamplingMethod parse_sampling_method(std::string_view name);

struct SamplerConfig {
  SamplingMethod method = SamplingMethod::bituniform;
  bool cts_enabled = true;
  unsigned big_int_bit_cap = 128;
  std::uint64_t seed = 0;
};

/// The concrete types compatible with `type_name`. "Integer" yields the twelve
/// Julia integer types; a concrete name yields the types whose whole range it
/// can hold. Throws ConfigError for unknown names.
std::vector<TypeDomain> compatible_types(std::string_view type_name, unsigned big_int_bit_cap = 128);

TypeDomain big_domain(unsigned big_int_bit_cap);

/// Uniform value over [lo, hi].
BigInt uniform_between(const BigInt& lo, const BigInt& hi, Rng& rng);

/// Bituniform draw with a fixed bit length: magnitude uniform in
/// [2^(length-1), 2^length) (0 for length 0), sign uniform for signed domains.
SutValue sample_with_bit_length(const TypeDomain& domain, unsigned length, Rng& rng);

SutValue sample_value(const TypeDomain& domain, const SamplerConfig& config, Rng& rng);

InputTuple sample_input(const SutDescriptor& sut, const SamplerConfig& config, Rng& rng);

class Archive;

/// Global sampling strategy with per-argument domain lists resolved once.
class Sampler {
 public:
  Sampler(const SutDescriptor& sut, SamplerConfig config);

  /// The archive is accepted for archive-aware strategies; this one ignores it.
  InputTuple sample(const Archive& archive, Rng& rng) const;
  InputTuple sample(Rng& rng) const;

  /// Draws the concrete type for argument `arg` (uniform over its compatible set).
  const TypeDomain& choose_domain(std::size_t arg, Rng& rng) const;

  const SamplerConfig& config() const noexcept { return config_; }
  const std::vector<std::vector<TypeDomain>>& domains() const noexcept { return domains_; }

 private:
  SamplerConfig config_;
  std::vector<std::vector<TypeDomain>> domains_;
};

}  // namespace autobva
