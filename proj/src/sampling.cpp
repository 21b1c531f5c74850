#include "autobva/sampling.hpp"

#include <array>
#include <bit>

namespace autobva {

namespace {

struct NamedType {
  std::string_view name;
  Signedness signedness;
  unsigned width;
};

// Julia's subtypes(Integer) order.
constexpr std::array<NamedType, 12> kIntegerTypes = {{
    {"UInt8", Signedness::unsigned_integer, 8},
    {"UInt64", Signedness::unsigned_integer, 64},
    {"UInt32", Signedness::unsigned_integer, 32},
    {"UInt16", Signedness::unsigned_integer, 16},
    {"UInt128", Signedness::unsigned_integer, 128},
    {"Int8", Signedness::signed_integer, 8},
    {"Int64", Signedness::signed_integer, 64},
    {"Int32", Signedness::signed_integer, 32},
    {"Int16", Signedness::signed_integer, 16},
    {"Int128", Signedness::signed_integer, 128},
    {"BigInt", Signedness::big, 0},
    {"Bool", Signedness::boolean, 1},
}};

TypeDomain make_domain(const NamedType& t, unsigned cap) {
  return TypeDomain{std::string(t.name), t.signedness,
                    t.signedness == Signedness::big ? cap : t.width};
}

std::uint64_t random_word(Rng& rng) { return rng(); }

// Uniform nonnegative integer with exactly `bits` random bits.
BigInt random_bits(unsigned bits, Rng& rng) {
  if (bits == 0) return 0;
  if (bits <= 64) {
    const std::uint64_t w = random_word(rng);
    return BigInt(bits == 64 ? w : (w & ((std::uint64_t{1} << bits) - 1)));
  }
  BigInt out = 0;
  unsigned remaining = bits;
  while (remaining > 0) {
    const unsigned take = remaining >= 64 ? 64 : remaining;
    std::uint64_t w = random_word(rng);
    if (take < 64) w &= (std::uint64_t{1} << take) - 1;
    out = (out << take) | BigInt(w);
    remaining -= take;
  }
  return out;
}

// Uniform in [0, bound) by masked rejection.
BigInt uniform_below(const BigInt& bound, Rng& rng) {
  if (bound <= 1) return 0;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(BigInt(bound - 1))) + 1;
  while (true) {
    BigInt candidate = random_bits(bits, rng);
    if (candidate < bound) return candidate;
  }
}

std::uint64_t uniform_index(std::uint64_t n, Rng& rng) {
  if (n <= 1) return 0;
  const int bits = std::bit_width(n - 1);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  while (true) {
    const std::uint64_t candidate = random_word(rng) & mask;
    if (candidate < n) return candidate;
  }
}

bool range_within(const TypeDomain& inner, const TypeDomain& outer) {
  return inner.min_value() >= outer.min_value() && inner.max_value() <= outer.max_value();
}

}  // namespace

unsigned TypeDomain::magnitude_bits() const noexcept {
  switch (signedness) {
    case Signedness::signed_integer: return bit_width - 1;
    case Signedness::unsigned_integer: return bit_width;
    case Signedness::boolean: return 1;
    case Signedness::big: return bit_width;
  }
  return bit_width;
}

BigInt TypeDomain::min_value() const {
  switch (signedness) {
    case Signedness::signed_integer: return -(BigInt(1) << (bit_width - 1));
    case Signedness::unsigned_integer:
    case Signedness::boolean: return 0;
    case Signedness::big: return -((BigInt(1) << bit_width) - 1);
  }
  return 0;
}

BigInt TypeDomain::max_value() const {
  switch (signedness) {
    case Signedness::signed_integer: return (BigInt(1) << (bit_width - 1)) - 1;
    case Signedness::unsigned_integer:
    case Signedness::big: return (BigInt(1) << bit_width) - 1;
    case Signedness::boolean: return 1;
  }
  return 0;
}

bool TypeDomain::contains(const SutValue& v) const {
  if ((signedness == Signedness::boolean) != v.is_boolean()) return false;
  return v.value() >= min_value() && v.value() <= max_value();
}

std::string_view to_string(SamplingMethod m) {
  return m == SamplingMethod::uniform ? "uniform" : "bituniform";
}

SamplingMethod parse_sampling_method(std::string_view name) {
  if (name == "uniform") return SamplingMethod::uniform;
  if (name == "bituniform") return SamplingMethod::bituniform;
  throw ConfigError("unknown sampling method: " + std::string(name));
}

std::vector<TypeDomain> compatible_types(std::string_view type_name, unsigned big_int_bit_cap) {
  if (big_int_bit_cap < 64) throw ConfigError("big_int_bit_cap must be >= 64");
  std::vector<TypeDomain> out;
  if (type_name == "Integer") {
    for (const auto& t : kIntegerTypes) out.push_back(make_domain(t, big_int_bit_cap));
    return out;
  }
  const NamedType* target = nullptr;
  for (const auto& t : kIntegerTypes) {
    if (t.name == type_name) target = &t;
  }
  if (target == nullptr) throw ConfigError("unknown abstract type: " + std::string(type_name));
  const TypeDomain outer = make_domain(*target, big_int_bit_cap);
  for (const auto& t : kIntegerTypes) {
    TypeDomain inner = make_domain(t, big_int_bit_cap);
    if (range_within(inner, outer)) out.push_back(std::move(inner));
  }
  return out;
}

TypeDomain big_domain(unsigned big_int_bit_cap) {
  if (big_int_bit_cap < 64) throw ConfigError("big_int_bit_cap must be >= 64");
  return TypeDomain{"BigInt", Signedness::big, big_int_bit_cap};
}

BigInt uniform_between(const BigInt& lo, const BigInt& hi, Rng& rng) {
  return lo + uniform_below(BigInt(hi - lo + 1), rng);
}

SutValue sample_with_bit_length(const TypeDomain& domain, unsigned length, Rng& rng) {
  BigInt magnitude = 0;
  if (length > 0) magnitude = (BigInt(1) << (length - 1)) + random_bits(length - 1, rng);
  if (domain.signedness == Signedness::boolean) return SutValue::boolean(magnitude != 0);
  if (domain.signedness == Signedness::signed_integer || domain.signedness == Signedness::big) {
    if (random_word(rng) & 1u) magnitude = -magnitude;
  }
  return SutValue::integer(std::move(magnitude));
}

SutValue sample_value(const TypeDomain& domain, const SamplerConfig& config, Rng& rng) {
  if (config.method == SamplingMethod::bituniform) {
    const auto length = static_cast<unsigned>(uniform_index(domain.magnitude_bits() + 1, rng));
    return sample_with_bit_length(domain, length, rng);
  }
  if (domain.signedness == Signedness::boolean) return SutValue::boolean(random_word(rng) & 1u);
  return SutValue::integer(uniform_between(domain.min_value(), domain.max_value(), rng));
}

InputTuple sample_input(const SutDescriptor& sut, const SamplerConfig& config, Rng& rng) {
  return Sampler(sut, config).sample(rng);
}

Sampler::Sampler(const SutDescriptor& sut, SamplerConfig config) : config_(config) {
  domains_.reserve(sut.arity());
  for (const auto& type : sut.argument_types) {
    if (config_.cts_enabled) {
      domains_.push_back(compatible_types(type, config_.big_int_bit_cap));
    } else {
      compatible_types(type, config_.big_int_bit_cap);  // validates the name
      domains_.push_back({big_domain(config_.big_int_bit_cap)});
    }
  }
}

InputTuple Sampler::sample(Rng& rng) const {
  InputTuple out;
  out.reserve(domains_.size());
  for (std::size_t arg = 0; arg < domains_.size(); ++arg) {
    out.push_back(sample_value(choose_domain(arg, rng), config_, rng));
  }
  return out;
}

const TypeDomain& Sampler::choose_domain(std::size_t arg, Rng& rng) const {
  const auto& options = domains_.at(arg);
  return options.size() == 1 ? options.front() : options[uniform_index(options.size(), rng)];
}

InputTuple Sampler::sample(const Archive&, Rng& rng) const { return sample(rng); }

}  // namespace autobva
