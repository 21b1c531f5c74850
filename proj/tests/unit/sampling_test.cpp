#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "autobva/sampling.hpp"
#include "oracles.hpp"

namespace autobva {
namespace {

std::vector<std::string> names(const std::vector<TypeDomain>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.name);
  return out;
}

// Every bin within three standard deviations of its multinomial expectation.
void expect_uniform_bins(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  const double p = 1.0 / static_cast<double>(counts.size());
  const double mean = static_cast<double>(total) * p;
  const double sigma = std::sqrt(static_cast<double>(total) * p * (1 - p));
  for (std::size_t b = 0; b < counts.size(); ++b) {
    EXPECT_LE(std::abs(static_cast<double>(counts[b]) - mean), 3 * sigma) << "bin " << b;
  }
}

TEST(CompatibleTypes, IntegerHasTwelveInOrder) {
  EXPECT_EQ(names(compatible_types("Integer")),
            (std::vector<std::string>{"UInt8", "UInt64", "UInt32", "UInt16", "UInt128", "Int8",
                                      "Int64", "Int32", "Int16", "Int128", "BigInt", "Bool"}));
}

TEST(CompatibleTypes, Int16SubsetByRange) {
  EXPECT_EQ(names(compatible_types("Int16")),
            (std::vector<std::string>{"UInt8", "Int8", "Int16", "Bool"}));
}

TEST(CompatibleTypes, Rejections) {
  EXPECT_THROW(compatible_types("Float64"), ConfigError);
  EXPECT_THROW(compatible_types("Integer", 32), ConfigError);
}

TEST(TypeDomain, Ranges) {
  const auto ds = compatible_types("Integer", 128);
  std::map<std::string, TypeDomain> by;
  for (const auto& d : ds) by.emplace(d.name, d);
  EXPECT_EQ(by.at("Int8").min_value(), -128);
  EXPECT_EQ(by.at("Int8").max_value(), 127);
  EXPECT_EQ(by.at("UInt128").max_value(), (BigInt(1) << 128) - 1);
  EXPECT_EQ(by.at("BigInt").max_value(), (BigInt(1) << 128) - 1);
  EXPECT_EQ(by.at("BigInt").min_value(), -((BigInt(1) << 128) - 1));
  EXPECT_EQ(by.at("Bool").magnitude_bits(), 1u);
}

TEST(SampleValue, BooleanDomainYieldsBooleans) {
  Rng rng(1);
  const auto ds = compatible_types("Integer");
  const auto& boolean = ds.back();
  int seen[2] = {0, 0};
  for (const auto method : {SamplingMethod::uniform, SamplingMethod::bituniform}) {
    SamplerConfig config;
    config.method = method;
    for (int i = 0; i < 1000; ++i) {
      const auto v = sample_value(boolean, config, rng);
      ASSERT_TRUE(v.is_boolean());
      ++seen[v.value() == 0 ? 0 : 1];
    }
  }
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[1], 0);
}

TEST(SampleValue, ZeroBitLengthIsZero) {
  Rng rng(2);
  const auto d = compatible_types("Int64").front();
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sample_with_bit_length(d, 0, rng).value(), 0);
}

TEST(SampleValue, FixedBitLengthHasThatLength) {
  Rng rng(3);
  const auto d = big_domain(128);
  for (unsigned len = 1; len <= 128; ++len) {
    const auto v = sample_with_bit_length(d, len, rng);
    ASSERT_EQ(oracle::bit_length(v.value()), len);
  }
}

TEST(SampleValue, BituniformInt8StaysInSymmetricRange) {
  Rng rng(4);
  TypeDomain int8;
  for (const auto& d : compatible_types("Integer")) {
    if (d.name == "Int8") int8 = d;
  }
  SamplerConfig config;
  BigInt lo = 0;
  BigInt hi = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto v = sample_value(int8, config, rng).value();
    ASSERT_GE(v, -127);
    ASSERT_LE(v, 127);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_EQ(lo, -127);
  EXPECT_EQ(hi, 127);
}

TEST(SampleValue, BituniformBitLengthsAreUniform) {
  Rng rng(5);
  TypeDomain int64;
  for (const auto& d : compatible_types("Integer")) {
    if (d.name == "Int64") int64 = d;
  }
  SamplerConfig config;
  const std::uint64_t draws = 100000;
  std::vector<std::uint64_t> counts(64, 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto bits = oracle::bit_length(sample_value(int64, config, rng).value());
    ASSERT_LT(bits, 64u);
    ++counts[bits];
  }
  expect_uniform_bins(counts, draws);
}

TEST(SampleValue, UniformCoversBigRange) {
  Rng rng(6);
  SamplerConfig config;
  config.method = SamplingMethod::uniform;
  config.cts_enabled = false;
  const auto d = big_domain(128);
  unsigned widest = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto v = sample_value(d, config, rng).value();
    ASSERT_TRUE(d.contains(SutValue::integer(v)));
    widest = std::max(widest, oracle::bit_length(v));
  }
  EXPECT_EQ(widest, 128u);
}

TEST(SampleValue, EveryDomainStaysInRange) {
  Rng rng(7);
  for (const auto method : {SamplingMethod::uniform, SamplingMethod::bituniform}) {
    SamplerConfig config;
    config.method = method;
    for (const auto& d : compatible_types("Integer", 96)) {
      for (int i = 0; i < 2000; ++i) ASSERT_TRUE(d.contains(sample_value(d, config, rng))) << d.name;
    }
  }
}

TEST(Sampler, CtsPicksDomainsUniformly) {
  const auto sut = builtin_sut("bytecount");
  const Sampler sampler(sut, SamplerConfig{});
  Rng rng(8);
  const std::uint64_t draws = 100000;
  std::map<std::string, std::uint64_t> hits;
  for (std::uint64_t i = 0; i < draws; ++i) ++hits[sampler.choose_domain(0, rng).name];
  ASSERT_EQ(hits.size(), 12u);
  std::vector<std::uint64_t> counts;
  for (const auto& [name, c] : hits) counts.push_back(c);
  expect_uniform_bins(counts, draws);
}

TEST(Sampler, CtsOffUsesBigDomain) {
  SamplerConfig config;
  config.cts_enabled = false;
  const Sampler sampler(builtin_sut("date"), config);
  ASSERT_EQ(sampler.domains().size(), 3u);
  for (const auto& d : sampler.domains()) {
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.front().name, "BigInt");
  }
}

TEST(Sampler, ArityAndDeterminism) {
  const auto sut = builtin_sut("date");
  const Sampler sampler(sut, SamplerConfig{});
  Rng a(9);
  Rng b(9);
  bool mixed = false;
  for (int i = 0; i < 500; ++i) {
    const auto x = sampler.sample(a);
    const auto y = sampler.sample(b);
    ASSERT_EQ(x.size(), 3u);
    ASSERT_EQ(x, y);
    mixed = mixed || (x[0].is_boolean() != x[1].is_boolean());
  }
  EXPECT_TRUE(mixed);
}

TEST(SamplingMethod, Parse) {
  EXPECT_EQ(parse_sampling_method("uniform"), SamplingMethod::uniform);
  EXPECT_EQ(parse_sampling_method("bituniform"), SamplingMethod::bituniform);
  EXPECT_THROW(parse_sampling_method("gaussian"), ConfigError);
}

}  // namespace
}  // namespace autobva
