#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "autobva/value.hpp"

namespace autobva {
namespace {

TEST(RenderValue, BooleansUseWords) {
  EXPECT_EQ(render_value(SutValue::boolean(false)), "false");
  EXPECT_EQ(render_value(SutValue::boolean(true)), "true");
}

TEST(RenderValue, IntegersArePlainDecimal) {
  EXPECT_EQ(render_value(SutValue::integer(std::int64_t{0})), "0");
  EXPECT_EQ(render_value(SutValue::integer(std::int64_t{-10})), "-10");
  EXPECT_EQ(render_value(SutValue::integer(BigInt("-1000000000000000000000000000000"))),
            "-1000000000000000000000000000000");
}

TEST(RenderTuple, SingleAndMulti) {
  EXPECT_EQ(render_tuple({SutValue::integer(std::int64_t{5})}), "5");
  const InputTuple t = {SutValue::integer(std::int64_t{0}), SutValue::integer(std::int64_t{2}),
                        SutValue::boolean(true)};
  EXPECT_EQ(render_tuple(t), "(0,2,true)");
  EXPECT_EQ(tuple_key(t), "0;2;true");
}

TEST(ParseTuple, AcceptsBothForms) {
  const auto a = parse_tuple("(0,2,true)");
  const auto b = parse_tuple("0;2;true");
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_TRUE((*a)[2].is_boolean());
  EXPECT_FALSE(parse_tuple("(1,x)"));
  EXPECT_FALSE(parse_tuple(""));
}

TEST(ParseValue, RoundTripsRendering) {
  for (const char* text : {"0", "-1", "123456789012345678901234567890", "false", "true"}) {
    const auto v = parse_value(text);
    ASSERT_TRUE(v) << text;
    EXPECT_EQ(render_value(*v), text);
  }
  EXPECT_FALSE(parse_value("1e3"));
  EXPECT_FALSE(parse_value("-"));
}

TEST(TupleLess, NumericNotTextual) {
  EXPECT_TRUE(tuple_less({SutValue::integer(std::int64_t{9})}, {SutValue::integer(std::int64_t{10})}));
  EXPECT_TRUE(tuple_less({SutValue::integer(std::int64_t{-10})}, {SutValue::integer(std::int64_t{-9})}));
  EXPECT_FALSE(tuple_less({SutValue::integer(std::int64_t{1})}, {SutValue::integer(std::int64_t{1})}));
}

TEST(ToBinary64, MatchesHardwareConversionFor64BitValues) {
  const std::int64_t samples[] = {0, 1, -1, 9007199254740993, -9007199254740993,
                                  std::numeric_limits<std::int64_t>::max(),
                                  std::numeric_limits<std::int64_t>::min()};
  for (auto s : samples) EXPECT_EQ(to_binary64(BigInt(s)), static_cast<double>(s)) << s;
}

TEST(ToBinary64, RoundsHalfToEven) {
  // 2^53 + 1 lies halfway between 2^53 and 2^53 + 2; the even neighbour wins.
  const BigInt two53 = BigInt(1) << 53;
  EXPECT_EQ(to_binary64(two53 + 1), std::ldexp(1.0, 53));
  EXPECT_EQ(to_binary64(two53 + 3), std::ldexp(1.0, 53) + 4);
  // Midpoints far above 2^64 behave the same way.
  EXPECT_EQ(to_binary64((BigInt(1) << 100) + (BigInt(1) << 47)), std::ldexp(1.0, 100));
  EXPECT_EQ(to_binary64((BigInt(1) << 100) + (BigInt(1) << 47) + 1),
            std::ldexp(1.0, 100) + std::ldexp(1.0, 48));
  EXPECT_TRUE(std::isinf(to_binary64(BigInt(1) << 1100)));
}

TEST(ToInt64, RangeLimits) {
  EXPECT_EQ(to_int64(BigInt("9223372036854775807")), std::numeric_limits<std::int64_t>::max());
  EXPECT_FALSE(to_int64(BigInt("9223372036854775808")));
  EXPECT_EQ(to_int64(BigInt("-9223372036854775808")), std::numeric_limits<std::int64_t>::min());
}

}  // namespace
}  // namespace autobva
