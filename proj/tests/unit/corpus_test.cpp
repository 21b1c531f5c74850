#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "autobva/sut.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace autobva {
namespace {

InputTuple tuple(const std::string& text) {
  auto t = parse_tuple(text);
  if (!t) throw std::runtime_error("bad tuple " + text);
  return *t;
}

void expect_golden(const std::string& sut_name, const std::vector<testing::Golden>& rows) {
  const auto sut = builtin_sut(sut_name);
  for (const auto& row : rows) {
    const auto out = execute(sut, tuple(row.input));
    EXPECT_EQ(out.text, row.output) << sut_name << " " << row.input;
    EXPECT_EQ(out.valid, row.valid) << sut_name << " " << row.input;
    EXPECT_EQ(out.error_kind.has_value(), !row.valid);
  }
}

TEST(Bytecount, Golden) { expect_golden("bytecount", testing::bytecount_golden()); }
TEST(Date, Golden) { expect_golden("date", testing::date_golden()); }
TEST(BmiValue, Golden) { expect_golden("bmi", testing::bmi_value_golden()); }
TEST(BmiClassification, Golden) { expect_golden("bmi-class", testing::bmi_class_golden()); }

TEST(Bytecount, BoundsErrorCarriesPayload) {
  const auto out = bytecount(SutValue::integer(BigInt("999999999999994822657")));
  ASSERT_EQ(out.error_kind, ErrorKind::bounds_error);
  EXPECT_EQ(out.payload.at("string"), "kMGTPE");
  EXPECT_EQ(out.payload.at("index"), "7");
}

TEST(Bytecount, SmallValuesPassThrough) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const BigInt v = -(BigInt(rng()) << (rng() % 100)) + 999;
    EXPECT_EQ(bytecount(SutValue::integer(v)).text, v.str() + "B");
  }
  for (std::int64_t v = -1000; v < 1000; ++v) {
    EXPECT_EQ(bytecount(SutValue::integer(v)).text, std::to_string(v) + "B");
  }
}

TEST(Bytecount, UnitLadder) {
  EXPECT_EQ(bytecount(SutValue::integer(std::int64_t{1000000})).text, "1.0 MB");
  EXPECT_EQ(bytecount(SutValue::integer(BigInt("1000000000000"))).text, "1.0 TB");
  EXPECT_EQ(bytecount(SutValue::integer(BigInt("1000000000000000"))).text, "1.0 PB");
  EXPECT_EQ(bytecount(SutValue::integer(BigInt("1000000000000000000"))).text, "1.0 EB");
  EXPECT_EQ(bytecount(SutValue::integer(BigInt("1000000000000000000000000"))).text,
            "BoundsError(\"kMGTPE\", 8)");
}

TEST(Date, FourDigitYearsPadded) {
  EXPECT_EQ(date_ctor(SutValue::integer(std::int64_t{5}), SutValue::integer(std::int64_t{1}),
                      SutValue::integer(std::int64_t{1})).text,
            "0005-01-01");
  EXPECT_EQ(date_ctor(SutValue::integer(std::int64_t{-5}), SutValue::integer(std::int64_t{12}),
                      SutValue::integer(std::int64_t{31})).text,
            "-0005-12-31");
}

TEST(Date, MonthCheckedBeforeDay) {
  const auto out = date_ctor(SutValue::integer(std::int64_t{0}), SutValue::integer(std::int64_t{13}),
                             SutValue::integer(std::int64_t{0}));
  EXPECT_EQ(out.text, "ArgumentError(\"Month: 13 out of range (1:12)\")");
}

TEST(Date, OverflowingYearsStillRenderExactly) {
  const auto& pair = testing::overflow_date_pair();
  const auto sut = builtin_sut("date");
  EXPECT_EQ(execute(sut, tuple(pair.input1)).text, pair.output1);
  EXPECT_EQ(execute(sut, tuple(pair.input2)).text, pair.output2);
}

TEST(Date, ArgumentsOutsideInt64AreInexact) {
  const auto out = date_ctor(SutValue::integer(BigInt("100000000000000000000")),
                             SutValue::integer(std::int64_t{1}), SutValue::integer(std::int64_t{1}));
  EXPECT_EQ(out.error_kind, ErrorKind::inexact_error);
  EXPECT_EQ(out.text, "InexactError(:Int64, Int64, 100000000000000000000)");
}

TEST(Date, DaysInMonthMatchesCalendarOracle) {
  for (std::int64_t y = -2000; y <= 2400; ++y) {
    for (int m = 1; m <= 12; ++m) ASSERT_EQ(days_in_month(y, m), oracle::month_length(y, m)) << y << "-" << m;
  }
}

TEST(Date, RataDieMatchesCalendarOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t y = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    const int m = static_cast<int>(rng() % 12) + 1;
    const int d = static_cast<int>(rng() % oracle::month_length(y, m)) + 1;
    ASSERT_EQ(rata_die(y, m, d), oracle::serial_day(y, m, d)) << y << "-" << m << "-" << d;
  }
  EXPECT_EQ(rata_die(1, 1, 1), 1);
}

TEST(Date, RenderedDatesParseBackToTheirInputs) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t y = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    const int m = static_cast<int>(rng() % 12) + 1;
    const int d = static_cast<int>(rng() % oracle::month_length(y, m)) + 1;
    const auto out = date_ctor(SutValue::integer(y), SutValue::integer(std::int64_t{m}),
                               SutValue::integer(std::int64_t{d}));
    ASSERT_TRUE(out.valid);
    long long py = 0;
    int pm = 0;
    int pd = 0;
    ASSERT_EQ(std::sscanf(out.text.c_str(), "%lld-%d-%d", &py, &pm, &pd), 3) << out.text;
    ASSERT_EQ(py, y);
    ASSERT_EQ(pm, m);
    ASSERT_EQ(pd, d);
  }
}

TEST(Date, OverflowedYearsDoNotMatchInputs) {
  const auto sut = builtin_sut("date");
  int mismatched = 0;
  for (std::int64_t y : {std::int64_t{757576862466482}, std::int64_t{4000000000000000000},
                         std::int64_t{-4000000000000000000}}) {
    const auto out = execute(sut, {SutValue::integer(y), SutValue::integer(std::int64_t{2}),
                                   SutValue::integer(std::int64_t{21})});
    ASSERT_TRUE(out.valid);
    if (out.text.rfind(std::to_string(y) + "-02-21", 0) != 0) ++mismatched;
  }
  EXPECT_EQ(mismatched, 3);
}

TEST(RenderFloat, ShortestRoundTrip) {
  EXPECT_EQ(render_float(9.8), "9.8");
  EXPECT_EQ(render_float(930000.0), "930000.0");
  EXPECT_EQ(render_float(1e6), "1.0e6");
  EXPECT_EQ(render_float(0.0), "0.0");
  EXPECT_EQ(render_float(0.0001), "0.0001");
  EXPECT_EQ(render_float(0.00001), "1.0e-5");
  EXPECT_EQ(render_float(1.5e300), "1.5e300");
  EXPECT_EQ(render_float(INFINITY), "Inf");
  EXPECT_EQ(render_float(-INFINITY), "-Inf");
  EXPECT_EQ(render_float(NAN), "NaN");
}

TEST(BmiClassification, LabelFollowsRoundedValue) {
  for (std::int64_t h = 1; h <= 260; h += 3) {
    for (std::int64_t w = 0; w <= 400; w += 7) {
      const auto value = bmi_value(SutValue::integer(h), SutValue::integer(w));
      const auto label = bmi_classification(SutValue::integer(h), SutValue::integer(w));
      const double v = std::stod(value.text);
      const char* expected = v < 18.5 ? "Underweight" : v < 23.0 ? "Normal" : v < 25.0 ? "Overweight"
                                        : v < 30.0 ? "Obese" : "Severely obese";
      ASSERT_EQ(label.text, expected) << h << "," << w;
    }
  }
}

TEST(BmiClassification, ThresholdsAgreeWithExactArithmetic) {
  for (std::int64_t h = 1; h <= 300; ++h) {
    for (std::int64_t w = 0; w <= 300; ++w) {
      const auto label = bmi_classification(SutValue::integer(h), SutValue::integer(w));
      ASSERT_EQ(label.text, oracle::bmi_label_exact(h, w)) << h << "," << w;
    }
  }
}

TEST(BmiClassification, GoldenLabelsAgreeWithCutPoints) {
  const auto& rows = testing::bmi_class_golden();
  auto consistent = [&](double c1, double c2, double c3, double c4) {
    for (const auto& row : rows) {
      if (!row.valid) continue;
      const auto t = tuple(row.input);
      const double v = std::stod(bmi_value(t[0], t[1]).text);
      const char* got = v < c1 ? "Underweight" : v < c2 ? "Normal" : v < c3 ? "Overweight"
                        : v < c4 ? "Obese" : "Severely obese";
      if (row.output != got) return false;
    }
    return true;
  };
  EXPECT_TRUE(consistent(18.5, 23.0, 25.0, 30.0));
}

TEST(Execute, ArityMismatchThrows) {
  EXPECT_THROW(execute(builtin_sut("bmi"), {SutValue::integer(std::int64_t{1})}), std::invalid_argument);
}

TEST(Execute, Deterministic) {
  for (const auto& name : builtin_sut_names()) {
    const auto sut = builtin_sut(name);
    InputTuple t(sut.arity(), SutValue::integer(std::int64_t{2}));
    EXPECT_EQ(execute(sut, t), execute(sut, t)) << name;
  }
}

TEST(Execute, UnknownSutRejected) { EXPECT_THROW(builtin_sut("nope"), std::invalid_argument); }

class ExternalSut : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("autobva_ext_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string script(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    std::ofstream(path) << "#!/bin/sh\n" << body << "\n";
    std::filesystem::permissions(path, std::filesystem::perms::owner_all);
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(ExternalSut, EchoPassesArgumentsThrough) {
  const auto out = run_external("echo", {SutValue::integer(std::int64_t{42})});
  EXPECT_TRUE(out.valid);
  EXPECT_EQ(out.text, "42");
}

TEST_F(ExternalSut, NonzeroExitCapturesStderr) {
  const auto cmd = script("fail.sh", "echo \"bad $1\" >&2\nexit 3");
  const auto out = run_external(cmd, {SutValue::integer(std::int64_t{1})});
  EXPECT_FALSE(out.valid);
  EXPECT_EQ(out.error_kind, ErrorKind::process_error);
  EXPECT_EQ(out.payload.at("stderr"), "bad 1");
  EXPECT_EQ(out.payload.at("exit_code"), "3");
}

TEST_F(ExternalSut, MissingCommandIsAnErrorOutcome) {
  const auto out = run_external("/nonexistent/autobva-missing", {SutValue::integer(std::int64_t{1})});
  EXPECT_FALSE(out.valid);
  EXPECT_EQ(out.error_kind, ErrorKind::argument_error);
}

TEST_F(ExternalSut, TimeoutKillsTheChild) {
  const auto cmd = script("slow.sh", "sleep 5");
  const auto start = std::chrono::steady_clock::now();
  const auto out = run_external(cmd, {SutValue::integer(std::int64_t{1})}, std::chrono::milliseconds(200));
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(3));
  EXPECT_EQ(out.error_kind, ErrorKind::argument_error);
  EXPECT_NE(out.text.find("timeout"), std::string::npos);
}

TEST_F(ExternalSut, ResolvesByPrefix) {
  const auto sut = resolve_sut("external:echo", 2);
  EXPECT_EQ(sut.arity(), 2u);
  EXPECT_EQ(execute(sut, {SutValue::integer(std::int64_t{1}), SutValue::boolean(true)}).text, "1 true");
}

}  // namespace
}  // namespace autobva
