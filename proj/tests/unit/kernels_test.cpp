#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "autobva/kernels.hpp"

namespace autobva::kernels {
namespace {

std::vector<Point4> random_points(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Point4> pts(n);
  for (auto& p : pts) {
    for (double& v : p.v) v = u(rng);
  }
  return pts;
}

void PrintTo(Isa isa, std::ostream* os) { *os << to_string(isa); }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(Kernels, ScalarAlwaysAvailable) {
  EXPECT_TRUE(available(Isa::scalar));
  EXPECT_TRUE(available(active_isa()));
}

TEST(Kernels, ScalarSquaredDistanceIsPairwiseSum) {
  Point4 a{{1, 2, 3, 4}};
  Point4 b{{0, 0, 0, 0}};
  double out = 0;
  table(Isa::scalar).squared_distances(&a, 1, b, &out);
  EXPECT_EQ(out, 30.0);
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, SquaredDistancesBitwiseEqual) {
  if (!available(GetParam())) GTEST_SKIP() << to_string(GetParam()) << " not available";
  std::mt19937_64 rng(42);
  const auto& ref = table(Isa::scalar);
  const auto& simd = table(GetParam());
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 256u, 1001u}) {
    const auto pts = random_points(n, rng);
    const auto q = random_points(1, rng).front();
    std::vector<double> a(n), b(n);
    ref.squared_distances(pts.data(), n, q, a.data());
    simd.squared_distances(pts.data(), n, q, b.data());
    for (std::size_t j = 0; j < n; ++j) ASSERT_TRUE(same_bits(a[j], b[j])) << "n=" << n << " j=" << j;
  }
}

TEST_P(KernelEquivalence, NearestCentroidIdentical) {
  if (!available(GetParam())) GTEST_SKIP() << to_string(GetParam()) << " not available";
  std::mt19937_64 rng(43);
  const auto& ref = table(Isa::scalar);
  const auto& simd = table(GetParam());
  for (std::size_t k : {1u, 2u, 7u, 10u}) {
    const auto pts = random_points(999, rng);
    auto centroids = random_points(k, rng);
    if (k > 1) centroids[1] = centroids[0];  // exact tie: first index must win
    std::vector<std::uint32_t> a1(pts.size()), a2(pts.size());
    std::vector<double> d1(pts.size()), d2(pts.size());
    ref.nearest_centroid(pts.data(), pts.size(), centroids.data(), k, a1.data(), d1.data());
    simd.nearest_centroid(pts.data(), pts.size(), centroids.data(), k, a2.data(), d2.data());
    ASSERT_EQ(a1, a2);
    for (std::size_t j = 0; j < pts.size(); ++j) ASSERT_TRUE(same_bits(d1[j], d2[j]));
    for (auto a : a1) ASSERT_NE(a, 1u);
  }
}

TEST_P(KernelEquivalence, NonFiniteInputsAgree) {
  if (!available(GetParam())) GTEST_SKIP() << to_string(GetParam()) << " not available";
  std::vector<Point4> pts = {Point4{{INFINITY, 0, 0, 0}}, Point4{{NAN, 1, 2, 3}},
                             Point4{{1e308, -1e308, 0, 0}}, Point4{{0, 0, 0, 0}},
                             Point4{{-0.0, 0, 0, 0}}};
  const Point4 q{{1, 1, 1, 1}};
  std::vector<double> a(pts.size()), b(pts.size());
  table(Isa::scalar).squared_distances(pts.data(), pts.size(), q, a.data());
  table(GetParam()).squared_distances(pts.data(), pts.size(), q, b.data());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (std::isnan(a[j])) {
      EXPECT_TRUE(std::isnan(b[j]));
    } else {
      EXPECT_TRUE(same_bits(a[j], b[j])) << j;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllIsas, KernelEquivalence, ::testing::Values(Isa::avx2, Isa::neon),
                         [](const auto& info) { return std::string(to_string(info.param)); });

}  // namespace
}  // namespace autobva::kernels
