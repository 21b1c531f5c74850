#include <immintrin.h>

#include "autobva/kernels.hpp"

namespace autobva::kernels::detail {

namespace {

inline __m256d square(__m256d p, __m256d q) {
  const __m256d d = _mm256_sub_pd(p, q);
  return _mm256_mul_pd(d, d);
}

inline double squared(__m256d p, __m256d q) {
  const __m256d sq = square(p, q);
  // [d0^2+d1^2, d0^2+d1^2, d2^2+d3^2, d2^2+d3^2]
  const __m256d pairs = _mm256_hadd_pd(sq, sq);
  const __m128d lo = _mm256_castpd256_pd128(pairs);
  const __m128d hi = _mm256_extractf128_pd(pairs, 1);
  return _mm_cvtsd_f64(_mm_add_sd(lo, hi));
}

void squared_distances(const Point4* pts, std::size_t n, const Point4& q, double* out) {
  const __m256d vq = _mm256_load_pd(q.v);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d s0 = square(_mm256_load_pd(pts[j].v), vq);
    const __m256d s1 = square(_mm256_load_pd(pts[j + 1].v), vq);
    const __m256d s2 = square(_mm256_load_pd(pts[j + 2].v), vq);
    const __m256d s3 = square(_mm256_load_pd(pts[j + 3].v), vq);
    // h01 = [s0_01, s1_01, s0_23, s1_23], h23 likewise for points 2 and 3.
    const __m256d h01 = _mm256_hadd_pd(s0, s1);
    const __m256d h23 = _mm256_hadd_pd(s2, s3);
    // lows = [s0_01, s1_01, s2_01, s3_01], highs = [s0_23, s1_23, s2_23, s3_23]
    const __m256d lows = _mm256_permute2f128_pd(h01, h23, 0x20);
    const __m256d highs = _mm256_permute2f128_pd(h01, h23, 0x31);
    const __m256d mixed_lo = _mm256_unpacklo_pd(lows, highs);
    const __m256d mixed_hi = _mm256_unpackhi_pd(lows, highs);
    // mixed_lo = [s0_01, s0_23, s2_01, s2_23], mixed_hi = [s1_01, s1_23, s3_01, s3_23]
    const __m256d sums = _mm256_hadd_pd(mixed_lo, mixed_hi);
    // sums = [s0, s1, s2, s3]
    _mm256_storeu_pd(out + j, sums);
  }
  for (; j < n; ++j) out[j] = squared(_mm256_load_pd(pts[j].v), vq);
}

void nearest_centroid(const Point4* pts, std::size_t n, const Point4* centroids, std::size_t k,
                      std::uint32_t* assign, double* dist2) {
  for (std::size_t j = 0; j < n; ++j) {
    const __m256d p = _mm256_load_pd(pts[j].v);
    std::uint32_t best = 0;
    double best_d = squared(p, _mm256_load_pd(centroids[0].v));
    for (std::size_t c = 1; c < k; ++c) {
      const double d = squared(p, _mm256_load_pd(centroids[c].v));
      if (d < best_d) {
        best_d = d;
        best = static_cast<std::uint32_t>(c);
      }
    }
    assign[j] = best;
    dist2[j] = best_d;
  }
}

}  // namespace

const KernelTable avx2_table = {squared_distances, nearest_centroid};

}  // namespace autobva::kernels::detail
