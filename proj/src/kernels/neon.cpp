#include <arm_neon.h>

#include "autobva/kernels.hpp"

namespace autobva::kernels::detail {

namespace {

inline double squared(const Point4& a, const Point4& b) {
  const float64x2_t d_lo = vsubq_f64(vld1q_f64(a.v), vld1q_f64(b.v));
  const float64x2_t d_hi = vsubq_f64(vld1q_f64(a.v + 2), vld1q_f64(b.v + 2));
  const double lo = vaddvq_f64(vmulq_f64(d_lo, d_lo));
  const double hi = vaddvq_f64(vmulq_f64(d_hi, d_hi));
  return lo + hi;
}

void squared_distances(const Point4* pts, std::size_t n, const Point4& q, double* out) {
  for (std::size_t j = 0; j < n; ++j) out[j] = squared(pts[j], q);
}

void nearest_centroid(const Point4* pts, std::size_t n, const Point4* centroids, std::size_t k,
                      std::uint32_t* assign, double* dist2) {
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t best = 0;
    double best_d = squared(pts[j], centroids[0]);
    for (std::size_t c = 1; c < k; ++c) {
      const double d = squared(pts[j], centroids[c]);
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

const KernelTable neon_table = {squared_distances, nearest_centroid};

}  // namespace autobva::kernels::detail
