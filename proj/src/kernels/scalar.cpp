#include "autobva/kernels.hpp"

namespace autobva::kernels::detail {

namespace {

inline double squared(const Point4& a, const Point4& b) {
  const double d0 = a.v[0] - b.v[0];
  const double d1 = a.v[1] - b.v[1];
  const double d2 = a.v[2] - b.v[2];
  const double d3 = a.v[3] - b.v[3];
  const double lo = d0 * d0 + d1 * d1;
  const double hi = d2 * d2 + d3 * d3;
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

const KernelTable scalar_table = {squared_distances, nearest_centroid};

}  // namespace autobva::kernels::detail
