#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace autobva::kernels {

/// One column of the clustering feature matrix.
struct alignas(32) Point4 {
  double v[4] = {0, 0, 0, 0};

  friend bool operator==(const Point4&, const Point4&) = default;
};

enum class Isa : std::uint8_t { scalar, avx2, neon };

std::string_view to_string(Isa isa);

// Every variant sums ((d0^2 + d1^2) + (d2^2 + d3^2)) without contraction, so
// results are bitwise identical across ISAs.
struct KernelTable {
  // out[j] = |pts[j] - q|^2
  void (*squared_distances)(const Point4* pts, std::size_t n, const Point4& q, double* out);
  // assign[j] = first index of the closest centroid, dist2[j] = its squared distance
  void (*nearest_centroid)(const Point4* pts, std::size_t n, const Point4* centroids,
                           std::size_t k, std::uint32_t* assign, double* dist2);
};

bool available(Isa isa);
const KernelTable& table(Isa isa);

/// Best available ISA, overridable with AUTOBVA_SIMD=scalar|avx2|neon.
Isa active_isa();
const KernelTable& active();

namespace detail {
extern const KernelTable scalar_table;
#if defined(AUTOBVA_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(AUTOBVA_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace autobva::kernels
