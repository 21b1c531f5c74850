#include <cstdlib>
#include <string>

#include "autobva/kernels.hpp"

namespace autobva::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(AUTOBVA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(AUTOBVA_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
#if defined(AUTOBVA_HAVE_AVX2)
  if (isa == Isa::avx2 && available(isa)) return detail::avx2_table;
#endif
#if defined(AUTOBVA_HAVE_NEON)
  if (isa == Isa::neon) return detail::neon_table;
#endif
  return detail::scalar_table;
}

namespace {

Isa detect() {
  if (const char* forced = std::getenv("AUTOBVA_SIMD")) {
    const std::string name(forced);
    for (const Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == to_string(isa) && available(isa)) return isa;
    }
  }
  if (available(Isa::avx2)) return Isa::avx2;
  if (available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const KernelTable& active() { return table(active_isa()); }

}  // namespace autobva::kernels
