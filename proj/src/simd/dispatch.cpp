#include <cstdlib>

#include "kernels_internal.hpp"

namespace softhandoff::simd {

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

const Kernels* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
#ifdef SOFTHANDOFF_HAVE_AVX2
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &detail::avx2_kernels();
#endif
      return nullptr;
    case Isa::neon:
#ifdef SOFTHANDOFF_HAVE_NEON
      return &detail::neon_kernels();  // baseline on aarch64
#endif
      return nullptr;
  }
  return nullptr;
}

const Kernels& active_kernels() {
  static const Kernels& chosen = [] () -> const Kernels& {
    if (const char* env = std::getenv("SOFTHANDOFF_SIMD")) {
      if (auto isa = parse_isa(env)) {
        if (const Kernels* k = kernels_for(*isa)) return *k;
      }
      return scalar_kernels();
    }
    for (Isa isa : {Isa::avx2, Isa::neon}) {
      if (const Kernels* k = kernels_for(isa)) return *k;
    }
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace softhandoff::simd
