#pragma once

#include "softhandoff/simd/kernels.hpp"

namespace softhandoff::simd::detail {

#ifdef SOFTHANDOFF_HAVE_AVX2
const Kernels& avx2_kernels();
#endif
#ifdef SOFTHANDOFF_HAVE_NEON
const Kernels& neon_kernels();
#endif

}  // namespace softhandoff::simd::detail
