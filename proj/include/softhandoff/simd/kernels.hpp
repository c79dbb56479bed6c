#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace softhandoff::simd {

enum class Isa { scalar, avx2, neon };

/// Row-major kernels used by the Monte-Carlo estimator.
struct Kernels {
  Isa isa;
  const char* name;
  /// gram[i*dim + j] += sum_r rows[r*dim + i] * rows[r*dim + j]
  void (*gram_accumulate)(const double* rows, std::size_t n_rows, std::size_t dim, double* gram);
  /// out[r*d_out + i] = sum_j z[r*d_in + j] * m[j*d_out + i]
  void (*transform_rows)(const double* z, std::size_t n_rows, std::size_t d_in, const double* m,
                         std::size_t d_out, double* out);
};

const Kernels& scalar_kernels();

/// Kernels for `isa` if compiled in and supported by this CPU.
const Kernels* kernels_for(Isa isa);

/// Best available kernels. SOFTHANDOFF_SIMD=scalar|avx2|neon overrides the
/// choice; an unavailable request falls back to scalar.
const Kernels& active_kernels();

std::optional<Isa> parse_isa(std::string_view name);

}  // namespace softhandoff::simd
