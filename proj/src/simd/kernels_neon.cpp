#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace softhandoff::simd::detail {
namespace {

void gram_accumulate_neon(const double* rows, std::size_t n_rows, std::size_t dim, double* gram) {
  const std::size_t vec_end = dim & ~std::size_t{1};
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* x = rows + r * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      const float64x2_t xi = vdupq_n_f64(x[i]);
      double* g = gram + i * dim;
      std::size_t j = 0;
      for (; j < vec_end; j += 2) vst1q_f64(g + j, vfmaq_f64(vld1q_f64(g + j), xi, vld1q_f64(x + j)));
      for (; j < dim; ++j) g[j] += x[i] * x[j];
    }
  }
}

void transform_rows_neon(const double* z, std::size_t n_rows, std::size_t d_in, const double* m,
                         std::size_t d_out, double* out) {
  const std::size_t vec_end = d_out & ~std::size_t{1};
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* zr = z + r * d_in;
    double* o = out + r * d_out;
    for (std::size_t i = 0; i < d_out; ++i) o[i] = 0.0;
    for (std::size_t j = 0; j < d_in; ++j) {
      const float64x2_t zj = vdupq_n_f64(zr[j]);
      const double* mj = m + j * d_out;
      std::size_t i = 0;
      for (; i < vec_end; i += 2) vst1q_f64(o + i, vfmaq_f64(vld1q_f64(o + i), zj, vld1q_f64(mj + i)));
      for (; i < d_out; ++i) o[i] += zr[j] * mj[i];
    }
  }
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{Isa::neon, "neon", gram_accumulate_neon, transform_rows_neon};
  return k;
}

}  // namespace softhandoff::simd::detail
