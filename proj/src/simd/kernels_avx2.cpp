#include <immintrin.h>

#include "kernels_internal.hpp"

namespace softhandoff::simd::detail {
namespace {

void gram_accumulate_avx2(const double* rows, std::size_t n_rows, std::size_t dim, double* gram) {
  const std::size_t vec_end = dim & ~std::size_t{3};
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* x = rows + r * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      const __m256d xi = _mm256_set1_pd(x[i]);
      double* g = gram + i * dim;
      std::size_t j = 0;
      for (; j < vec_end; j += 4) {
        __m256d acc = _mm256_loadu_pd(g + j);
        acc = _mm256_fmadd_pd(xi, _mm256_loadu_pd(x + j), acc);
        _mm256_storeu_pd(g + j, acc);
      }
      for (; j < dim; ++j) g[j] += x[i] * x[j];
    }
  }
}

void transform_rows_avx2(const double* z, std::size_t n_rows, std::size_t d_in, const double* m,
                         std::size_t d_out, double* out) {
  const std::size_t vec_end = d_out & ~std::size_t{3};
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* zr = z + r * d_in;
    double* o = out + r * d_out;
    for (std::size_t i = 0; i < d_out; ++i) o[i] = 0.0;
    for (std::size_t j = 0; j < d_in; ++j) {
      const __m256d zj = _mm256_set1_pd(zr[j]);
      const double* mj = m + j * d_out;
      std::size_t i = 0;
      for (; i < vec_end; i += 4) {
        __m256d acc = _mm256_loadu_pd(o + i);
        acc = _mm256_fmadd_pd(zj, _mm256_loadu_pd(mj + i), acc);
        _mm256_storeu_pd(o + i, acc);
      }
      for (; i < d_out; ++i) o[i] += zr[j] * mj[i];
    }
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{Isa::avx2, "avx2", gram_accumulate_avx2, transform_rows_avx2};
  return k;
}

}  // namespace softhandoff::simd::detail
