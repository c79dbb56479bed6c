#include "softhandoff/simd/kernels.hpp"

namespace softhandoff::simd {
namespace {

void gram_accumulate_scalar(const double* rows, std::size_t n_rows, std::size_t dim, double* gram) {
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* x = rows + r * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      const double xi = x[i];
      double* g = gram + i * dim;
      for (std::size_t j = 0; j < dim; ++j) g[j] += xi * x[j];
    }
  }
}

void transform_rows_scalar(const double* z, std::size_t n_rows, std::size_t d_in, const double* m,
                           std::size_t d_out, double* out) {
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* zr = z + r * d_in;
    double* o = out + r * d_out;
    for (std::size_t i = 0; i < d_out; ++i) o[i] = 0.0;
    for (std::size_t j = 0; j < d_in; ++j) {
      const double zj = zr[j];
      const double* mj = m + j * d_out;
      for (std::size_t i = 0; i < d_out; ++i) o[i] += zj * mj[i];
    }
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, "scalar", gram_accumulate_scalar, transform_rows_scalar};
  return k;
}

}  // namespace softhandoff::simd
