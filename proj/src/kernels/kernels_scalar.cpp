// Scalar reference kernels. These define the arithmetic contract the SIMD
// variants must reproduce bit for bit: reductions keep four independent
// accumulator lanes (the compiler may vectorize them, which preserves the
// lane structure), no FMA contraction is permitted.

#include <cstddef>

#include "tables.hpp"

namespace asgf::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    lane[0] += a[i] * b[i];
    lane[1] += a[i + 1] * b[i + 1];
    lane[2] += a[i + 2] * b[i + 2];
    lane[3] += a[i + 3] * b[i + 3];
  }
  for (std::size_t i = n4; i < n; ++i) lane[i - n4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_sq_scalar(const double* a, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    lane[0] += a[i] * a[i];
    lane[1] += a[i + 1] * a[i + 1];
    lane[2] += a[i + 2] * a[i + 2];
    lane[3] += a[i + 3] * a[i + 3];
  }
  for (std::size_t i = n4; i < n; ++i) lane[i - n4] += a[i] * a[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void scale_add_scalar(double* out, const double* x, double a, const double* u,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * u[i];
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace

const KernelTable kScalarTable{dot_scalar, sum_sq_scalar, scale_add_scalar,
                               axpy_scalar, scale_scalar};

}  // namespace asgf::kernels
