// AVX2 kernel variants. This translation unit is compiled with -mavx2 (and
// nothing wider); callers must check CPU support before selecting the table.
// Reductions mirror the scalar reference exactly: one 4-lane vector
// accumulator, remainder folded into the low lanes, combined as
// (l0 + l1) + (l2 + l3). Multiplies and adds stay separate so rounding
// matches the scalar kernels (no FMA).

#include "tables.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace asgf::kernels {

namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                           _mm256_loadu_pd(b + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t i = n4; i < n; ++i) lane[i - n4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_sq_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d v = _mm256_loadu_pd(a + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t i = n4; i < n; ++i) lane[i - n4] += a[i] * a[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void scale_add_avx2(double* out, const double* x, double a, const double* u,
                    std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(x + i),
                                    _mm256_mul_pd(av, _mm256_loadu_pd(u + i)));
    _mm256_storeu_pd(out + i, r);
  }
  for (std::size_t i = n4; i < n; ++i) out[i] = x[i] + a * u[i];
}

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                    _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, r);
  }
  for (std::size_t i = n4; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  }
  for (std::size_t i = n4; i < n; ++i) x[i] *= a;
}

const KernelTable kAvx2Table{dot_avx2, sum_sq_avx2, scale_add_avx2, axpy_avx2,
                             scale_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace asgf::kernels

#else

namespace asgf::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace asgf::kernels

#endif
