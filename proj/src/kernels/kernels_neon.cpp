// NEON kernel variants (aarch64). Two float64x2 accumulators stand in for
// the four reduction lanes of the scalar reference; combine order and the
// remainder handling are identical, and vmulq/vaddq stay unfused, so results
// are bit-identical to the scalar kernels.

#include "tables.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

namespace asgf::kernels {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double lane[4] = {vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1),
                    vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)};
  for (std::size_t i = n4; i < n; ++i) lane[i - n4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_sq_neon(const double* a, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const float64x2_t v01 = vld1q_f64(a + i);
    const float64x2_t v23 = vld1q_f64(a + i + 2);
    acc01 = vaddq_f64(acc01, vmulq_f64(v01, v01));
    acc23 = vaddq_f64(acc23, vmulq_f64(v23, v23));
  }
  double lane[4] = {vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1),
                    vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)};
  for (std::size_t i = n4; i < n; ++i) lane[i - n4] += a[i] * a[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void scale_add_neon(double* out, const double* x, double a, const double* u,
                    std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n2; i += 2) {
    vst1q_f64(out + i,
              vaddq_f64(vld1q_f64(x + i), vmulq_f64(av, vld1q_f64(u + i))));
  }
  for (std::size_t i = n2; i < n; ++i) out[i] = x[i] + a * u[i];
}

void axpy_neon(double* y, double a, const double* x, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n2; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(av, vld1q_f64(x + i))));
  }
  for (std::size_t i = n2; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double* x, double a, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n2; i += 2) {
    vst1q_f64(x + i, vmulq_f64(av, vld1q_f64(x + i)));
  }
  for (std::size_t i = n2; i < n; ++i) x[i] *= a;
}

const KernelTable kNeonTable{dot_neon, sum_sq_neon, scale_add_neon, axpy_neon,
                             scale_neon};

}  // namespace

const KernelTable* neon_table() { return &kNeonTable; }

}  // namespace asgf::kernels

#else

namespace asgf::kernels {
const KernelTable* neon_table() { return nullptr; }
}  // namespace asgf::kernels

#endif
