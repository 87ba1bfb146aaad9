#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace asgf::kernels {

enum class Backend { scalar, avx2, neon };

/// One set of vector kernels. Every backend implements the same fixed
/// arithmetic pattern — reductions accumulate into four independent lanes
/// (lane = index mod 4, remainder folded into lanes 0..2) combined as
/// (l0 + l1) + (l2 + l3), elementwise ops round multiply-then-add — so all
/// backends produce bit-identical results and results do not depend on
/// which backend the dispatcher picked.
struct KernelTable {
  /// Σ a[i]·b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// Σ a[i]²
  double (*sum_sq)(const double* a, std::size_t n);
  /// out[i] = x[i] + a·u[i]
  void (*scale_add)(double* out, const double* x, double a, const double* u,
                    std::size_t n);
  /// y[i] += a·x[i]
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
  /// x[i] *= a
  void (*scale)(double* x, double a, std::size_t n);
};

/// Table for one backend, or nullptr when it is not compiled in or the CPU
/// lacks the instruction set.
const KernelTable* table(Backend backend);
bool available(Backend backend);
std::vector<Backend> available_backends();

/// Backend the free functions below use. Defaults to the widest available
/// SIMD set; ASGF_KERNEL_BACKEND=scalar|avx2|neon|auto overrides.
Backend active_backend();
void set_backend(Backend backend);  // throws std::invalid_argument if unavailable

std::string_view backend_name(Backend backend);

namespace detail {
const KernelTable& active();
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return detail::active().dot(a.data(), b.data(), a.size());
}

inline double sum_sq(std::span<const double> a) {
  return detail::active().sum_sq(a.data(), a.size());
}

inline double norm(std::span<const double> a) { return std::sqrt(sum_sq(a)); }

inline void scale_add(std::span<double> out, std::span<const double> x, double a,
                      std::span<const double> u) {
  detail::active().scale_add(out.data(), x.data(), a, u.data(), out.size());
}

inline void axpy(std::span<double> y, double a, std::span<const double> x) {
  detail::active().axpy(y.data(), a, x.data(), y.size());
}

inline void scale(std::span<double> x, double a) {
  detail::active().scale(x.data(), a, x.size());
}

}  // namespace asgf::kernels
