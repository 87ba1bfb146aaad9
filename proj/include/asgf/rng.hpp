#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "asgf/common.hpp"

namespace asgf {

/// Stateless mixing step (Steele et al. splitmix64); used to derive
/// independent stream seeds from one trial seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random source. Uniforms come straight from the top 53 bits
/// of mt19937_64 output and normals from Box-Muller on those uniforms, so a
/// seeded stream is bit-reproducible across standard libraries (std
/// distributions are implementation-defined and unsuitable for frozen
/// golden values).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]; keeps log() finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  void fill_normal(std::span<double> out) {
    for (double& v : out) v = normal();
  }

  Vector normal_vector(std::size_t n) {
    Vector v(n);
    fill_normal(v);
    return v;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace asgf
