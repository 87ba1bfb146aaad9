#include "asgf/benchmarks.hpp"

#include <cmath>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "asgf/kernels.hpp"

namespace asgf {

namespace {

void check_size(std::span<const double> x, int d) {
  if (static_cast<int>(x.size()) != d) {
    throw std::invalid_argument("benchmark: wrong input dimension");
  }
}

// Standard test functions with their usual parameter values and domains.

BenchmarkSpec make_sphere(int d) {
  BenchmarkSpec spec;
  spec.name = "sphere";
  spec.dimension = d;
  spec.sample_domain.assign(d, {-5.12, 5.12});
  spec.global_minimum_value = 0.0;
  spec.known_minimizer.assign(d, 0.0);
  spec.evaluate = [d](std::span<const double> x) {
    check_size(x, d);
    return kernels::sum_sq(x);
  };
  return spec;
}

BenchmarkSpec make_ackley(int d) {
  BenchmarkSpec spec;
  spec.name = "ackley";
  spec.dimension = d;
  spec.sample_domain.assign(d, {-32.768, 32.768});
  spec.global_minimum_value = 0.0;
  spec.known_minimizer.assign(d, 0.0);
  spec.evaluate = [d](std::span<const double> x) {
    check_size(x, d);
    double cos_sum = 0.0;
    for (double v : x) cos_sum += std::cos(2.0 * kPi * v);
    const double inv_d = 1.0 / d;
    return -20.0 * std::exp(-0.2 * std::sqrt(kernels::sum_sq(x) * inv_d)) -
           std::exp(cos_sum * inv_d) + 20.0 + std::exp(1.0);
  };
  return spec;
}

BenchmarkSpec make_rastrigin(int d) {
  BenchmarkSpec spec;
  spec.name = "rastrigin";
  spec.dimension = d;
  spec.sample_domain.assign(d, {-5.12, 5.12});
  spec.global_minimum_value = 0.0;
  spec.known_minimizer.assign(d, 0.0);
  spec.evaluate = [d](std::span<const double> x) {
    check_size(x, d);
    double sum = 0.0;
    for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * kPi * v);
    return 10.0 * d + sum;
  };
  return spec;
}

BenchmarkSpec make_levy(int d) {
  BenchmarkSpec spec;
  spec.name = "levy";
  spec.dimension = d;
  spec.sample_domain.assign(d, {-10.0, 10.0});
  spec.global_minimum_value = 0.0;
  spec.known_minimizer.assign(d, 1.0);
  spec.evaluate = [d](std::span<const double> x) {
    check_size(x, d);
    const auto w = [&](int i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    const double s0 = std::sin(kPi * w(0));
    double sum = s0 * s0;
    for (int i = 0; i + 1 < d; ++i) {
      const double wi = w(i);
      const double s = std::sin(kPi * wi + 1.0);
      sum += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
    }
    const double wd = w(d - 1);
    const double sd = std::sin(2.0 * kPi * wd);
    sum += (wd - 1.0) * (wd - 1.0) * (1.0 + sd * sd);
    return sum;
  };
  return spec;
}

BenchmarkSpec make_branin(int d) {
  BenchmarkSpec spec;
  spec.name = "branin";
  spec.dimension = d;
  spec.sample_domain = {{-5.0, 10.0}, {0.0, 15.0}};
  spec.global_minimum_value = 5.0 / (4.0 * kPi);  // ≈ 0.397887
  spec.known_minimizer = {kPi, 2.275};
  spec.evaluate = [](std::span<const double> x) {
    check_size(x, 2);
    const double b = 5.1 / (4.0 * kPi * kPi);
    const double c = 5.0 / kPi;
    const double t = 1.0 / (8.0 * kPi);
    const double u = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
    return u * u + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
  };
  return spec;
}

BenchmarkSpec make_cross_in_tray(int d) {
  BenchmarkSpec spec;
  spec.name = "cross-in-tray";
  spec.dimension = d;
  spec.sample_domain.assign(2, {-10.0, 10.0});
  spec.global_minimum_value = -2.062611870822737;
  spec.known_minimizer = {1.3494066171539107, 1.3494066171539107};
  spec.evaluate = [](std::span<const double> x) {
    check_size(x, 2);
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    const double inner =
        std::sin(x[0]) * std::sin(x[1]) * std::exp(std::abs(100.0 - r / kPi));
    return -0.0001 * std::pow(std::abs(inner) + 1.0, 0.1);
  };
  return spec;
}

BenchmarkSpec make_dropwave(int d) {
  BenchmarkSpec spec;
  spec.name = "dropwave";
  spec.dimension = d;
  spec.sample_domain.assign(2, {-5.12, 5.12});
  spec.global_minimum_value = -1.0;
  spec.known_minimizer = {0.0, 0.0};
  spec.evaluate = [](std::span<const double> x) {
    check_size(x, 2);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
  };
  return spec;
}

}  // namespace

std::string BenchmarkSpec::id() const {
  return name + "-" + std::to_string(dimension);
}

Objective BenchmarkSpec::make_objective() const {
  return Objective(dimension, evaluate, id());
}

double BenchmarkSpec::domain_diameter() const {
  double acc = 0.0;
  for (const Bounds& b : sample_domain) acc += (b.hi - b.lo) * (b.hi - b.lo);
  return std::sqrt(acc);
}

Vector BenchmarkSpec::sample_initial_point(Rng& rng) const {
  Vector x(sample_domain.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.uniform(sample_domain[i].lo, sample_domain[i].hi);
  }
  return x;
}

const std::vector<BenchmarkFamily>& registry() {
  static const std::vector<BenchmarkFamily> families = {
      {"branin", 2, 2, "[-5,10] x [0,15]", make_branin},
      {"cross-in-tray", 2, 2, "[-10,10]^2", make_cross_in_tray},
      {"dropwave", 2, 2, "[-5.12,5.12]^2", make_dropwave},
      {"sphere", 0, 10, "[-5.12,5.12]^d", make_sphere},
      {"ackley", 0, 10, "[-32.768,32.768]^d", make_ackley},
      {"levy", 0, 10, "[-10,10]^d", make_levy},
      {"rastrigin", 0, 10, "[-5.12,5.12]^d", make_rastrigin},
  };
  return families;
}

BenchmarkSpec make_benchmark(const std::string& name, int dimension) {
  for (const BenchmarkFamily& family : registry()) {
    if (family.name != name) continue;
    if (dimension < 1) {
      throw std::invalid_argument("benchmark dimension must be positive");
    }
    if (family.fixed_dimension != 0 && dimension != family.fixed_dimension) {
      throw std::invalid_argument("benchmark '" + name + "' is only defined for d = " +
                                  std::to_string(family.fixed_dimension));
    }
    return family.make(dimension);
  }
  throw std::invalid_argument("unknown benchmark: " + name);
}

BenchmarkSpec lookup(std::string_view id) {
  // "name-dim"; a bare family name means its default dimension. Family names
  // may themselves contain '-', so only the last segment is tried as a number.
  const auto dash = id.rfind('-');
  if (dash != std::string_view::npos && dash + 1 < id.size()) {
    const std::string_view tail = id.substr(dash + 1);
    int dim = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), dim);
    if (ec == std::errc{} && ptr == tail.data() + tail.size()) {
      return make_benchmark(std::string(id.substr(0, dash)), dim);
    }
  }
  for (const BenchmarkFamily& family : registry()) {
    if (family.name == id) return family.make(family.default_dimension);
  }
  throw std::invalid_argument("unknown benchmark id: " + std::string(id));
}

bool is_success(const BenchmarkSpec& spec, double achieved_value) {
  require(std::isfinite(achieved_value), "achieved value must be finite");
  return achieved_value - spec.global_minimum_value <= spec.success_tolerance;
}

}  // namespace asgf
