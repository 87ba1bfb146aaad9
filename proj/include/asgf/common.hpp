#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asgf {

using Vector = std::vector<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

/// Dense row-major matrix; rows are the unit of access (search directions,
/// basis vectors) so they stay contiguous for the SIMD kernels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Objective evaluation failed; carries the point that was being evaluated.
/// The underlying cause, if any, is attached as a nested exception.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Vector point)
      : std::runtime_error(what), point_(std::move(point)) {}

  const Vector& point() const noexcept { return point_; }

 private:
  Vector point_;
};

/// Objective returned NaN or an infinity.
class NonFiniteValueError : public EvaluationError {
 public:
  NonFiniteValueError(Vector point, double value)
      : EvaluationError("objective returned a non-finite value", std::move(point)),
        value_(value) {}

  double value() const noexcept { return value_; }

 private:
  double value_;
};

inline void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace asgf
