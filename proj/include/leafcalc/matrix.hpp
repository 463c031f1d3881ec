#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leafcalc/ratfunc.hpp"

namespace leafcalc {

/// Dense matrix over Q with exact Gaussian elimination.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t rank() const;
  /// Some x with A x = b, or nullopt when b is outside the column space.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  /// Basis of the null space.
  std::vector<std::vector<Rational>> kernel() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Dense matrix of rational functions.
class RatFuncMatrix {
 public:
  RatFuncMatrix(ChartSpec chart, std::size_t rows, std::size_t cols);
  static RatFuncMatrix identity(ChartSpec chart, std::size_t n);

  const ChartSpec& chart() const noexcept { return chart_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  RatFunc& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatFunc& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Exact inverse via fraction-free Gauss-Jordan elimination on the
  /// denominator-cleared polynomial matrix; nullopt when singular.
  std::optional<RatFuncMatrix> inverse() const;
  RatFunc determinant() const;
  RatFuncMatrix transpose() const;

  friend RatFuncMatrix operator*(const RatFuncMatrix& a, const RatFuncMatrix& b);
  friend bool operator==(const RatFuncMatrix& a, const RatFuncMatrix& b);

 private:
  ChartSpec chart_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatFunc> data_;
};

}  // namespace leafcalc
