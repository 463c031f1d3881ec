#include "leafcalc/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "leafcalc/error.hpp"

namespace leafcalc {

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& a, std::size_t extra) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols() + extra));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c);
  }
  return m;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  auto m = to_rows(*this, 0);
  return row_reduce(m, cols_).size();
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw UsageError("solve: right-hand side has wrong length");
  auto m = to_rows(*this, 1);
  for (std::size_t r = 0; r < rows_; ++r) m[r][cols_] = b[r];
  const auto pivots = row_reduce(m, cols_ + 1);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
  return x;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  auto m = to_rows(*this, 0);
  const auto pivots = row_reduce(m, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product: dimension mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  }
  return r;
}

RatFuncMatrix::RatFuncMatrix(ChartSpec chart, std::size_t rows, std::size_t cols)
    : chart_(chart), rows_(rows), cols_(cols), data_(rows * cols, RatFunc(chart)) {}

RatFuncMatrix RatFuncMatrix::identity(ChartSpec chart, std::size_t n) {
  RatFuncMatrix m(chart, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc(chart, 1);
  return m;
}

RatFuncMatrix RatFuncMatrix::transpose() const {
  RatFuncMatrix t(chart_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

namespace {

struct Elimination {
  std::vector<std::vector<Poly>> rows;  // n x 2n: [cleared matrix | identity] reduced
  Poly denominator;                     // common denominator cleared from the input
  int sign = 1;                         // parity of row swaps
  bool singular = false;
};

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return *std::move(q);
}

// Fraction-free Gauss-Jordan: every intermediate entry is a polynomial and every
// division by the previous pivot is exact. On success the left block is d*I and
// the right block is d*P^{-1}, where P is the cleared matrix and d = sign*det(P).
Elimination eliminate(const RatFuncMatrix& m) {
  const std::size_t n = m.rows();
  const ChartSpec chart = m.chart();
  Poly lcm(chart, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& d = m.at(i, j).denominator();
      if (d.is_constant()) continue;
      lcm = exact(lcm * d, gcd(lcm, d));
    }
  }
  Elimination e{std::vector<std::vector<Poly>>(n, std::vector<Poly>(2 * n, Poly(chart))), lcm};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& f = m.at(i, j);
      e.rows[i][j] = f.numerator() * exact(lcm, f.denominator());
    }
    e.rows[i][n + i] = Poly(chart, 1);
  }
  Poly prev(chart, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && e.rows[p][k].is_zero()) ++p;
    if (p == n) {
      e.singular = true;
      return e;
    }
    if (p != k) {
      std::swap(e.rows[p], e.rows[k]);
      e.sign = -e.sign;
    }
    const Poly pivot = e.rows[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Poly factor = e.rows[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        e.rows[i][j] = exact(pivot * e.rows[i][j] - factor * e.rows[k][j], prev);
      }
    }
    prev = pivot;
  }
  return e;
}

}  // namespace

std::optional<RatFuncMatrix> RatFuncMatrix::inverse() const {
  if (rows_ != cols_) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  const Elimination e = eliminate(*this);
  if (e.singular) return std::nullopt;
  RatFuncMatrix inv(chart_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& d = e.rows[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      inv.at(i, j) = RatFunc(e.rows[i][n + j] * e.denominator, d);
    }
  }
  return inv;
}

RatFunc RatFuncMatrix::determinant() const {
  if (rows_ != cols_) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return RatFunc(chart_, 1);
  const Elimination e = eliminate(*this);
  if (e.singular) return RatFunc(chart_);
  // After full elimination every diagonal entry equals det(P).
  return RatFunc(e.rows[n - 1][n - 1] * Rational(e.sign), e.denominator.pow(static_cast<unsigned>(n)));
}

RatFuncMatrix operator*(const RatFuncMatrix& a, const RatFuncMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product: dimension mismatch");
  RatFuncMatrix r(a.chart_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  }
  return r;
}

bool operator==(const RatFuncMatrix& a, const RatFuncMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

}  // namespace leafcalc
