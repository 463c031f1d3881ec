#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "leafcalc/chart.hpp"

namespace leafcalc {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Exponent vector over the chart variables.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exps{};

  unsigned total_degree() const noexcept;
  /// Degree in the fiber variables only (indices >= first_fiber).
  unsigned degree_from(int first_fiber) const noexcept;
  bool divides(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires b.divides(a).
Monomial operator/(const Monomial& a, const Monomial& b);

/// Graded lexicographic order, x1 most significant. Sorts larger monomials first
/// so that begin() of a term map is the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients over a chart.
/// Zero coefficients are never stored, so equal polynomials have equal term maps.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(ChartSpec chart) : chart_(chart) {}
  Poly(ChartSpec chart, const Rational& c);

  static Poly variable(ChartSpec chart, int var);
  static Poly monomial(ChartSpec chart, const Monomial& m, const Rational& c);

  const ChartSpec& chart() const noexcept { return chart_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The constant term (zero if absent).
  Rational constant_term() const;

  /// Requires !is_zero().
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  unsigned total_degree() const noexcept;
  int degree_in(int var) const noexcept;
  bool depends_on(int var) const noexcept;
  bool depends_on_fiber() const noexcept;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  Poly operator-() const;
  Poly pow(unsigned e) const;
  Poly derivative(int var) const;

  /// Coefficient of var^k, as a polynomial not involving var.
  Poly coefficient_in(int var, int k) const;
  /// Substitutes 0 for every fiber variable.
  Poly restrict_to_leaf() const;
  /// Scales so the leading coefficient is 1. Zero stays zero.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  ChartSpec chart_;
  TermMap terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& c);
Poly operator*(const Rational& c, Poly a);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Monic greatest common divisor over Q. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Text form, e.g. "y3 - 2*x1*y1^2". Terms in decreasing grlex order.
std::string to_string(const Poly& p);

}  // namespace leafcalc
