#pragma once

#include <string>

#include "leafcalc/poly.hpp"

namespace leafcalc {

/// Exact rational function num/den over a chart.
///
/// Normal form: the denominator is monic in grlex order and num/den carries no
/// common polynomial factor. Equality never relies on the normal form: a/b == c/d
/// is decided by a*d - c*b == 0.
class RatFunc {
 public:
  explicit RatFunc(ChartSpec chart) : num_(chart), den_(chart, 1) {}
  RatFunc(ChartSpec chart, const Rational& c) : num_(chart, c), den_(chart, 1) {}
  RatFunc(Poly p);  // NOLINT(google-explicit-constructor): polynomials are rational functions
  /// Throws DomainError when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc variable(ChartSpec chart, int var) { return RatFunc(Poly::variable(chart, var)); }

  const ChartSpec& chart() const noexcept { return num_.chart(); }
  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(int var) const noexcept { return num_.depends_on(var) || den_.depends_on(var); }
  bool depends_on_fiber() const noexcept { return num_.depends_on_fiber() || den_.depends_on_fiber(); }

  /// Value of a constant function; throws UsageError otherwise.
  Rational constant_value() const;
  /// The numerator when the denominator is constant; throws UsageError otherwise.
  Poly as_poly() const;

  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);

  RatFunc operator-() const;

  RatFunc derivative(int var) const;

  /// Substitutes y = 0. Throws SingularRestrictionError when the denominator
  /// vanishes identically on the leaf.
  RatFunc evaluate_on_leaf() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

 private:
  void normalize();
  void make_monic();

  Poly num_;
  Poly den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

std::string to_string(const RatFunc& f);

}  // namespace leafcalc
