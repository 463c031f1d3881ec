#include "leafcalc/ratfunc.hpp"

#include <utility>

#include "leafcalc/error.hpp"

namespace leafcalc {

namespace {

void cancel_common(Poly& a, Poly& b) {
  if (a.is_constant() || b.is_constant()) return;
  const Poly g = gcd(a, b);
  if (g.is_constant()) return;
  a = *divide_exact(a, g);
  b = *divide_exact(b, g);
}

}  // namespace

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(num_.chart(), 1) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_chart(num_.chart(), den_.chart(), "rational function");
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(num_.chart(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  make_monic();
}

void RatFunc::make_monic() {
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw UsageError("expected a constant, got " + to_string(*this));
  return num_.constant_term();
}

Poly RatFunc::as_poly() const {
  if (!is_polynomial()) throw UsageError("expected a polynomial, got " + to_string(*this));
  return num_;
}

// Both operands are already reduced, so gcds are only taken between
// denominators and cross factors, which keeps them small.
RatFunc& RatFunc::operator+=(const RatFunc& other) {
  require_same_chart(chart(), other.chart(), "ratfunc add");
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_constant() && other.den_.is_constant()) {
    num_ += other.num_;
    return *this;
  }
  const Poly g = gcd(den_, other.den_);
  if (g.is_constant()) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    make_monic();
    return *this;
  }
  const Poly left = *divide_exact(den_, g);
  const Poly right = *divide_exact(other.den_, g);
  Poly t = num_ * right + other.num_ * left;
  if (t.is_zero()) return *this = RatFunc(chart());
  const Poly g2 = gcd(t, g);
  num_ = g2.is_constant() ? std::move(t) : *divide_exact(t, g2);
  den_ = left * (g2.is_constant() ? other.den_ : *divide_exact(other.den_, g2));
  make_monic();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  require_same_chart(chart(), other.chart(), "ratfunc mul");
  if (is_zero() || other.is_zero()) return *this = RatFunc(chart());
  Poly a = num_;
  Poly b = den_;
  Poly c = other.num_;
  Poly d = other.den_;
  cancel_common(a, d);
  cancel_common(c, b);
  num_ = a * c;
  den_ = b * d;
  make_monic();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
  require_same_chart(chart(), other.chart(), "ratfunc div");
  if (other.is_zero()) throw DomainError("division by the zero rational function");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::derivative(int var) const {
  if (den_.is_constant()) {
    RatFunc r = *this;
    r.num_ = num_.derivative(var);
    return r;
  }
  // (n/d)' = (n' d - n d') / d^2
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::evaluate_on_leaf() const {
  Poly d = den_.restrict_to_leaf();
  if (d.is_zero()) {
    throw SingularRestrictionError("denominator of " + to_string(*this) + " vanishes on the leaf y = 0");
  }
  return RatFunc(num_.restrict_to_leaf(), std::move(d));
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!(a.chart() == b.chart())) return false;
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

std::string to_string(const RatFunc& f) {
  if (f.denominator().is_constant() && f.denominator().constant_term() == 1) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace leafcalc
