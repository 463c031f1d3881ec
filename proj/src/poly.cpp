#include "leafcalc/poly.hpp"

#include <sstream>
#include <utility>

#include "leafcalc/error.hpp"

namespace leafcalc {

std::string to_string(const Rational& q) { return q.get_str(); }

unsigned Monomial::total_degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

unsigned Monomial::degree_from(int first_fiber) const noexcept {
  unsigned d = 0;
  for (int i = first_fiber; i < kMaxVariables; ++i) d += exps[static_cast<std::size_t>(i)];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    const unsigned e = unsigned{a.exps[i]} + unsigned{b.exps[i]};
    if (e > 255) throw UsageError("monomial exponent overflow (max 255)");
    r.exps[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    r.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
  }
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

Poly::Poly(ChartSpec chart, const Rational& c) : chart_(chart) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(ChartSpec chart, int var) {
  if (!chart.valid(var)) throw UsageError("variable index " + std::to_string(var) + " out of range");
  Monomial m;
  m.exps[static_cast<std::size_t>(var)] = 1;
  return monomial(chart, m, 1);
}

Poly Poly::monomial(ChartSpec chart, const Monomial& m, const Rational& c) {
  Poly p(chart);
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw UsageError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw UsageError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

unsigned Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

int Poly::degree_in(int var) const noexcept {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, int{m.exps[static_cast<std::size_t>(var)]});
  return d;
}

bool Poly::depends_on(int var) const noexcept { return degree_in(var) > 0; }

bool Poly::depends_on_fiber() const noexcept {
  for (const auto& [m, c] : terms_) {
    if (m.degree_from(chart_.leaf_dim()) > 0) return true;
  }
  return false;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_chart(chart_, other.chart_, "poly add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_chart(chart_, other.chart_, "poly sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(chart_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  if (!chart_.valid(var)) throw UsageError("variable index " + std::to_string(var) + " out of range");
  const auto v = static_cast<std::size_t>(var);
  Poly r(chart_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[v] == 0) continue;
    Monomial dm = m;
    dm.exps[v] -= 1;
    r.add_term(dm, c * m.exps[v]);
  }
  return r;
}

Poly Poly::coefficient_in(int var, int k) const {
  const auto v = static_cast<std::size_t>(var);
  Poly r(chart_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[v] != k) continue;
    Monomial dm = m;
    dm.exps[v] = 0;
    r.terms_.emplace(dm, c);
  }
  return r;
}

Poly Poly::restrict_to_leaf() const {
  Poly r(chart_);
  for (const auto& [m, c] : terms_) {
    if (m.degree_from(chart_.leaf_dim()) == 0) r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading_coefficient();
  if (lc == 1) return *this;
  Poly r = *this;
  r *= Rational(1) / lc;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.chart_ == b.chart_ && a.terms_ == b.terms_;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_chart(a.chart(), b.chart(), "poly mul");
  Poly r(a.chart());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly operator*(Poly a, const Rational& c) { return a *= c; }
Poly operator*(const Rational& c, Poly a) { return a *= c; }

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  require_same_chart(a.chart(), b.chart(), "poly divide");
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly q(a.chart());
  Poly r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    const Poly t = Poly::monomial(a.chart(), lr / lb, r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

int main_variable(const Poly& a, const Poly& b) {
  for (int v = a.chart().num_vars() - 1; v >= 0; --v) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return -1;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *std::move(q);
}

Poly content_in(const Poly& a, int var) {
  Poly g(a.chart());
  const int d = a.degree_in(var);
  for (int k = d; k >= 0; --k) {
    Poly c = a.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Scales a nonzero polynomial to integer coefficients with gcd 1 and a
// positive leading coefficient; keeps PRS coefficients from growing.
Poly integer_primitive(Poly a) {
  if (a.is_zero()) return a;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [m, c] : a.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (a.leading_coefficient() < 0) scale = -scale;
  a *= scale;
  return a;
}

Poly primitive_part(const Poly& a, int var) {
  if (a.is_zero()) return a;
  return integer_primitive(exact_quotient(a, content_in(a, var)));
}

// lc(b)^(deg a − deg b + 1) · a mod b, as a polynomial in var.
Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
  const int db = b.degree_in(var);
  const Poly lb = b.coefficient_in(var, db);
  int steps = a.degree_in(var) - db + 1;
  Poly r = a;
  while (!r.is_zero()) {
    const int dr = r.degree_in(var);
    if (dr < db) break;
    const Poly lr = r.coefficient_in(var, dr);
    Monomial shift;
    shift.exps[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(dr - db);
    r = lb * r - lr * Poly::monomial(a.chart(), shift, 1) * b;
    --steps;
  }
  if (steps > 0 && !r.is_zero()) r *= lb.pow(static_cast<unsigned>(steps));
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  require_same_chart(a.chart(), b.chart(), "poly gcd");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(a.chart(), 1);
  if (a.monic() == b.monic()) return a.monic();

  const int v = main_variable(a, b);
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly gc = gcd(ca, cb);
  Poly p = integer_primitive(exact_quotient(a, ca));
  Poly q = integer_primitive(exact_quotient(b, cb));
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);

  // Subresultant PRS: exact divisions keep coefficient growth polynomial.
  Poly g(a.chart(), 1);
  Poly h(a.chart(), 1);
  while (true) {
    const int delta = p.degree_in(v) - q.degree_in(v);
    Poly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return gc.monic();
    p = std::move(q);
    q = exact_quotient(r, g * h.pow(static_cast<unsigned>(delta)));
    g = p.coefficient_in(v, p.degree_in(v));
    if (delta == 0) continue;
    h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  return (gc * primitive_part(q, v)).monic();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int v = 0; v < p.chart().num_vars(); ++v) {
      const int e = m.exps[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.chart().var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace leafcalc
