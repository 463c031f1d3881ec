#include "leafcalc/linearize.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "leafcalc/error.hpp"
#include "leafcalc/tensor_calc.hpp"

namespace leafcalc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

int fiber_degree(const ChartSpec& c, const Monomial& m) { return static_cast<int>(m.degree_from(c.leaf_dim())); }

Monomial leaf_part(const ChartSpec& c, Monomial m) {
  for (int v = c.leaf_dim(); v < c.num_vars(); ++v) m.exps[sz(v)] = 0;
  return m;
}

Monomial fiber_part(const ChartSpec& c, Monomial m) {
  for (int v = 0; v < c.leaf_dim(); ++v) m.exps[sz(v)] = 0;
  return m;
}

void require_y_polynomial(const RatFunc& f) {
  if (f.denominator().depends_on_fiber()) {
    throw NonPolynomialJetError("fiber variable in a denominator: " + to_string(f));
  }
}

// Monomials of total degree d in the fiber variables.
void fiber_monomials(const ChartSpec& c, int d, int first, Monomial& current, std::vector<Monomial>& out) {
  if (first == c.num_vars() - 1) {
    current.exps[sz(first)] = static_cast<std::uint8_t>(d);
    out.push_back(current);
    current.exps[sz(first)] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    current.exps[sz(first)] = static_cast<std::uint8_t>(e);
    fiber_monomials(c, d - e, first + 1, current, out);
  }
  current.exps[sz(first)] = 0;
}

std::vector<IndexTuple> fiber_tuples(const ChartSpec& c, int grade) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == grade) {
      out.push_back(cur);
      return;
    }
    for (int k = start; k < c.n(); ++k) {
      cur.push_back(c.fiber_var(k));
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Monomial basis of vertical grade-g cochains with y-degree d.
class CochainBasis {
 public:
  CochainBasis(const ChartSpec& c, int grade, int d) : chart_(c), grade_(grade) {
    std::vector<Monomial> monos;
    Monomial scratch;
    if (d >= 0) fiber_monomials(c, d, c.leaf_dim(), scratch, monos);
    for (const auto& idx : fiber_tuples(c, grade)) {
      for (const auto& m : monos) {
        index_.emplace(std::make_pair(idx, m.exps), elements_.size());
        elements_.emplace_back(idx, m);
      }
    }
  }

  std::size_t size() const { return elements_.size(); }

  Multivector element(std::size_t i) const {
    const auto& [idx, m] = elements_[i];
    return Multivector::basis(chart_, idx, RatFunc(Poly::monomial(chart_, m, 1)));
  }

  std::size_t position(const IndexTuple& idx, const Monomial& y) const {
    auto it = index_.find(std::make_pair(idx, y.exps));
    if (it == index_.end()) throw std::logic_error("cochain outside the expected homogeneous basis");
    return it->second;
  }

  // Σ_i coeffs[i] * element(i) * scale.
  Multivector combine(const std::vector<Rational>& coeffs, const RatFunc& scale) const {
    Multivector r(chart_, grade_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      const auto& [idx, m] = elements_[i];
      r.add_term(idx, RatFunc(Poly::monomial(chart_, m, coeffs[i])) * scale);
    }
    return r;
  }

 private:
  ChartSpec chart_;
  int grade_;
  std::vector<std::pair<IndexTuple, Monomial>> elements_;
  std::map<std::pair<IndexTuple, std::array<std::uint8_t, kMaxVariables>>, std::size_t> index_;
};

void require_fiber_rank(const LieAlgebraSpec& g, const ChartSpec& c) {
  if (g.n() != c.n()) {
    throw UsageError("Lie algebra of dimension " + std::to_string(g.n()) + " on a chart with fiber rank " +
                     std::to_string(c.n()));
  }
}

RationalMatrix coboundary_on(const ChartSpec& c, const LieAlgebraSpec& g, int d, int source_grade) {
  if (source_grade != 0 && source_grade != 1) throw UsageError("source grade must be 0 or 1");
  if (d < 0) throw UsageError("negative cochain degree");
  const Multivector v1 = g.bivector(c);
  const CochainBasis source(c, source_grade, d);
  const CochainBasis target(c, source_grade + 1, d);
  RationalMatrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Multivector image = schouten(v1, source.element(j));
    for (const auto& [idx, coeff] : image.terms()) {
      const Poly p = coeff.as_poly();
      for (const auto& [mono, q] : p.terms()) m.at(target.position(idx, mono), j) = q;
    }
  }
  return m;
}

Poly lcm(const Poly& a, const Poly& b) { return *divide_exact(a * b, gcd(a, b)); }

std::vector<Rational> column(const RationalMatrix& m, std::size_t j) {
  std::vector<Rational> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

}  // namespace

Multivector JetDecomposition::part(int d) const {
  auto it = parts.find(d);
  if (it != parts.end()) return it->second;
  if (parts.empty()) throw UsageError("empty jet decomposition");
  const Multivector& any = parts.begin()->second;
  return Multivector(any.chart(), any.degree());
}

JetDecomposition jet_split(const Multivector& w) {
  const ChartSpec& c = w.chart();
  JetDecomposition jets;
  for (const auto& [idx, coeff] : w.terms()) {
    require_y_polynomial(coeff);
    std::map<int, Poly> by_degree;
    for (const auto& [m, q] : coeff.numerator().terms()) {
      by_degree.try_emplace(fiber_degree(c, m), c).first->second.add_term(m, q);
    }
    for (const auto& [d, num] : by_degree) {
      auto it = jets.parts.try_emplace(d, c, w.degree()).first;
      it->second.add_term(idx, RatFunc(num, coeff.denominator()));
    }
  }
  if (jets.parts.empty()) jets.parts.emplace(0, Multivector(c, w.degree()));
  return jets;
}

Multivector truncate_jet(const Multivector& w, int max_degree) {
  Multivector r(w.chart(), w.degree());
  for (const auto& [d, part] : jet_split(w).parts) {
    if (d <= max_degree) r += part;
  }
  return r;
}

Multivector liouville_field(const ChartSpec& chart) {
  Multivector r(chart, 1);
  for (int k = 0; k < chart.n(); ++k) r.add_term({chart.fiber_var(k)}, RatFunc::variable(chart, chart.fiber_var(k)));
  return r;
}

bool is_fiberwise_linear(const Multivector& w) {
  for (const auto& [idx, coeff] : w.terms()) {
    if (coeff.denominator().depends_on_fiber()) return false;
    for (const auto& [m, q] : coeff.numerator().terms()) {
      if (fiber_degree(w.chart(), m) != 1) return false;
    }
  }
  return true;
}

LieAlgebraSpec::LieAlgebraSpec(int n, const std::vector<Entry>& entries) : n_(n), c_(n > 0 ? sz(n * n * n) : 0) {
  if (n < 1) throw UsageError("Lie algebra dimension must be positive");
  std::vector<bool> set(c_.size(), false);
  for (const auto& e : entries) {
    for (int v : {e.i, e.j, e.k}) {
      if (v < 0 || v >= n) throw UsageError("structure constant index " + std::to_string(v) + " out of range");
    }
    if (e.i == e.j) {
      if (e.value != 0) throw UsageError("structure constants must be antisymmetric");
      continue;
    }
    const std::size_t a = sz((e.i * n + e.j) * n + e.k);
    const std::size_t b = sz((e.j * n + e.i) * n + e.k);
    if ((set[a] && c_[a] != e.value) || (set[b] && c_[b] != -e.value)) {
      throw UsageError("conflicting structure constants");
    }
    c_[a] = e.value;
    c_[b] = -e.value;
    set[a] = set[b] = true;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m) {
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          }
          if (s != 0) throw UsageError("structure constants violate the Jacobi identity");
        }
      }
    }
  }
}

LieAlgebraSpec LieAlgebraSpec::abelian(int n) { return LieAlgebraSpec(n, {}); }

LieAlgebraSpec LieAlgebraSpec::so3() { return LieAlgebraSpec(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}); }

LieAlgebraSpec LieAlgebraSpec::sl2() { return LieAlgebraSpec(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}); }

LieAlgebraSpec LieAlgebraSpec::from_bivector(const Multivector& linear) {
  const ChartSpec& c = linear.chart();
  if (linear.degree() != 2 || !is_vertical(linear)) throw UsageError("expected a vertical bivector");
  std::vector<Entry> entries;
  for (const auto& [idx, coeff] : linear.terms()) {
    if (!coeff.is_polynomial()) throw UsageError("linear part has a denominator: " + to_string(coeff));
    const Poly p = coeff.as_poly();
    for (const auto& [m, q] : p.terms()) {
      if (fiber_degree(c, m) != 1 || m.total_degree() != 1) {
        throw UsageError("linear part must be x-independent and of y-degree 1, got " + to_string(coeff));
      }
      int k = c.leaf_dim();
      while (m.exps[sz(k)] == 0) ++k;
      const Rational value = q / coeff.denominator().constant_term();
      entries.push_back({idx[0] - c.leaf_dim(), idx[1] - c.leaf_dim(), k - c.leaf_dim(), value});
    }
  }
  return LieAlgebraSpec(c.n(), entries);
}

const Rational& LieAlgebraSpec::c(int i, int j, int k) const { return c_.at(sz((i * n_ + j) * n_ + k)); }

std::vector<LieAlgebraSpec::Entry> LieAlgebraSpec::entries() const {
  std::vector<Entry> r;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        if (c(i, j, k) != 0) r.push_back({i, j, k, c(i, j, k)});
      }
    }
  }
  return r;
}

Multivector LieAlgebraSpec::bivector(const ChartSpec& chart) const {
  require_fiber_rank(*this, chart);
  Multivector r(chart, 2);
  for (const auto& e : entries()) {
    r.add_term({chart.fiber_var(e.i), chart.fiber_var(e.j)},
               RatFunc(Poly::variable(chart, chart.fiber_var(e.k)) * e.value));
  }
  return r;
}

RationalMatrix coboundary_matrix(const LieAlgebraSpec& g, int d, int source_grade) {
  return coboundary_on(ChartSpec(1, g.n()), g, d, source_grade);
}

CohomologyReport h1_graded(const LieAlgebraSpec& g, int d) {
  const ChartSpec c(1, g.n());
  const RationalMatrix m0 = coboundary_on(c, g, d, 0);
  const RationalMatrix m1 = coboundary_on(c, g, d, 1);
  CohomologyReport r;
  r.degree = d;
  const auto cocycles = m1.kernel();
  r.dim_cocycles = static_cast<int>(cocycles.size());
  r.dim_coboundaries = static_cast<int>(m0.rank());
  r.dim_h1 = r.dim_cocycles - r.dim_coboundaries;

  // Extend the coboundaries by cocycles, keeping those that raise the rank.
  const CochainBasis fields(c, 1, d);
  std::vector<std::vector<Rational>> span;
  for (std::size_t j = 0; j < m0.cols(); ++j) span.push_back(column(m0, j));
  auto rank_of = [&](const std::vector<std::vector<Rational>>& vs) {
    if (vs.empty()) return std::size_t{0};
    RationalMatrix a(vs.size(), vs.front().size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs[i].size(); ++j) a.at(i, j) = vs[i][j];
    }
    return a.rank();
  };
  std::size_t rank = rank_of(span);
  for (const auto& z : cocycles) {
    span.push_back(z);
    const std::size_t next = rank_of(span);
    if (next == rank) {
      span.pop_back();
      continue;
    }
    rank = next;
    r.basis_witnesses.push_back(fields.combine(z, RatFunc(c, 1)));
  }
  return r;
}

HomologicalSolution solve_homological(const LieAlgebraSpec& g, const Multivector& target, int source_grade) {
  const ChartSpec& c = target.chart();
  require_fiber_rank(g, c);
  if (source_grade != 0 && source_grade != 1) throw UsageError("source grade must be 0 or 1");
  if (target.degree() != source_grade + 1) throw UsageError("target degree does not match the source grade");
  if (!is_vertical(target)) throw UsageError("homological target must be vertical");
  if (target.is_zero()) return {true, Multivector(c, source_grade), std::nullopt};

  const auto jets = jet_split(target);
  if (jets.parts.size() != 1) throw UsageError("homological target must be homogeneous in y");
  const int d = jets.parts.begin()->first;

  Poly common(c, 1);
  for (const auto& [idx, coeff] : target.terms()) common = lcm(common, coeff.denominator());
  const RatFunc inverse_common(Poly(c, 1), common);

  const CochainBasis source(c, source_grade, d);
  const CochainBasis image(c, source_grade + 1, d);
  const RationalMatrix m = coboundary_on(c, g, d, source_grade);

  std::map<std::array<std::uint8_t, kMaxVariables>, std::pair<Monomial, std::vector<Rational>>> blocks;
  for (const auto& [idx, coeff] : target.terms()) {
    const Poly cleared = coeff.numerator() * *divide_exact(common, coeff.denominator());
    for (const auto& [mono, q] : cleared.terms()) {
      const Monomial x = leaf_part(c, mono);
      auto it = blocks.try_emplace(x.exps, x, std::vector<Rational>(image.size())).first;
      it->second.second[image.position(idx, fiber_part(c, mono))] += q;
    }
  }

  Multivector cochain(c, source_grade);
  for (const auto& [key, block] : blocks) {
    const auto& [x, rhs] = block;
    const auto sol = m.solve(rhs);
    if (!sol) {
      if (schouten(g.bivector(c), target).is_zero()) return {false, Multivector(c, source_grade), target};
      throw MalformedTargetError("target is neither a coboundary nor a cocycle");
    }
    cochain += source.combine(*sol, RatFunc(Poly::monomial(c, x, 1)) * inverse_common);
  }
  return {true, cochain, std::nullopt};
}

Multivector pushforward(const Multivector& generator, const Multivector& w, int max_degree) {
  if (generator.degree() != 1 || !is_vertical(generator)) throw UsageError("generator must be a vertical vector field");
  for (const auto& [d, part] : jet_split(generator).parts) {
    if (d < 2 && !part.is_zero()) throw UsageError("generator must have y-degree at least 2");
  }
  Multivector result = truncate_jet(w, max_degree);
  Multivector term = result;
  for (int m = 1; !term.is_zero(); ++m) {
    term = truncate_jet(schouten(generator, term), max_degree).scaled(RatFunc(w.chart(), Rational(1, m)));
    result += term;
  }
  return result;
}

LinearizationResult linearize_vertical(const Multivector& v, int max_degree) {
  const ChartSpec& c = v.chart();
  if (v.degree() != 2 || !is_vertical(v)) throw UsageError("expected a vertical bivector");
  if (max_degree < 1) throw UsageError("max degree must be at least 1");
  const auto jets = jet_split(v);
  if (!jets.part(0).is_zero()) throw UsageError("vertical part must vanish on the leaf");
  const Multivector linear = jets.part(1);
  const LieAlgebraSpec g = linear.is_zero() ? LieAlgebraSpec::abelian(c.n()) : LieAlgebraSpec::from_bivector(linear);

  Multivector current = truncate_jet(v, max_degree);
  if (!truncate_jet(schouten(current, current), max_degree).is_zero()) {
    throw UsageError("vertical bivector is not Poisson up to the requested degree");
  }

  LinearizationResult result{false, 1, {}, current, std::nullopt};
  for (int d = 2; d <= max_degree; ++d) {
    const Multivector w = jet_split(current).part(d);
    if (w.is_zero()) {
      result.achieved_degree = d;
      continue;
    }
    const HomologicalSolution sol = solve_homological(g, w, 1);
    if (!sol.solved) {
      result.transformed = current;
      result.obstruction = Obstruction{d, *sol.obstruction};
      return result;
    }
    current = pushforward(sol.cochain, current, max_degree);
    result.generators.push_back(sol.cochain);
    result.achieved_degree = d;
  }
  result.transformed = current;
  result.success = current == linear;
  return result;
}

ConnectionChange solve_connection_change(const GeometricData& data, const Connection& target, int max_degree) {
  const ChartSpec& c = data.chart();
  require_same_chart(c, target.chart(), "connection change");
  if (!is_fiberwise_linear(data.vert)) throw UsageError("connection change needs a fiberwise linear vertical part");
  const LieAlgebraSpec g = data.vert.is_zero() ? LieAlgebraSpec::abelian(c.n()) : LieAlgebraSpec::from_bivector(data.vert);
  for (int i = 0; i < c.leaf_dim(); ++i) {
    if (!lie_derivative(horizontal_lift(data.conn, i), data.vert).is_zero()) {
      throw UsageError("source connection does not leave the vertical part invariant");
    }
    if (!lie_derivative(horizontal_lift(target, i), data.vert).is_zero()) {
      throw UsageError("target connection does not leave the vertical part invariant");
    }
  }

  ConnectionChange result{true, GaugePotential(c), std::nullopt};
  for (int i = 0; i < c.leaf_dim(); ++i) {
    Multivector diff = data.conn.vertical_component(i) - target.vertical_component(i);
    // [𝒱, φ] = −sharp(𝒱, dφ), so the grade-0 equation is solved against −diff.
    for (const auto& [d, part] : jet_split(-diff).parts) {
      if (part.is_zero()) continue;
      if (d > max_degree) throw UsageError("connection difference exceeds the requested degree");
      const HomologicalSolution sol = solve_homological(g, part, 0);
      if (!sol.solved) {
        result.solved = false;
        result.obstruction = Obstruction{d, *sol.obstruction};
        return result;
      }
      result.phi[i] += sol.cochain.coefficient({});
    }
    if (!(sharp(data.vert, differential(result.phi[i])) == diff)) {
      throw std::logic_error("connection change: solution does not reproduce the difference");
    }
  }
  return result;
}

Connection linearize_connection_part(const Connection& conn) {
  const ChartSpec& c = conn.chart();
  Connection r(c);
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int k = 0; k < c.n(); ++k) {
      const RatFunc& b = conn.beta(i, k);
      require_y_polynomial(b);
      Poly linear(c);
      for (const auto& [m, q] : b.numerator().terms()) {
        if (fiber_degree(c, m) == 1) linear.add_term(m, q);
      }
      r.beta(i, k) = RatFunc(linear, b.denominator());
    }
  }
  return r;
}

SemilocalReport semilocal_linearization(const Multivector& pi, int max_degree) {
  const GeometricData data = extract_geometric_data(pi);
  const ChartSpec& c = data.chart();
  const auto jets = jet_split(data.vert);
  const Multivector linear = jets.part(1);
  const LieAlgebraSpec g = linear.is_zero() ? LieAlgebraSpec::abelian(c.n()) : LieAlgebraSpec::from_bivector(linear);

  SemilocalReport report{check_conditions(data), {}, linearize_vertical(data.vert, max_degree),
                         linearize_connection_part(data.conn), true, false};
  for (int d = 0; d <= max_degree; ++d) report.cohomology.push_back(h1_graded(g, d));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    if (!lie_derivative(horizontal_lift(report.linear_connection, i), linear).is_zero()) {
      report.linear_connection_invariant = false;
    }
  }
  bool h1_trivial = true;
  for (const auto& h : report.cohomology) h1_trivial = h1_trivial && h.dim_h1 == 0;
  report.success = report.conditions.conditions_hold() && h1_trivial && report.vertical.success;
  return report;
}

}  // namespace leafcalc
