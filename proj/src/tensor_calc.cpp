#include "leafcalc/tensor_calc.hpp"

#include "leafcalc/error.hpp"

namespace leafcalc {

namespace {

template <class Tensor>
Tensor wedge_impl(const Tensor& a, const Tensor& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  const int degree = a.degree() + b.degree();
  Tensor r(a.chart(), degree);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  }
  return r;
}

Multivector basis(const ChartSpec& chart, const IndexTuple& idx, const RatFunc& c) {
  return Multivector::basis(chart, idx, c);
}

IndexTuple tail(const IndexTuple& idx) { return IndexTuple(idx.begin() + 1, idx.end()); }

// [g, ∂_I] for |I| >= 1, degree |I| - 1:
//   [g, ∂_i] = −∂_i g
//   [g, ∂_i ∧ ∂_I'] = [g, ∂_i] ∧ ∂_I' − ∂_i ∧ [g, ∂_I']
Multivector bracket_function_basis(const RatFunc& g, const IndexTuple& idx) {
  const ChartSpec& chart = g.chart();
  const int i = idx.front();
  const IndexTuple rest = tail(idx);
  Multivector r = basis(chart, rest, -g.derivative(i));
  if (!rest.empty()) r -= wedge(basis(chart, {i}, RatFunc(chart, 1)), bracket_function_basis(g, rest));
  return r;
}

// [f ∂_I, ∂_J] for |J| >= 1, degree |I| + |J| − 1:
//   [A, ∂_j] = −(∂_j f) ∂_I
//   [A, ∂_j ∧ ∂_J'] = [A, ∂_j] ∧ ∂_J' + (−1)^{a−1} ∂_j ∧ [A, ∂_J']
Multivector bracket_term_basis(const RatFunc& f, const IndexTuple& left, const IndexTuple& right) {
  const ChartSpec& chart = f.chart();
  const int a = static_cast<int>(left.size());
  const int j = right.front();
  const IndexTuple rest = tail(right);
  Multivector head = basis(chart, left, -f.derivative(j));
  if (rest.empty()) return head;
  Multivector r = wedge(head, basis(chart, rest, RatFunc(chart, 1)));
  Multivector inner = wedge(basis(chart, {j}, RatFunc(chart, 1)), bracket_term_basis(f, left, rest));
  if ((a - 1) % 2 == 0) {
    r += inner;
  } else {
    r -= inner;
  }
  return r;
}

// [f ∂_I, g ∂_J] = [f ∂_I, g] ∧ ∂_J + g [f ∂_I, ∂_J],  [f ∂_I, g] = (−1)^a f [g, ∂_I].
Multivector bracket_terms(const RatFunc& f, const IndexTuple& left, const RatFunc& g, const IndexTuple& right) {
  const ChartSpec& chart = f.chart();
  const int a = static_cast<int>(left.size());
  const int b = static_cast<int>(right.size());
  Multivector r(chart, std::max(a + b - 1, 0));
  if (a + b == 0) return r;
  if (a > 0) {
    Multivector with_g = bracket_function_basis(g, left).scaled(a % 2 == 0 ? f : -f);
    r += wedge(with_g, basis(chart, right, RatFunc(chart, 1)));
  }
  if (b > 0) r += bracket_term_basis(f, left, right).scaled(g);
  return r;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) { return wedge_impl(a, b); }
LeafForm wedge(const LeafForm& a, const LeafForm& b) { return wedge_impl(a, b); }

Multivector sharp(const Multivector& bivector, const Covector& alpha) {
  require_same_chart(bivector.chart(), alpha.chart(), "sharp");
  if (bivector.degree() != 2) throw UsageError("sharp: expected a bivector");
  Multivector r(bivector.chart(), 1);
  for (const auto& [idx, c] : bivector.terms()) {
    const int p = idx[0];
    const int q = idx[1];
    if (!alpha[p].is_zero()) r.add_term({q}, c * alpha[p]);
    if (!alpha[q].is_zero()) r.add_term({p}, -(c * alpha[q]));
  }
  return r;
}

RatFunc contract(const Multivector& bivector, const Covector& alpha, const Covector& beta) {
  const Covector pair[] = {alpha, beta};
  return evaluate(bivector, pair);
}

namespace {

RatFunc determinant_pairing(const IndexTuple& idx, std::span<const Covector> covectors) {
  const std::size_t k = idx.size();
  const ChartSpec& chart = covectors.front().chart();
  if (k == 1) return covectors[0][idx[0]];
  // Laplace expansion along the first covector.
  RatFunc total(chart);
  for (std::size_t col = 0; col < k; ++col) {
    const RatFunc& entry = covectors[0][idx[col]];
    if (entry.is_zero()) continue;
    IndexTuple minor;
    for (std::size_t c = 0; c < k; ++c) {
      if (c != col) minor.push_back(idx[c]);
    }
    RatFunc sub = entry * determinant_pairing(minor, covectors.subspan(1));
    if (col % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  return total;
}

}  // namespace

RatFunc evaluate(const Multivector& w, std::span<const Covector> covectors) {
  if (static_cast<int>(covectors.size()) != w.degree()) {
    throw UsageError("evaluate: need exactly one covector per degree");
  }
  for (const auto& c : covectors) require_same_chart(w.chart(), c.chart(), "evaluate");
  RatFunc total(w.chart());
  for (const auto& [idx, c] : w.terms()) {
    total += idx.empty() ? c : c * determinant_pairing(idx, covectors);
  }
  return total;
}

Covector differential(const RatFunc& f) {
  Covector d(f.chart());
  for (int v = 0; v < f.chart().num_vars(); ++v) {
    if (f.depends_on(v)) d[v] = f.derivative(v);
  }
  return d;
}

RatFunc apply(const Multivector& field, const RatFunc& f) {
  if (field.degree() != 1) throw UsageError("apply: expected a vector field");
  require_same_chart(field.chart(), f.chart(), "apply");
  RatFunc r(f.chart());
  for (const auto& [idx, c] : field.terms()) {
    if (f.depends_on(idx[0])) r += c * f.derivative(idx[0]);
  }
  return r;
}

Multivector schouten(const Multivector& a, const Multivector& b) {
  require_same_chart(a.chart(), b.chart(), "schouten");
  Multivector r(a.chart(), std::max(a.degree() + b.degree() - 1, 0));
  if (a.degree() + b.degree() == 0) return r;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) r += bracket_terms(ca, ia, cb, ib);
  }
  return r;
}

Multivector lie_derivative(const Multivector& field, const Multivector& w) {
  if (field.degree() != 1) throw UsageError("lie_derivative: expected a vector field");
  return schouten(field, w);
}

}  // namespace leafcalc
