#include "leafcalc/poisson_laws.hpp"

#include "leafcalc/error.hpp"
#include "leafcalc/tensor_calc.hpp"

namespace leafcalc {

namespace {

// Strictly increasing k-subsets of {0, ..., m-1}.
void subsets(int m, int k, IndexTuple& current, std::vector<IndexTuple>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  const int start = current.empty() ? 0 : current.back() + 1;
  for (int i = start; i < m; ++i) {
    current.push_back(i);
    subsets(m, k, current, out);
    current.pop_back();
  }
}

std::vector<Multivector> lifts(const Connection& conn) {
  std::vector<Multivector> r;
  for (int i = 0; i < conn.chart().leaf_dim(); ++i) r.push_back(horizontal_lift(conn, i));
  return r;
}

}  // namespace

LeafForm covariant_derivative(const Connection& conn, const LeafForm& form) {
  require_same_chart(conn.chart(), form.chart(), "covariant derivative");
  const ChartSpec& c = conn.chart();
  const int k = form.degree();
  LeafForm r(c, k + 1);
  if (k + 1 > c.leaf_dim()) return r;
  const auto x = lifts(conn);
  std::vector<IndexTuple> tuples;
  IndexTuple scratch;
  subsets(c.leaf_dim(), k + 1, scratch, tuples);
  for (const auto& idx : tuples) {
    RatFunc total(c);
    for (int m = 0; m <= k; ++m) {
      IndexTuple rest;
      for (int t = 0; t <= k; ++t) {
        if (t != m) rest.push_back(idx[static_cast<std::size_t>(t)]);
      }
      const RatFunc value = form.coefficient(rest);
      if (value.is_zero()) continue;
      const RatFunc term = apply(x[static_cast<std::size_t>(idx[static_cast<std::size_t>(m)])], value);
      if (m % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    r.add_term(idx, total);
  }
  return r;
}

Multivector curvature(const Connection& conn, int i, int j) {
  const ChartSpec& c = conn.chart();
  if (!c.is_leaf(i) || !c.is_leaf(j) || i == j) throw UsageError("curvature needs two distinct leaf indices");
  const Multivector xi = horizontal_lift(conn, i);
  const Multivector xj = horizontal_lift(conn, j);
  Multivector r(c, 1);
  for (int k = 0; k < c.n(); ++k) r.add_term({c.fiber_var(k)}, apply(xi, conn.beta(j, k)) - apply(xj, conn.beta(i, k)));
  return r;
}

Multivector curvature_target(const GeometricData& data, int i, int j) {
  return -sharp(data.vert, differential(data.leaf_form.coefficient({i, j})));
}

bool PoissonReport::conditions_hold() const {
  if (!cond_i || !cond_iii) return false;
  for (bool b : cond_ii) {
    if (!b) return false;
  }
  for (const auto& [ij, b] : cond_iv) {
    if (!b) return false;
  }
  return true;
}

PoissonReport check_conditions(const GeometricData& data) {
  const ChartSpec& c = data.chart();
  PoissonReport report;

  const Multivector vv = schouten(data.vert, data.vert);
  report.cond_i = vv.is_zero();
  if (!report.cond_i) report.residuals.push_back({"i", {}, vv});

  for (int i = 0; i < c.leaf_dim(); ++i) {
    const Multivector lie = lie_derivative(horizontal_lift(data.conn, i), data.vert);
    report.cond_ii.push_back(lie.is_zero());
    if (!lie.is_zero()) report.residuals.push_back({"ii", {i}, lie});
  }

  const LeafForm dF = covariant_derivative(data.conn, data.leaf_form);
  report.cond_iii = dF.is_zero();
  if (!report.cond_iii) report.residuals.push_back({"iii", {}, dF});

  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = i + 1; j < c.leaf_dim(); ++j) {
      const Multivector diff = curvature(data.conn, i, j) - curvature_target(data, i, j);
      report.cond_iv[{i, j}] = diff.is_zero();
      if (!diff.is_zero()) report.residuals.push_back({"iv", {i, j}, diff});
    }
  }

  const Multivector pi = reconstruct(data);
  const Multivector pp = schouten(pi, pi);
  report.oracle = pp.is_zero();
  if (!report.oracle) report.residuals.push_back({"oracle", {}, pp});
  return report;
}

SplittingReport check_splitting(const GeometricData& data) {
  if (!check_conditions(data).conditions_hold()) {
    throw UsageError("splitting test needs data satisfying all four coupling conditions");
  }
  const ChartSpec& c = data.chart();
  SplittingReport r;
  r.flat = true;
  for (int i = 0; i < c.leaf_dim() && r.flat; ++i) {
    for (int j = i + 1; j < c.leaf_dim(); ++j) {
      if (!curvature(data.conn, i, j).is_zero()) {
        r.flat = false;
        break;
      }
    }
  }
  const Multivector ph = reconstruct(data) - data.vert;
  r.horizontal_poisson = schouten(ph, ph).is_zero();
  return r;
}

}  // namespace leafcalc
