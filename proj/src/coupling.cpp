#include "leafcalc/coupling.hpp"

#include "leafcalc/error.hpp"
#include "leafcalc/tensor_calc.hpp"

namespace leafcalc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void check_leaf_index(const ChartSpec& chart, int i) {
  if (!chart.is_leaf(i)) throw UsageError("leaf index " + std::to_string(i) + " out of range");
}

void check_entry(const ChartSpec& chart, int i, int k) {
  check_leaf_index(chart, i);
  if (k < 0 || k >= chart.n()) throw UsageError("fiber index " + std::to_string(k) + " out of range");
}

RatFunc half(ChartSpec c) { return RatFunc(c, Rational(1, 2)); }

// Π_H from Π^X and β, without touching any inverse.
Multivector assemble_horizontal(const RatFuncMatrix& pix, const Connection& conn) {
  const ChartSpec& c = conn.chart();
  std::vector<Multivector> lifts;
  for (int i = 0; i < c.leaf_dim(); ++i) lifts.push_back(horizontal_lift(conn, i));
  Multivector r(c, 2);
  const RatFunc two(c, 2);
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = i + 1; j < c.leaf_dim(); ++j) {
      const RatFunc& p = pix.at(sz(i), sz(j));
      if (p.is_zero()) continue;
      r += wedge(lifts[sz(i)], lifts[sz(j)]).scaled(two * p);
    }
  }
  return r;
}

RatFuncMatrix inverse_leaf_block(const Multivector& pi) {
  auto inv = leaf_block(pi).inverse();
  if (!inv) throw HorizontalDegeneracyError("leaf-leaf block of the bivector is singular");
  return *std::move(inv);
}

}  // namespace

Connection::Connection(ChartSpec chart) : chart_(chart), beta_(sz(chart.leaf_dim() * chart.n()), RatFunc(chart)) {}

RatFunc& Connection::beta(int i, int k) {
  check_entry(chart_, i, k);
  return beta_.at(sz(i * chart_.n() + k));
}

const RatFunc& Connection::beta(int i, int k) const {
  check_entry(chart_, i, k);
  return beta_.at(sz(i * chart_.n() + k));
}

Multivector Connection::vertical_component(int i) const {
  Multivector r(chart_, 1);
  for (int k = 0; k < chart_.n(); ++k) r.add_term({chart_.fiber_var(k)}, beta(i, k));
  return r;
}

bool Connection::is_zero() const {
  for (const auto& b : beta_) {
    if (!b.is_zero()) return false;
  }
  return true;
}

bool operator==(const Connection& a, const Connection& b) { return a.chart_ == b.chart_ && a.beta_ == b.beta_; }

GeometricData::GeometricData(Connection c, Multivector v, LeafForm f)
    : conn(std::move(c)), vert(std::move(v)), leaf_form(std::move(f)) {
  require_same_chart(conn.chart(), vert.chart(), "geometric data");
  require_same_chart(conn.chart(), leaf_form.chart(), "geometric data");
  if (vert.degree() != 2 || !is_vertical(vert)) throw UsageError("vertical part must be a vertical bivector");
  if (leaf_form.degree() != 2) throw UsageError("leaf form must have degree 2");
}

RatFuncMatrix leaf_block(const Multivector& pi) {
  const ChartSpec& c = pi.chart();
  RatFuncMatrix m(c, sz(c.leaf_dim()), sz(c.leaf_dim()));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = 0; j < c.leaf_dim(); ++j) {
      if (i != j) m.at(sz(i), sz(j)) = pi.coefficient({i, j}) * half(c);
    }
  }
  return m;
}

RatFuncMatrix mixed_block(const Multivector& pi) {
  const ChartSpec& c = pi.chart();
  RatFuncMatrix m(c, sz(c.leaf_dim()), sz(c.n()));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int k = 0; k < c.n(); ++k) m.at(sz(i), sz(k)) = pi.coefficient({i, c.fiber_var(k)}) * half(c);
  }
  return m;
}

RatFuncMatrix fiber_block(const Multivector& pi) {
  const ChartSpec& c = pi.chart();
  RatFuncMatrix m(c, sz(c.n()), sz(c.n()));
  for (int k = 0; k < c.n(); ++k) {
    for (int l = 0; l < c.n(); ++l) {
      if (k != l) m.at(sz(k), sz(l)) = pi.coefficient({c.fiber_var(k), c.fiber_var(l)}) * half(c);
    }
  }
  return m;
}

RatFuncMatrix leaf_form_matrix(const LeafForm& form) {
  const ChartSpec& c = form.chart();
  RatFuncMatrix m(c, sz(c.leaf_dim()), sz(c.leaf_dim()));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = 0; j < c.leaf_dim(); ++j) {
      if (i != j) m.at(sz(i), sz(j)) = form.coefficient({i, j});
    }
  }
  return m;
}

bool is_horizontally_nondegenerate(const Multivector& pi) {
  if (pi.degree() != 2) throw UsageError("expected a bivector");
  return !leaf_block(pi).determinant().is_zero();
}

GeometricData extract_geometric_data(const Multivector& pi) {
  if (pi.degree() != 2) throw UsageError("expected a bivector");
  const ChartSpec& c = pi.chart();
  const RatFuncMatrix inv = inverse_leaf_block(pi);
  const RatFuncMatrix pxy = mixed_block(pi);
  const RatFuncMatrix pyy = fiber_block(pi);
  const RatFuncMatrix beta = inv * pxy;

  GeometricData data(c);
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int k = 0; k < c.n(); ++k) data.conn.beta(i, k) = beta.at(sz(i), sz(k));
  }
  // 𝒱_pq = Π^Y_pq − ½ Σ_l (β_lp Π^XY_lq − β_lq Π^XY_lp); canonical coefficient is 2𝒱_pq.
  const RatFuncMatrix btp = beta.transpose() * pxy;
  for (int p = 0; p < c.n(); ++p) {
    for (int q = p + 1; q < c.n(); ++q) {
      const RatFunc v = pyy.at(sz(p), sz(q)) * RatFunc(c, 2) - (btp.at(sz(p), sz(q)) - btp.at(sz(q), sz(p)));
      data.vert.add_term({c.fiber_var(p), c.fiber_var(q)}, v);
    }
  }
  const RatFunc minus_half(c, Rational(-1, 2));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = i + 1; j < c.leaf_dim(); ++j) data.leaf_form.add_term({i, j}, inv.at(sz(i), sz(j)) * minus_half);
  }
  return data;
}

Multivector reconstruct(const GeometricData& data) {
  const ChartSpec& c = data.chart();
  auto finv = leaf_form_matrix(data.leaf_form).inverse();
  if (!finv) throw DataDegeneracyError("leaf 2-form of the geometric data is singular");
  RatFuncMatrix pix(c, sz(c.leaf_dim()), sz(c.leaf_dim()));
  const RatFunc minus_half(c, Rational(-1, 2));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = 0; j < c.leaf_dim(); ++j) pix.at(sz(i), sz(j)) = finv->at(sz(i), sz(j)) * minus_half;
  }
  return assemble_horizontal(pix, data.conn) + data.vert;
}

Multivector horizontal_part(const Multivector& pi) {
  const GeometricData data = extract_geometric_data(pi);
  return assemble_horizontal(leaf_block(pi), data.conn);
}

Multivector vertical_part(const Multivector& pi) { return extract_geometric_data(pi).vert; }

Multivector horizontal_lift(const Connection& conn, int i) {
  check_leaf_index(conn.chart(), i);
  Multivector r = conn.vertical_component(i);
  r.add_term({i}, RatFunc(conn.chart(), 1));
  return r;
}

}  // namespace leafcalc
