#include "leafcalc/gauge.hpp"

#include "leafcalc/error.hpp"
#include "leafcalc/poisson_laws.hpp"
#include "leafcalc/tensor_calc.hpp"

namespace leafcalc {

GaugePotential::GaugePotential(ChartSpec chart, std::vector<RatFunc> phi) : chart_(chart), phi_(std::move(phi)) {
  if (static_cast<int>(phi_.size()) != chart.leaf_dim()) {
    throw UsageError("gauge potential needs " + std::to_string(chart.leaf_dim()) + " components, got " +
                     std::to_string(phi_.size()));
  }
  for (const auto& f : phi_) require_same_chart(chart_, f.chart(), "gauge potential");
}

bool GaugePotential::is_zero() const {
  for (const auto& f : phi_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

LeafForm GaugePotential::as_form() const {
  LeafForm r(chart_, 1);
  for (int i = 0; i < chart_.leaf_dim(); ++i) r.add_term({i}, (*this)[i]);
  return r;
}

Multivector vertical_hamiltonian_lift(const Multivector& vert, const GaugePotential& phi, int i) {
  require_same_chart(vert.chart(), phi.chart(), "vertical hamiltonian lift");
  return sharp(vert, differential(phi[i]));
}

LeafForm vertical_pairing(const Multivector& vert, const GaugePotential& phi1, const GaugePotential& phi2) {
  require_same_chart(vert.chart(), phi1.chart(), "vertical pairing");
  require_same_chart(vert.chart(), phi2.chart(), "vertical pairing");
  const ChartSpec& c = vert.chart();
  std::vector<Covector> d1;
  std::vector<Covector> d2;
  for (int i = 0; i < c.leaf_dim(); ++i) {
    d1.push_back(differential(phi1[i]));
    d2.push_back(differential(phi2[i]));
  }
  LeafForm r(c, 2);
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = i + 1; j < c.leaf_dim(); ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      r.add_term({i, j}, contract(vert, d1[ui], d2[uj]) - contract(vert, d1[uj], d2[ui]));
    }
  }
  return r;
}

GeometricData apply_gauge(const GeometricData& data, const GaugePotential& phi) {
  require_same_chart(data.chart(), phi.chart(), "gauge");
  const ChartSpec& c = data.chart();
  GeometricData out = data;
  for (int i = 0; i < c.leaf_dim(); ++i) {
    const Multivector shift = vertical_hamiltonian_lift(data.vert, phi, i);
    for (int k = 0; k < c.n(); ++k) out.conn.beta(i, k) -= component(shift, c.fiber_var(k));
  }
  const LeafForm half_pairing = vertical_pairing(data.vert, phi, phi).scaled(RatFunc(c, Rational(-1, 2)));
  out.leaf_form += covariant_derivative(data.conn, phi.as_form()) + half_pairing;
  if (leaf_form_matrix(out.leaf_form).determinant().is_zero()) {
    throw DataDegeneracyError("gauge transformation makes the leaf 2-form singular");
  }
  return out;
}

bool check_gauge_hypotheses(const GeometricData& data, const GeometricData& data2, const GaugePotential& phi) {
  require_same_chart(data.chart(), data2.chart(), "gauge hypotheses");
  if (!(data.vert == data2.vert)) return false;
  const ChartSpec& c = data.chart();
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = i + 1; j < c.leaf_dim(); ++j) {
      const RatFunc a = data.leaf_form.coefficient({i, j}).evaluate_on_leaf();
      const RatFunc b = data2.leaf_form.coefficient({i, j}).evaluate_on_leaf();
      if (!(a == b)) return false;
    }
  }
  try {
    return apply_gauge(data, phi) == data2;
  } catch (const DataDegeneracyError&) {
    return false;
  }
}

}  // namespace leafcalc
