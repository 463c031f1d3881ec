#pragma once

#include <vector>

#include "leafcalc/coupling.hpp"

namespace leafcalc {

/// A leaf 1-form with values in functions on the chart: φ_i = φ(∂x_i).
class GaugePotential {
 public:
  explicit GaugePotential(ChartSpec chart) : chart_(chart), phi_(static_cast<std::size_t>(chart.leaf_dim()), RatFunc(chart)) {}
  GaugePotential(ChartSpec chart, std::vector<RatFunc> phi);

  const ChartSpec& chart() const noexcept { return chart_; }
  const RatFunc& operator[](int i) const { return phi_.at(static_cast<std::size_t>(i)); }
  RatFunc& operator[](int i) { return phi_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  /// The same potential as a degree-1 leaf form.
  LeafForm as_form() const;

  friend bool operator==(const GaugePotential& a, const GaugePotential& b) {
    return a.chart_ == b.chart_ && a.phi_ == b.phi_;
  }

 private:
  ChartSpec chart_;
  std::vector<RatFunc> phi_;
};

/// sharp(𝒱, dφ_i): the Hamiltonian field of φ_i for the vertical bivector.
Multivector vertical_hamiltonian_lift(const Multivector& vert, const GaugePotential& phi, int i);

/// ({φ1, φ2}_𝒱)_ij = 𝒱(dφ1_i, dφ2_j) − 𝒱(dφ1_j, dφ2_i).
LeafForm vertical_pairing(const Multivector& vert, const GaugePotential& phi1, const GaugePotential& phi2);

/// Gauge transformation with fixed vertical part:
///   β'_i = β_i − sharp(𝒱, dφ_i)
///   ℱ'_ij = ℱ_ij + X_i(φ_j) − X_j(φ_i) − 𝒱(dφ_i, dφ_j)
/// Both corrections use the orientation of 𝒱 fixed by curvature_target.
/// Throws DataDegeneracyError when ℱ' is singular.
GeometricData apply_gauge(const GeometricData& data, const GaugePotential& phi);

/// Same vertical part, same leaf restriction of ℱ, and data2 = apply_gauge(data, phi).
bool check_gauge_hypotheses(const GeometricData& data, const GeometricData& data2, const GaugePotential& phi);

}  // namespace leafcalc
