#pragma once

#include <vector>

#include "leafcalc/matrix.hpp"
#include "leafcalc/multivector.hpp"

namespace leafcalc {

/// Ehresmann connection on the chart, stored through the coefficients of the
/// horizontal lifts: hor(∂x_i) = ∂x_i + Σ_k beta(i, k) ∂y_k.
/// Γ(∂x_i) = −Σ_k beta(i, k) ∂y_k and Γ is the identity on vertical fields.
class Connection {
 public:
  /// The trivial (flat, zero) connection.
  explicit Connection(ChartSpec chart);

  const ChartSpec& chart() const noexcept { return chart_; }
  RatFunc& beta(int i, int k);
  const RatFunc& beta(int i, int k) const;

  /// Σ_k beta(i, k) ∂y_k.
  Multivector vertical_component(int i) const;
  bool is_zero() const;

  friend bool operator==(const Connection& a, const Connection& b);

 private:
  ChartSpec chart_;
  std::vector<RatFunc> beta_;  // row-major 2s × n
};

/// (Γ, 𝒱, ℱ): connection, vertical bivector and leaf 2-form with
/// leaf_form.coefficient({i, j}) = ℱ(∂x_i, ∂x_j).
struct GeometricData {
  Connection conn;
  Multivector vert;
  LeafForm leaf_form;

  explicit GeometricData(ChartSpec chart) : conn(chart), vert(chart, 2), leaf_form(chart, 2) {}
  GeometricData(Connection c, Multivector v, LeafForm f);

  const ChartSpec& chart() const noexcept { return conn.chart(); }

  friend bool operator==(const GeometricData& a, const GeometricData& b) {
    return a.conn == b.conn && a.vert == b.vert && a.leaf_form == b.leaf_form;
  }
};

/// Blocks of a bivector in the antisymmetric double-sum convention
///   Π = Σ Π^X_ij ∂x_i∧∂x_j + Σ 2Π^XY_ik ∂x_i∧∂y_k + Σ Π^Y_kl ∂y_k∧∂y_l,
/// so each block entry is half of the canonical coefficient.
RatFuncMatrix leaf_block(const Multivector& pi);
RatFuncMatrix mixed_block(const Multivector& pi);
RatFuncMatrix fiber_block(const Multivector& pi);

/// Full antisymmetric 2s × 2s matrix of ℱ(∂x_i, ∂x_j).
RatFuncMatrix leaf_form_matrix(const LeafForm& form);

/// det(Π^X) ≠ 0 as a rational function.
bool is_horizontally_nondegenerate(const Multivector& pi);

/// β = (Π^X)⁻¹Π^XY, 𝒱 = Π^Y − β^T Π^XY (antisymmetrized), ℱ = −½(Π^X)⁻¹.
/// Throws HorizontalDegeneracyError when Π^X is singular.
GeometricData extract_geometric_data(const Multivector& pi);

/// Π_H + 𝒱 with Π_H = Σ Π^X_ij X_i∧X_j, Π^X = −½ℱ⁻¹ and X_i = hor(∂x_i).
/// Throws DataDegeneracyError when ℱ is singular.
Multivector reconstruct(const GeometricData& data);

/// Π_H of the decomposition Π = Π_H + 𝒱.
Multivector horizontal_part(const Multivector& pi);
/// 𝒱 of the decomposition Π = Π_H + 𝒱.
Multivector vertical_part(const Multivector& pi);

/// ∂x_i + Σ_k β_ik ∂y_k.
Multivector horizontal_lift(const Connection& conn, int i);

}  // namespace leafcalc
