#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "leafcalc/coupling.hpp"

namespace leafcalc {

/// (∂_Γ ω)_{i0..ik} = Σ_m (−1)^m X_{i_m}(ω_{i0..î_m..ik}), X = horizontal lifts of
/// the coordinate fields (which commute, so the bracket terms drop out).
LeafForm covariant_derivative(const Connection& conn, const LeafForm& form);

/// Curv(∂x_i, ∂x_j) = [X_i, X_j] = Σ_k (X_i(β_jk) − X_j(β_ik)) ∂y_k.
Multivector curvature(const Connection& conn, int i, int j);

/// Right-hand side of the curvature identity for the leaf pair (i, j):
/// the Hamiltonian field of ℱ_ij for 𝒱 with the contraction taken in the
/// second slot, −sharp(𝒱, dℱ_ij). This orientation is the one under which the
/// four conditions are equivalent to [Π, Π] = 0 for Π = reconstruct(data).
Multivector curvature_target(const GeometricData& data, int i, int j);

/// A failed check: which condition, the leaf indices involved, and the
/// nonzero tensor witnessing the failure.
struct Residual {
  std::string condition;  // "i", "ii", "iii", "iv" or "oracle"
  std::vector<int> indices;
  std::variant<Multivector, LeafForm> value;
};

/// Outcome of the four coupling conditions
///   (i)   [𝒱, 𝒱] = 0
///   (ii)  L_{hor(∂x_i)} 𝒱 = 0 for every leaf index i
///   (iii) ∂_Γ ℱ = 0
///   (iv)  Curv(∂x_i, ∂x_j) = curvature_target(i, j) for every i < j
/// together with the brute-force check [Π, Π] = 0.
struct PoissonReport {
  bool cond_i = false;
  std::vector<bool> cond_ii;
  bool cond_iii = false;
  std::map<std::pair<int, int>, bool> cond_iv;
  bool oracle = false;
  std::vector<Residual> residuals;

  bool conditions_hold() const;
  /// The four conditions agree with the Schouten oracle.
  bool consistent() const { return conditions_hold() == oracle; }
};

PoissonReport check_conditions(const GeometricData& data);

struct SplittingReport {
  bool flat = false;
  bool horizontal_poisson = false;
};

/// Flatness of Γ against [Π_H, Π_H] = 0. Throws UsageError unless the data
/// satisfy all four conditions.
SplittingReport check_splitting(const GeometricData& data);

}  // namespace leafcalc
