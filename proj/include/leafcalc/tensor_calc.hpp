#pragma once

#include <span>

#include "leafcalc/multivector.hpp"

namespace leafcalc {

/// a ∧ b, with the Koszul sign of sorting the concatenated indices.
Multivector wedge(const Multivector& a, const Multivector& b);
LeafForm wedge(const LeafForm& a, const LeafForm& b);

/// Contraction of a bivector with a covector in its first slot:
/// sharp(∂a∧∂b, α) = α(∂a)∂b − α(∂b)∂a.
Multivector sharp(const Multivector& bivector, const Covector& alpha);

/// W(α, β) for a bivector W; equals ⟨sharp(W, α), β⟩.
RatFunc contract(const Multivector& bivector, const Covector& alpha, const Covector& beta);

/// Full evaluation of a k-vector on k covectors (determinant pairing).
RatFunc evaluate(const Multivector& w, std::span<const Covector> covectors);

/// df as a covector.
Covector differential(const RatFunc& f);

/// X(f) for a vector field X.
RatFunc apply(const Multivector& field, const RatFunc& f);

/// Schouten–Nijenhuis bracket, computed by expanding decomposable terms with
/// the graded Leibniz rule
///   [A, B∧C] = [A,B]∧C + (−1)^{(a−1)b} B∧[A,C]
/// and graded antisymmetry, from [X, f] = X(f) and [∂_i, ∂_j] = 0.
/// The bracket of two functions is 0 and is returned as the zero function.
Multivector schouten(const Multivector& a, const Multivector& b);

/// L_X w = [X, w].
Multivector lie_derivative(const Multivector& field, const Multivector& w);

}  // namespace leafcalc
