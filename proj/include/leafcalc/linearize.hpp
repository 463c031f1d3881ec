#pragma once

#include <map>
#include <optional>
#include <vector>

#include "leafcalc/gauge.hpp"
#include "leafcalc/matrix.hpp"
#include "leafcalc/poisson_laws.hpp"

namespace leafcalc {

/// Splitting of a multivector by homogeneous degree in the fiber variables.
/// Coefficients may carry denominators in x only.
struct JetDecomposition {
  std::map<int, Multivector> parts;

  /// The degree-d part, or the zero multivector when absent.
  Multivector part(int d) const;
};

/// Throws NonPolynomialJetError when a fiber variable occurs in a denominator.
JetDecomposition jet_split(const Multivector& w);

/// Drops every term of y-degree above max_degree.
Multivector truncate_jet(const Multivector& w, int max_degree);

/// L = Σ y_k ∂y_k.
Multivector liouville_field(const ChartSpec& chart);

/// Every coefficient is homogeneous of degree 1 in y.
bool is_fiberwise_linear(const Multivector& w);

/// Structure constants c^k_ij of an n-dimensional Lie algebra, [e_i, e_j] = Σ_k c^k_ij e_k.
class LieAlgebraSpec {
 public:
  struct Entry {
    int i;
    int j;
    int k;
    Rational value;
  };

  /// Entries are 0-based; (i, j) entries are mirrored to (j, i) with the
  /// opposite sign. Throws UsageError on out-of-range indices, on a
  /// conflicting mirrored entry, or when the Jacobi identity fails.
  LieAlgebraSpec(int n, const std::vector<Entry>& entries);

  static LieAlgebraSpec abelian(int n);
  /// [e1, e2] = e3 and cyclic.
  static LieAlgebraSpec so3();
  /// Basis (h, e, f): [h, e] = 2e, [h, f] = −2f, [e, f] = h.
  static LieAlgebraSpec sl2();
  /// Reads c^k_ij off a fiberwise linear, x-independent vertical bivector.
  static LieAlgebraSpec from_bivector(const Multivector& linear);

  int n() const noexcept { return n_; }
  const Rational& c(int i, int j, int k) const;
  /// Nonzero c^k_ij with i < j.
  std::vector<Entry> entries() const;

  /// Σ_{i<j} (Σ_k c^k_ij y_k) ∂y_i∧∂y_j over a chart with fiber rank n.
  Multivector bivector(const ChartSpec& chart) const;

 private:
  int n_;
  std::vector<Rational> c_;
};

/// Matrix of δ = [𝒱^(1), ·] on y-homogeneous cochains of degree d.
/// source_grade 0: functions → vertical vector fields;
/// source_grade 1: vertical vector fields → vertical bivectors.
/// Columns follow the monomial basis of the source, rows that of the target.
RationalMatrix coboundary_matrix(const LieAlgebraSpec& g, int d, int source_grade);

struct CohomologyReport {
  int degree = 0;
  int dim_cocycles = 0;
  int dim_coboundaries = 0;
  int dim_h1 = 0;
  /// Vertical vector fields spanning a complement of the coboundaries inside the cocycles.
  std::vector<Multivector> basis_witnesses;
};

CohomologyReport h1_graded(const LieAlgebraSpec& g, int d);

struct HomologicalSolution {
  bool solved = false;
  /// c with [𝒱^(1), c] = target when solved.
  Multivector cochain;
  /// The target itself when it is a cocycle outside the image.
  std::optional<Multivector> obstruction;
};

/// Solves [𝒱^(1), c] = target for a y-homogeneous vertical target of degree
/// source_grade + 1, one x-monomial at a time. Throws MalformedTargetError when
/// the target is neither in the image nor a cocycle.
HomologicalSolution solve_homological(const LieAlgebraSpec& g, const Multivector& target, int source_grade);

/// exp(ad_Z) w = Σ_m ad_Z^m(w)/m!, dropping y-degrees above max_degree.
/// Z must be vertical with every term of y-degree at least 2.
Multivector pushforward(const Multivector& generator, const Multivector& w, int max_degree);

struct Obstruction {
  int degree = 0;
  Multivector cocycle;
};

struct LinearizationResult {
  bool success = false;
  int achieved_degree = 0;
  std::vector<Multivector> generators;
  Multivector transformed;
  std::optional<Obstruction> obstruction;
};

/// Removes the y-degree 2..D parts of a Poisson vertical bivector by successive
/// pushforwards along homogeneous generators. The input must have no degree-0
/// part, an x-independent degree-1 part, and vanish under [v, v] up to degree D.
LinearizationResult linearize_vertical(const Multivector& v, int max_degree);

struct ConnectionChange {
  bool solved = false;
  GaugePotential phi;
  std::optional<Obstruction> obstruction;
};

/// φ with sharp(𝒱, dφ_i) = Σ_k (β_ik − target_ik) ∂y_k for every i, so that
/// apply_gauge(data, φ) has connection target. 𝒱 must be fiberwise linear
/// and x-independent, and both connections must leave 𝒱 invariant
/// (otherwise UsageError).
ConnectionChange solve_connection_change(const GeometricData& data, const Connection& target, int max_degree);

/// Keeps the y-degree 1 part of every β_ik.
Connection linearize_connection_part(const Connection& conn);

/// Chart-level run of the linearization pipeline on a bivector.
struct SemilocalReport {
  PoissonReport conditions;
  std::vector<CohomologyReport> cohomology;  // degrees 0..D
  LinearizationResult vertical;
  Connection linear_connection;
  bool linear_connection_invariant = false;  // Γ^(1) leaves 𝒱^(1) invariant
  bool success = false;
};

SemilocalReport semilocal_linearization(const Multivector& pi, int max_degree);

}  // namespace leafcalc
