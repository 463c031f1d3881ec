#pragma once

// Shared helpers for the test suites: short constructors, seeded generators and
// independent oracles that never route through the code they check.

#include <random>
#include <string>
#include <vector>

#include "leafcalc/coupling.hpp"
#include "leafcalc/multivector.hpp"
#include "leafcalc/parse.hpp"
#include "leafcalc/tensor_calc.hpp"

namespace leafcalc::testing {

inline RatFunc F(const ChartSpec& c, const std::string& text) { return parse_ratfunc(c, text); }
inline Poly P(const ChartSpec& c, const std::string& text) { return parse_poly(c, text); }

/// Builds a multivector from (names, coefficient text) pairs, e.g. {{"y1","y2"}, "y3"}.
inline Multivector MV(const ChartSpec& c, int degree,
                      const std::vector<std::pair<std::vector<std::string>, std::string>>& terms) {
  Multivector w(c, degree);
  for (const auto& [names, text] : terms) {
    IndexTuple idx;
    for (const auto& n : names) idx.push_back(c.var_index(n));
    w.add_term(idx, F(c, text));
  }
  return w;
}

/// so(3) linear bivector y3 ∂y1∧∂y2 + y1 ∂y2∧∂y3 + y2 ∂y3∧∂y1.
inline Multivector so3(const ChartSpec& c) {
  return MV(c, 2, {{{"y1", "y2"}, "y3"}, {{"y2", "y3"}, "y1"}, {{"y3", "y1"}, "y2"}});
}

/// Random polynomial with up to max_terms terms, total degree <= max_degree,
/// integer coefficients in [-3, 3]; only variables in vars are used.
inline Poly random_poly(std::mt19937_64& rng, const ChartSpec& c, int max_degree, int max_terms,
                        const std::vector<int>& vars) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Poly p(c);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) m.exps[static_cast<std::size_t>(vars[static_cast<std::size_t>(pick(rng))])] += 1;
    p.add_term(m, coeff(rng));
  }
  return p;
}

inline std::vector<int> all_vars(const ChartSpec& c) {
  std::vector<int> v;
  for (int i = 0; i < c.num_vars(); ++i) v.push_back(i);
  return v;
}

inline std::vector<int> fiber_vars(const ChartSpec& c) {
  std::vector<int> v;
  for (int k = 0; k < c.n(); ++k) v.push_back(c.fiber_var(k));
  return v;
}

/// Random multivector of the given degree with polynomial coefficients.
inline Multivector random_multivector(std::mt19937_64& rng, const ChartSpec& c, int degree, int max_degree,
                                      int max_terms, const std::vector<int>& index_pool,
                                      const std::vector<int>& coeff_vars) {
  Multivector w(c, degree);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(index_pool.size()) - 1);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    IndexTuple idx;
    for (int k = 0; k < degree; ++k) idx.push_back(index_pool[static_cast<std::size_t>(pick(rng))]);
    w.add_term(idx, RatFunc(random_poly(rng, c, max_degree, 2, coeff_vars)));
  }
  return w;
}

/// Closed-form Schouten bracket of decomposable terms:
///   [f∂_I, g∂_J] = Σ_r (−1)^{a−r} f ∂_{i_r}g ∂_{I∖i_r}∧∂_J
///                 − (−1)^{(a−1)(b−1)} Σ_t (−1)^{b−t} g ∂_{j_t}f ∂_{J∖j_t}∧∂_I
/// (r, t are 1-based positions). Independent of the Leibniz recursion in the library.
inline Multivector schouten_closed_form(const Multivector& A, const Multivector& B) {
  const ChartSpec& c = A.chart();
  const int a = A.degree();
  const int b = B.degree();
  Multivector R(c, std::max(a + b - 1, 0));
  if (a + b == 0) return R;
  for (const auto& [I, f] : A.terms()) {
    for (const auto& [J, g] : B.terms()) {
      for (int r = 0; r < a; ++r) {
        IndexTuple idx;
        for (int k = 0; k < a; ++k) {
          if (k != r) idx.push_back(I[static_cast<std::size_t>(k)]);
        }
        idx.insert(idx.end(), J.begin(), J.end());
        RatFunc coeff = f * g.derivative(I[static_cast<std::size_t>(r)]);
        if ((a - 1 - r) % 2 != 0) coeff = -coeff;
        R.add_term(idx, coeff);
      }
      const int outer = ((a - 1) * (b - 1)) % 2 == 0 ? -1 : 1;
      for (int t = 0; t < b; ++t) {
        IndexTuple idx;
        for (int k = 0; k < b; ++k) {
          if (k != t) idx.push_back(J[static_cast<std::size_t>(k)]);
        }
        idx.insert(idx.end(), I.begin(), I.end());
        RatFunc coeff = g * f.derivative(J[static_cast<std::size_t>(t)]);
        if ((b - 1 - t) % 2 != 0) coeff = -coeff;
        if (outer < 0) coeff = -coeff;
        R.add_term(idx, coeff);
      }
    }
  }
  return R;
}

/// Poisson bracket {f, g} = W(df, dg), computed from coefficients directly.
inline RatFunc poisson_bracket(const Multivector& W, const RatFunc& f, const RatFunc& g) {
  RatFunc r(W.chart());
  for (const auto& [idx, c] : W.terms()) {
    const int p = idx[0];
    const int q = idx[1];
    r += c * (f.derivative(p) * g.derivative(q) - f.derivative(q) * g.derivative(p));
  }
  return r;
}

/// Random geometric data with polynomial β and 𝒱 and a non-degenerate ℱ.
inline GeometricData random_geometric_data(std::mt19937_64& rng, const ChartSpec& c, int max_degree) {
  const std::vector<int> vars = all_vars(c);
  while (true) {
    GeometricData data(c);
    for (int i = 0; i < c.leaf_dim(); ++i) {
      for (int k = 0; k < c.n(); ++k) data.conn.beta(i, k) = RatFunc(random_poly(rng, c, max_degree, 2, vars));
    }
    data.vert = random_multivector(rng, c, 2, max_degree, 3, fiber_vars(c), vars);
    LeafForm form(c, 2);
    for (int a = 0; a < c.leaf_dim(); ++a) {
      for (int b = a + 1; b < c.leaf_dim(); ++b) {
        Poly p = random_poly(rng, c, max_degree, 2, vars);
        // Constant part on the symplectic pairs keeps ℱ invertible in most draws.
        if (b == a + 1 && a % 2 == 0) p += Poly(c, 1 + static_cast<int>(rng() % 3));
        form.add_term({a, b}, RatFunc(p));
      }
    }
    if (leaf_form_matrix(form).determinant().is_zero()) continue;
    data.leaf_form = form;
    return data;
  }
}

}  // namespace leafcalc::testing
