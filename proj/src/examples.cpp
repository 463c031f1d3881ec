#include "leafcalc/examples.hpp"

#include <functional>
#include <random>

#include "leafcalc/coupling.hpp"
#include "leafcalc/error.hpp"
#include "leafcalc/linearize.hpp"
#include "leafcalc/parse.hpp"

namespace leafcalc {

namespace {

using Terms = std::vector<std::pair<std::vector<std::string>, std::string>>;

Multivector bivector(const ChartSpec& c, const Terms& terms) {
  Multivector w(c, 2);
  for (const auto& [names, text] : terms) {
    IndexTuple idx;
    for (const auto& n : names) idx.push_back(c.var_index(n));
    w.add_term(idx, parse_ratfunc(c, text));
  }
  return w;
}

Multivector symplectic(const ChartSpec& c) { return bivector(c, {{{"x1", "x2"}, "1"}}); }

NamedExample symplectic2() {
  const ChartSpec c(1, 1);
  return {"symplectic2",
          "constant symplectic leaf, zero transverse part",
          c,
          symplectic(c),
          {{"horizontally_nondegenerate", true}, {"poisson", true}, {"flat", true}, {"horizontal_poisson", true}}};
}

NamedExample so3_flat() {
  const ChartSpec c(1, 3);
  return {"so3_flat",
          "product of a symplectic plane with the linear so(3) structure",
          c,
          symplectic(c) + LieAlgebraSpec::so3().bivector(c),
          {{"horizontally_nondegenerate", true},
           {"poisson", true},
           {"flat", true},
           {"horizontal_poisson", true},
           {"linearizable", true},
           {"linearize_degree", 4}}};
}

NamedExample so3_curved() {
  const ChartSpec c(1, 3);
  GeometricData data(c);
  // hor(∂x2) = ∂x2 + x1 (y1 ∂y2 − y2 ∂y1), ℱ12 = 1 + y3
  data.conn.beta(1, 0) = parse_ratfunc(c, "-x1*y2");
  data.conn.beta(1, 1) = parse_ratfunc(c, "x1*y1");
  data.vert = LieAlgebraSpec::so3().bivector(c);
  data.leaf_form.add_term({0, 1}, parse_ratfunc(c, "1 + y3"));
  return {"so3_curved",
          "so(3) coupling with a curved connection, gauge equivalent to so3_flat",
          c,
          reconstruct(data),
          {{"horizontally_nondegenerate", true}, {"poisson", true}, {"flat", false}, {"horizontal_poisson", false}}};
}

NamedExample so3_perturbed_deg2() {
  const ChartSpec c(1, 3);
  const Multivector generator = Multivector::basis(c, {c.var_index("y3")}, parse_ratfunc(c, "y1^2"));
  // The flow of y1^2 ∂y3 is polynomial, so the series stops well before degree 8.
  const Multivector vert = pushforward(generator, LieAlgebraSpec::so3().bivector(c), 8);
  return {"so3_perturbed_deg2",
          "linear so(3) structure pushed forward along y1^2 d/dy3",
          c,
          symplectic(c) + vert,
          {{"horizontally_nondegenerate", true},
           {"poisson", true},
           {"flat", true},
           {"horizontal_poisson", true},
           {"linearizable", true},
           {"linearize_degree", 4}}};
}

NamedExample abelian_obstructed() {
  const ChartSpec c(1, 2);
  return {"abelian_obstructed",
          "quadratic transverse structure with zero linear part",
          c,
          bivector(c, {{{"x1", "x2"}, "1"}, {{"y1", "y2"}, "y1^2"}}),
          {{"horizontally_nondegenerate", true},
           {"poisson", true},
           {"flat", true},
           {"horizontal_poisson", true},
           {"linearizable", false},
           {"linearize_degree", 4},
           {"obstruction_degree", 2}}};
}

NamedExample sl2_flat() {
  const ChartSpec c(1, 3);
  return {"sl2_flat",
          "product of a symplectic plane with the linear sl(2) structure",
          c,
          symplectic(c) + LieAlgebraSpec::sl2().bivector(c),
          {{"horizontally_nondegenerate", true},
           {"poisson", true},
           {"flat", true},
           {"horizontal_poisson", true},
           {"linearizable", true},
           {"linearize_degree", 4}}};
}

const std::vector<std::pair<std::string, std::function<NamedExample()>>>& catalog() {
  static const std::vector<std::pair<std::string, std::function<NamedExample()>>> entries = {
      {"symplectic2", symplectic2},
      {"so3_flat", so3_flat},
      {"so3_curved", so3_curved},
      {"so3_perturbed_deg2", so3_perturbed_deg2},
      {"abelian_obstructed", abelian_obstructed},
      {"sl2_flat", sl2_flat},
  };
  return entries;
}

Poly random_poly(std::mt19937_64& rng, const ChartSpec& c, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> var(0, c.num_vars() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Poly p(c);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) m.exps[static_cast<std::size_t>(var(rng))] += 1;
    p.add_term(m, coeff(rng));
  }
  return p;
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : catalog()) names.push_back(name);
  return names;
}

NamedExample get_example(const std::string& name) {
  for (const auto& [n, make] : catalog()) {
    if (n == name) return make();
  }
  throw UsageError("unknown example '" + name + "'");
}

Multivector random_coupling(std::uint64_t seed, int s, int n, int max_degree) {
  const ChartSpec c(s, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mode(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(1, 3);
  while (true) {
    // Mode 0: constant coefficients only, which is always Poisson.
    const int degree = mode(rng) == 0 ? 0 : max_degree;
    Multivector pi(c, 2);
    for (int a = 0; a < c.num_vars(); ++a) {
      for (int b = a + 1; b < c.num_vars(); ++b) {
        const bool leaf_pair = c.is_leaf(a) && c.is_leaf(b);
        if (leaf_pair && b == a + 1 && a % 2 == 0) {
          // Symplectic pairs carry a nonzero constant so Π^X usually stays invertible.
          Poly p(c, small(rng) * (coin(rng) ? 1 : -1));
          if (degree > 0 && coin(rng)) p += random_poly(rng, c, degree, 2);
          pi.add_term({a, b}, RatFunc(p));
          continue;
        }
        if (coin(rng)) continue;
        pi.add_term({a, b}, RatFunc(random_poly(rng, c, degree, 2)));
      }
    }
    if (is_horizontally_nondegenerate(pi)) return pi;
  }
}

}  // namespace leafcalc
