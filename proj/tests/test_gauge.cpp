#include <random>

#include "doctest.h"
#include "leafcalc/error.hpp"
#include "leafcalc/examples.hpp"
#include "leafcalc/gauge.hpp"
#include "leafcalc/poisson_laws.hpp"
#include "support.hpp"

using namespace leafcalc;
using namespace leafcalc::testing;

namespace {

const ChartSpec kChart(1, 3);

GaugePotential potential(const ChartSpec& c, const std::vector<std::string>& texts) {
  std::vector<RatFunc> phi;
  for (const auto& t : texts) phi.push_back(F(c, t));
  return GaugePotential(c, phi);
}

GaugePotential random_potential(std::mt19937_64& rng, const ChartSpec& c, int max_degree) {
  std::vector<RatFunc> phi;
  for (int i = 0; i < c.leaf_dim(); ++i) phi.push_back(RatFunc(random_poly(rng, c, max_degree, 2, all_vars(c))));
  return GaugePotential(c, phi);
}

GeometricData flat_so3() { return extract_geometric_data(get_example("so3_flat").pi); }

}  // namespace

TEST_CASE("GaugePotential validation") {
  CHECK_THROWS_AS(GaugePotential(kChart, {F(kChart, "1")}), UsageError);
  CHECK(GaugePotential(kChart).is_zero());
  const GaugePotential phi = potential(kChart, {"y1", "x1*y3"});
  CHECK(phi.as_form().coefficient({1}) == F(kChart, "x1*y3"));
  CHECK_FALSE(phi.is_zero());
}

TEST_CASE("vertical_hamiltonian_lift examples") {
  const Multivector v = so3(kChart);
  CHECK(vertical_hamiltonian_lift(v, potential(kChart, {"3", "-1/2"}), 0).is_zero());
  CHECK(vertical_hamiltonian_lift(Multivector(kChart, 2), potential(kChart, {"y1", "y2"}), 0).is_zero());
  CHECK(vertical_hamiltonian_lift(v, potential(kChart, {"0", "x1*y3"}), 1) ==
        MV(kChart, 1, {{{"y1"}, "x1*y2"}, {{"y2"}, "-x1*y1"}}));
}

TEST_CASE("vertical_pairing examples") {
  const Multivector v = so3(kChart);
  const GaugePotential same = potential(kChart, {"y1 + x2", "y1 + x2"});
  CHECK(vertical_pairing(v, same, same).is_zero());
  const GaugePotential phi = potential(kChart, {"y1", "y2"});
  CHECK(vertical_pairing(Multivector(kChart, 2), phi, phi).is_zero());
  CHECK(vertical_pairing(v, phi, phi).coefficient({0, 1}) == F(kChart, "2*y3"));
  // Mixed potentials: 𝒱(dy1, dy1) − 𝒱(dy3, dy2) = −𝒱(dy3, dy2) = y1.
  CHECK(vertical_pairing(v, potential(kChart, {"y1", "y3"}), potential(kChart, {"y2", "y1"})).coefficient({0, 1}) ==
        F(kChart, "y1"));
}

TEST_CASE("apply_gauge examples") {
  const GeometricData flat = flat_so3();
  CHECK(apply_gauge(flat, GaugePotential(kChart)) == flat);

  const ChartSpec c1(1, 1);
  GeometricData sympl(c1);
  sympl.leaf_form.add_term({0, 1}, F(c1, "1"));
  const GeometricData moved = apply_gauge(sympl, potential(c1, {"x2^2", "x1*x2"}));
  CHECK(moved.conn.is_zero());
  // ℱ' = ℱ + dφ with (dφ)_12 = ∂x1 φ2 − ∂x2 φ1 = x2 − 2 x2.
  CHECK(moved.leaf_form.coefficient({0, 1}) == F(c1, "1 - x2"));

  const GeometricData curved = apply_gauge(flat, potential(kChart, {"0", "x1*y3"}));
  CHECK(curved.vert == flat.vert);
  CHECK(curved.leaf_form.coefficient({0, 1}) == F(kChart, "1 + y3"));
  CHECK(curved == extract_geometric_data(get_example("so3_curved").pi));
  CHECK(check_conditions(curved).conditions_hold());

  // φ = (x2, 0) gives ℱ'12 = 1 − ∂x2(x2) = 0.
  GeometricData unit(c1);
  unit.leaf_form.add_term({0, 1}, F(c1, "1"));
  CHECK_THROWS_AS(apply_gauge(unit, potential(c1, {"x2", "0"})), DataDegeneracyError);
}

TEST_CASE("gauge keeps Poisson data Poisson") {
  std::mt19937_64 rng(17);
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 60 && tested < 15; ++seed) {
    const GeometricData data = extract_geometric_data(random_coupling(seed, 1, 1 + static_cast<int>(seed % 3), 2));
    if (!check_conditions(data).conditions_hold()) continue;
    const GaugePotential phi = random_potential(rng, data.chart(), 2);
    GeometricData moved(data.chart());
    try {
      moved = apply_gauge(data, phi);
    } catch (const DataDegeneracyError&) {
      continue;
    }
    const PoissonReport r = check_conditions(moved);
    CHECK(r.conditions_hold());
    CHECK(r.oracle);
    CHECK(moved.vert == data.vert);
    ++tested;
  }
  for (const char* name : {"so3_flat", "so3_curved", "sl2_flat", "so3_perturbed_deg2"}) {
    const GeometricData data = extract_geometric_data(get_example(name).pi);
    const GaugePotential phi = random_potential(rng, data.chart(), 2);
    try {
      const GeometricData moved = apply_gauge(data, phi);
      CAPTURE(name);
      CHECK(check_conditions(moved).oracle);
      ++tested;
    } catch (const DataDegeneracyError&) {
    }
  }
  CHECK(tested >= 10);
}

TEST_CASE("the pairing sign is the one that keeps Poisson data Poisson") {
  // Flipping the quadratic correction breaks the Jacobi identity on a curved example.
  const GeometricData data = flat_so3();
  const GaugePotential phi = potential(kChart, {"y1", "y2"});
  const GeometricData moved = apply_gauge(data, phi);
  CHECK(check_conditions(moved).oracle);
  GeometricData flipped = moved;
  flipped.leaf_form += vertical_pairing(data.vert, phi, phi);
  CHECK_FALSE(check_conditions(flipped).oracle);
}

TEST_CASE("gauge composes additively when the vertical part vanishes") {
  std::mt19937_64 rng(3);
  const ChartSpec c(1, 2);
  for (int t = 0; t < 10; ++t) {
    GeometricData data = random_geometric_data(rng, c, 1);
    data.vert = Multivector(c, 2);
    const GaugePotential phi = random_potential(rng, c, 2);
    const GaugePotential psi = random_potential(rng, c, 2);
    GaugePotential sum(c);
    for (int i = 0; i < 2; ++i) sum[i] = phi[i] + psi[i];
    try {
      CHECK(apply_gauge(apply_gauge(data, phi), psi) == apply_gauge(data, sum));
    } catch (const DataDegeneracyError&) {
    }
  }
}

TEST_CASE("check_gauge_hypotheses examples") {
  const GeometricData flat = flat_so3();
  const GaugePotential phi = potential(kChart, {"0", "x1*y3"});
  CHECK(check_gauge_hypotheses(flat, extract_geometric_data(get_example("so3_curved").pi), phi));

  // Potentials vanishing to second order on the leaf leave ℱ unchanged there.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    std::vector<RatFunc> parts;
    for (int i = 0; i < 2; ++i) {
      const Poly y = Poly::variable(kChart, kChart.fiber_var(static_cast<int>(rng() % 3)));
      parts.push_back(RatFunc(y * y * random_poly(rng, kChart, 1, 2, all_vars(kChart))));
    }
    const GaugePotential quadratic(kChart, parts);
    CHECK(check_gauge_hypotheses(flat, apply_gauge(flat, quadratic), quadratic));
  }

  GeometricData other = flat;
  other.vert = MV(kChart, 2, {{{"y1", "y2"}, "1"}});
  CHECK_FALSE(check_gauge_hypotheses(flat, other, GaugePotential(kChart)));
  // Right vertical part and leaf restriction, wrong potential.
  CHECK_FALSE(check_gauge_hypotheses(flat, apply_gauge(flat, phi), GaugePotential(kChart)));
}
