#include <random>

#include "doctest.h"
#include "leafcalc/coupling.hpp"
#include "leafcalc/error.hpp"
#include "leafcalc/examples.hpp"
#include "support.hpp"

using namespace leafcalc;
using namespace leafcalc::testing;

namespace {

const ChartSpec kChart(1, 3);

RatFuncMatrix leaf_matrix_oracle(const Multivector& pi) {
  // Π^X_ij read straight off the coefficients: half of ∂x_i∧∂x_j's coefficient.
  const ChartSpec& c = pi.chart();
  RatFuncMatrix m(c, static_cast<std::size_t>(c.leaf_dim()), static_cast<std::size_t>(c.leaf_dim()));
  for (int i = 0; i < c.leaf_dim(); ++i) {
    for (int j = 0; j < c.leaf_dim(); ++j) {
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          pi.coefficient({i, j}) * RatFunc(c, Rational(1, 2));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("is_horizontally_nondegenerate examples") {
  CHECK(is_horizontally_nondegenerate(MV(ChartSpec(1, 1), 2, {{{"x1", "x2"}, "1"}})));
  CHECK_FALSE(is_horizontally_nondegenerate(MV(ChartSpec(1, 2), 2, {{{"y1", "y2"}, "1"}})));
  CHECK(is_horizontally_nondegenerate(MV(kChart, 2, {{{"x1", "x2"}, "1"}, {{"x1", "y1"}, "y1"}})));
  // s = 2 with only one symplectic pair is degenerate.
  CHECK_FALSE(is_horizontally_nondegenerate(MV(ChartSpec(2, 1), 2, {{{"x1", "x2"}, "1"}})));
  CHECK(is_horizontally_nondegenerate(MV(ChartSpec(2, 1), 2, {{{"x1", "x2"}, "1"}, {{"x3", "x4"}, "x1"}})));
}

TEST_CASE("extract_geometric_data examples") {
  const ChartSpec c1(1, 1);
  const GeometricData d1 = extract_geometric_data(MV(c1, 2, {{{"x1", "x2"}, "1"}}));
  CHECK(d1.conn.is_zero());
  CHECK(d1.vert.is_zero());
  CHECK(d1.leaf_form.coefficient({0, 1}) == F(c1, "1"));

  const GeometricData d2 = extract_geometric_data(get_example("so3_flat").pi);
  CHECK(d2.conn.is_zero());
  CHECK(d2.vert == so3(kChart));
  CHECK(d2.leaf_form.coefficient({0, 1}) == F(kChart, "1"));

  // ∂x1∧∂x2 + 2 x1 ∂x2∧∂y3: Π^X12 = 1/2, Π^XY_{2,3} = x1, so β_{1,3} = −2 x1.
  const Multivector mixed = MV(kChart, 2, {{{"x1", "x2"}, "1"}, {{"x2", "y3"}, "2*x1"}});
  const GeometricData d3 = extract_geometric_data(mixed);
  CHECK(d3.conn.beta(0, 2) == F(kChart, "-2*x1"));
  CHECK(d3.conn.beta(1, 2).is_zero());
  CHECK(reconstruct(d3) == mixed);

  CHECK_THROWS_AS(extract_geometric_data(MV(kChart, 2, {{{"y1", "y2"}, "1"}})), HorizontalDegeneracyError);
}

TEST_CASE("reconstruct examples") {
  const ChartSpec c1(1, 1);
  GeometricData d(c1);
  d.leaf_form.add_term({0, 1}, F(c1, "1"));
  CHECK(reconstruct(d) == MV(c1, 2, {{{"x1", "x2"}, "1"}}));

  GeometricData so(kChart);
  so.vert = so3(kChart);
  so.leaf_form.add_term({0, 1}, F(kChart, "1"));
  CHECK(reconstruct(so) == MV(kChart, 2, {{{"x1", "x2"}, "1"}}) + so3(kChart));

  GeometricData degenerate(kChart);
  CHECK_THROWS_AS(reconstruct(degenerate), DataDegeneracyError);
  CHECK_THROWS_AS(GeometricData(Connection(kChart), MV(kChart, 2, {{{"x1", "y1"}, "1"}}), LeafForm(kChart, 2)),
                  UsageError);
}

TEST_CASE("horizontal and vertical parts") {
  const Multivector pi = get_example("so3_flat").pi;
  CHECK(horizontal_part(pi) == MV(kChart, 2, {{{"x1", "x2"}, "1"}}));
  CHECK(vertical_part(MV(kChart, 2, {{{"x1", "x2"}, "x1+y2"}})).is_zero());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const Multivector p = random_coupling(rng(), 1, 3, 2);
    CHECK(horizontal_part(p) + vertical_part(p) == p);
    CHECK(is_vertical(vertical_part(p)));
  }
}

TEST_CASE("horizontal_lift examples") {
  Connection conn(kChart);
  CHECK(horizontal_lift(conn, 0) == MV(kChart, 1, {{{"x1"}, "1"}}));
  conn.beta(0, 0) = F(kChart, "y1");
  CHECK(horizontal_lift(conn, 0) == MV(kChart, 1, {{{"x1"}, "1"}, {{"y1"}, "y1"}}));
  conn.beta(1, 2) = F(kChart, "x1*y2");
  for (int i = 0; i < 2; ++i) {
    const Multivector lift = horizontal_lift(conn, i);
    for (int j = 0; j < 2; ++j) CHECK(component(lift, j) == RatFunc(kChart, i == j ? 1 : 0));
  }
  CHECK_THROWS_AS(horizontal_lift(conn, 2), UsageError);
}

TEST_CASE("round trip on random bivectors") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 7; ++seed) {
      const Multivector pi = random_coupling(seed, 1, n, 2);
      CHECK(reconstruct(extract_geometric_data(pi)) == pi);
    }
  }
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Multivector pi = random_coupling(seed, 2, 1, 1);
    CHECK(reconstruct(extract_geometric_data(pi)) == pi);
  }
}

TEST_CASE("round trip on random data") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const ChartSpec c(1, 1 + t % 3);
    const GeometricData data = random_geometric_data(rng, c, 2);
    CHECK(extract_geometric_data(reconstruct(data)) == data);
  }
  const ChartSpec c2(2, 1);
  for (int t = 0; t < 3; ++t) {
    const GeometricData data = random_geometric_data(rng, c2, 1);
    CHECK(extract_geometric_data(reconstruct(data)) == data);
  }
}

TEST_CASE("leaf form is dual to the leaf block") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Multivector pi = random_coupling(seed, 1, 1 + static_cast<int>(seed % 3), 2);
    const GeometricData data = extract_geometric_data(pi);
    const RatFuncMatrix f = leaf_form_matrix(data.leaf_form);
    RatFuncMatrix minus_two_f(f.chart(), f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) minus_two_f.at(i, j) = f.at(i, j) * RatFunc(f.chart(), -2);
    }
    CHECK(minus_two_f * leaf_matrix_oracle(pi) == RatFuncMatrix::identity(f.chart(), f.rows()));
  }
}

TEST_CASE("horizontal lifts span the image of the leaf covectors") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Multivector pi = random_coupling(seed, 1, 1 + static_cast<int>(seed % 3), 2);
    const ChartSpec& c = pi.chart();
    const GeometricData data = extract_geometric_data(pi);
    const RatFuncMatrix px = leaf_matrix_oracle(pi);
    for (int i = 0; i < c.leaf_dim(); ++i) {
      Multivector expected(c, 1);
      for (int j = 0; j < c.leaf_dim(); ++j) {
        const RatFunc& pij = px.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        expected += horizontal_lift(data.conn, j).scaled(pij * RatFunc(c, 2));
      }
      CHECK(sharp(pi, Covector::unit(c, i)) == expected);
    }
  }
}

TEST_CASE("vertical part vanishes on the leaf when the leaf is a leaf of the restriction") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const ChartSpec c(1, 1 + t % 3);
    const std::vector<int> vars = all_vars(c);
    std::uniform_int_distribution<int> pick_y(0, c.n() - 1);
    Multivector pi = MV(c, 2, {{{"x1", "x2"}, "1"}});
    pi.add_term({0, 1}, RatFunc(random_poly(rng, c, 2, 2, vars)));
    // Every mixed and fiber coefficient carries a factor of some y, so Π is tangent to the leaf at y = 0.
    for (int a = 0; a < c.num_vars(); ++a) {
      for (int b = std::max(a + 1, c.leaf_dim()); b < c.num_vars(); ++b) {
        const Poly y = Poly::variable(c, c.fiber_var(pick_y(rng)));
        pi.add_term({a, b}, RatFunc(y * random_poly(rng, c, 1, 2, vars)));
      }
    }
    if (!is_horizontally_nondegenerate(pi) || pi.coefficient({0, 1}).evaluate_on_leaf().is_zero()) continue;
    const Multivector vert = extract_geometric_data(pi).vert;
    for (const auto& [idx, coeff] : vert.terms()) CHECK(coeff.evaluate_on_leaf().is_zero());
  }
}
