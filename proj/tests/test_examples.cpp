#include "doctest.h"
#include "leafcalc/error.hpp"
#include "leafcalc/examples.hpp"
#include "leafcalc/linearize.hpp"
#include "support.hpp"

using namespace leafcalc;
using namespace leafcalc::testing;

TEST_CASE("catalog lists every example once") {
  const auto names = example_names();
  CHECK(names.size() == 6);
  for (const auto& n : names) CHECK(get_example(n).name == n);
  CHECK_THROWS_AS(get_example("no_such_example"), UsageError);
}

TEST_CASE("catalog expectations hold") {
  for (const auto& name : example_names()) {
    const NamedExample ex = get_example(name);
    CAPTURE(name);
    const auto expect_bool = [&](const char* key) { return std::get<bool>(ex.expected.at(key)); };

    CHECK(is_horizontally_nondegenerate(ex.pi) == expect_bool("horizontally_nondegenerate"));
    const GeometricData data = extract_geometric_data(ex.pi);
    const PoissonReport r = check_conditions(data);
    CHECK(r.oracle == expect_bool("poisson"));
    CHECK(r.conditions_hold() == expect_bool("poisson"));
    if (ex.expected.count("flat")) {
      const SplittingReport s = check_splitting(data);
      CHECK(s.flat == expect_bool("flat"));
      CHECK(s.horizontal_poisson == expect_bool("horizontal_poisson"));
    }
    if (ex.expected.count("linearizable")) {
      const int d = std::get<int>(ex.expected.at("linearize_degree"));
      const LinearizationResult lin = linearize_vertical(data.vert, d);
      CHECK(lin.success == expect_bool("linearizable"));
      if (ex.expected.count("obstruction_degree")) {
        REQUIRE(lin.obstruction.has_value());
        CHECK(lin.obstruction->degree == std::get<int>(ex.expected.at("obstruction_degree")));
      }
    }
  }
}

TEST_CASE("so3_curved is the gauge image of so3_flat") {
  const ChartSpec c(1, 3);
  const GeometricData flat = extract_geometric_data(get_example("so3_flat").pi);
  const GaugePotential phi(c, {RatFunc(c), F(c, "x1*y3")});
  CHECK(reconstruct(apply_gauge(flat, phi)) == get_example("so3_curved").pi);
}

TEST_CASE("so3_perturbed_deg2 has the expected vertical part") {
  const ChartSpec c(1, 3);
  const GeometricData data = extract_geometric_data(get_example("so3_perturbed_deg2").pi);
  CHECK(data.vert == MV(c, 2, {{{"y1", "y2"}, "y1^2 + y3"}, {{"y1", "y3"}, "-y2"}, {{"y2", "y3"}, "2*y1^3 + 2*y1*y3 + y1"}}));
  CHECK(jet_split(data.vert).part(1) == so3(c));
}

TEST_CASE("random_coupling is deterministic and non-degenerate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Multivector a = random_coupling(seed, 1, 2, 2);
    CHECK(a == random_coupling(seed, 1, 2, 2));
    CHECK(is_horizontally_nondegenerate(a));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(is_horizontally_nondegenerate(random_coupling(seed, 2, 1, 1)));
  CHECK_FALSE(random_coupling(1, 1, 3, 2) == random_coupling(2, 1, 3, 2));
}

TEST_CASE("random couplings include Poisson and non-Poisson instances") {
  int poisson = 0;
  int not_poisson = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Multivector pi = random_coupling(seed, 1, 1 + static_cast<int>(seed % 3), 2);
    // Closed-form bracket as the judge.
    (schouten_closed_form(pi, pi).is_zero() ? poisson : not_poisson) += 1;
  }
  CHECK(poisson > 0);
  CHECK(not_poisson > 0);
}
