#include <random>

#include "doctest.h"
#include "leafcalc/error.hpp"
#include "leafcalc/examples.hpp"
#include "leafcalc/io.hpp"
#include "support.hpp"

using namespace leafcalc;
using namespace leafcalc::testing;

namespace {

const ChartSpec kChart(1, 3);

/// Serializes, prints, re-parses the text and reads back.
Json through_text(const Json& j) { return parse_json_text(j.dump()); }

}  // namespace

TEST_CASE("chart and multivector round trip") {
  CHECK(chart_from_json(through_text(to_json(ChartSpec(2, 3)))) == ChartSpec(2, 3));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const Multivector w = random_multivector(rng, kChart, 1 + t % 3, 2, 4, all_vars(kChart), all_vars(kChart));
    CHECK(multivector_from_json(kChart, w.degree(), through_text(to_json(w))) == w);
  }
  const Multivector rational = MV(kChart, 2, {{{"x1", "y2"}, "(y1 - 1/3)/(x2^2 + 1)"}});
  CHECK(multivector_from_json(kChart, 2, through_text(to_json(rational))) == rational);
}

TEST_CASE("multivector JSON format") {
  const Json j = to_json(MV(kChart, 2, {{{"y2", "x1"}, "y3"}}));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["indices"] == Json::array({"x1", "y2"}));
  CHECK(j[0]["coeff"] == "-y3");
  const Json in = parse_json_text(R"([{"indices": ["y1", "y2"], "coeff": "y3"}, {"indices": ["y2", "y1"], "coeff": 2}])");
  CHECK(multivector_from_json(kChart, 2, in) == MV(kChart, 2, {{{"y1", "y2"}, "y3 - 2"}}));
}

TEST_CASE("geometric data, potentials and algebras round trip") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 5; ++t) {
    const GeometricData data = random_geometric_data(rng, kChart, 2);
    CHECK(geometric_data_from_json(kChart, through_text(to_json(data))) == data);
  }
  const GaugePotential phi(kChart, {F(kChart, "x1*y3"), F(kChart, "1/(1 + x2)")});
  CHECK(gauge_potential_from_json(kChart, through_text(to_json(phi))) == phi);
  for (const auto& g : {LieAlgebraSpec::so3(), LieAlgebraSpec::sl2(), LieAlgebraSpec::abelian(2)}) {
    const LieAlgebraSpec back = lie_algebra_from_json(through_text(to_json(g)));
    CHECK(back.bivector(ChartSpec(1, g.n())) == g.bivector(ChartSpec(1, g.n())));
  }
  const Json so = to_json(LieAlgebraSpec::so3());
  CHECK(so["c"][0]["i"] == 1);
  CHECK(so["c"][0]["j"] == 2);
  CHECK(so["c"][0]["k"] == 3);
}

TEST_CASE("reports round trip") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Multivector pi = random_coupling(seed, 1, 2, 2);
    const ChartSpec& c = pi.chart();
    const PoissonReport r = check_conditions(extract_geometric_data(pi));
    const PoissonReport back = poisson_report_from_json(c, through_text(to_json(r)));
    CHECK(back.cond_i == r.cond_i);
    CHECK(back.cond_ii == r.cond_ii);
    CHECK(back.cond_iii == r.cond_iii);
    CHECK(back.cond_iv == r.cond_iv);
    CHECK(back.oracle == r.oracle);
    REQUIRE(back.residuals.size() == r.residuals.size());
    for (std::size_t k = 0; k < r.residuals.size(); ++k) {
      CHECK(back.residuals[k].condition == r.residuals[k].condition);
      CHECK(back.residuals[k].indices == r.residuals[k].indices);
      CHECK(back.residuals[k].value.index() == r.residuals[k].value.index());
      if (const auto* m = std::get_if<Multivector>(&r.residuals[k].value)) {
        CHECK(std::get<Multivector>(back.residuals[k].value) == *m);
      } else {
        CHECK(std::get<LeafForm>(back.residuals[k].value) == std::get<LeafForm>(r.residuals[k].value));
      }
    }
  }

  const SplittingReport s{true, false};
  const SplittingReport sb = splitting_report_from_json(through_text(to_json(s)));
  CHECK(sb.flat);
  CHECK_FALSE(sb.horizontal_poisson);

  const CohomologyReport h = h1_graded(LieAlgebraSpec::abelian(2), 1);
  const CohomologyReport hb = cohomology_report_from_json(through_text(to_json(h)));
  CHECK(hb.degree == h.degree);
  CHECK(hb.dim_cocycles == h.dim_cocycles);
  CHECK(hb.dim_coboundaries == h.dim_coboundaries);
  CHECK(hb.dim_h1 == h.dim_h1);
  CHECK(hb.basis_witnesses == h.basis_witnesses);

  const ChartSpec c2(1, 2);
  const LinearizationResult lin = linearize_vertical(MV(c2, 2, {{{"y1", "y2"}, "y1^2"}}), 3);
  const LinearizationResult lb = linearization_result_from_json(c2, through_text(to_json(lin)));
  CHECK(lb.success == lin.success);
  CHECK(lb.achieved_degree == lin.achieved_degree);
  CHECK(lb.transformed == lin.transformed);
  REQUIRE(lb.obstruction.has_value());
  CHECK(lb.obstruction->degree == lin.obstruction->degree);
  CHECK(lb.obstruction->cocycle == lin.obstruction->cocycle);

  const LinearizationResult ok = linearize_vertical(extract_geometric_data(get_example("so3_perturbed_deg2").pi).vert, 4);
  const LinearizationResult okb = linearization_result_from_json(kChart, through_text(to_json(ok)));
  CHECK(okb.generators == ok.generators);
  CHECK_FALSE(okb.obstruction.has_value());

  const GeometricData curved = extract_geometric_data(get_example("so3_curved").pi);
  const ConnectionChange change = solve_connection_change(curved, Connection(kChart), 4);
  const ConnectionChange cb = connection_change_from_json(kChart, through_text(to_json(change)));
  CHECK(cb.solved);
  CHECK(cb.phi == change.phi);
}

TEST_CASE("JSON syntax errors carry line and column") {
  try {
    parse_json_text("{\n  \"a\": 1,\n  \"b\" 2\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_json_text(""), ParseError);
}

TEST_CASE("reader errors name the offending field") {
  const auto message = [](auto&& f) -> std::string {
    try {
      f();
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message([] { multivector_from_json(kChart, 2, parse_json_text(R"([{"indices": ["x1", "y4"], "coeff": "1"}])"), "bivector"); })
            .find("bivector[0].indices[1]") != std::string::npos);
  CHECK(message([] { multivector_from_json(kChart, 2, parse_json_text(R"([{"indices": ["x1"], "coeff": "1"}])")); })
            .find("expected 2 indices") != std::string::npos);
  CHECK(message([] { multivector_from_json(kChart, 2, parse_json_text(R"([{"indices": ["x1", "y1"], "coeff": "y1 +* 2"}])")); })
            .find("column") != std::string::npos);
  CHECK(message([] { multivector_from_json(kChart, 2, parse_json_text(R"([{"indices": ["x1", "y1"]}])")); })
            .find("missing field 'coeff'") != std::string::npos);
  CHECK(message([] { connection_from_json(kChart, parse_json_text(R"([["0", "0", "0"]])")); })
            .find("expected 2 rows") != std::string::npos);
  CHECK(message([] { connection_from_json(kChart, parse_json_text(R"([["0", "0"], ["0", "0"]])")); })
            .find("expected 3 entries") != std::string::npos);
  CHECK(message([] { gauge_potential_from_json(kChart, parse_json_text(R"({"phi": ["1"]})")); })
            .find("expected 2 components") != std::string::npos);
  CHECK(message([] {
          geometric_data_from_json(kChart, parse_json_text(R"({"beta": [["0","0","0"],["0","0","0"]], "vert": [], "F": [["0","1"],["1","0"]]})"));
        }).find("antisymmetric") != std::string::npos);
  CHECK(message([] { lie_algebra_from_json(parse_json_text(R"({"n": 2, "c": [{"i": 1, "j": 2, "k": 2, "value": "x"}]})")); })
            .find("not a rational number") != std::string::npos);
}
