#pragma once

#include <string>

#include "json.hpp"
#include "leafcalc/examples.hpp"
#include "leafcalc/gauge.hpp"
#include "leafcalc/linearize.hpp"
#include "leafcalc/poisson_laws.hpp"

namespace leafcalc {

using Json = nlohmann::json;

// JSON forms. Polynomial and rational payloads are strings in the text
// format of parse_ratfunc; index names are "x1".."x{2s}", "y1".."y{n}".
// Readers throw ParseError naming the offending field.

Json to_json(const ChartSpec& chart);
ChartSpec chart_from_json(const Json& j);

/// [{"indices": ["x1", "y2"], "coeff": "..."}, ...]
Json to_json(const Multivector& w);
/// path names the field in error messages.
Multivector multivector_from_json(const ChartSpec& chart, int degree, const Json& j,
                                  const std::string& path = "multivector");
Json to_json(const LeafForm& w);
LeafForm leaf_form_from_json(const ChartSpec& chart, int degree, const Json& j,
                             const std::string& path = "leaf_form");

/// 2s × n matrix of strings.
Json to_json(const Connection& conn);
Connection connection_from_json(const ChartSpec& chart, const Json& j, const std::string& path = "beta");

/// {"beta": [[...]], "vert": [...], "F": [[...]]} with F the full antisymmetric 2s × 2s matrix.
Json to_json(const GeometricData& data);
GeometricData geometric_data_from_json(const ChartSpec& chart, const Json& j);

/// {"phi": ["...", ...]}
Json to_json(const GaugePotential& phi);
GaugePotential gauge_potential_from_json(const ChartSpec& chart, const Json& j);

/// {"n": 3, "c": [{"i": 1, "j": 2, "k": 3, "value": "1"}, ...]} with 1-based indices.
Json to_json(const LieAlgebraSpec& g);
LieAlgebraSpec lie_algebra_from_json(const Json& j);

Json to_json(const PoissonReport& r);
PoissonReport poisson_report_from_json(const ChartSpec& chart, const Json& j);

Json to_json(const SplittingReport& r);
SplittingReport splitting_report_from_json(const Json& j);

/// Carries its own chart (s = 1, n = algebra dimension) for the witnesses.
Json to_json(const CohomologyReport& r);
CohomologyReport cohomology_report_from_json(const Json& j);

Json to_json(const LinearizationResult& r);
LinearizationResult linearization_result_from_json(const ChartSpec& chart, const Json& j);

Json to_json(const ConnectionChange& r);
ConnectionChange connection_change_from_json(const ChartSpec& chart, const Json& j);

Json to_json(const SemilocalReport& r);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(const std::string& text);

}  // namespace leafcalc
