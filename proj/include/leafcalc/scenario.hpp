#pragma once

#include <string>

#include "leafcalc/examples.hpp"
#include "leafcalc/io.hpp"

namespace leafcalc {

// Scenario file:
//   {
//     "chart": {"s": 1, "n": 3},
//     "command": "extract" | "reconstruct" | "check" | "split" | "gauge" |
//                "linearize" | "cohomology" | "connection-change",
//     one input: "bivector": [...] | "data": {...} | "example": "<name>" |
//                "random": {"seed": k, "max_degree": d},
//     "parameters": {"phi": [...], "max_degree": D, "lie_algebra": {...} or "so3" | "sl2" | "abelian",
//                    "target_beta": [[...]], "degrees": [...]}
//   }
// "chart" may be omitted with an example input.

/// Exit codes of a scenario run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNegative = 2;

struct ScenarioOutcome {
  int exit_code = kExitOk;
  /// {"command", "chart", "status", "result"} or {"status": "error", "error"}.
  Json report;
  /// Human-readable summary.
  std::string summary;
};

/// Runs one scenario. Never throws: parse and usage errors give exit 1,
/// verified negative results (not Poisson, degenerate, obstructed,
/// nontrivial H¹) give exit 2.
ScenarioOutcome run_scenario(const Json& scenario);

/// The example as a scenario file with a bivector input.
Json example_scenario(const NamedExample& example, const std::string& command, int max_degree);

}  // namespace leafcalc
