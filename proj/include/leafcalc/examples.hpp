#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "leafcalc/multivector.hpp"

namespace leafcalc {

using ExpectedValue = std::variant<bool, int>;

/// A named chart-level structure together with the properties it is known to have.
///
/// Expected keys (all optional):
///   horizontally_nondegenerate, poisson, flat, horizontal_poisson  (bool)
///   linearizable (bool) at degree linearize_degree (int)
///   obstruction_degree (int)
struct NamedExample {
  std::string name;
  std::string description;
  ChartSpec chart;
  Multivector pi;
  std::map<std::string, ExpectedValue> expected;
};

std::vector<std::string> example_names();

/// Throws UsageError on an unknown name.
NamedExample get_example(const std::string& name);

/// Seeded random horizontally non-degenerate bivector with small integer
/// polynomial coefficients of total degree ≤ max_degree. Some seeds give
/// constant or sparse coefficients, so Poisson and non-Poisson outputs both occur.
Multivector random_coupling(std::uint64_t seed, int s, int n, int max_degree);

}  // namespace leafcalc
