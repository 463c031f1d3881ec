#include "leafcalc/chart.hpp"

#include <charconv>

#include "leafcalc/error.hpp"

namespace leafcalc {

ChartSpec::ChartSpec(int s, int n) : s_(s), n_(n) {
  if (s < 1 || n < 1) throw UsageError("chart requires s >= 1 and n >= 1");
  if (2 * s + n > kMaxVariables) {
    throw UsageError("chart has " + std::to_string(2 * s + n) + " variables; at most " +
                     std::to_string(kMaxVariables) + " are supported");
  }
}

std::string ChartSpec::var_name(int var) const {
  if (!valid(var)) throw UsageError("variable index " + std::to_string(var) + " out of range");
  if (is_leaf(var)) return "x" + std::to_string(var + 1);
  return "y" + std::to_string(var - leaf_dim() + 1);
}

int ChartSpec::var_index(const std::string& name) const {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return -1;
  int k = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || k < 1 || name[1] == '0') return -1;
  if (name[0] == 'x') return k <= leaf_dim() ? k - 1 : -1;
  return k <= n_ ? leaf_dim() + k - 1 : -1;
}

void require_same_chart(const ChartSpec& a, const ChartSpec& b, const char* what) {
  if (!(a == b)) {
    throw UsageError(std::string(what) + ": chart mismatch (s=" + std::to_string(a.s()) +
                     ", n=" + std::to_string(a.n()) + " vs s=" + std::to_string(b.s()) +
                     ", n=" + std::to_string(b.n()) + ")");
  }
}

}  // namespace leafcalc
