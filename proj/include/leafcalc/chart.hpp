#pragma once

#include <string>

namespace leafcalc {

// Hard cap on 2s + n; exponent vectors are stored inline.
inline constexpr int kMaxVariables = 16;

/// A trivialized chart around the leaf: leaf coordinates x1..x{2s} followed
/// by fiber coordinates y1..yn. Variable index i < 2s is x_{i+1}; the rest
/// are y_{i-2s+1}.
class ChartSpec {
 public:
  ChartSpec(int s, int n);

  int s() const noexcept { return s_; }
  int n() const noexcept { return n_; }
  int leaf_dim() const noexcept { return 2 * s_; }
  int num_vars() const noexcept { return 2 * s_ + n_; }

  bool is_leaf(int var) const noexcept { return var >= 0 && var < leaf_dim(); }
  bool is_fiber(int var) const noexcept { return var >= leaf_dim() && var < num_vars(); }
  bool valid(int var) const noexcept { return var >= 0 && var < num_vars(); }

  /// Variable index of y_{k+1} (k is 0-based).
  int fiber_var(int k) const noexcept { return leaf_dim() + k; }

  std::string var_name(int var) const;
  /// Inverse of var_name; returns -1 on unknown names.
  int var_index(const std::string& name) const;

  friend bool operator==(const ChartSpec&, const ChartSpec&) = default;

 private:
  int s_;
  int n_;
};

/// Throws UsageError when two objects live on different charts.
void require_same_chart(const ChartSpec& a, const ChartSpec& b, const char* what);

}  // namespace leafcalc
