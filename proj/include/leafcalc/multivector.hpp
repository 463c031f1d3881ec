#pragma once

#include <map>
#include <string>
#include <vector>

#include "leafcalc/ratfunc.hpp"

namespace leafcalc {

/// Strictly increasing list of variable indices naming a basis element
/// (∂_{i1}∧...∧∂_{ik} for multivectors, dx_{i1}∧...∧dx_{ik} for leaf forms).
using IndexTuple = std::vector<int>;

/// Sorts indices in place and returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexTuple& indices);

enum class TensorKind {
  kMultivector,  // indices range over all chart variables
  kLeafForm,     // indices range over leaf variables only
};

/// Sparse alternating tensor over a chart: a map from strictly increasing index
/// tuples of fixed length to nonzero rational functions.
template <TensorKind Kind>
class AlternatingTensor {
 public:
  using TermMap = std::map<IndexTuple, RatFunc>;

  AlternatingTensor(ChartSpec chart, int degree);

  /// Degree-0 tensor holding a single function.
  static AlternatingTensor scalar(const RatFunc& f);
  /// coeff * (e_{i1} ∧ ... ∧ e_{ik}); indices in any order.
  static AlternatingTensor basis(ChartSpec chart, IndexTuple indices, const RatFunc& coeff);

  const ChartSpec& chart() const noexcept { return chart_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * e_indices, reordering indices with the permutation sign.
  void add_term(IndexTuple indices, const RatFunc& coeff);
  /// Signed coefficient for indices in any order (0 on a repeated index).
  RatFunc coefficient(IndexTuple indices) const;

  AlternatingTensor& operator+=(const AlternatingTensor& other);
  AlternatingTensor& operator-=(const AlternatingTensor& other);
  AlternatingTensor operator-() const;
  AlternatingTensor scaled(const RatFunc& f) const;

  friend AlternatingTensor operator+(AlternatingTensor a, const AlternatingTensor& b) { return a += b; }
  friend AlternatingTensor operator-(AlternatingTensor a, const AlternatingTensor& b) { return a -= b; }
  /// Exact: a == b iff a - b has no terms.
  friend bool operator==(const AlternatingTensor& a, const AlternatingTensor& b) { return (a - b).is_zero(); }

 private:
  void check_indices(const IndexTuple& indices) const;

  ChartSpec chart_;
  int degree_;
  TermMap terms_;
};

/// Multivector field Σ f_I ∂_I; houses bivectors, vector fields, trivectors.
using Multivector = AlternatingTensor<TensorKind::kMultivector>;
/// k-form on the leaf with values in functions on the total space.
using LeafForm = AlternatingTensor<TensorKind::kLeafForm>;

extern template class AlternatingTensor<TensorKind::kMultivector>;
extern template class AlternatingTensor<TensorKind::kLeafForm>;

/// Vector field from a full component list (one entry per chart variable).
Multivector vector_field(ChartSpec chart, const std::vector<RatFunc>& components);
/// Component of a vector field along variable var.
RatFunc component(const Multivector& field, int var);

/// True when every index of every term is a fiber variable.
bool is_vertical(const Multivector& w);

std::string to_string(const Multivector& w);
std::string to_string(const LeafForm& w);

/// A covector (1-form on the total space) given by its components.
class Covector {
 public:
  explicit Covector(ChartSpec chart) : chart_(chart), components_(static_cast<std::size_t>(chart.num_vars()), RatFunc(chart)) {}

  const ChartSpec& chart() const noexcept { return chart_; }
  const RatFunc& operator[](int var) const { return components_.at(static_cast<std::size_t>(var)); }
  RatFunc& operator[](int var) { return components_.at(static_cast<std::size_t>(var)); }
  bool is_zero() const;

  /// d(x_var) or d(y_...) as a unit covector.
  static Covector unit(ChartSpec chart, int var);

 private:
  ChartSpec chart_;
  std::vector<RatFunc> components_;
};

}  // namespace leafcalc
