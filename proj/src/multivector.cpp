#include "leafcalc/multivector.hpp"

#include <sstream>
#include <utility>

#include "leafcalc/error.hpp"

namespace leafcalc {

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  // Insertion sort: the tuples are tiny and we need the transposition count.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i - 1] == indices[i]) return 0;
  }
  return sign;
}

template <TensorKind Kind>
AlternatingTensor<Kind>::AlternatingTensor(ChartSpec chart, int degree) : chart_(chart), degree_(degree) {
  // Leaf forms above the leaf dimension are allowed; they are always zero.
  if (degree < 0 || degree > chart.num_vars()) {
    throw UsageError("tensor degree " + std::to_string(degree) + " out of range");
  }
}

template <TensorKind Kind>
AlternatingTensor<Kind> AlternatingTensor<Kind>::scalar(const RatFunc& f) {
  AlternatingTensor t(f.chart(), 0);
  t.add_term({}, f);
  return t;
}

template <TensorKind Kind>
AlternatingTensor<Kind> AlternatingTensor<Kind>::basis(ChartSpec chart, IndexTuple indices, const RatFunc& coeff) {
  AlternatingTensor t(chart, static_cast<int>(indices.size()));
  t.add_term(std::move(indices), coeff);
  return t;
}

template <TensorKind Kind>
void AlternatingTensor<Kind>::check_indices(const IndexTuple& indices) const {
  if (static_cast<int>(indices.size()) != degree_) {
    throw UsageError("index tuple of length " + std::to_string(indices.size()) + " for degree " +
                     std::to_string(degree_));
  }
  for (int i : indices) {
    const bool ok = Kind == TensorKind::kMultivector ? chart_.valid(i) : chart_.is_leaf(i);
    if (!ok) throw UsageError("index " + std::to_string(i) + " invalid for this tensor");
  }
}

template <TensorKind Kind>
void AlternatingTensor<Kind>::add_term(IndexTuple indices, const RatFunc& coeff) {
  check_indices(indices);
  require_same_chart(chart_, coeff.chart(), "tensor coefficient");
  if (coeff.is_zero()) return;
  const int sign = sort_with_sign(indices);
  if (sign == 0) return;
  auto it = terms_.find(indices);
  if (it == terms_.end()) {
    terms_.emplace(std::move(indices), sign > 0 ? coeff : -coeff);
    return;
  }
  if (sign > 0) {
    it->second += coeff;
  } else {
    it->second -= coeff;
  }
  if (it->second.is_zero()) terms_.erase(it);
}

template <TensorKind Kind>
RatFunc AlternatingTensor<Kind>::coefficient(IndexTuple indices) const {
  check_indices(indices);
  const int sign = sort_with_sign(indices);
  if (sign == 0) return RatFunc(chart_);
  auto it = terms_.find(indices);
  if (it == terms_.end()) return RatFunc(chart_);
  return sign > 0 ? it->second : -it->second;
}

template <TensorKind Kind>
AlternatingTensor<Kind>& AlternatingTensor<Kind>::operator+=(const AlternatingTensor& other) {
  require_same_chart(chart_, other.chart_, "tensor add");
  if (degree_ != other.degree_) throw UsageError("tensor add: degree mismatch");
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

template <TensorKind Kind>
AlternatingTensor<Kind>& AlternatingTensor<Kind>::operator-=(const AlternatingTensor& other) {
  require_same_chart(chart_, other.chart_, "tensor sub");
  if (degree_ != other.degree_) throw UsageError("tensor sub: degree mismatch");
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

template <TensorKind Kind>
AlternatingTensor<Kind> AlternatingTensor<Kind>::operator-() const {
  AlternatingTensor r = *this;
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

template <TensorKind Kind>
AlternatingTensor<Kind> AlternatingTensor<Kind>::scaled(const RatFunc& f) const {
  AlternatingTensor r(chart_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [idx, c] : terms_) r.add_term(idx, c * f);
  return r;
}

template class AlternatingTensor<TensorKind::kMultivector>;
template class AlternatingTensor<TensorKind::kLeafForm>;

Multivector vector_field(ChartSpec chart, const std::vector<RatFunc>& components) {
  if (static_cast<int>(components.size()) != chart.num_vars()) {
    throw UsageError("vector field needs one component per chart variable");
  }
  Multivector v(chart, 1);
  for (int i = 0; i < chart.num_vars(); ++i) v.add_term({i}, components[static_cast<std::size_t>(i)]);
  return v;
}

RatFunc component(const Multivector& field, int var) {
  if (field.degree() != 1) throw UsageError("component: expected a vector field");
  return field.coefficient({var});
}

bool is_vertical(const Multivector& w) {
  for (const auto& [idx, c] : w.terms()) {
    for (int i : idx) {
      if (!w.chart().is_fiber(i)) return false;
    }
  }
  return true;
}

namespace {

template <class Tensor>
std::string render(const Tensor& w, const char* prefix) {
  if (w.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : w.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (!idx.empty()) {
      out << " ";
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0) out << "^";
        out << prefix << w.chart().var_name(idx[k]);
      }
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const Multivector& w) { return render(w, "d/d"); }
std::string to_string(const LeafForm& w) { return render(w, "d"); }

bool Covector::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Covector Covector::unit(ChartSpec chart, int var) {
  Covector c(chart);
  c[var] = RatFunc(chart, 1);
  return c;
}

}  // namespace leafcalc
