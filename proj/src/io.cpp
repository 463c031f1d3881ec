#include "leafcalc/io.hpp"

#include "leafcalc/error.hpp"
#include "leafcalc/parse.hpp"

namespace leafcalc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  return j;
}

bool boolean(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path + ": expected true or false");
  return j.get<bool>();
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<int>();
}

RatFunc ratfunc_at(const ChartSpec& c, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return RatFunc(c, Rational(j.get<long>()));
  if (!j.is_string()) throw ParseError(path + ": expected a polynomial string");
  try {
    return parse_ratfunc(c, j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(path + ": expected a rational number");
  try {
    Rational q(j.get<std::string>());
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError(path + ": '" + j.get<std::string>() + "' is not a rational number");
  }
}

std::string p(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Json index_names(const ChartSpec& c, const IndexTuple& idx) {
  Json names = Json::array();
  for (int i : idx) names.push_back(c.var_name(i));
  return names;
}

IndexTuple indices_from(const ChartSpec& c, const Json& j, const std::string& path) {
  IndexTuple idx;
  array_at(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(p(path, i) + ": expected a variable name");
    const int v = c.var_index(j[i].get<std::string>());
    if (v < 0) throw ParseError(p(path, i) + ": unknown variable '" + j[i].get<std::string>() + "' for this chart");
    idx.push_back(v);
  }
  return idx;
}

template <class Tensor>
Json tensor_to_json(const Tensor& w) {
  Json out = Json::array();
  for (const auto& [idx, coeff] : w.terms()) {
    out.push_back({{"indices", index_names(w.chart(), idx)}, {"coeff", to_string(coeff)}});
  }
  return out;
}

template <class Tensor>
Tensor tensor_from_json(const ChartSpec& c, int degree, const Json& j, const std::string& path) {
  Tensor w(c, degree);
  array_at(j, path);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string here = p(path, t);
    const IndexTuple idx = indices_from(c, field(j[t], "indices", here), here + ".indices");
    if (static_cast<int>(idx.size()) != degree) {
      throw UsageError(here + ".indices: expected " + std::to_string(degree) + " indices, got " +
                       std::to_string(idx.size()));
    }
    try {
      w.add_term(idx, ratfunc_at(c, field(j[t], "coeff", here), here + ".coeff"));
    } catch (const UsageError& e) {
      throw UsageError(here + ": " + e.what());
    }
  }
  return w;
}

Json matrix_of(const std::vector<std::vector<std::string>>& rows) { return Json(rows); }

std::vector<std::vector<RatFunc>> ratfunc_matrix(const ChartSpec& c, const Json& j, std::size_t rows,
                                                 std::size_t cols, const std::string& path) {
  array_at(j, path);
  if (j.size() != rows) {
    throw UsageError(path + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  std::vector<std::vector<RatFunc>> m;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = p(path, r);
    array_at(j[r], row_path);
    if (j[r].size() != cols) {
      throw UsageError(row_path + ": expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
    }
    std::vector<RatFunc> row;
    for (std::size_t k = 0; k < cols; ++k) row.push_back(ratfunc_at(c, j[r][k], p(row_path, k)));
    m.push_back(std::move(row));
  }
  return m;
}

Json residual_to_json(const ChartSpec& c, const Residual& r) {
  Json out = {{"condition", r.condition}, {"indices", index_names(c, r.indices)}};
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        out["kind"] = std::is_same_v<T, Multivector> ? "multivector" : "leaf_form";
        out["degree"] = t.degree();
        out["terms"] = to_json(t);
      },
      r.value);
  return out;
}

Residual residual_from_json(const ChartSpec& c, const Json& j, const std::string& path) {
  Residual r{field(j, "condition", path).get<std::string>(), indices_from(c, field(j, "indices", path), path + ".indices"),
             Multivector(c, 0)};
  const std::string kind = field(j, "kind", path).get<std::string>();
  const int degree = integer(field(j, "degree", path), path + ".degree");
  if (kind == "multivector") {
    r.value = multivector_from_json(c, degree, field(j, "terms", path));
  } else if (kind == "leaf_form") {
    r.value = leaf_form_from_json(c, degree, field(j, "terms", path));
  } else {
    throw ParseError(path + ".kind: expected 'multivector' or 'leaf_form'");
  }
  return r;
}

Json obstruction_to_json(const std::optional<Obstruction>& o) {
  if (!o) return nullptr;
  return {{"degree", o->degree}, {"cocycle_degree", o->cocycle.degree()}, {"cocycle", to_json(o->cocycle)}};
}

std::optional<Obstruction> obstruction_from_json(const ChartSpec& c, const Json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  const int grade = integer(field(j, "cocycle_degree", path), path + ".cocycle_degree");
  return Obstruction{integer(field(j, "degree", path), path + ".degree"),
                     multivector_from_json(c, grade, field(j, "cocycle", path))};
}

}  // namespace

Json to_json(const ChartSpec& chart) { return {{"s", chart.s()}, {"n", chart.n()}}; }

ChartSpec chart_from_json(const Json& j) {
  const int s = integer(field(j, "s", "chart"), "chart.s");
  const int n = integer(field(j, "n", "chart"), "chart.n");
  return ChartSpec(s, n);
}

Json to_json(const Multivector& w) { return tensor_to_json(w); }

Multivector multivector_from_json(const ChartSpec& chart, int degree, const Json& j, const std::string& path) {
  return tensor_from_json<Multivector>(chart, degree, j, path);
}

Json to_json(const LeafForm& w) { return tensor_to_json(w); }

LeafForm leaf_form_from_json(const ChartSpec& chart, int degree, const Json& j, const std::string& path) {
  return tensor_from_json<LeafForm>(chart, degree, j, path);
}

Json to_json(const Connection& conn) {
  const ChartSpec& c = conn.chart();
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < c.leaf_dim(); ++i) {
    std::vector<std::string> row;
    for (int k = 0; k < c.n(); ++k) row.push_back(to_string(conn.beta(i, k)));
    rows.push_back(std::move(row));
  }
  return matrix_of(rows);
}

Connection connection_from_json(const ChartSpec& chart, const Json& j, const std::string& path) {
  const auto m = ratfunc_matrix(chart, j, sz(chart.leaf_dim()), sz(chart.n()), path);
  Connection conn(chart);
  for (int i = 0; i < chart.leaf_dim(); ++i) {
    for (int k = 0; k < chart.n(); ++k) conn.beta(i, k) = m[sz(i)][sz(k)];
  }
  return conn;
}

Json to_json(const GeometricData& data) {
  const ChartSpec& c = data.chart();
  std::vector<std::vector<std::string>> f;
  for (int i = 0; i < c.leaf_dim(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < c.leaf_dim(); ++j) row.push_back(to_string(data.leaf_form.coefficient({i, j})));
    f.push_back(std::move(row));
  }
  return {{"beta", to_json(data.conn)}, {"vert", to_json(data.vert)}, {"F", matrix_of(f)}};
}

GeometricData geometric_data_from_json(const ChartSpec& chart, const Json& j) {
  const std::string path = "data";
  Connection conn = connection_from_json(chart, field(j, "beta", path), "data.beta");
  Multivector vert = tensor_from_json<Multivector>(chart, 2, field(j, "vert", path), "data.vert");
  if (!is_vertical(vert)) throw UsageError("data.vert: every index must be a fiber variable");
  const auto f = ratfunc_matrix(chart, field(j, "F", path), sz(chart.leaf_dim()), sz(chart.leaf_dim()), "data.F");
  LeafForm form(chart, 2);
  for (int a = 0; a < chart.leaf_dim(); ++a) {
    if (!f[sz(a)][sz(a)].is_zero()) throw UsageError("data.F: diagonal entries must vanish");
    for (int b = a + 1; b < chart.leaf_dim(); ++b) {
      if (!(f[sz(a)][sz(b)] == -f[sz(b)][sz(a)])) throw UsageError("data.F: matrix must be antisymmetric");
      form.add_term({a, b}, f[sz(a)][sz(b)]);
    }
  }
  return GeometricData(std::move(conn), std::move(vert), std::move(form));
}

Json to_json(const GaugePotential& phi) {
  Json list = Json::array();
  for (int i = 0; i < phi.chart().leaf_dim(); ++i) list.push_back(to_string(phi[i]));
  return {{"phi", list}};
}

GaugePotential gauge_potential_from_json(const ChartSpec& chart, const Json& j) {
  const Json& list = array_at(field(j, "phi", "gauge"), "gauge.phi");
  if (static_cast<int>(list.size()) != chart.leaf_dim()) {
    throw UsageError("gauge.phi: expected " + std::to_string(chart.leaf_dim()) + " components, got " +
                     std::to_string(list.size()));
  }
  std::vector<RatFunc> phi;
  for (std::size_t i = 0; i < list.size(); ++i) phi.push_back(ratfunc_at(chart, list[i], p("gauge.phi", i)));
  return GaugePotential(chart, std::move(phi));
}

Json to_json(const LieAlgebraSpec& g) {
  Json c = Json::array();
  for (const auto& e : g.entries()) {
    c.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"value", e.value.get_str()}});
  }
  return {{"n", g.n()}, {"c", c}};
}

LieAlgebraSpec lie_algebra_from_json(const Json& j) {
  const std::string path = "lie_algebra";
  const int n = integer(field(j, "n", path), path + ".n");
  std::vector<LieAlgebraSpec::Entry> entries;
  const Json& list = array_at(field(j, "c", path), path + ".c");
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string here = p(path + ".c", t);
    entries.push_back({integer(field(list[t], "i", here), here + ".i") - 1,
                       integer(field(list[t], "j", here), here + ".j") - 1,
                       integer(field(list[t], "k", here), here + ".k") - 1,
                       rational_at(field(list[t], "value", here), here + ".value")});
  }
  return LieAlgebraSpec(n, entries);
}

Json to_json(const PoissonReport& r) {
  Json iv = Json::array();
  // Pair names need a chart; indices are stored 0-based and rendered as x names.
  for (const auto& [ij, holds] : r.cond_iv) {
    iv.push_back({{"pair", {"x" + std::to_string(ij.first + 1), "x" + std::to_string(ij.second + 1)}}, {"holds", holds}});
  }
  Json residuals = Json::array();
  for (const auto& res : r.residuals) {
    const ChartSpec& c = std::visit([](const auto& t) -> const ChartSpec& { return t.chart(); }, res.value);
    residuals.push_back(residual_to_json(c, res));
  }
  return {{"conditions", {{"i", r.cond_i}, {"ii", r.cond_ii}, {"iii", r.cond_iii}, {"iv", iv}}},
          {"oracle", r.oracle},
          {"conditions_hold", r.conditions_hold()},
          {"consistent", r.consistent()},
          {"residuals", residuals}};
}

PoissonReport poisson_report_from_json(const ChartSpec& chart, const Json& j) {
  const std::string path = "report";
  PoissonReport r;
  const Json& cond = field(j, "conditions", path);
  r.cond_i = boolean(field(cond, "i", path + ".conditions"), path + ".conditions.i");
  const Json& ii = array_at(field(cond, "ii", path + ".conditions"), path + ".conditions.ii");
  for (std::size_t k = 0; k < ii.size(); ++k) r.cond_ii.push_back(boolean(ii[k], p(path + ".conditions.ii", k)));
  r.cond_iii = boolean(field(cond, "iii", path + ".conditions"), path + ".conditions.iii");
  const Json& iv = array_at(field(cond, "iv", path + ".conditions"), path + ".conditions.iv");
  for (std::size_t k = 0; k < iv.size(); ++k) {
    const std::string here = p(path + ".conditions.iv", k);
    const IndexTuple pair = indices_from(chart, field(iv[k], "pair", here), here + ".pair");
    if (pair.size() != 2) throw ParseError(here + ".pair: expected two leaf variables");
    r.cond_iv[{pair[0], pair[1]}] = boolean(field(iv[k], "holds", here), here + ".holds");
  }
  r.oracle = boolean(field(j, "oracle", path), path + ".oracle");
  const Json& residuals = array_at(field(j, "residuals", path), path + ".residuals");
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    r.residuals.push_back(residual_from_json(chart, residuals[k], p(path + ".residuals", k)));
  }
  return r;
}

Json to_json(const SplittingReport& r) { return {{"flat", r.flat}, {"horizontal_poisson", r.horizontal_poisson}}; }

SplittingReport splitting_report_from_json(const Json& j) {
  return {boolean(field(j, "flat", "split"), "split.flat"),
          boolean(field(j, "horizontal_poisson", "split"), "split.horizontal_poisson")};
}

Json to_json(const CohomologyReport& r) {
  Json witnesses = Json::array();
  int n = 0;
  for (const auto& w : r.basis_witnesses) {
    witnesses.push_back(to_json(w));
    n = w.chart().n();
  }
  Json out = {{"degree", r.degree},
              {"dim_cocycles", r.dim_cocycles},
              {"dim_coboundaries", r.dim_coboundaries},
              {"dim_h1", r.dim_h1},
              {"basis_witnesses", witnesses}};
  if (n > 0) out["chart"] = to_json(ChartSpec(1, n));
  return out;
}

CohomologyReport cohomology_report_from_json(const Json& j) {
  const std::string path = "cohomology";
  CohomologyReport r;
  r.degree = integer(field(j, "degree", path), path + ".degree");
  r.dim_cocycles = integer(field(j, "dim_cocycles", path), path + ".dim_cocycles");
  r.dim_coboundaries = integer(field(j, "dim_coboundaries", path), path + ".dim_coboundaries");
  r.dim_h1 = integer(field(j, "dim_h1", path), path + ".dim_h1");
  const Json& witnesses = array_at(field(j, "basis_witnesses", path), path + ".basis_witnesses");
  if (!witnesses.empty()) {
    const ChartSpec c = chart_from_json(field(j, "chart", path));
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
      r.basis_witnesses.push_back(tensor_from_json<Multivector>(c, 1, witnesses[k], p(path + ".basis_witnesses", k)));
    }
  }
  return r;
}

Json to_json(const LinearizationResult& r) {
  Json generators = Json::array();
  for (const auto& g : r.generators) generators.push_back(to_json(g));
  return {{"success", r.success},
          {"achieved_degree", r.achieved_degree},
          {"generators", generators},
          {"transformed", to_json(r.transformed)},
          {"obstruction", obstruction_to_json(r.obstruction)}};
}

LinearizationResult linearization_result_from_json(const ChartSpec& chart, const Json& j) {
  const std::string path = "linearization";
  LinearizationResult r{boolean(field(j, "success", path), path + ".success"),
                        integer(field(j, "achieved_degree", path), path + ".achieved_degree"),
                        {},
                        tensor_from_json<Multivector>(chart, 2, field(j, "transformed", path), path + ".transformed"),
                        obstruction_from_json(chart, field(j, "obstruction", path), path + ".obstruction")};
  const Json& generators = array_at(field(j, "generators", path), path + ".generators");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    r.generators.push_back(tensor_from_json<Multivector>(chart, 1, generators[k], p(path + ".generators", k)));
  }
  return r;
}

Json to_json(const ConnectionChange& r) {
  return {{"solved", r.solved}, {"phi", to_json(r.phi)["phi"]}, {"obstruction", obstruction_to_json(r.obstruction)}};
}

ConnectionChange connection_change_from_json(const ChartSpec& chart, const Json& j) {
  const std::string path = "connection_change";
  return {boolean(field(j, "solved", path), path + ".solved"),
          gauge_potential_from_json(chart, Json{{"phi", field(j, "phi", path)}}),
          obstruction_from_json(chart, field(j, "obstruction", path), path + ".obstruction")};
}

Json to_json(const SemilocalReport& r) {
  Json cohomology = Json::array();
  for (const auto& h : r.cohomology) cohomology.push_back(to_json(h));
  return {{"conditions", to_json(r.conditions)},
          {"cohomology", cohomology},
          {"vertical", to_json(r.vertical)},
          {"linear_connection", to_json(r.linear_connection)},
          {"linear_connection_invariant", r.linear_connection_invariant},
          {"success", r.success}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    // Drop nlohmann's own position prefix; ours is more precise.
    if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(message, line, column);
  }
}

}  // namespace leafcalc
