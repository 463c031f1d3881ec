#include "leafcalc/scenario.hpp"

#include <optional>
#include <sstream>

#include "leafcalc/error.hpp"
#include "leafcalc/tensor_calc.hpp"

namespace leafcalc {

namespace {

const char* const kCommands[] = {"extract", "reconstruct", "check", "split",
                                 "gauge", "linearize", "cohomology", "connection-change"};
constexpr int kDefaultMaxDegree = 4;

struct Input {
  std::optional<ChartSpec> chart;
  std::optional<Multivector> pi;
  std::optional<GeometricData> data;

  const Multivector& bivector() {
    if (!pi) pi = reconstruct(*data);
    return *pi;
  }
  const GeometricData& geometric_data() {
    if (!data) data = extract_geometric_data(*pi);
    return *data;
  }
  bool present() const { return pi.has_value() || data.has_value(); }
};

struct Context {
  std::string command;
  Input input;
  Json params = Json::object();
  int max_degree = kDefaultMaxDegree;
};

/// A verified negative result; carries the partial report.
struct Negative {
  Json result;
  std::string summary;
};

struct Success {
  Json result;
  std::string summary;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

int int_param(const Json& params, const char* key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (!it->is_number_integer()) throw ParseError(std::string("parameters.") + key + ": expected an integer");
  return it->get<int>();
}

void require_input(Context& ctx) {
  if (!ctx.input.present()) throw UsageError("command '" + ctx.command + "' needs a bivector, data, example or random input");
}

Input read_input(const Json& scenario) {
  Input in;
  if (auto it = scenario.find("chart"); it != scenario.end()) in.chart = chart_from_json(*it);

  int count = 0;
  for (const char* key : {"bivector", "data", "example", "random"}) count += scenario.contains(key) ? 1 : 0;
  if (count > 1) throw UsageError("scenario: give at most one of bivector, data, example, random");

  if (auto it = scenario.find("example"); it != scenario.end()) {
    if (!it->is_string()) throw ParseError("example: expected an example name");
    NamedExample ex = get_example(it->get<std::string>());
    if (in.chart && !(*in.chart == ex.chart)) {
      throw UsageError("chart: scenario has s = " + std::to_string(in.chart->s()) + ", n = " +
                       std::to_string(in.chart->n()) + " but example '" + ex.name + "' has s = " +
                       std::to_string(ex.chart.s()) + ", n = " + std::to_string(ex.chart.n()));
    }
    in.chart = ex.chart;
    in.pi = ex.pi;
    return in;
  }
  if (count == 0) return in;
  if (!in.chart) throw ParseError("scenario: missing field 'chart'");
  if (auto it = scenario.find("bivector"); it != scenario.end()) {
    in.pi = multivector_from_json(*in.chart, 2, *it, "bivector");
  } else if (auto it = scenario.find("data"); it != scenario.end()) {
    in.data = geometric_data_from_json(*in.chart, *it);
  } else {
    const Json& r = scenario.at("random");
    if (!r.is_object() || !r.contains("seed")) throw ParseError("random: missing field 'seed'");
    if (!r["seed"].is_number_integer()) throw ParseError("random.seed: expected an integer");
    const int degree = int_param(r, "max_degree", 2);
    in.pi = random_coupling(r["seed"].get<std::uint64_t>(), in.chart->s(), in.chart->n(), degree);
  }
  return in;
}

std::string describe_chart(const ChartSpec& c) {
  return "chart s = " + std::to_string(c.s()) + ", n = " + std::to_string(c.n());
}

std::string conditions_text(const ChartSpec& c, const PoissonReport& r) {
  std::ostringstream out;
  out << "(i)   [V, V] = 0, vertical part is Poisson: " << yes_no(r.cond_i) << "\n";
  out << "(ii)  L_hor(d/dx_i) V = 0, connection preserves V:";
  for (std::size_t i = 0; i < r.cond_ii.size(); ++i) out << " " << c.var_name(static_cast<int>(i)) << "=" << yes_no(r.cond_ii[i]);
  out << "\n";
  out << "(iii) covariant derivative of F vanishes: " << yes_no(r.cond_iii) << "\n";
  out << "(iv)  Curv(d/dx_i, d/dx_j) = -V#(dF_ij):";
  for (const auto& [ij, holds] : r.cond_iv) {
    out << " (" << c.var_name(ij.first) << "," << c.var_name(ij.second) << ")=" << yes_no(holds);
  }
  out << "\n";
  out << "oracle [Pi, Pi] = 0: " << yes_no(r.oracle) << "\n";
  for (const auto& res : r.residuals) {
    out << "  residual (" << res.condition << ")";
    for (int i : res.indices) out << " " << c.var_name(i);
    out << ": " << std::visit([](const auto& t) { return to_string(t); }, res.value) << "\n";
  }
  return out.str();
}

std::optional<LieAlgebraSpec> lie_algebra_param(const Context& ctx) {
  auto it = ctx.params.find("lie_algebra");
  if (it == ctx.params.end()) return std::nullopt;
  if (it->is_object()) return lie_algebra_from_json(*it);
  if (!it->is_string()) throw ParseError("parameters.lie_algebra: expected an object or a name");
  const std::string name = it->get<std::string>();
  if (name == "so3") return LieAlgebraSpec::so3();
  if (name == "sl2") return LieAlgebraSpec::sl2();
  if (name == "abelian") {
    if (!ctx.input.chart) throw UsageError("parameters.lie_algebra: 'abelian' needs a chart for its dimension");
    return LieAlgebraSpec::abelian(ctx.input.chart->n());
  }
  throw UsageError("parameters.lie_algebra: unknown algebra '" + name + "'");
}

std::vector<int> degrees_param(const Context& ctx) {
  std::vector<int> degrees;
  auto it = ctx.params.find("degrees");
  if (it == ctx.params.end()) {
    for (int d = 0; d <= ctx.max_degree; ++d) degrees.push_back(d);
    return degrees;
  }
  if (!it->is_array()) throw ParseError("parameters.degrees: expected an array of integers");
  for (const auto& d : *it) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("parameters.degrees: expected non-negative integers");
    degrees.push_back(d.get<int>());
  }
  return degrees;
}

std::variant<Success, Negative> run_extract(Context& ctx) {
  require_input(ctx);
  if (!ctx.input.pi) throw UsageError("extract takes a bivector, example or random input");
  if (!is_horizontally_nondegenerate(*ctx.input.pi)) {
    return Negative{{{"horizontally_nondegenerate", false}}, "leaf block is degenerate; no geometric data\n"};
  }
  const GeometricData& data = ctx.input.geometric_data();
  std::ostringstream out;
  out << "horizontally non-degenerate: true\n";
  for (int i = 0; i < data.chart().leaf_dim(); ++i) {
    out << "hor(d/d" << data.chart().var_name(i) << ") = " << to_string(horizontal_lift(data.conn, i)) << "\n";
  }
  out << "V = " << to_string(data.vert) << "\n";
  out << "F = " << to_string(data.leaf_form) << "\n";
  return Success{{{"horizontally_nondegenerate", true}, {"data", to_json(data)}}, out.str()};
}

std::variant<Success, Negative> run_reconstruct(Context& ctx) {
  require_input(ctx);
  if (!ctx.input.data) throw UsageError("reconstruct takes a data input");
  try {
    const Multivector& pi = ctx.input.bivector();
    return Success{{{"bivector", to_json(pi)}}, "Pi = " + to_string(pi) + "\n"};
  } catch (const DataDegeneracyError&) {
    return Negative{{{"leaf_form_nondegenerate", false}}, "leaf form F is degenerate; no bivector\n"};
  }
}

std::variant<Success, Negative> run_check(Context& ctx) {
  require_input(ctx);
  const PoissonReport r = check_conditions(ctx.input.geometric_data());
  const std::string text = conditions_text(*ctx.input.chart, r);
  if (r.conditions_hold() && r.oracle) return Success{to_json(r), text + "Poisson: true\n"};
  return Negative{to_json(r), text + "Poisson: false\n"};
}

std::variant<Success, Negative> run_split(Context& ctx) {
  require_input(ctx);
  const GeometricData& data = ctx.input.geometric_data();
  const PoissonReport r = check_conditions(data);
  const std::string text = conditions_text(*ctx.input.chart, r);
  if (!r.conditions_hold()) return Negative{{{"conditions", to_json(r)}}, text + "not Poisson; no splitting\n"};
  const SplittingReport s = check_splitting(data);
  std::ostringstream out;
  out << text << "connection flat: " << yes_no(s.flat) << "\n"
      << "[Pi_H, Pi_H] = 0: " << yes_no(s.horizontal_poisson) << "\n";
  return Success{{{"conditions", to_json(r)}, {"split", to_json(s)}}, out.str()};
}

std::variant<Success, Negative> run_gauge(Context& ctx) {
  require_input(ctx);
  auto it = ctx.params.find("phi");
  if (it == ctx.params.end()) throw UsageError("gauge needs parameters.phi");
  const GeometricData& data = ctx.input.geometric_data();
  const GaugePotential phi = gauge_potential_from_json(data.chart(), Json{{"phi", *it}});
  GeometricData moved(data.chart());
  try {
    moved = apply_gauge(data, phi);
  } catch (const DataDegeneracyError&) {
    return Negative{{{"leaf_form_nondegenerate", false}}, "transformed leaf form is degenerate\n"};
  }
  const PoissonReport r = check_conditions(moved);
  const bool hypotheses = check_gauge_hypotheses(data, moved, phi);
  Json result = {{"data", to_json(moved)},
                 {"bivector", to_json(reconstruct(moved))},
                 {"conditions", to_json(r)},
                 {"hypotheses", hypotheses}};
  std::ostringstream out;
  out << "Pi' = " << to_string(reconstruct(moved)) << "\n"
      << conditions_text(moved.chart(), r) << "vertical part unchanged, leaf restriction of F kept: " << yes_no(hypotheses)
      << "\n";
  if (r.conditions_hold() && r.oracle) return Success{result, out.str()};
  return Negative{result, out.str()};
}

std::variant<Success, Negative> run_linearize(Context& ctx) {
  require_input(ctx);
  const Multivector& pi = ctx.input.bivector();
  const PoissonReport r = check_conditions(ctx.input.geometric_data());
  const std::string text = conditions_text(*ctx.input.chart, r);
  if (!r.conditions_hold()) return Negative{{{"conditions", to_json(r)}}, text + "not Poisson; nothing to linearize\n"};
  const SemilocalReport rep = semilocal_linearization(pi, ctx.max_degree);
  std::ostringstream out;
  out << text;
  for (const auto& h : rep.cohomology) out << "dim H1 at degree " << h.degree << ": " << h.dim_h1 << "\n";
  out << "vertical part linearized up to degree " << rep.vertical.achieved_degree << " of " << ctx.max_degree << "\n";
  for (const auto& g : rep.vertical.generators) out << "  generator " << to_string(g) << "\n";
  out << "linearized V = " << to_string(rep.vertical.transformed) << "\n";
  if (rep.vertical.obstruction) {
    out << "obstruction at degree " << rep.vertical.obstruction->degree << ": " << to_string(rep.vertical.obstruction->cocycle)
        << "\n";
  }
  out << "linear connection leaves V^(1) invariant: " << yes_no(rep.linear_connection_invariant) << "\n"
      << "linearizable: " << yes_no(rep.success) << "\n";
  if (rep.success) return Success{to_json(rep), out.str()};
  return Negative{to_json(rep), out.str()};
}

std::variant<Success, Negative> run_cohomology(Context& ctx) {
  std::optional<LieAlgebraSpec> g = lie_algebra_param(ctx);
  if (!g) {
    require_input(ctx);
    const Multivector linear = jet_split(ctx.input.geometric_data().vert).part(1);
    g = linear.is_zero() ? LieAlgebraSpec::abelian(ctx.input.chart->n()) : LieAlgebraSpec::from_bivector(linear);
  }
  Json reports = Json::array();
  std::ostringstream out;
  bool trivial = true;
  for (int d : degrees_param(ctx)) {
    const CohomologyReport h = h1_graded(*g, d);
    trivial = trivial && h.dim_h1 == 0;
    reports.push_back(to_json(h));
    out << "degree " << d << ": cocycles " << h.dim_cocycles << ", coboundaries " << h.dim_coboundaries
        << ", dim H1 " << h.dim_h1 << "\n";
    for (const auto& w : h.basis_witnesses) out << "  witness " << to_string(w) << "\n";
  }
  Json result = {{"lie_algebra", to_json(*g)}, {"cohomology", reports}};
  if (trivial) return Success{result, out.str()};
  return Negative{result, out.str()};
}

std::variant<Success, Negative> run_connection_change(Context& ctx) {
  require_input(ctx);
  const GeometricData& data = ctx.input.geometric_data();
  Connection target(data.chart());
  if (auto it = ctx.params.find("target_beta"); it != ctx.params.end()) {
    target = connection_from_json(data.chart(), *it, "parameters.target_beta");
  }
  const ConnectionChange change = solve_connection_change(data, target, ctx.max_degree);
  Json result = to_json(change);
  std::ostringstream out;
  if (!change.solved) {
    out << "no potential: obstruction at degree " << change.obstruction->degree << ": "
        << to_string(change.obstruction->cocycle) << "\n";
    return Negative{result, out.str()};
  }
  bool verified = false;
  try {
    verified = apply_gauge(data, change.phi).conn == target;
  } catch (const DataDegeneracyError&) {
  }
  result["verified"] = verified;
  for (int i = 0; i < data.chart().leaf_dim(); ++i) {
    out << "phi_" << i + 1 << " = " << to_string(change.phi[i]) << "\n";
  }
  out << "apply_gauge reaches the target connection: " << yes_no(verified) << "\n";
  if (verified) return Success{result, out.str()};
  return Negative{result, out.str()};
}

std::variant<Success, Negative> dispatch(Context& ctx) {
  if (ctx.command == "extract") return run_extract(ctx);
  if (ctx.command == "reconstruct") return run_reconstruct(ctx);
  if (ctx.command == "check") return run_check(ctx);
  if (ctx.command == "split") return run_split(ctx);
  if (ctx.command == "gauge") return run_gauge(ctx);
  if (ctx.command == "linearize") return run_linearize(ctx);
  if (ctx.command == "cohomology") return run_cohomology(ctx);
  return run_connection_change(ctx);
}

ScenarioOutcome error_outcome(const std::string& kind, const std::string& message) {
  return {kExitUsage, {{"status", "error"}, {"error_kind", kind}, {"error", message}}, kind + " error: " + message + "\n"};
}

}  // namespace

ScenarioOutcome run_scenario(const Json& scenario) {
  try {
    if (!scenario.is_object()) throw ParseError("scenario: expected a JSON object");
    Context ctx;
    auto cmd = scenario.find("command");
    if (cmd == scenario.end()) throw ParseError("scenario: missing field 'command'");
    if (!cmd->is_string()) throw ParseError("command: expected a string");
    ctx.command = cmd->get<std::string>();
    bool known = false;
    for (const char* c : kCommands) known = known || ctx.command == c;
    if (!known) throw UsageError("command: unknown command '" + ctx.command + "'");
    if (auto it = scenario.find("parameters"); it != scenario.end()) {
      if (!it->is_object()) throw ParseError("parameters: expected an object");
      ctx.params = *it;
    }
    ctx.max_degree = int_param(ctx.params, "max_degree", kDefaultMaxDegree);
    if (ctx.max_degree < 1) throw UsageError("parameters.max_degree: must be at least 1");
    ctx.input = read_input(scenario);

    const auto outcome = dispatch(ctx);
    const bool ok = std::holds_alternative<Success>(outcome);
    const Json& result = ok ? std::get<Success>(outcome).result : std::get<Negative>(outcome).result;
    const std::string& text = ok ? std::get<Success>(outcome).summary : std::get<Negative>(outcome).summary;
    Json report = {{"command", ctx.command}, {"status", ok ? "ok" : "negative"}, {"result", result}};
    if (ctx.input.chart) report["chart"] = to_json(*ctx.input.chart);
    std::string header = ctx.command;
    if (ctx.input.chart) header += " on " + describe_chart(*ctx.input.chart);
    return {ok ? kExitOk : kExitNegative, report, header + "\n" + text};
  } catch (const HorizontalDegeneracyError& e) {
    return {kExitNegative,
            {{"status", "negative"}, {"result", {{"horizontally_nondegenerate", false}}}, {"error", e.what()}},
            std::string("leaf block is degenerate: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return error_outcome("parse", e.what());
  } catch (const Error& e) {
    return error_outcome("usage", e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_outcome("parse", e.what());
  }
}

Json example_scenario(const NamedExample& example, const std::string& command, int max_degree) {
  return {{"chart", to_json(example.chart)},
          {"command", command},
          {"bivector", to_json(example.pi)},
          {"parameters", {{"max_degree", max_degree}}}};
}

}  // namespace leafcalc
