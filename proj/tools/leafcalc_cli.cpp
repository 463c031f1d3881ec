#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "leafcalc/error.hpp"
#include "leafcalc/scenario.hpp"

namespace {

int fail(const std::string& message) {
  std::cerr << "leafcalc: " << message << "\n";
  return leafcalc::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus for Poisson structures near a symplectic leaf"};
  std::string in_path;
  std::string out_path;
  std::string format = "text";
  std::string example;
  std::string command;
  std::string emit_path;
  int max_degree = 0;
  std::uint64_t seed = 0;
  bool list = false;

  app.add_option("--in", in_path, "Scenario file (JSON)");
  app.add_option("--out", out_path, "Write the JSON report here");
  app.add_option("--format", format, "Standard output format")->check(CLI::IsMember({"json", "text"}));
  auto* degree_opt = app.add_option("--max-degree", max_degree, "Truncation degree D")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Use a random coupling with this seed as input");
  auto* example_opt = app.add_option("--example", example, "Use a catalog example as input");
  auto* command_opt = app.add_option("--command", command, "Command to run (default check without --in)");
  app.add_option("--emit-scenario", emit_path, "Write the --example input as a scenario file and exit")->needs(example_opt);
  app.add_flag("--list-examples", list, "Print the example catalog and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : leafcalc::kExitUsage;
  }

  if (list) {
    for (const auto& name : leafcalc::example_names()) {
      std::cout << name << "  " << leafcalc::get_example(name).description << "\n";
    }
    return leafcalc::kExitOk;
  }

  leafcalc::Json scenario = leafcalc::Json::object();
  if (!in_path.empty()) {
    std::ifstream file(in_path);
    if (!file) return fail("cannot open " + in_path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
      scenario = leafcalc::parse_json_text(buffer.str());
    } catch (const leafcalc::ParseError& e) {
      return fail(in_path + ": " + e.what());
    }
    if (!scenario.is_object()) return fail(in_path + ": expected a JSON object");
  }
  if (*command_opt) scenario["command"] = command;
  if (!scenario.contains("command")) scenario["command"] = "check";
  if (*degree_opt) scenario["parameters"]["max_degree"] = max_degree;
  if (*example_opt || *seed_opt) {
    for (const char* key : {"bivector", "data", "example", "random"}) scenario.erase(key);
  }
  if (*example_opt) scenario["example"] = example;
  if (*seed_opt) {
    if (*example_opt) return fail("--seed and --example both name an input");
    if (!scenario.contains("chart")) scenario["chart"] = {{"s", 1}, {"n", 2}};
    scenario["random"] = {{"seed", seed}, {"max_degree", 2}};
  }

  if (!emit_path.empty()) {
    std::optional<leafcalc::NamedExample> ex;
    try {
      ex = leafcalc::get_example(example);
    } catch (const leafcalc::Error& e) {
      return fail(e.what());
    }
    const int d = *degree_opt ? max_degree : 4;
    std::ofstream out(emit_path);
    if (!out) return fail("cannot write " + emit_path);
    out << leafcalc::example_scenario(*ex, scenario["command"].get<std::string>(), d).dump(2) << "\n";
    return leafcalc::kExitOk;
  }

  const leafcalc::ScenarioOutcome outcome = leafcalc::run_scenario(scenario);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) return fail("cannot write " + out_path);
    out << outcome.report.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << outcome.report.dump(2) << "\n";
  } else if (outcome.exit_code == leafcalc::kExitUsage) {
    std::cerr << outcome.summary;
  } else {
    std::cout << outcome.summary;
  }
  return outcome.exit_code;
}
