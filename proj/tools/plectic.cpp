#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "plectic/errors.hpp"
#include "plectic/runner.hpp"

namespace {

std::string csv_path(const std::string& out, const std::string& id, bool suffix) {
  if (!suffix) return out;
  std::filesystem::path p(out);
  auto stem = p.stem().string() + "-" + id;
  return (p.parent_path() / (stem + p.extension().string())).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy co-momentum maps, conservation classes and circulation experiments"};
  std::string command;
  std::string scenario_file;
  std::string builtin;
  std::optional<double> tol;
  std::optional<int> grid;
  std::string json_out;
  std::string csv_out;
  bool list = false;
  bool quiet = false;

  app.add_option("command", command, "verify-comomentum, classify, table, homology, reduce, extend-tilde, magnetic, "
                                     "circulate, drift, kelvin or all");
  auto* file_opt = app.add_option("--scenario", scenario_file, "Scenario JSON file")->check(CLI::ExistingFile);
  auto* builtin_opt = app.add_option("--builtin", builtin, "Built-in scenario name");
  file_opt->excludes(builtin_opt);
  app.add_option("--tol", tol, "Override every flow tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid", grid, "Override membrane node counts")->check(CLI::Range(8, 1 << 16));
  app.add_option("--json", json_out, "Write the JSON report here ('-' for stdout)");
  app.add_option("--csv", csv_out, "Write flow traces here; one file per experiment when several run");
  app.add_flag("--list", list, "List built-in scenarios");
  app.add_flag("-q,--quiet", quiet, "Suppress the text report");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& name : plectic::builtin_names()) std::cout << name << "\n";
    return 0;
  }
  if (command.empty()) {
    std::cerr << "a command is required\n" << app.help();
    return 2;
  }
  if (scenario_file.empty() == builtin.empty()) {
    std::cerr << "exactly one of --scenario or --builtin is required\n";
    return 2;
  }

  try {
    auto scenario = builtin.empty() ? plectic::load_scenario_file(scenario_file) : plectic::load_builtin(builtin);
    for (const auto& w : scenario.warnings) std::cerr << "warning: " << w << "\n";
    auto result = plectic::run(command, scenario, {tol, grid});

    if (!quiet && json_out != "-") plectic::print_report(std::cout, result.report);
    if (json_out == "-") {
      std::cout << plectic::to_json(result.report) << "\n";
    } else if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!out) throw plectic::Error("cannot write '" + json_out + "'");
      out << plectic::to_json(result.report) << "\n";
    }
    if (!csv_out.empty()) {
      const bool many = result.traces.size() > 1;
      for (const auto& [id, trace] : result.traces) {
        std::ofstream out(csv_path(csv_out, id, many));
        if (!out) throw plectic::Error("cannot write CSV for '" + id + "'");
        plectic::write_trace_csv(out, trace);
      }
    }
    return result.report.has_failures() ? 1 : 0;
  } catch (const plectic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
