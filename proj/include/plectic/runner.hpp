/// @file runner.hpp
/// @brief Command dispatch over a loaded scenario.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plectic/report.hpp"
#include "plectic/scenario.hpp"

namespace plectic {

struct RunOptions {
  /// Overrides every flow tolerance.
  std::optional<double> tol;
  /// Overrides the node count of every membrane direction.
  std::optional<int> grid;
};

struct RunResult {
  Report report;
  /// Flow traces by experiment id.
  std::vector<std::pair<std::string, FlowTrace>> traces;
};

/// verify-comomentum, classify, table, homology, reduce, extend-tilde, magnetic, circulate, drift, kelvin, all.
const std::vector<std::string>& command_names();

/// Commands that lack their inputs in the scenario contribute no records. Expected-result entries for the
/// command add one "expect.<id>" record each. Throws PreconditionFailed for an unknown command.
RunResult run(const std::string& command, const Scenario& scenario, const RunOptions& options = {});

}  // namespace plectic
