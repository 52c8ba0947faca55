/// @file report.hpp
/// @brief Check records, JSON report emission and flow-trace CSV.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "plectic/flow_lab.hpp"

namespace plectic {

enum class CheckStatus { Pass, Fail, Undecided };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  /// Command that produced the record.
  std::string command;
  /// Name of the result being checked.
  std::string paper_ref;
  CheckStatus status = CheckStatus::Pass;
  std::optional<double> residual;
  std::string witness;
  double ms = 0.0;
};

struct Report {
  std::string scenario;
  int schema_version = 1;
  std::vector<CheckRecord> checks;

  bool has_failures() const;
  const CheckRecord* find(const std::string& id) const;
};

/// {scenario, schema_version, checks: [{id, paper_ref, status, residual, witness, ms}]}.
std::string to_json(const Report& report, int indent = 2);

/// Header "t,integral", 17 significant digits.
void write_trace_csv(std::ostream& out, const FlowTrace& trace);

/// One line per check: "PASS  id  witness".
void print_report(std::ostream& out, const Report& report);

}  // namespace plectic
