#include "plectic/report.hpp"

#include <algorithm>
#include <iomanip>

#include "json.hpp"

namespace plectic {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Undecided:
      return "undecided";
  }
  return "undecided";
}

bool Report::has_failures() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

const CheckRecord* Report::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string to_json(const Report& report, int indent) {
  nlohmann::ordered_json j;
  j["scenario"] = report.scenario;
  j["schema_version"] = report.schema_version;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["paper_ref"] = c.paper_ref;
    r["status"] = to_string(c.status);
    if (c.residual) r["residual"] = *c.residual;
    else r["residual"] = nullptr;
    r["witness"] = c.witness;
    r["ms"] = c.ms;
    j["checks"].push_back(std::move(r));
  }
  return j.dump(indent);
}

void write_trace_csv(std::ostream& out, const FlowTrace& trace) {
  out << "t,integral\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < trace.times.size(); ++i) out << trace.times[i] << ',' << trace.integrals[i] << '\n';
}

void print_report(std::ostream& out, const Report& report) {
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  out << report.scenario << '\n';
  for (const auto& c : report.checks) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    out << "  " << std::left << std::setw(10) << status << std::setw(static_cast<int>(width) + 2) << c.id << c.witness
        << '\n';
  }
}

}  // namespace plectic
