#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "plectic/errors.hpp"
#include "plectic/expression.hpp"
#include "plectic/runner.hpp"
#include "plectic/scenario.hpp"

using namespace plectic;

namespace {

const CheckRecord& record(const Report& r, const std::string& id) {
  const CheckRecord* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return *c;
}

std::string minimal(const std::string& extra) {
  return R"({"schema_version": 1, "name": "t", "chart": ["x", "y", "z"], "omega": "dx^dy^dz")" + extra + "}";
}

}  // namespace

TEST_CASE("built-in names") {
  const std::vector<std::string> required{"example-1.2",        "example-1.2-symplectic", "example-1.3-wedge",
                                          "example-2.17",       "example-2.4-strict",     "remark-2.24",
                                          "magnetic-line",      "magnetic-r3",            "sl2-counterexample",
                                          "kelvin-rotation",    "kelvin-time-dependent",  "drift-point"};
  auto names = builtin_names();
  for (const auto& n : required) CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(builtin_text("example-9.9"), SchemaError);
}

TEST_CASE("every built-in passes all commands with its expected block satisfied") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto s = load_builtin(name);
    CHECK(s.name == name);
    auto r = run("all", s).report;
    CHECK_FALSE(r.has_failures());
    for (const auto& x : s.expected) {
      const CheckRecord* c = r.find("expect." + x.id);
      REQUIRE(c != nullptr);
      CHECK(c->status == CheckStatus::Pass);
    }
    for (const auto& c : r.checks) {
      if (c.status == CheckStatus::Fail) MESSAGE(c.id << ": " << c.witness);
    }
  }
}

TEST_CASE("bundled expressions round-trip through the printer") {
  for (const auto& name : builtin_names()) {
    auto s = load_builtin(name);
    for (const auto& [text, chart] : s.expressions) {
      CAPTURE(text);
      auto e = parse_expression(text, chart);
      if (e.kind == Expression::Kind::Form) {
        CHECK(parse_form(e.form.to_string(), chart) == e.form);
      } else {
        CHECK(parse_vector_field(e.field.to_string(), chart) == e.field);
      }
    }
  }
}

TEST_CASE("table on the translation-pair builtin") {
  auto r = run("table", load_builtin("example-2.17")).report;
  CHECK(record(r, "table.Z2").witness == "local");
  CHECK(record(r, "table.B2").witness == "vacuous");
  CHECK(record(r, "table.Z2").status == CheckStatus::Pass);
  for (const auto& c : r.checks) CHECK(c.command == "table");
}

TEST_CASE("sl2 counterexample passes under all") {
  auto r = run("all", load_builtin("sl2-counterexample")).report;
  CHECK_FALSE(r.has_failures());
  CHECK(record(r, "sl2.nonconstant").status == CheckStatus::Pass);
  CHECK(record(r, "sl2.polynomial").witness == "2*beta*delta");
}

TEST_CASE("circulate on kelvin-rotation") {
  auto res = run("circulate", load_builtin("kelvin-rotation"));
  const auto& inv = record(res.report, "flow.rotation.invariance");
  CHECK(inv.status == CheckStatus::Pass);
  REQUIRE(inv.residual);
  CHECK(*inv.residual <= 1e-8);
  CHECK(std::stod(record(res.report, "flow.rotation.value").witness) ==
        doctest::Approx(2 * std::numbers::pi).epsilon(1e-10));
  CHECK(res.traces.size() == 3);
}

TEST_CASE("overrides and undecided records") {
  RunOptions opts;
  opts.grid = 32;
  auto r = run("circulate", load_builtin("kelvin-rotation"), opts).report;
  CHECK_FALSE(r.has_failures());
  opts.tol = 1e-30;
  r = run("circulate", load_builtin("kelvin-rotation"), opts).report;
  CHECK(record(r, "flow.rotation.invariance").status == CheckStatus::Fail);

  r = run("extend-tilde", load_builtin("remark-2.24")).report;
  CHECK(record(r, "tilde.extension").status == CheckStatus::Undecided);
  CHECK_FALSE(r.has_failures());
  CHECK_THROWS_AS(run("bogus", load_builtin("example-1.2")), PreconditionFailed);
}

TEST_CASE("a wrong expected witness yields a fail record") {
  auto s = load_scenario(minimal(R"(, "hamiltonian": {"form": "x*dy"},
      "expected": [{"command": "classify", "id": "hamiltonian.field", "witness": "d/dx"},
                   {"command": "classify", "id": "missing.check"}])"));
  auto r = run("classify", s).report;
  CHECK(record(r, "expect.hamiltonian.field").status == CheckStatus::Fail);
  CHECK(record(r, "expect.missing.check").status == CheckStatus::Fail);
  CHECK(run("table", s).report.checks.empty());
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(load_scenario("{"), SchemaError);
  CHECK_THROWS_AS(load_scenario(R"({"name": "t"})"), SchemaError);
  CHECK_THROWS_AS(load_scenario(R"({"schema_version": 2, "name": "t"})"), SchemaError);
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "colour": "red")")), SchemaError);
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "hamiltonian": {"form": "x"})")), SchemaError);
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "algebra": {"builtin": "e8"})")), SchemaError);
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "algebra": {"builtin": "abelian", "basis": ["a"]},
      "generators": ["d/dx"], "comomentum": {"q": "y*dz"})")),
                  SchemaError);
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "flows": [{"id": "f", "mode": "drift", "field": "d/dx", "form": "x*dy",
      "membrane": {"type": "points", "points": [[0, 0, 0]]}}])")),
                  SchemaError);
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "flows": [{"id": "f", "mode": "circulate", "time_dependent": true,
      "field": "d/dx", "form": "dx", "membrane": {"type": "circle"}}])")),
                  SchemaError);
}

TEST_CASE("expression errors carry the field and position") {
  try {
    load_scenario(minimal(R"(, "hamiltonian": {"form": "x*dy + w"})"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("hamiltonian") != std::string::npos);
  }
  CHECK_THROWS_AS(load_scenario(minimal(R"(, "algebra": {"builtin": "abelian", "basis": ["a"]},
      "generators": ["x*d/dx"])")),
                  PreconditionFailed);
}

TEST_CASE("user-defined algebra brackets") {
  auto s = load_scenario(R"({"schema_version": 1, "name": "h",
      "algebra": {"name": "heis", "basis": ["p", "q", "c"], "brackets": [{"left": "p", "right": "q", "result": "c"}]}})");
  auto r = run("homology", s).report;
  CHECK(record(r, "homology.k1").witness == "Z=3 B=1 H=2");
  CHECK(parse_wedge_element("2*p^q - 1/2*q^c", s.algebra).to_string() == "2*p^q - 1/2*q^c");
  CHECK_THROWS_AS(parse_wedge_element("p^q + c", s.algebra), SchemaError);
}

TEST_CASE("parser warnings reach the scenario") {
  auto s = load_scenario(minimal(R"(, "observables": [{"name": "z", "form": "dx^dx + dx"}])"));
  CHECK_FALSE(s.warnings.empty());
}

TEST_CASE("disk membranes from a scenario file") {
  auto s = load_scenario(R"({"schema_version": 1, "name": "disk", "chart": ["x", "y", "z"],
      "flows": [{"id": "area", "mode": "circulate", "field": "-y*d/dx + x*d/dy", "form": "dx^dy",
                 "membrane": {"type": "disk", "radius": 2, "center": [1, 0, 0], "nodes": [12, 32]},
                 "hypothesis": "strict", "expect_value": 12.566370614359172}]})");
  auto r = run("circulate", s).report;
  CHECK_FALSE(r.has_failures());
  CHECK(record(r, "flow.area.value").status == CheckStatus::Pass);
}
