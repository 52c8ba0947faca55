/// @file scenario.hpp
/// @brief JSON scenario files (schema_version 1) and the embedded built-in scenarios.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plectic/errors.hpp"
#include "plectic/flow_lab.hpp"
#include "plectic/magnetic.hpp"
#include "plectic/momentum.hpp"

namespace plectic {

class SchemaError : public Error {
 public:
  using Error::Error;
};

struct ObservableSpec {
  std::string name;
  DifferentialForm form;
  std::optional<ConservationTag> expect;
};

struct MagneticSpec {
  MulticotangentChart chart;
  DifferentialForm b;
  std::optional<MagneticData> data;
  std::optional<LiftedAction> lifted;
};

struct MembraneSpec {
  enum class Kind { Circle, Points, Disk, Torus };
  Kind kind = Kind::Circle;
  int ambient = 3;
  std::vector<double> center;
  double radius = 1.0;
  /// Torus tube radius.
  double minor_radius = 0.5;
  std::vector<int> axes{0, 1};
  std::vector<int> nodes{256};
  std::vector<std::vector<double>> points;
  std::vector<double> weights;

  /// `grid` overrides the node count of every direction.
  Membrane build(std::optional<int> grid = std::nullopt) const;
};

struct FlowSpec {
  enum class Mode { Circulate, Drift, Kelvin, Transgression };
  std::string id;
  Mode mode = Mode::Circulate;
  ChartPtr chart;
  VectorField field;
  bool time_dependent = false;
  /// α for circulate/drift/kelvin, the primitive β for transgression.
  DifferentialForm form;
  MembraneSpec membrane;
  double t_end = 2.0;
  int samples = 8;
  int steps_per_unit = 200;
  double tol = 1e-7;
  Hypothesis hypothesis = Hypothesis::None;
  std::optional<double> expect_value;
  std::optional<double> expect_slope;
  /// Finite-difference step of the advected transgression route.
  double step = 1e-2;
};

std::string to_string(FlowSpec::Mode mode);

struct Expectation {
  std::string command;
  std::string id;
  std::string status = "pass";
  std::optional<std::string> witness;
};

struct Scenario {
  std::string name;
  std::string description;
  int schema_version = 1;

  ChartPtr chart;
  std::optional<PlecticStructure> structure;
  std::optional<DifferentialForm> h;
  std::optional<VectorField> v_h;
  /// Present with or without an action (homology needs only the algebra).
  LieAlgebraPtr algebra;
  std::optional<InfinitesimalAction> action;
  std::optional<CoMomentumMap> comomentum;
  std::vector<ObservableSpec> observables;
  std::optional<WedgeElement> reduce;
  std::optional<MagneticSpec> magnetic;
  bool sl2_counterexample = false;
  std::vector<FlowSpec> flows;
  std::vector<Expectation> expected;

  /// Every expression string with the chart it was parsed on.
  std::vector<std::pair<std::string, ChartPtr>> expressions;
  std::vector<std::string> warnings;
};

/// Throws SchemaError on schema violations and ParseError (wrapped with the field name) on bad expressions.
/// The action is validated here (homomorphism and L_v ω = 0).
Scenario load_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

std::vector<std::string> builtin_names();
/// Throws SchemaError for an unknown name.
const std::string& builtin_text(const std::string& name);
Scenario load_builtin(const std::string& name);

/// "a^b", "2*e1^e3 - 1/2*e2", "1".
WedgeElement parse_wedge_element(const std::string& text, const LieAlgebraPtr& g);

}  // namespace plectic
