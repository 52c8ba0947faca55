#include <map>

#include "plectic/scenario.hpp"

namespace plectic {

namespace {

const std::map<std::string, std::string>& builtins() {
  static const std::map<std::string, std::string> table{
      {"example-1.2", R"json({
  "schema_version": 1,
  "name": "example-1.2",
  "description": "Volume form on R^3 with H = x dy + z dz.",
  "chart": ["x", "y", "z"],
  "omega": "dx^dy^dz",
  "hamiltonian": {"form": "x*dy + z*dz"},
  "observables": [
    {"name": "H", "form": "x*dy + z*dz", "expect": "global"}
  ],
  "expected": [
    {"command": "classify", "id": "hamiltonian.field", "witness": "-d/dz"},
    {"command": "classify", "id": "hamiltonian.self-lie", "witness": "-dz"}
  ]
})json"},
      {"example-1.2-symplectic", R"json({
  "schema_version": 1,
  "name": "example-1.2-symplectic",
  "description": "Symplectic plane with H = p.",
  "chart": ["q", "p"],
  "omega": "dp^dq",
  "hamiltonian": {"form": "p"},
  "observables": [
    {"name": "q", "form": "q", "expect": "local"},
    {"name": "p", "form": "p", "expect": "strict"}
  ],
  "expected": [
    {"command": "classify", "id": "hamiltonian.field", "witness": "d/dq"},
    {"command": "classify", "id": "observable.q"}
  ]
})json"},
      {"example-1.3-wedge", R"json({
  "schema_version": 1,
  "name": "example-1.3-wedge",
  "description": "Volume form on R^3 with H = -x dy and flow d/dz.",
  "chart": ["x", "y", "z"],
  "omega": "dx^dy^dz",
  "hamiltonian": {"form": "-x*dy", "field": "d/dz"},
  "observables": [
    {"name": "alpha", "form": "z*dx", "expect": "global"},
    {"name": "beta", "form": "z*dy", "expect": "global"},
    {"name": "wedge", "form": "z**2*dx^dy", "expect": "none"}
  ],
  "expected": [
    {"command": "classify", "id": "observable.alpha"},
    {"command": "classify", "id": "observable.beta"},
    {"command": "classify", "id": "observable.wedge"}
  ]
})json"},
      {"example-2.17", R"json({
  "schema_version": 1,
  "name": "example-2.17",
  "description": "Translations in x and y on R^3 with H = -x dy, globally but not strictly H-preserving.",
  "chart": ["x", "y", "z"],
  "omega": "dx^dy^dz",
  "hamiltonian": {"form": "-x*dy", "field": "d/dz"},
  "algebra": {"builtin": "abelian", "basis": ["a", "b"]},
  "generators": ["d/dx", "d/dy"],
  "comomentum": {"a": "-y*dz", "b": "x*dz", "a^b": "-z"},
  "expected": [
    {"command": "verify-comomentum", "id": "comomentum.k1"},
    {"command": "verify-comomentum", "id": "comomentum.k2"},
    {"command": "classify", "id": "conserved.k2.a^b", "witness": "actual=local guaranteed=local"},
    {"command": "classify", "id": "obstruction.k2.a^b", "witness": "value=1 contraction=-1"},
    {"command": "table", "id": "table.preservation", "witness": "global"},
    {"command": "table", "id": "table.Z2", "witness": "local"},
    {"command": "table", "id": "table.B2", "witness": "vacuous"}
  ]
})json"},
      {"example-2.4-strict", R"json({
  "schema_version": 1,
  "name": "example-2.4-strict",
  "description": "Translation -d/dy on R^3, strictly preserving H = -x dy.",
  "chart": ["x", "y", "z"],
  "omega": "dx^dy^dz",
  "hamiltonian": {"form": "-x*dy", "field": "d/dz"},
  "algebra": {"builtin": "abelian", "basis": ["e"]},
  "generators": ["-d/dy"],
  "comomentum": {"e": "z*dx"},
  "observables": [
    {"name": "alpha", "form": "z*dx", "expect": "global"}
  ],
  "expected": [
    {"command": "classify", "id": "preservation", "witness": "strict"},
    {"command": "classify", "id": "observable.alpha", "witness": "global; primitive x; L_vH = dx"},
    {"command": "classify", "id": "primitive.k1.e"},
    {"command": "extend-tilde", "id": "tilde.route.k1.e", "witness": "actual=strict"},
    {"command": "extend-tilde", "id": "tilde.comomentum"}
  ]
})json"},
      {"remark-2.24", R"json({
  "schema_version": 1,
  "name": "remark-2.24",
  "description": "Obstruction class of the translation action with H = -x dy.",
  "chart": ["x", "y", "z"],
  "omega": "dx^dy^dz",
  "hamiltonian": {"form": "-x*dy", "field": "d/dz"},
  "algebra": {"builtin": "abelian", "basis": ["a", "b"]},
  "generators": ["d/dx", "d/dy"],
  "comomentum": {"a": "-y*dz", "b": "x*dz", "a^b": "-z"},
  "expected": [
    {"command": "classify", "id": "obstruction.k1.a", "witness": "zero"},
    {"command": "classify", "id": "obstruction.k2.a^b", "witness": "value=1 contraction=-1"},
    {"command": "classify", "id": "obstruction-rewrite.k2.a^b"},
    {"command": "extend-tilde", "id": "tilde.extension", "status": "undecided"}
  ]
})json"},
      {"magnetic-line", R"json({
  "schema_version": 1,
  "name": "magnetic-line",
  "description": "Cotangent bundle of the line with zero magnetic term and the translation lift.",
  "magnetic": {
    "m": 1, "k": 1, "b": "0", "w": "d/dx", "a": "0",
    "algebra": {"builtin": "abelian", "basis": ["e"]},
    "base_generators": ["d/dx"]
  },
  "expected": [
    {"command": "magnetic", "id": "magnetic.hamiltonian", "witness": "p"}
  ]
})json"},
      {"magnetic-r3", R"json({
  "schema_version": 1,
  "name": "magnetic-r3",
  "description": "Bundle of 2-forms over R^3 twisted by b = dx1^dx2 with translation lifts.",
  "magnetic": {
    "m": 3, "k": 2, "b": "dx1^dx2", "w": "d/dx1", "a": "dx2",
    "algebra": {"builtin": "abelian", "basis": ["e1", "e2", "e3"]},
    "base_generators": ["d/dx1", "d/dx2", "d/dx3"]
  },
  "expected": [
    {"command": "magnetic", "id": "magnetic.hamiltonian", "witness": "p_12*dx2 + p_13*dx3"},
    {"command": "magnetic", "id": "magnetic.lifts"},
    {"command": "magnetic", "id": "magnetic.comomentum"}
  ]
})json"},
      {"sl2-counterexample", R"json({
  "schema_version": 1,
  "name": "sl2-counterexample",
  "description": "Boundary h = [e, f] in sl2 whose conserved quantity is global but not strict.",
  "algebra": {"builtin": "sl2"},
  "sl2_counterexample": true,
  "expected": [
    {"command": "homology", "id": "homology.k1", "witness": "Z=3 B=3 H=0"},
    {"command": "magnetic", "id": "sl2.polynomial", "witness": "2*beta*delta"},
    {"command": "magnetic", "id": "sl2.boundary"},
    {"command": "magnetic", "id": "sl2.nonconstant"},
    {"command": "magnetic", "id": "sl2.global-not-strict"}
  ]
})json"},
      {"kelvin-rotation", R"json({
  "schema_version": 1,
  "name": "kelvin-rotation",
  "description": "Circulation under rigid rotation and translation.",
  "chart": ["x", "y", "z"],
  "flows": [
    {"id": "rotation", "mode": "circulate", "field": "-y*d/dx + x*d/dy", "form": "-y*dx + x*dy",
     "membrane": {"type": "circle", "radius": 1, "nodes": 256},
     "hypothesis": "strict", "tol": 1e-8, "expect_value": 6.283185307179586},
    {"id": "translation", "mode": "circulate", "field": "d/dz", "form": "z*dx",
     "membrane": {"type": "circle", "radius": 1, "nodes": 64},
     "hypothesis": "global-closed", "tol": 1e-10, "expect_value": 0},
    {"id": "torus-flux", "mode": "circulate", "field": "-y*d/dx + x*d/dy", "form": "z*dx^dy",
     "membrane": {"type": "torus", "radius": 2, "minor_radius": 0.5, "nodes": [64, 64]},
     "hypothesis": "strict", "tol": 1e-8, "samples": 4, "expect_value": 9.869604401089358}
  ],
  "expected": [
    {"command": "circulate", "id": "flow.translation.invariance"},
    {"command": "circulate", "id": "flow.translation.value"},
    {"command": "circulate", "id": "flow.torus-flux.value"},
    {"command": "circulate", "id": "flow.rotation.invariance"},
    {"command": "circulate", "id": "flow.rotation.value"}
  ]
})json"},
      {"kelvin-time-dependent", R"json({
  "schema_version": 1,
  "name": "kelvin-time-dependent",
  "description": "Time-dependent planar flows with and without a curl-free Euler form.",
  "chart": ["x", "y", "z", "t"],
  "flows": [
    {"id": "shear-rotation", "mode": "kelvin", "time_dependent": true, "field": "(t - y)*d/dx + x*d/dy",
     "membrane": {"type": "circle", "radius": 1, "nodes": 256},
     "hypothesis": "strict", "tol": 1e-8, "expect_value": 6.283185307179586},
    {"id": "growing-rotation", "mode": "kelvin", "time_dependent": true,
     "field": "-(1 + t)*y*d/dx + (1 + t)*x*d/dy",
     "membrane": {"type": "circle", "radius": 1, "nodes": 256},
     "hypothesis": "none", "tol": 1e-8, "expect_value": 6.283185307179586}
  ],
  "expected": [
    {"command": "kelvin", "id": "flow.shear-rotation.certificate", "witness": "strict: spatial curl 0"},
    {"command": "kelvin", "id": "flow.shear-rotation.invariance"},
    {"command": "kelvin", "id": "flow.growing-rotation.certificate", "witness": "none: spatial curl 2*dx^dy"},
    {"command": "kelvin", "id": "flow.growing-rotation.invariance"}
  ]
})json"},
      {"drift-point", R"json({
  "schema_version": 1,
  "name": "drift-point",
  "description": "Linear drift of locally conserved quantities and invariance on bounding membranes.",
  "chart": ["x", "y", "z"],
  "flows": [
    {"id": "point", "mode": "drift", "field": "d/dz", "form": "-z",
     "membrane": {"type": "points", "points": [[0, 0, 0]]}, "expect_slope": -1},
    {"id": "loop", "mode": "drift", "field": "d/dz", "form": "z*dx",
     "membrane": {"type": "circle", "radius": 1, "nodes": 64}, "expect_slope": 0},
    {"id": "segment-ends", "mode": "circulate", "field": "d/dz", "form": "-z",
     "membrane": {"type": "points", "points": [[1, 0, 2], [0, 0, 0]], "weights": [1, -1]},
     "hypothesis": "local-bounding", "tol": 1e-10, "expect_value": -2}
  ],
  "expected": [
    {"command": "drift", "id": "flow.point.slope"},
    {"command": "drift", "id": "flow.point.expected-slope"},
    {"command": "drift", "id": "flow.loop.expected-slope"},
    {"command": "circulate", "id": "flow.segment-ends.invariance"}
  ]
})json"},
      {"isotropy-r4", R"json({
  "schema_version": 1,
  "name": "isotropy-r4",
  "description": "Translations of R^4 with the volume form, reduced along the cycle e1.",
  "chart": ["x1", "x2", "x3", "x4"],
  "omega": "dx1^dx2^dx3^dx4",
  "hamiltonian": {"form": "x4**2*dx1^dx2"},
  "algebra": {"builtin": "abelian", "basis": ["e1", "e2", "e3"]},
  "generators": ["d/dx1", "d/dx2", "d/dx3"],
  "comomentum": {
    "e1": "-x2*dx3^dx4", "e2": "x1*dx3^dx4", "e3": "-x1*dx2^dx4",
    "e1^e2": "-x3*dx4", "e1^e3": "x2*dx4", "e2^e3": "-x1*dx4",
    "e1^e2^e3": "x4"
  },
  "reduce": {"element": "e1"},
  "expected": [
    {"command": "classify", "id": "preservation", "witness": "strict"},
    {"command": "table", "id": "table.Z2", "witness": "global"},
    {"command": "reduce", "id": "reduce.structure", "witness": "n=2 dim g_p=3"},
    {"command": "reduce", "id": "reduce.comomentum"},
    {"command": "reduce", "id": "reduce.hamiltonian", "witness": "x4**2*dx2; literal sign fails"}
  ]
})json"},
      {"transgression-circle", R"json({
  "schema_version": 1,
  "name": "transgression-circle",
  "description": "Derivative of a circulation along a flow against the transgression pairing.",
  "chart": ["x", "y", "z"],
  "flows": [
    {"id": "shear", "mode": "transgression", "field": "d/dx + x*d/dy", "form": "x**2*dy",
     "membrane": {"type": "circle", "radius": 1, "nodes": 128}, "steps_per_unit": 400,
     "tol": 1e-6, "expect_value": 6.283185307179586},
    {"id": "lift", "mode": "transgression", "field": "d/dz", "form": "z*dx",
     "membrane": {"type": "circle", "radius": 1, "nodes": 64}, "tol": 1e-6, "expect_value": 0}
  ],
  "expected": [
    {"command": "circulate", "id": "flow.shear.transgression"},
    {"command": "circulate", "id": "flow.shear.value"},
    {"command": "circulate", "id": "flow.lift.transgression"}
  ]
})json"},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : builtins()) names.push_back(name);
  return names;
}

const std::string& builtin_text(const std::string& name) {
  auto it = builtins().find(name);
  if (it == builtins().end()) throw SchemaError("unknown builtin scenario '" + name + "'");
  return it->second;
}

}  // namespace plectic
