#include "plectic/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "plectic/errors.hpp"
#include "plectic/expression.hpp"

namespace plectic {

using nlohmann::json;

namespace {

void allow_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, _] : obj.items()) {
    if (!allowed.contains(k)) throw SchemaError("unknown key '" + k + "' in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw SchemaError("missing key '" + std::string(key) + "' in " + where);
  return obj.at(key);
}

class Loader {
 public:
  explicit Loader(Scenario& s) : s_(s) {}

  DifferentialForm form(const std::string& text, const ChartPtr& chart, const std::string& where,
                        std::optional<int> degree = std::nullopt) {
    try {
      Expression e = parse_expression(text, chart);
      for (const auto& w : e.warnings) s_.warnings.push_back(where + ": " + w);
      if (e.kind != Expression::Kind::Form) throw SchemaError(where + " must be a differential form");
      s_.expressions.emplace_back(text, chart);
      if (!degree || e.form.degree() == *degree) return e.form;
      if (e.form.is_zero()) return DifferentialForm(chart, *degree);
      throw SchemaError(where + " must have degree " + std::to_string(*degree));
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what(), err.position());
    }
  }

  VectorField field(const std::string& text, const ChartPtr& chart, const std::string& where) {
    try {
      VectorField v = parse_vector_field(text, chart);
      s_.expressions.emplace_back(text, chart);
      return v;
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what(), err.position());
    }
  }

  std::vector<VectorField> fields(const json& arr, const ChartPtr& chart, const std::string& where) {
    std::vector<VectorField> out;
    for (const auto& t : arr) out.push_back(field(t.get<std::string>(), chart, where));
    return out;
  }

  LieAlgebraPtr algebra(const json& j) {
    allow_keys(j, {"builtin", "name", "basis", "dimension", "brackets"}, "algebra");
    if (j.contains("builtin")) {
      auto b = j.at("builtin").get<std::string>();
      if (b == "abelian") {
        std::vector<std::string> names;
        if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
        int dim = j.contains("dimension") ? j.at("dimension").get<int>() : static_cast<int>(names.size());
        return abelian_algebra(dim, names);
      }
      if (b == "heisenberg") return heisenberg_algebra();
      if (b == "sl2") return sl2_algebra();
      if (b == "so3") return so3_algebra();
      throw SchemaError("unknown builtin algebra '" + b + "'");
    }
    auto names = require(j, "basis", "algebra").get<std::vector<std::string>>();
    auto name = j.value("name", std::string("g"));
    auto plain = abelian_algebra(static_cast<int>(names.size()), names);
    std::vector<LieAlgebra::Bracket> brackets;
    for (const auto& b : j.value("brackets", json::array())) {
      allow_keys(b, {"left", "right", "result"}, "bracket");
      int i = plain->index_of(b.at("left").get<std::string>());
      int k = plain->index_of(b.at("right").get<std::string>());
      if (i < 0 || k < 0) throw SchemaError("bracket names an unknown basis element");
      auto value = parse_wedge_element(b.at("result").get<std::string>(), plain);
      if (!value.is_zero() && value.degree() != 1) throw SchemaError("bracket result must lie in g");
      std::vector<Rational> vec(names.size());
      for (const auto& [idx, c] : value.coefficients()) vec[static_cast<std::size_t>(idx.indices()[0])] = c;
      brackets.push_back({i, k, vec});
    }
    return LieAlgebra::from_brackets(name, names, brackets);
  }

  MembraneSpec membrane(const json& j, int ambient) {
    allow_keys(j, {"type", "center", "radius", "minor_radius", "axes", "nodes", "points", "weights"}, "membrane");
    MembraneSpec m;
    m.ambient = ambient;
    auto type = require(j, "type", "membrane").get<std::string>();
    m.center = j.value("center", std::vector<double>(static_cast<std::size_t>(ambient), 0.0));
    m.radius = j.value("radius", 1.0);
    m.minor_radius = j.value("minor_radius", 0.5);
    m.axes = j.value("axes", std::vector<int>{0, 1});
    if (j.contains("nodes")) {
      if (j.at("nodes").is_array()) m.nodes = j.at("nodes").get<std::vector<int>>();
      else m.nodes = {j.at("nodes").get<int>()};
    }
    if (type == "circle") {
      m.kind = MembraneSpec::Kind::Circle;
    } else if (type == "disk") {
      m.kind = MembraneSpec::Kind::Disk;
      if (m.nodes.size() == 1) m.nodes.push_back(m.nodes[0]);
    } else if (type == "torus") {
      m.kind = MembraneSpec::Kind::Torus;
      if (ambient != 3) throw SchemaError("torus membranes live in R^3");
      if (m.nodes.size() == 1) m.nodes.push_back(m.nodes[0]);
    } else if (type == "points") {
      m.kind = MembraneSpec::Kind::Points;
      m.points = require(j, "points", "membrane").get<std::vector<std::vector<double>>>();
      m.weights = j.value("weights", std::vector<double>(m.points.size(), 1.0));
    } else {
      throw SchemaError("unknown membrane type '" + type + "'");
    }
    if (static_cast<int>(m.center.size()) != ambient) throw SchemaError("membrane center has the wrong dimension");
    for (int a : m.axes) {
      if (a < 0 || a >= ambient) throw SchemaError("membrane axis out of range");
    }
    return m;
  }

  FlowSpec flow(const json& j) {
    allow_keys(j,
               {"id", "mode", "chart", "field", "time_dependent", "form", "membrane", "t_end", "samples",
                "steps_per_unit", "tol", "hypothesis", "expect_value", "expect_slope", "step"},
               "flow");
    FlowSpec f;
    f.id = require(j, "id", "flow").get<std::string>();
    const std::string where = "flow '" + f.id + "'";
    auto mode = require(j, "mode", where).get<std::string>();
    if (mode == "circulate") f.mode = FlowSpec::Mode::Circulate;
    else if (mode == "drift") f.mode = FlowSpec::Mode::Drift;
    else if (mode == "kelvin") f.mode = FlowSpec::Mode::Kelvin;
    else if (mode == "transgression") f.mode = FlowSpec::Mode::Transgression;
    else throw SchemaError(where + ": unknown mode '" + mode + "'");
    f.chart = j.contains("chart") ? make_chart(j.at("chart").get<std::vector<std::string>>()) : s_.chart;
    if (!f.chart) throw SchemaError(where + " needs a chart");
    f.time_dependent = j.value("time_dependent", false);
    if (f.time_dependent && f.mode != FlowSpec::Mode::Kelvin) throw SchemaError(where + ": only kelvin flows depend on time");
    f.field = field(require(j, "field", where).get<std::string>(), f.chart, where + ".field");
    if (j.contains("form")) {
      f.form = form(j.at("form").get<std::string>(), f.chart, where + ".form");
    } else if (f.mode == FlowSpec::Mode::Kelvin && f.time_dependent) {
      f.form = metric_dual(f.field);
    } else if (f.mode == FlowSpec::Mode::Kelvin) {
      DifferentialForm::Components comps;
      for (int i = 0; i < f.chart->dimension(); ++i) {
        if (!f.field[i].is_zero()) comps.emplace(IndexSet::single(i), f.field[i]);
      }
      f.form = DifferentialForm(f.chart, 1, std::move(comps));
    } else {
      throw SchemaError(where + " needs a form");
    }
    const int ambient = f.chart->dimension() - (f.time_dependent ? 1 : 0);
    f.membrane = membrane(require(j, "membrane", where), ambient);
    f.t_end = j.value("t_end", 2.0);
    f.samples = j.value("samples", 8);
    f.steps_per_unit = j.value("steps_per_unit", 200);
    f.tol = j.value("tol", 1e-7);
    f.step = j.value("step", 1e-2);
    auto hyp = j.value("hypothesis", std::string("none"));
    if (hyp == "strict") f.hypothesis = Hypothesis::Strict;
    else if (hyp == "global-closed") f.hypothesis = Hypothesis::GlobalClosed;
    else if (hyp == "local-bounding") f.hypothesis = Hypothesis::LocalBounding;
    else if (hyp == "none") f.hypothesis = Hypothesis::None;
    else throw SchemaError(where + ": unknown hypothesis '" + hyp + "'");
    if (j.contains("expect_value")) f.expect_value = j.at("expect_value").get<double>();
    if (j.contains("expect_slope")) f.expect_slope = j.at("expect_slope").get<double>();
    if (f.samples < 1 || f.steps_per_unit < 1 || !(f.t_end > 0)) throw SchemaError(where + ": bad time grid");
    if (f.form.degree() != f.membrane.build().dimension()) throw SchemaError(where + ": form degree must match the membrane dimension");
    return f;
  }

  void magnetic(const json& j) {
    allow_keys(j, {"m", "k", "b", "w", "a", "algebra", "base_generators"}, "magnetic");
    MagneticSpec spec{build_chart(require(j, "m", "magnetic").get<int>(), require(j, "k", "magnetic").get<int>()),
                      {}, std::nullopt, std::nullopt};
    const auto& mc = spec.chart;
    spec.b = form(require(j, "b", "magnetic").get<std::string>(), mc.base, "magnetic.b", mc.k);
    s_.chart = mc.chart;
    if (j.contains("w")) {
      auto w = field(j.at("w").get<std::string>(), mc.base, "magnetic.w");
      DifferentialForm a;
      if (j.contains("a")) {
        a = form(j.at("a").get<std::string>(), mc.base, "magnetic.a", mc.k - 1);
      } else if (d(spec.b).is_zero()) {
        a = interior(w, spec.b);
      } else {
        throw SchemaError("magnetic.a is required when b is not closed");
      }
      spec.data = magnetic_hamiltonian(mc, w, spec.b, a);
      s_.h = spec.data->h;
      s_.v_h = spec.data->lift;
    }
    if (j.contains("algebra")) {
      s_.algebra = algebra(j.at("algebra"));
      auto gens = fields(require(j, "base_generators", "magnetic"), mc.base, "magnetic.base_generators");
      if (static_cast<int>(gens.size()) != s_.algebra->dimension()) throw SchemaError("one base generator per basis element");
      spec.lifted = potential_comomentum(mc, spec.b, s_.algebra, gens);
      s_.structure = spec.lifted->structure;
      s_.action = spec.lifted->action;
      s_.comomentum = spec.lifted->f;
    } else {
      s_.structure = PlecticStructure::make(d(mc.theta + pullback_projection(spec.b, mc.chart)));
    }
    s_.magnetic = std::move(spec);
  }

  void load(const json& j) {
    allow_keys(j,
               {"schema_version", "name", "description", "chart", "omega", "hamiltonian", "algebra", "generators",
                "comomentum", "observables", "reduce", "magnetic", "sl2_counterexample", "flows", "expected"},
               "scenario");
    s_.schema_version = require(j, "schema_version", "scenario").get<int>();
    if (s_.schema_version != 1) throw SchemaError("unsupported schema_version " + std::to_string(s_.schema_version));
    s_.name = require(j, "name", "scenario").get<std::string>();
    s_.description = j.value("description", std::string());

    if (j.contains("magnetic")) {
      if (j.contains("chart") || j.contains("omega")) throw SchemaError("magnetic scenarios derive chart and omega");
      magnetic(j.at("magnetic"));
    } else if (j.contains("chart")) {
      s_.chart = make_chart(j.at("chart").get<std::vector<std::string>>());
      if (j.contains("omega")) s_.structure = PlecticStructure::make(form(j.at("omega").get<std::string>(), s_.chart, "omega"));
    }
    if (j.contains("hamiltonian")) {
      const auto& hj = j.at("hamiltonian");
      allow_keys(hj, {"form", "field"}, "hamiltonian");
      if (!s_.structure) throw SchemaError("hamiltonian needs omega");
      auto hf = form(require(hj, "form", "hamiltonian").get<std::string>(), s_.chart, "hamiltonian.form",
                     s_.structure->n - 1);
      Observable obs = hj.contains("field")
                           ? make_observable(*s_.structure, hf, field(hj.at("field").get<std::string>(), s_.chart, "hamiltonian.field"))
                           : make_observable(*s_.structure, hf);
      s_.h = obs.form;
      s_.v_h = obs.field;
    }
    if (j.contains("algebra") && !s_.magnetic) {
      s_.algebra = algebra(j.at("algebra"));
      if (j.contains("generators")) {
        if (!s_.structure) throw SchemaError("generators need omega");
        auto gens = fields(j.at("generators"), s_.chart, "generators");
        if (static_cast<int>(gens.size()) != s_.algebra->dimension()) throw SchemaError("one generator per basis element");
        s_.action = InfinitesimalAction::make(s_.algebra, std::move(gens), *s_.structure);
      }
    }
    if (j.contains("comomentum")) {
      if (!s_.action) throw SchemaError("comomentum needs an action");
      CoMomentumMap f(s_.algebra, s_.chart, s_.structure->n);
      for (const auto& [label, text] : j.at("comomentum").items()) {
        auto p = parse_wedge_element(label, s_.algebra);
        if (p.coefficients().size() != 1 || p.coefficients().begin()->second != 1) {
          throw SchemaError("comomentum keys must be wedge-basis elements in increasing order: '" + label + "'");
        }
        f.set(p.coefficients().begin()->first,
              form(text.get<std::string>(), s_.chart, "comomentum." + label, s_.structure->n - p.degree()));
      }
      s_.comomentum = std::move(f);
    }
    for (const auto& o : j.value("observables", json::array())) {
      allow_keys(o, {"name", "form", "expect"}, "observable");
      ObservableSpec spec;
      spec.name = require(o, "name", "observable").get<std::string>();
      if (!s_.chart) throw SchemaError("observables need a chart");
      spec.form = form(require(o, "form", "observable").get<std::string>(), s_.chart, "observable " + spec.name);
      if (o.contains("expect")) spec.expect = parse_tag(o.at("expect").get<std::string>());
      s_.observables.push_back(std::move(spec));
    }
    if (j.contains("reduce")) {
      allow_keys(j.at("reduce"), {"element"}, "reduce");
      if (!s_.algebra) throw SchemaError("reduce needs an algebra");
      s_.reduce = parse_wedge_element(require(j.at("reduce"), "element", "reduce").get<std::string>(), s_.algebra);
    }
    s_.sl2_counterexample = j.value("sl2_counterexample", false);
    for (const auto& fj : j.value("flows", json::array())) s_.flows.push_back(flow(fj));
    for (const auto& e : j.value("expected", json::array())) {
      allow_keys(e, {"command", "id", "status", "witness"}, "expected");
      Expectation x;
      x.command = require(e, "command", "expected").get<std::string>();
      x.id = require(e, "id", "expected").get<std::string>();
      x.status = e.value("status", std::string("pass"));
      if (e.contains("witness")) x.witness = e.at("witness").get<std::string>();
      s_.expected.push_back(std::move(x));
    }
  }

 private:
  static ConservationTag parse_tag(const std::string& t) {
    for (auto tag : {ConservationTag::Strict, ConservationTag::Global, ConservationTag::Local, ConservationTag::None,
                     ConservationTag::Undecided}) {
      if (to_string(tag) == t) return tag;
    }
    throw SchemaError("unknown conservation class '" + t + "'");
  }

  Scenario& s_;
};

}  // namespace

std::string to_string(FlowSpec::Mode mode) {
  switch (mode) {
    case FlowSpec::Mode::Circulate:
      return "circulate";
    case FlowSpec::Mode::Drift:
      return "drift";
    case FlowSpec::Mode::Kelvin:
      return "kelvin";
    case FlowSpec::Mode::Transgression:
      return "transgression";
  }
  return "circulate";
}

Membrane MembraneSpec::build(std::optional<int> grid) const {
  auto n = [&](std::size_t i) { return grid ? *grid : nodes.at(std::min(i, nodes.size() - 1)); };
  const double two_pi = 2.0 * std::numbers::pi;
  switch (kind) {
    case Kind::Circle:
      return Membrane::circle(ambient, center, radius, axes.at(0), axes.at(1), n(0));
    case Kind::Points:
      return Membrane::points(ambient, points, weights);
    case Kind::Disk: {
      auto c = center;
      int a = axes.at(0), b = axes.at(1);
      double r = radius;
      return Membrane(ambient, {{0.0, 1.0, n(0), false}, {0.0, two_pi, n(1), true}}, [=](const double* u, double* x) {
        std::copy(c.begin(), c.end(), x);
        x[a] += r * u[0] * std::cos(u[1]);
        x[b] += r * u[0] * std::sin(u[1]);
      });
    }
    case Kind::Torus: {
      auto c = center;
      double big = radius, small = minor_radius;
      return Membrane(ambient, {{0.0, two_pi, n(0), true}, {0.0, two_pi, n(1), true}}, [=](const double* u, double* x) {
        double ring = big + small * std::cos(u[1]);
        x[0] = c[0] + ring * std::cos(u[0]);
        x[1] = c[1] + ring * std::sin(u[0]);
        x[2] = c[2] + small * std::sin(u[1]);
      });
    }
  }
  throw SchemaError("unknown membrane kind");
}

WedgeElement parse_wedge_element(const std::string& text, const LieAlgebraPtr& g) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw SchemaError("empty Lie algebra element");
  std::optional<WedgeElement> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (acc) {
      throw SchemaError("expected '+' or '-' in '" + text + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    Rational coeff(sign);
    std::string body = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        coeff *= parse_rational(term.substr(0, star));
      } catch (const std::exception&) {
        throw SchemaError("bad coefficient in '" + text + "'");
      }
      body = term.substr(star + 1);
    }
    WedgeElement w;
    if (body == "1") {
      w = WedgeElement::scalar(g, Rational(1));
    } else {
      std::optional<WedgeElement> prod;
      std::stringstream ss(body);
      std::string name;
      while (std::getline(ss, name, '^')) {
        int i = g->index_of(name);
        if (i < 0) throw SchemaError("unknown basis element '" + name + "' in '" + text + "'");
        auto gen = WedgeElement::generator(g, i);
        prod = prod ? wedge(*prod, gen) : gen;
      }
      if (!prod) throw SchemaError("empty term in '" + text + "'");
      w = *prod;
    }
    w = coeff * w;
    if (acc && acc->degree() != w.degree() && !acc->is_zero() && !w.is_zero()) {
      throw SchemaError("mixed degrees in '" + text + "'");
    }
    acc = acc ? *acc + w : w;
  }
  return *acc;
}

Scenario load_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  Scenario s;
  try {
    Loader(s).load(j);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("schema violation: ") + e.what());
  }
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

Scenario load_builtin(const std::string& name) { return load_scenario(builtin_text(name)); }

}  // namespace plectic
