#include "plectic/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"

namespace plectic {

namespace {

std::string num(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& o) : s_(s), opts_(o) {
    out_.report.scenario = s.name;
    out_.report.schema_version = s.schema_version;
    mark_ = std::chrono::steady_clock::now();
  }

  void dispatch(const std::string& command) {
    cmd_ = command;
    mark_ = std::chrono::steady_clock::now();
    try {
      if (command == "verify-comomentum") verify();
      else if (command == "classify") classify();
      else if (command == "table") table();
      else if (command == "homology") homology_cmd();
      else if (command == "reduce") reduce();
      else if (command == "extend-tilde") extend();
      else if (command == "magnetic") magnetic();
      else if (command == "circulate") flows({FlowSpec::Mode::Circulate, FlowSpec::Mode::Transgression});
      else if (command == "drift") flows({FlowSpec::Mode::Drift});
      else if (command == "kelvin") flows({FlowSpec::Mode::Kelvin});
    } catch (const Error& e) {
      add(command + ".error", "evaluation", CheckStatus::Fail, e.what());
    }
  }

  void expectations(const std::string& command) {
    for (const auto& x : s_.expected) {
      if (command != "all" && x.command != command) continue;
      cmd_ = x.command;
      const CheckRecord* r = out_.report.find(x.id);
      if (!r) {
        add("expect." + x.id, "expected result", CheckStatus::Fail, "no record");
        continue;
      }
      bool ok = to_string(r->status) == x.status && (!x.witness || *x.witness == r->witness);
      std::string w = ok ? "matches" : "got " + to_string(r->status) + " '" + r->witness + "'";
      if (!ok) {
        w += ", expected " + x.status;
        if (x.witness) w += " '" + *x.witness + "'";
      }
      add("expect." + x.id, "expected result", pass_if(ok), w);
    }
  }

  RunResult take() { return std::move(out_); }

 private:
  void add(std::string id, std::string ref, CheckStatus status, std::string witness,
           std::optional<double> residual = std::nullopt) {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
    mark_ = now;
    out_.report.checks.push_back({std::move(id), cmd_, std::move(ref), status, residual, std::move(witness), ms});
  }

  const HomologySpaces& hs() {
    if (!hs_) hs_ = plectic::homology(s_.algebra);
    return *hs_;
  }

  int top_degree() const { return std::min(s_.structure->n, s_.algebra->dimension()); }

  bool has_momentum() const { return s_.structure && s_.action && s_.comomentum; }
  bool has_h() const { return s_.structure && s_.h && s_.v_h; }

  void verify() {
    if (!has_momentum()) return;
    add("action.validated", "infinitesimal action", CheckStatus::Pass,
        "dim g = " + std::to_string(s_.algebra->dimension()) + ", L_v omega = 0");
    auto rep = verify_comomentum(*s_.comomentum, *s_.action, *s_.structure);
    std::map<int, std::vector<const ComomentumCheck*>> by_k;
    for (const auto& c : rep.checks) by_k[c.k].push_back(&c);
    for (const auto& [k, checks] : by_k) {
      int failures = 0;
      std::string first;
      for (const auto* c : checks) {
        if (c->pass) continue;
        if (failures++ == 0) first = basis_label(s_.algebra, c->basis) + ": " + c->residual.to_string();
      }
      add("comomentum.k" + std::to_string(k), "co-momentum identity", pass_if(failures == 0),
          failures == 0 ? "zero residual on " + std::to_string(checks.size()) + " basis elements" : first,
          static_cast<double>(failures));
    }
    int failures = 0;
    for (const auto& c : rep.hamiltonian_checks) failures += c.pass ? 0 : 1;
    add("comomentum.generators", "Hamiltonian generators", pass_if(failures == 0),
        failures == 0 ? "d f_1(x) = -i(v_x) omega" : std::to_string(failures) + " generators fail",
        static_cast<double>(failures));
    add("comomentum.equivariant", "infinitesimal equivariance", CheckStatus::Pass,
        is_infinitesimally_equivariant(*s_.comomentum, *s_.action) ? "yes" : "no");
  }

  std::string describe(const ConservationClass& c) {
    std::string w = to_string(c.tag);
    if (c.primitive) w += "; primitive " + c.primitive->to_string();
    return w;
  }

  void classify() {
    if (!has_h()) return;
    add("hamiltonian.field", "Hamiltonian vector field", CheckStatus::Pass, s_.v_h->to_string());
    add("hamiltonian.self-lie", "Lie derivative of H along v_H", CheckStatus::Pass,
        lie_derivative(*s_.v_h, *s_.h).to_string());
    for (const auto& o : s_.observables) {
      auto c = classify_conservation(*s_.v_h, o.form);
      add("observable." + o.name, "conservation class", pass_if(!o.expect || *o.expect == c.tag),
          describe(c) + "; L_vH = " + c.lie_derivative.to_string());
      if (o.form.degree() != s_.structure->n - 1) continue;
      try {
        auto alpha = make_observable(*s_.structure, o.form);
        auto crit = hamiltonian_criteria(alpha, Observable{*s_.h, *s_.v_h});
        add("criteria." + o.name, "Hamiltonian criteria", pass_if(crit.local_match && crit.global_match),
            "L_{v_alpha}H " + to_string(crit.h_under_alpha.tag));
      } catch (const NotHamiltonian&) {
      }
    }
    if (!s_.action) return;
    auto pc = classify_H_preservation(*s_.action, *s_.h);
    add("preservation", "H-preservation", CheckStatus::Pass, to_string(pc.tag));
    if (!s_.comomentum) return;
    const int top = top_degree();
    for (int k = 1; k <= top; ++k) {
      for (const auto& p : hs()[k].cycles) {
        auto cq = conserved_from_cycle(*s_.comomentum, p, *s_.v_h, pc.tag, hs());
        add("conserved.k" + std::to_string(k) + "." + p.to_string(), "conserved quantity from a cycle",
            pass_if(cq.consistent),
            "actual=" + to_string(cq.actual.tag) + " guaranteed=" + to_string(cq.guaranteed));
        if (pc.tag == ConservationTag::Strict) {
          auto sp = check_strict_primitive(*s_.comomentum, *s_.action, p, *s_.h, *s_.v_h);
          add("primitive.k" + std::to_string(k) + "." + p.to_string(), "strict primitive identity", pass_if(sp.holds),
              sp.primitive.to_string());
        }
      }
    }
    if (pc.tag == ConservationTag::Strict && s_.structure->n <= s_.algebra->dimension()) {
      auto t = level_map_tangency(*s_.comomentum, *s_.v_h, hs());
      add("tangency", "level sets of the momentum map", pass_if(t.holds),
          std::to_string(t.basis.size()) + " cycle basis elements");
    }
    if (pc.tag == ConservationTag::None) return;
    for (int k = 1; k <= top; ++k) {
      ObstructionReport rep;
      try {
        rep = obstruction_A(*s_.action, *s_.h, k, hs());
      } catch (const PreconditionFailed& e) {
        add("obstruction.k" + std::to_string(k), "obstruction class", CheckStatus::Undecided, e.what());
        continue;
      }
      for (const auto& c : rep.classes) {
        std::string w;
        if (c.zero) {
          w = "zero";
        } else if (c.value) {
          w = "value=" + plectic::to_string(*c.value);
          if (c.contraction_value) w += " contraction=" + plectic::to_string(*c.contraction_value);
        } else {
          w = "class of " + c.lie_derivative.to_string();
        }
        const std::string label = c.representative.to_string();
        add("obstruction.k" + std::to_string(k) + "." + label, "obstruction class", pass_if(rep.well_defined), w);
        auto rw = rewrite_check_A(*s_.comomentum, *s_.action, *s_.h, *s_.v_h, c.representative);
        add("obstruction-rewrite.k" + std::to_string(k) + "." + label, "obstruction rewrite", pass_if(rw.holds),
            rw.lhs.to_string() + " ~ " + rw.rhs.to_string());
      }
    }
  }

  void table() {
    if (!has_momentum() || !has_h()) return;
    auto t = conservation_table(*s_.comomentum, *s_.action, *s_.h, *s_.v_h);
    add("table.preservation", "H-preservation", CheckStatus::Pass, to_string(t.preservation));
    for (const auto& row : t.rows) {
      int bad = 0;
      for (const auto& e : row.entries) bad += e.consistent ? 0 : 1;
      std::string id = std::string("table.") + (row.boundary_row ? "B" : "Z") + std::to_string(row.k);
      add(id, "conservation table", pass_if(row.consistent),
          row.entries.empty() ? "vacuous" : to_string(row.guaranteed), static_cast<double>(bad));
    }
  }

  void homology_cmd() {
    if (!s_.algebra) return;
    const int dim = s_.algebra->dimension();
    for (int k = 0; k <= dim; ++k) {
      const auto& h = hs()[k];
      add("homology.k" + std::to_string(k), "Lie algebra homology", CheckStatus::Pass,
          "Z=" + std::to_string(h.cycles.size()) + " B=" + std::to_string(h.boundaries.size()) +
              " H=" + std::to_string(h.dim_homology));
    }
    int bad = 0;
    for (int k = 0; k <= dim; ++k) {
      for (IndexSet idx : subsets_of_size(dim, k)) {
        bad += boundary(boundary(WedgeElement::basis(s_.algebra, idx))).is_zero() ? 0 : 1;
      }
    }
    add("homology.boundary-squared", "boundary operator", pass_if(bad == 0), bad == 0 ? "zero" : "nonzero",
        static_cast<double>(bad));
  }

  void reduce() {
    if (!s_.reduce || !has_momentum()) return;
    const auto& p = *s_.reduce;
    InducedComomentum ind;
    try {
      ind = induced_comomentum(*s_.comomentum, *s_.action, p, *s_.structure);
    } catch (const NotACycle&) {
      add("reduce.cycle", "isotropy reduction", CheckStatus::Fail, p.to_string() + " is not a cycle");
      return;
    }
    add("reduce.structure", "isotropy reduction", pass_if(ind.reduced_closed),
        "n=" + std::to_string(ind.structure.n) + " dim g_p=" + std::to_string(ind.subalgebra->dimension()));
    auto rep = verify_comomentum(ind.map, ind.action, ind.structure);
    add("reduce.comomentum", "induced co-momentum map", pass_if(rep.pass),
        std::to_string(rep.checks.size()) + " identities checked");
    auto alt = verify_comomentum(ind.alternative, ind.action, ind.structure);
    add("reduce.alternative", "alternative induced map", CheckStatus::Pass, alt.pass ? "verifies" : "fails");
    if (!s_.h) return;
    auto rh = reduced_hamiltonian(*s_.action, p, *s_.h, *s_.v_h, *s_.structure);
    add("reduce.hamiltonian", "reduced Hamiltonian", pass_if(rh.hamiltonian),
        rh.reduced_h.to_string() + "; literal sign " + (rh.literal_sign ? "holds" : "fails"));
  }

  void extend() {
    if (!has_momentum() || !has_h()) return;
    ExtendedComomentum ext;
    try {
      ext = extend_comomentum_tilde(*s_.comomentum, *s_.action, *s_.h, *s_.v_h, *s_.structure);
    } catch (const PreconditionFailed& e) {
      add("tilde.extension", "central extension", CheckStatus::Undecided, e.what());
      return;
    }
    auto rep = verify_comomentum(ext.map, ext.action, *s_.structure);
    add("tilde.extension", "central extension", CheckStatus::Pass,
        "dim = " + std::to_string(ext.algebra->dimension()) + ", c -> " + s_.v_h->to_string());
    add("tilde.comomentum", "extended co-momentum map", pass_if(rep.pass),
        std::to_string(rep.checks.size()) + " identities checked");
    const int top = std::min(s_.structure->n - 1, s_.algebra->dimension());
    for (int k = 0; k <= top; ++k) {
      for (const auto& p : hs()[k].cycles) {
        auto tc = tilde_conserved(ext, p, *s_.v_h);
        add("tilde.route.k" + std::to_string(k) + "." + p.to_string(), "conservation via the extension",
            pass_if(tc.cycle && tc.route_zero && tc.actual.tag == ConservationTag::Strict),
            "actual=" + to_string(tc.actual.tag));
      }
    }
  }

  void magnetic() {
    if (s_.magnetic) {
      const auto& m = *s_.magnetic;
      add("magnetic.nondegenerate", "magnetic form", pass_if(is_nondegenerate(s_.structure->omega)),
          s_.structure->omega.to_string());
      if (m.data) {
        add("magnetic.hamiltonian", "lifted Hamiltonian", pass_if(m.data->residual.is_zero()), m.data->h.to_string());
        add("magnetic.lift", "canonical lift", pass_if(lie_derivative(m.data->lift, m.chart.theta).is_zero()),
            m.data->lift.to_string());
      }
      if (m.lifted) {
        bool lifts = true;
        for (const auto& v : m.lifted->action.generators) lifts = lifts && lie_derivative(v, m.chart.theta).is_zero();
        add("magnetic.lifts", "canonical lift", pass_if(lifts), std::to_string(m.lifted->action.generators.size()) + " generators");
        auto rep = verify_comomentum(m.lifted->f, m.lifted->action, m.lifted->structure);
        add("magnetic.comomentum", "potential co-momentum map", pass_if(rep.pass),
            std::to_string(rep.checks.size()) + " identities checked");
      }
    }
    if (s_.sl2_counterexample) {
      auto rep = sl2_strict_counterexample();
      add("sl2.polynomial", "sl2 counterexample", pass_if(rep.matches_expected), rep.function.to_string());
      add("sl2.boundary", "sl2 counterexample", pass_if(rep.h_is_boundary), "h in B_1");
      add("sl2.closed", "sl2 counterexample", pass_if(rep.b_closed), "e*^f* closed");
      std::string values;
      for (const auto& v : rep.sample_values) values += (values.empty() ? "" : ", ") + plectic::to_string(v);
      add("sl2.nonconstant", "sl2 counterexample", pass_if(!rep.constant), values);
      add("sl2.global-not-strict", "sl2 counterexample", pass_if(rep.global_not_strict), "global, not strict");
    }
  }

  double tol(const FlowSpec& f) const { return opts_.tol ? *opts_.tol : f.tol; }

  void flows(std::initializer_list<FlowSpec::Mode> modes) {
    for (const auto& f : s_.flows) {
      if (std::find(modes.begin(), modes.end(), f.mode) == modes.end()) continue;
      switch (f.mode) {
        case FlowSpec::Mode::Circulate:
        case FlowSpec::Mode::Kelvin:
          circulation(f);
          break;
        case FlowSpec::Mode::Drift:
          drift(f);
          break;
        case FlowSpec::Mode::Transgression:
          transgression(f);
          break;
      }
    }
  }

  std::vector<double> times(const FlowSpec& f) const {
    std::vector<double> ts;
    for (int j = 0; j <= f.samples; ++j) ts.push_back(f.t_end * j / f.samples);
    return ts;
  }

  static bool bounding(const MembraneSpec& spec, const Membrane& m) {
    if (m.closed()) return true;
    if (spec.kind != MembraneSpec::Kind::Points) return false;
    double sum = 0.0;
    for (double w : spec.weights) sum += w;
    return std::abs(sum) < 1e-12;
  }

  void circulation(const FlowSpec& f) {
    const std::string base = "flow." + f.id;
    Membrane m = f.membrane.build(opts_.grid);
    bool certified = true;
    std::string cert;
    if (f.time_dependent) {
      auto kc = kelvin_certificate(f.field);
      certified = f.hypothesis == Hypothesis::None ? !kc.exact : kc.exact;
      cert = "spatial curl " + kc.spatial_curl.to_string();
    } else {
      auto c = classify_conservation(f.field, f.form);
      switch (f.hypothesis) {
        case Hypothesis::Strict:
          certified = c.tag == ConservationTag::Strict;
          break;
        case Hypothesis::GlobalClosed:
          certified = strength(c.tag) >= strength(ConservationTag::Global) && m.closed();
          break;
        case Hypothesis::LocalBounding:
          certified = strength(c.tag) >= strength(ConservationTag::Local) && bounding(f.membrane, m);
          break;
        case Hypothesis::None:
          certified = strength(c.tag) < strength(ConservationTag::Global) || !m.closed();
          break;
      }
      cert = to_string(c.tag);
    }
    add(base + ".certificate", "circulation hypothesis", pass_if(certified), to_string(f.hypothesis) + ": " + cert);

    auto trace = run_trace(m, NumericField::from_symbolic(f.field, f.time_dependent),
                           NumericForm::from_symbolic(f.form, f.time_dependent), times(f), f.steps_per_unit);
    auto v = circulation_check(trace, tol(f), f.hypothesis);
    bool expect_invariant = f.hypothesis != Hypothesis::None;
    add(base + ".invariance", "circulation invariance", pass_if(v.invariant == expect_invariant),
        (v.invariant ? "invariant" : "drifts") + std::string(", max drift ") + sci(v.max_drift), v.max_drift);
    if (f.expect_value) {
      double err = std::abs(v.reference - *f.expect_value);
      add(base + ".value", "circulation value", pass_if(err <= tol(f)), num(v.reference), err);
    }
    out_.traces.emplace_back(f.id, std::move(trace));
  }

  void drift(const FlowSpec& f) {
    const std::string base = "flow." + f.id;
    Membrane m = f.membrane.build(opts_.grid);
    auto l = lie_derivative(f.field, f.form);
    add(base + ".certificate", "Lie derivative closed", pass_if(d(l).is_zero()), "L_v alpha = " + l.to_string());
    auto trace = run_trace(m, NumericField::from_symbolic(f.field), NumericForm::from_symbolic(f.form), times(f),
                           f.steps_per_unit);
    auto fit = linear_drift_fit(trace);
    double c = integrate_pullback(NumericForm::from_symbolic(l), m, m.initial());
    double err = std::abs(fit.slope - c);
    add(base + ".slope", "linear drift", pass_if(err <= 1e-6 * std::max(1.0, std::abs(c))),
        "slope=" + num(fit.slope, 12) + " c=" + num(c, 12), err);
    add(base + ".fit", "linear drift", pass_if(fit.residual <= 1e-9), "residual " + sci(fit.residual), fit.residual);
    if (f.expect_slope) {
      double e = std::abs(fit.slope - *f.expect_slope);
      add(base + ".expected-slope", "linear drift", pass_if(e <= 1e-6), num(fit.slope, 12), e);
    }
    out_.traces.emplace_back(f.id, std::move(trace));
  }

  void transgression(const FlowSpec& f) {
    const std::string base = "flow." + f.id;
    Membrane m = f.membrane.build(opts_.grid);
    auto v = NumericField::from_symbolic(f.field);
    double direct = transgression_pair(NumericForm::from_symbolic(d(f.form)), m, m.initial(), sample_field(v, m.initial()));
    double advected = advected_derivative(NumericForm::from_symbolic(f.form), m, v, f.step, f.steps_per_unit);
    double err = std::abs(direct - advected);
    add(base + ".transgression", "transgression pairing", pass_if(err <= tol(f)),
        "direct=" + num(direct, 12) + " advected=" + num(advected, 12), err);
    if (f.expect_value) {
      double e = std::abs(direct - *f.expect_value);
      add(base + ".value", "transgression pairing", pass_if(e <= tol(f)), num(direct), e);
    }
  }

  const Scenario& s_;
  RunOptions opts_;
  RunResult out_;
  std::string cmd_;
  std::optional<HomologySpaces> hs_;
  std::chrono::steady_clock::time_point mark_;
};

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-comomentum", "classify", "table",    "homology",
                                              "reduce",            "extend-tilde", "magnetic", "circulate",
                                              "drift",             "kelvin",   "all"};
  return names;
}

RunResult run(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw PreconditionFailed("unknown command '" + command + "'");
  }
  Runner r(scenario, options);
  if (command == "all") {
    for (const auto& c : names) {
      if (c != "all") r.dispatch(c);
    }
  } else {
    r.dispatch(command);
  }
  r.expectations(command);
  return r.take();
}

}  // namespace plectic
