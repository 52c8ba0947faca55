#include "plectic/magnetic.hpp"

#include "plectic/errors.hpp"
#include "plectic/linear_solve.hpp"

namespace plectic {

int MulticotangentChart::fiber_coordinate(IndexSet multi_index) const {
  for (std::size_t i = 0; i < fiber_indices.size(); ++i) {
    if (fiber_indices[i] == multi_index) return m + static_cast<int>(i);
  }
  throw PreconditionFailed("no fiber coordinate for this multi-index");
}

MulticotangentChart build_chart(int m, int k) {
  if (k < 1 || k > m || m > 9) throw PreconditionFailed("multicotangent chart needs 1 <= k <= m <= 9");
  MulticotangentChart mc;
  mc.m = m;
  mc.k = k;
  std::vector<std::string> base_names;
  if (m == 1) {
    base_names.push_back("x");
  } else {
    for (int i = 1; i <= m; ++i) base_names.push_back("x" + std::to_string(i));
  }
  std::vector<std::string> names = base_names;
  mc.fiber_indices = subsets_of_size(m, k);
  for (IndexSet idx : mc.fiber_indices) {
    if (m == 1) {
      names.push_back("p");
      continue;
    }
    std::string name = "p_";
    for (int i : idx.indices()) name += std::to_string(i + 1);
    names.push_back(name);
  }
  mc.base = make_chart(base_names);
  mc.chart = make_chart(names);
  DifferentialForm::Components theta;
  for (std::size_t i = 0; i < mc.fiber_indices.size(); ++i) {
    theta.emplace(mc.fiber_indices[i], mc.chart->coordinate(m + static_cast<int>(i)));
  }
  mc.theta = DifferentialForm(mc.chart, k, std::move(theta));
  return mc;
}

DifferentialForm magnetic_form(const MulticotangentChart& mc, const DifferentialForm& c) {
  if (c.degree() != mc.k + 1) throw DegreeMismatch("magnetic term must have degree k+1");
  if (!d(c).is_zero()) throw NotClosed("magnetic term is not closed");
  return d(mc.theta) + pullback_projection(c, mc.chart);
}

VectorField canonical_lift(const MulticotangentChart& mc, const VectorField& w) {
  if (!w.is_polynomial()) throw Unsupported("canonical lift needs a polynomial base field");
  VectorField base_part = lift_trivially(w, mc.chart);
  DifferentialForm r = lie_derivative(base_part, mc.theta);

  // Unknowns u_J multiply ∂/∂p_J; L_{u ∂p_J} θ = u dx^J since ι_{∂p_J} θ = 0.
  const std::size_t nf = mc.fiber_indices.size();
  std::vector<IndexSet> rows = subsets_of_size(mc.chart->dimension(), mc.k);
  Matrix<RationalFunction> a;
  std::vector<RationalFunction> rhs;
  std::vector<DifferentialForm> columns;
  for (std::size_t j = 0; j < nf; ++j) {
    columns.push_back(lie_derivative(VectorField::coordinate(mc.chart, mc.m + static_cast<int>(j)), mc.theta));
  }
  for (IndexSet row : rows) {
    std::vector<RationalFunction> line;
    bool any = false;
    for (const auto& col : columns) {
      line.push_back(col.component(row));
      any = any || !line.back().is_zero();
    }
    if (!any && r.component(row).is_zero()) continue;
    a.push_back(std::move(line));
    rhs.push_back(-r.component(row));
  }
  auto sol = solve_linear(a, rhs, nf, mc.chart->zero(), mc.chart->constant(Rational(1)));
  if (!sol) throw Error("canonical lift system is inconsistent");
  std::vector<RationalFunction> comps = base_part.components();
  for (std::size_t j = 0; j < nf; ++j) comps[static_cast<std::size_t>(mc.m) + j] = sol->particular[j];
  VectorField lift(mc.chart, std::move(comps));
  if (!lie_derivative(lift, mc.theta).is_zero()) throw Error("canonical lift does not preserve theta");
  return lift;
}

MagneticData magnetic_hamiltonian(const MulticotangentChart& mc, const VectorField& w, const DifferentialForm& b,
                                  const DifferentialForm& a) {
  if (b.degree() != mc.k || a.degree() != mc.k - 1) throw DegreeMismatch("need deg b = k and deg a = k-1");
  if (!(lie_derivative(w, b) == d(a))) throw PreconditionFailed("L_w b differs from d a on the base");
  MagneticData out{w, b, a, {}, {}, {}, {}};
  out.omega = d(mc.theta) + pullback_projection(d(b), mc.chart);
  out.lift = canonical_lift(mc, w);
  out.h = -pullback_projection(a, mc.chart) + interior(out.lift, mc.theta + pullback_projection(b, mc.chart));
  out.residual = d(out.h) + interior(out.lift, out.omega);
  if (!out.residual.is_zero()) throw Error("lifted Hamiltonian fails dH = -i(w^h) omega");
  return out;
}

LiftedAction potential_comomentum(const MulticotangentChart& mc, const DifferentialForm& b, const LieAlgebraPtr& algebra,
                                  const std::vector<VectorField>& base_generators) {
  if (b.degree() != mc.k) throw DegreeMismatch("potential term must have degree k");
  for (const auto& v : base_generators) {
    if (!lie_derivative(v, b).is_zero()) throw PreconditionFailed("b is not invariant under the base action");
  }
  DifferentialForm potential = mc.theta + pullback_projection(b, mc.chart);
  PlecticStructure structure = PlecticStructure::make(d(potential));
  std::vector<VectorField> lifts;
  for (const auto& v : base_generators) lifts.push_back(canonical_lift(mc, v));
  InfinitesimalAction action = InfinitesimalAction::make(algebra, std::move(lifts), structure);
  CoMomentumMap f(algebra, mc.chart, structure.n);
  for (int k = 1; k <= structure.n && k <= algebra->dimension(); ++k) {
    int sign = -varsigma(k) * (k % 2 == 0 ? 1 : -1);
    for (IndexSet idx : subsets_of_size(algebra->dimension(), k)) {
      f.set(idx, Rational(sign) * contract(action.multivector(WedgeElement::basis(algebra, idx)), potential));
    }
  }
  return LiftedAction{std::move(structure), std::move(action), std::move(potential), std::move(f)};
}

Sl2CounterexampleReport sl2_strict_counterexample() {
  Sl2CounterexampleReport rep;
  auto g = sl2_algebra();
  SymbolicMatrix2 m = generic_sl2_matrix();
  Matrix2 h{1, 0, 0, -1};
  Matrix2 f{0, 0, 1, 0};
  AlternatingForm ef{2, {{IndexSet::of({1, 2}), Rational(1)}}};
  rep.function = matrix_adjoint_value(m, h, f, ef);
  Variables vars = m.entries[0].variables();
  rep.expected = Polynomial::variable(vars, 1) * Polynomial::variable(vars, 3) * Rational(2);
  rep.matches_expected = rep.function == rep.expected;
  rep.h_is_boundary = in_span(WedgeElement::generator(g, 0), homology(g)[1].boundaries);
  rep.b_closed = is_ce_closed(g, ef);
  rep.sample_points = {{Rational(1), Rational(0), Rational(0), Rational(1)},
                       {Rational(1), Rational(1), Rational(0), Rational(1)}};
  for (const auto& pt : rep.sample_points) rep.sample_values.push_back(rep.function.evaluate(pt));
  rep.constant = rep.sample_values[0] == rep.sample_values[1];
  rep.global_not_strict = rep.h_is_boundary && !rep.constant;
  return rep;
}

}  // namespace plectic
