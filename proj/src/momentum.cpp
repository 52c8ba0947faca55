#include "plectic/momentum.hpp"

#include <algorithm>

#include "plectic/errors.hpp"
#include "plectic/linear_solve.hpp"

namespace plectic {

namespace {

DifferentialForm zero_form(const ChartPtr& chart, int degree) { return DifferentialForm(chart, std::max(degree, 0)); }

bool exact_on_chart(const DifferentialForm& a) {
  if (a.degree() == 0) return a.is_zero();
  return d(a).is_zero();
}

bool meets(ConservationTag actual, ConservationTag guaranteed) { return strength(actual) >= strength(guaranteed); }

ConservedQuantity quantity(const CoMomentumMap& f, const WedgeElement& p, const VectorField& v_h,
                           ConservationTag guaranteed, bool is_boundary) {
  ConservedQuantity q{p, f(p), {}, guaranteed, is_boundary, false};
  q.actual = classify_conservation(v_h, q.form);
  q.consistent = meets(q.actual.tag, guaranteed);
  return q;
}

void require_cycle(const WedgeElement& p) {
  if (p.degree() < 1) throw PreconditionFailed("element of degree at least 1 expected");
  if (!is_cycle(p)) throw NotACycle("element " + p.to_string() + " is not a cycle");
}

}  // namespace

int varsigma(int k) {
  int e = (k * (k + 1) / 2) % 2;
  return e == 0 ? -1 : 1;
}

PlecticStructure PlecticStructure::make(DifferentialForm omega) {
  if (omega.degree() < 1) throw DegreeMismatch("plectic form must have degree at least 1");
  if (!d(omega).is_zero()) throw NotClosed("plectic form is not closed");
  PlecticStructure p;
  p.n = omega.degree() - 1;
  p.nondegenerate = p.n >= 1 && is_nondegenerate(omega);
  p.omega = std::move(omega);
  return p;
}

InfinitesimalAction InfinitesimalAction::make(LieAlgebraPtr algebra, std::vector<VectorField> generators,
                                              const PlecticStructure& p) {
  if (static_cast<int>(generators.size()) != algebra->dimension())
    throw PreconditionFailed("one generator per basis element expected");
  for (const auto& v : generators) {
    if (!same_chart(v.chart(), p.chart())) throw ChartMismatch();
  }
  InfinitesimalAction a{std::move(algebra), p.chart(), std::move(generators)};
  const auto& names = a.algebra->basis_names();
  int n = a.algebra->dimension();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VectorField expected(a.chart);
      const auto& c = a.algebra->bracket(i, j);
      for (int k = 0; k < n; ++k) {
        if (sgn(c[static_cast<std::size_t>(k)]) != 0) expected = expected + c[static_cast<std::size_t>(k)] * a.generators[static_cast<std::size_t>(k)];
      }
      if (!(bracket(a.generators[static_cast<std::size_t>(i)], a.generators[static_cast<std::size_t>(j)]) == expected))
        throw PreconditionFailed("generators do not satisfy [v_" + names[static_cast<std::size_t>(i)] + ", v_" +
                                 names[static_cast<std::size_t>(j)] + "] = v_[" + names[static_cast<std::size_t>(i)] +
                                 "," + names[static_cast<std::size_t>(j)] + "]");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!lie_derivative(a.generators[static_cast<std::size_t>(i)], p.omega).is_zero())
      throw PreconditionFailed("generator v_" + names[static_cast<std::size_t>(i)] + " does not preserve the plectic form");
  }
  return a;
}

VectorField InfinitesimalAction::field(const WedgeElement& x) const {
  if (x.degree() != 1) throw DegreeMismatch("generator of degree 1 expected");
  VectorField out(chart);
  for (const auto& [idx, c] : x.coefficients()) out = out + c * generators[static_cast<std::size_t>(idx.indices()[0])];
  return out;
}

MultiVectorField InfinitesimalAction::multivector(const WedgeElement& p) const {
  MultiVectorField y(chart, p.degree());
  for (const auto& [idx, c] : p.coefficients()) {
    std::vector<VectorField> factors;
    for (int i : idx.indices()) factors.push_back(generators[static_cast<std::size_t>(i)]);
    y.add_term(c, std::move(factors));
  }
  return y;
}

CoMomentumMap::CoMomentumMap(LieAlgebraPtr algebra, ChartPtr chart, int n)
    : alg_(std::move(algebra)), chart_(std::move(chart)), n_(n) {}

void CoMomentumMap::set(IndexSet basis, DifferentialForm form) {
  int k = basis.size();
  if (k < 1 || k > n_) throw DegreeMismatch("co-momentum component index out of range");
  if (form.degree() != n_ - k) throw DegreeMismatch("f_" + std::to_string(k) + " takes values in forms of degree " + std::to_string(n_ - k));
  if (!same_chart(form.chart(), chart_)) throw ChartMismatch();
  if (form.is_zero()) {
    entries_.erase(basis);
  } else {
    entries_[basis] = std::move(form);
  }
}

DifferentialForm CoMomentumMap::operator()(const WedgeElement& p) const {
  int k = p.degree();
  DifferentialForm out = zero_form(chart_, n_ - k);
  if (k < 1 || k > n_) return out;
  for (const auto& [idx, c] : p.coefficients()) {
    auto it = entries_.find(idx);
    if (it != entries_.end()) out += c * it->second;
  }
  return out;
}

ComomentumReport verify_comomentum(const CoMomentumMap& f, const InfinitesimalAction& action, const PlecticStructure& p) {
  ComomentumReport rep;
  const auto& g = action.algebra;
  int n = p.n;
  int top = std::min(n + 1, g->dimension());
  for (int k = 1; k <= top; ++k) {
    for (IndexSet idx : subsets_of_size(g->dimension(), k)) {
      WedgeElement e = WedgeElement::basis(g, idx);
      DifferentialForm r = Rational(varsigma(k)) * contract(action.multivector(e), p.omega);
      if (k >= 2) r += f(boundary(e));
      if (k <= n) r += d(f(e));
      ComomentumCheck c{k, idx, r.is_zero(), r};
      rep.pass = rep.pass && c.pass;
      rep.checks.push_back(std::move(c));
    }
  }
  if (n >= 1) {
    for (int i = 0; i < g->dimension(); ++i) {
      WedgeElement x = WedgeElement::generator(g, i);
      DifferentialForm r = d(f(x)) + interior(action.generators[static_cast<std::size_t>(i)], p.omega);
      ComomentumCheck c{1, IndexSet::single(i), r.is_zero(), r};
      rep.pass = rep.pass && c.pass;
      rep.hamiltonian_checks.push_back(std::move(c));
    }
  }
  return rep;
}

Observable make_observable(const PlecticStructure& p, DifferentialForm form, VectorField field) {
  if (form.degree() != p.n - 1) throw DegreeMismatch("Hamiltonian forms have degree n-1");
  if (!(d(form) == -interior(field, p.omega))) throw NotHamiltonian("d(alpha) differs from -i_v(omega)");
  return Observable{std::move(form), std::move(field)};
}

Observable make_observable(const PlecticStructure& p, DifferentialForm form) {
  if (form.degree() != p.n - 1) throw DegreeMismatch("Hamiltonian forms have degree n-1");
  VectorField v = hamiltonian_vector_field(p.omega, form).field;
  return Observable{std::move(form), std::move(v)};
}

DifferentialForm l_bracket(const std::vector<Observable>& args, const PlecticStructure& p) {
  int k = static_cast<int>(args.size());
  if (k < 1 || k > p.n + 1) throw PreconditionFailed("l_k is defined for 1 <= k <= n+1");
  const ChartPtr& chart = p.chart();
  if (k == 1) {
    const auto& a = args[0].form;
    if (a.degree() >= p.n - 1) return zero_form(chart, a.degree() + 1);
    return d(a);
  }
  for (const auto& a : args) {
    if (a.form.degree() != p.n - 1) return zero_form(chart, p.n + 1 - k);
  }
  std::vector<VectorField> fields;
  for (const auto& a : args) {
    if (!(d(a.form) == -interior(a.field, p.omega))) throw NotHamiltonian("argument is not Hamiltonian for its field");
    fields.push_back(a.field);
  }
  return Rational(varsigma(k)) * contract(MultiVectorField::wedge(chart, fields), p.omega);
}

PreservationClass classify_H_preservation(const InfinitesimalAction& action, const DifferentialForm& h) {
  PreservationClass out;
  for (const auto& v : action.generators) {
    ConservationClass c = classify_lie_derivative(lie_derivative(v, h));
    int s = strength(c.tag);
    if (s < strength(out.tag) || (s == strength(out.tag) && c.tag == ConservationTag::Undecided)) out.tag = c.tag;
    out.witnesses.push_back(std::move(c));
  }
  return out;
}

ConservationTag guaranteed_for_cycle(ConservationTag preservation) {
  switch (preservation) {
    case ConservationTag::Strict:
      return ConservationTag::Global;
    case ConservationTag::Global:
    case ConservationTag::Local:
    case ConservationTag::Undecided:
      return ConservationTag::Local;
    case ConservationTag::None:
      break;
  }
  return ConservationTag::None;
}

ConservationTag guaranteed_for_boundary(ConservationTag preservation) {
  return preservation == ConservationTag::None ? ConservationTag::None : ConservationTag::Global;
}

ConservedQuantity conserved_from_cycle(const CoMomentumMap& f, const WedgeElement& p, const VectorField& v_h,
                                       ConservationTag preservation, const HomologySpaces& hs) {
  require_cycle(p);
  bool is_boundary = in_span(p, hs[p.degree()].boundaries);
  ConservationTag g = guaranteed_for_cycle(preservation);
  if (is_boundary && strength(guaranteed_for_boundary(preservation)) > strength(g)) g = guaranteed_for_boundary(preservation);
  return quantity(f, p, v_h, g, is_boundary);
}

StrictPrimitiveCheck check_strict_primitive(const CoMomentumMap& f, const InfinitesimalAction& action,
                                            const WedgeElement& p, const DifferentialForm& h, const VectorField& v_h) {
  int k = p.degree();
  StrictPrimitiveCheck out;
  DifferentialForm fk = f(p);
  out.lie_derivative = lie_derivative(v_h, fk);
  if (k >= f.n()) {
    out.primitive = zero_form(f.chart(), 0);
    out.holds = out.lie_derivative.is_zero();
    return out;
  }
  out.primitive = interior(v_h, fk) + Rational(varsigma(k)) * contract(action.multivector(p), h);
  out.holds = out.lie_derivative == d(out.primitive);
  return out;
}

ConservationTable conservation_table(const CoMomentumMap& f, const InfinitesimalAction& action,
                                     const DifferentialForm& h, const VectorField& v_h) {
  ConservationTable t;
  t.preservation = classify_H_preservation(action, h).tag;
  HomologySpaces hs = homology(action.algebra);
  int top = std::min(f.n(), action.algebra->dimension());
  for (int k = 1; k <= top; ++k) {
    for (bool bnd : {false, true}) {
      TableRow row;
      row.k = k;
      row.boundary_row = bnd;
      row.guaranteed = bnd ? guaranteed_for_boundary(t.preservation) : guaranteed_for_cycle(t.preservation);
      const auto& elems = bnd ? hs[k].boundaries : hs[k].cycles;
      for (const auto& p : elems) {
        row.entries.push_back(quantity(f, p, v_h, row.guaranteed, bnd));
        row.consistent = row.consistent && row.entries.back().consistent;
      }
      t.consistent = t.consistent && row.consistent;
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

bool ObstructionReport::identically_zero() const {
  return std::all_of(classes.begin(), classes.end(), [](const ObstructionClass& c) { return c.zero; });
}

ObstructionReport obstruction_A(const InfinitesimalAction& action, const DifferentialForm& h, int k,
                                const HomologySpaces& hs) {
  int n = h.degree() + 1;
  if (k < 1 || k > n || k > action.algebra->dimension()) throw PreconditionFailed("obstruction degree out of range");
  if (classify_H_preservation(action, h).tag == ConservationTag::None)
    throw PreconditionFailed("action is not locally H-preserving");
  ObstructionReport rep;
  rep.k = k;
  rep.form_degree = n - k;
  DifferentialForm dh = d(h);
  for (const auto& p : hs[k].homology_representatives) {
    ObstructionClass c;
    c.representative = p;
    MultiVectorField vp = action.multivector(p);
    c.lie_derivative = multivector_lie_derivative(vp, h);
    c.contraction = contract(vp, dh);
    if (!d(c.lie_derivative).is_zero())
      throw PreconditionFailed("L_{v_p}H is not closed for the representative " + p.to_string());
    if (rep.form_degree == 0) {
      c.value = c.lie_derivative.as_function().constant_value();
      c.contraction_value = c.contraction.as_function().constant_value();
      c.zero = sgn(*c.value) == 0;
    }
    rep.classes.push_back(std::move(c));
  }
  if (k + 1 <= action.algebra->dimension()) {
    for (IndexSet idx : subsets_of_size(action.algebra->dimension(), k + 1)) {
      WedgeElement b = boundary(WedgeElement::basis(action.algebra, idx));
      if (b.is_zero()) continue;
      if (!exact_on_chart(multivector_lie_derivative(action.multivector(b), h))) rep.well_defined = false;
    }
  }
  return rep;
}

RewriteCheck rewrite_check_A(const CoMomentumMap& f, const InfinitesimalAction& action, const DifferentialForm& h,
                             const VectorField& v_h, const WedgeElement& p) {
  require_cycle(p);
  RewriteCheck out;
  out.lhs = multivector_lie_derivative(action.multivector(p), h);
  out.rhs = Rational(-varsigma(p.degree())) * lie_derivative(v_h, f(p));
  out.holds = exact_on_chart(out.lhs - out.rhs);
  return out;
}

ExtendedComomentum extend_comomentum_tilde(const CoMomentumMap& f, const InfinitesimalAction& action,
                                           const DifferentialForm& h, const VectorField& v_h, const PlecticStructure& p,
                                           const std::string& center_name) {
  if (classify_H_preservation(action, h).tag != ConservationTag::Strict)
    throw PreconditionFailed("extension requires a strictly H-preserving action");
  for (const auto& v : action.generators) {
    if (!bracket(v, v_h).is_zero()) throw PreconditionFailed("generators do not commute with v_H");
  }
  LieAlgebraPtr ext = extend_with_center(action.algebra, center_name);
  std::vector<VectorField> gens = action.generators;
  gens.push_back(v_h);
  ExtendedComomentum out{ext, InfinitesimalAction::make(ext, std::move(gens), p), CoMomentumMap(ext, p.chart(), p.n)};
  for (const auto& [idx, form] : f.entries()) out.map.set(idx, form);
  int dim = action.algebra->dimension();
  for (int k = 1; k <= p.n && k - 1 <= dim; ++k) {
    for (IndexSet idx : subsets_of_size(dim, k - 1)) {
      DifferentialForm form = h;
      if (k >= 2) form = contract(out.action.multivector(WedgeElement::basis(ext, idx)), h);
      out.map.set(idx.with(dim), Rational(varsigma(k)) * form);
    }
  }
  return out;
}

TildeConserved tilde_conserved(const ExtendedComomentum& ext, const WedgeElement& p, const VectorField& v_h) {
  TildeConserved out;
  out.element = tensor_center(p, ext.algebra);
  out.cycle = is_cycle(p) && is_cycle(out.element);
  out.form = ext.map(out.element);
  out.actual = classify_conservation(v_h, out.form);
  out.route_zero = interior(v_h, d(out.form)).is_zero();
  return out;
}

InducedComomentum induced_comomentum(const CoMomentumMap& f, const InfinitesimalAction& action, const WedgeElement& p,
                                     const PlecticStructure& structure) {
  require_cycle(p);
  const auto& g = action.algebra;
  int k = p.degree();
  InducedComomentum out;
  out.basis = isotropy_subalgebra(p);
  int m = static_cast<int>(out.basis.size());
  int dim = g->dimension();

  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    const auto& c = out.basis[static_cast<std::size_t>(i)].coefficients();
    if (c.size() == 1 && c.begin()->second == 1) {
      names.push_back(g->basis_names()[static_cast<std::size_t>(c.begin()->first.indices()[0])]);
    } else {
      names.push_back("y" + std::to_string(i + 1));
    }
  }
  Matrix<Rational> a(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < m; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = out.basis[static_cast<std::size_t>(c)].coefficient(IndexSet::single(r));
  }
  LieAlgebra::Constants consts(static_cast<std::size_t>(m), std::vector<std::vector<Rational>>(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m))));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      WedgeElement br = gerstenhaber_bracket(out.basis[static_cast<std::size_t>(i)], out.basis[static_cast<std::size_t>(j)]);
      std::vector<Rational> rhs(static_cast<std::size_t>(dim));
      for (int r = 0; r < dim; ++r) rhs[static_cast<std::size_t>(r)] = br.coefficient(IndexSet::single(r));
      auto sol = solve_linear(a, rhs, static_cast<std::size_t>(m), Rational(0), Rational(1));
      if (!sol) throw Error("isotropy subalgebra is not closed under the bracket");
      consts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sol->particular;
    }
  }
  out.subalgebra = LieAlgebra::from_constants(g->name() + "_p", names, consts);

  DifferentialForm reduced = contract(action.multivector(p), structure.omega);
  out.reduced_closed = d(reduced).is_zero();
  out.structure.n = structure.n - k;
  out.structure.nondegenerate = out.structure.n >= 1 && is_nondegenerate(reduced);
  out.structure.omega = reduced;

  std::vector<VectorField> gens;
  for (const auto& b : out.basis) gens.push_back(action.field(b));
  out.action = InfinitesimalAction::make(out.subalgebra, std::move(gens), out.structure);

  out.map = CoMomentumMap(out.subalgebra, structure.chart(), out.structure.n);
  out.alternative = out.map;
  DifferentialForm fp = f(p);
  for (int j = 1; j <= out.structure.n && j <= m; ++j) {
    for (IndexSet q : subsets_of_size(m, j)) {
      WedgeElement qg = WedgeElement::scalar(g, Rational(1));
      for (int i : q.indices()) qg = wedge(qg, out.basis[static_cast<std::size_t>(i)]);
      out.map.set(q, Rational(-varsigma(k)) * f(wedge(qg, p)));
      DifferentialForm alt = contract(action.multivector(qg), fp);
      out.alternative.set(q, k % 2 == 0 ? alt : -alt);
    }
  }
  return out;
}

ReducedHamiltonianCheck reduced_hamiltonian(const InfinitesimalAction& action, const WedgeElement& p,
                                            const DifferentialForm& h, const VectorField& v_h,
                                            const PlecticStructure& structure) {
  require_cycle(p);
  MultiVectorField vp = action.multivector(p);
  ReducedHamiltonianCheck out;
  out.reduced_h = contract(vp, h);
  out.d_reduced_h = d(out.reduced_h);
  out.contraction = interior(v_h, contract(vp, structure.omega));
  out.hamiltonian = out.d_reduced_h == -out.contraction;
  out.literal_sign = out.d_reduced_h == out.contraction;
  return out;
}

TangencyReport level_map_tangency(const CoMomentumMap& f, const VectorField& v_h, const HomologySpaces& hs,
                                  bool boundaries) {
  TangencyReport rep;
  int n = f.n();
  if (n >= static_cast<int>(hs.degrees.size())) return rep;
  rep.basis = boundaries ? hs[n].boundaries : hs[n].cycles;
  for (const auto& p : rep.basis) {
    DifferentialForm v = interior(v_h, d(f(p)));
    rep.holds = rep.holds && v.is_zero();
    rep.values.push_back(std::move(v));
  }
  return rep;
}

bool in_algebra_A(const VectorField& v, const DifferentialForm& beta) {
  return d(beta).is_zero() && lie_derivative(v, beta).is_zero();
}

bool a_algebra_membership(const InfinitesimalAction& action, const WedgeElement& p, const PlecticStructure& structure,
                          const VectorField& v_h) {
  require_cycle(p);
  return in_algebra_A(v_h, contract(action.multivector(p), structure.omega));
}

bool a_algebra_membership(const CoMomentumMap& f, const InfinitesimalAction& action,
                          const std::vector<WedgeElement>& xs, const Observable& h, const PlecticStructure& structure) {
  std::vector<Observable> args;
  for (const auto& x : xs) args.push_back(Observable{f(x), action.field(x)});
  args.push_back(h);
  return in_algebra_A(h.field, l_bracket(args, structure));
}

bool subalgebra_closure_check(const PlecticStructure& p, const VectorField& v, const std::vector<Observable>& betas) {
  if (!lie_derivative(v, p.omega).is_zero()) throw PreconditionFailed("v does not preserve the plectic form");
  for (const auto& b : betas) {
    if (!d(lie_derivative(v, b.form)).is_zero()) throw PreconditionFailed("L_v(beta) is not closed");
  }
  for (const auto& b : betas) {
    if (!lie_derivative(v, d(b.form)).is_zero()) return false;
  }
  int count = static_cast<int>(betas.size());
  for (int k = 2; k <= std::min(count, p.n + 1); ++k) {
    for (IndexSet idx : subsets_of_size(count, k)) {
      std::vector<Observable> args;
      for (int i : idx.indices()) args.push_back(betas[static_cast<std::size_t>(i)]);
      if (!lie_derivative(v, l_bracket(args, p)).is_zero()) return false;
    }
  }
  return true;
}

HamiltonianCriteria hamiltonian_criteria(const Observable& alpha, const Observable& h) {
  HamiltonianCriteria out;
  out.alpha_under_h = classify_conservation(h.field, alpha.form);
  out.h_under_alpha = classify_lie_derivative(lie_derivative(alpha.field, h.form));
  auto local = [](ConservationTag t) { return t != ConservationTag::None; };
  auto global = [](ConservationTag t) { return t == ConservationTag::Strict || t == ConservationTag::Global; };
  out.local_match = local(out.alpha_under_h.tag) == local(out.h_under_alpha.tag);
  out.global_match = global(out.alpha_under_h.tag) == global(out.h_under_alpha.tag);
  return out;
}

bool is_infinitesimally_equivariant(const CoMomentumMap& f, const InfinitesimalAction& action) {
  const auto& g = action.algebra;
  int top = std::min(f.n(), g->dimension());
  for (int i = 0; i < g->dimension(); ++i) {
    WedgeElement x = WedgeElement::generator(g, i);
    for (int k = 1; k <= top; ++k) {
      for (IndexSet idx : subsets_of_size(g->dimension(), k)) {
        WedgeElement q = WedgeElement::basis(g, idx);
        if (!(lie_derivative(action.generators[static_cast<std::size_t>(i)], f(q)) == f(gerstenhaber_bracket(x, q))))
          return false;
      }
    }
  }
  return true;
}

std::string basis_label(const LieAlgebraPtr& g, IndexSet idx) {
  std::string out;
  for (int i : idx.indices()) {
    if (!out.empty()) out += "^";
    out += g->basis_names()[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "1" : out;
}

}  // namespace plectic
