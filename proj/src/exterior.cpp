#include "plectic/exterior.hpp"

#include "plectic/errors.hpp"
#include "plectic/linear_solve.hpp"

namespace plectic {

namespace {

using Components = DifferentialForm::Components;

void accumulate(Components& acc, IndexSet idx, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(idx, f);
  if (!inserted) it->second += f;
}

void require_same(const ChartPtr& a, const ChartPtr& b) {
  if (!same_chart(a, b)) throw ChartMismatch();
}

}  // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same(a.chart(), b.chart());
  const int deg = a.degree() + b.degree();
  if (deg > a.chart()->dimension()) throw DegreeMismatch("wedge degree exceeds chart dimension");
  Components acc;
  for (const auto& [ia, fa] : a.components()) {
    for (const auto& [ib, fb] : b.components()) {
      int sign = wedge_sign(ia, ib);
      if (sign == 0) continue;
      RationalFunction prod = fa * fb;
      accumulate(acc, IndexSet{ia.bits | ib.bits}, sign > 0 ? prod : -prod);
    }
  }
  return DifferentialForm(a.chart(), deg, std::move(acc));
}

DifferentialForm exterior_derivative(const DifferentialForm& a) {
  const int n = a.chart()->dimension();
  Components acc;
  for (const auto& [idx, f] : a.components()) {
    for (int j = 0; j < n; ++j) {
      if (idx.contains(j)) continue;
      RationalFunction df = f.derivative(static_cast<std::size_t>(j));
      if (df.is_zero()) continue;
      accumulate(acc, idx.with(j), idx.count_below(j) % 2 == 0 ? df : -df);
    }
  }
  return DifferentialForm(a.chart(), a.degree() + 1, std::move(acc));
}

DifferentialForm interior(const VectorField& v, const DifferentialForm& a) {
  require_same(v.chart(), a.chart());
  if (a.degree() == 0) return DifferentialForm(a.chart(), 0);
  Components acc;
  for (const auto& [idx, f] : a.components()) {
    int s = 0;
    for (int i : idx.indices()) {
      const RationalFunction& vi = v[i];
      if (!vi.is_zero()) {
        RationalFunction t = vi * f;
        accumulate(acc, idx.without(i), s % 2 == 0 ? t : -t);
      }
      ++s;
    }
  }
  return DifferentialForm(a.chart(), a.degree() - 1, std::move(acc));
}

DifferentialForm contract(const MultiVectorField& y, const DifferentialForm& a) {
  require_same(y.chart(), a.chart());
  if (y.degree() > a.degree()) throw DegreeMismatch("contraction degree exceeds form degree");
  DifferentialForm out(a.chart(), a.degree() - y.degree());
  for (const auto& term : y.terms()) {
    DifferentialForm r = a;
    for (const auto& v : term.factors) r = interior(v, r);
    out += term.coefficient * r;
  }
  return out;
}

DifferentialForm lie_derivative(const VectorField& v, const DifferentialForm& a) {
  DifferentialForm out = interior(v, d(a));
  if (a.degree() > 0) out += d(interior(v, a));
  return out;
}

DifferentialForm multivector_lie_derivative(const MultiVectorField& y, const DifferentialForm& a) {
  const int m = y.degree();
  if (m > a.degree() + 1) throw DegreeMismatch("multivector degree exceeds form degree + 1");
  DifferentialForm out = contract(y, d(a));
  if (m % 2 == 0) out = -out;
  if (m <= a.degree()) out += d(contract(y, a));
  return out;
}

RationalFunction directional_derivative(const VectorField& v, const RationalFunction& f) {
  RationalFunction out = v.chart()->zero();
  for (int j = 0; j < v.chart()->dimension(); ++j) {
    if (v[j].is_zero()) continue;
    out += v[j] * f.derivative(static_cast<std::size_t>(j));
  }
  return out;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  require_same(v.chart(), w.chart());
  const int n = v.chart()->dimension();
  std::vector<RationalFunction> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comps.push_back(directional_derivative(v, w[i]) - directional_derivative(w, v[i]));
  return VectorField(v.chart(), std::move(comps));
}

MultiVectorField schouten_boundary(const std::vector<VectorField>& vs) {
  const int m = static_cast<int>(vs.size());
  if (m == 0) throw DegreeMismatch("boundary of an empty wedge");
  MultiVectorField out(vs.front().chart(), m - 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<VectorField> factors{bracket(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])};
      for (int l = 0; l < m; ++l) {
        if (l != i && l != j) factors.push_back(vs[static_cast<std::size_t>(l)]);
      }
      // 1-based positions i+1, j+1 give the same parity as i+j.
      out.add_term(Rational((i + j) % 2 == 0 ? 1 : -1), std::move(factors));
    }
  }
  return out;
}

TechIdentityReport check_tech_identity(const std::vector<VectorField>& vs, const DifferentialForm& omega) {
  const int m = static_cast<int>(vs.size());
  if (m < 1 || m > omega.degree()) throw DegreeMismatch("tech identity needs 1 <= m <= deg");
  const ChartPtr& chart = omega.chart();
  TechIdentityReport rep;
  rep.lhs = d(contract(MultiVectorField::wedge(chart, vs), omega));
  if (m % 2 == 1) rep.lhs = -rep.lhs;

  rep.rhs = contract(schouten_boundary(vs), omega);
  for (int i = 0; i < m; ++i) {
    std::vector<VectorField> rest;
    for (int l = 0; l < m; ++l) {
      if (l != i) rest.push_back(vs[static_cast<std::size_t>(l)]);
    }
    DifferentialForm t = contract(MultiVectorField::wedge(chart, rest), lie_derivative(vs[static_cast<std::size_t>(i)], omega));
    // (−1)^i with 1-based i.
    rep.rhs += (i % 2 == 0) ? -t : t;
  }
  rep.rhs += contract(MultiVectorField::wedge(chart, vs), d(omega));
  rep.difference = rep.lhs - rep.rhs;
  rep.holds = rep.difference.is_zero();
  return rep;
}

namespace {

/// Rows: components of ι_{∂j} ω over all (deg ω − 1)-subsets; columns: j.
Matrix<RationalFunction> contraction_matrix(const DifferentialForm& omega, std::vector<IndexSet>& rows) {
  const ChartPtr& chart = omega.chart();
  const int n = chart->dimension();
  rows = subsets_of_size(n, omega.degree() - 1);
  Matrix<RationalFunction> m(rows.size(), std::vector<RationalFunction>(static_cast<std::size_t>(n), chart->zero()));
  for (int j = 0; j < n; ++j) {
    DifferentialForm col = interior(VectorField::coordinate(chart, j), omega);
    for (std::size_t r = 0; r < rows.size(); ++r) m[r][static_cast<std::size_t>(j)] = col.component(rows[r]);
  }
  return m;
}

void require_plectic_degree(const DifferentialForm& omega) {
  if (omega.degree() < 2) throw DegreeMismatch("multisymplectic form needs degree >= 2");
}

}  // namespace

bool is_nondegenerate(const DifferentialForm& omega) {
  require_plectic_degree(omega);
  std::vector<IndexSet> rows;
  auto m = contraction_matrix(omega, rows);
  const auto n = static_cast<std::size_t>(omega.chart()->dimension());
  return row_reduce(std::move(m), n).rank() == n;
}

HamiltonianSolution hamiltonian_vector_field(const DifferentialForm& omega, const DifferentialForm& a) {
  require_plectic_degree(omega);
  require_same(omega.chart(), a.chart());
  if (a.degree() != omega.degree() - 2) throw DegreeMismatch("Hamiltonian form must have degree deg(omega) - 2");
  const ChartPtr& chart = omega.chart();
  std::vector<IndexSet> rows;
  auto m = contraction_matrix(omega, rows);
  DifferentialForm rhs_form = -d(a);
  std::vector<RationalFunction> rhs;
  Matrix<RationalFunction> kept;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    RationalFunction b = rhs_form.component(rows[r]);
    bool empty_row = b.is_zero();
    for (const auto& e : m[r]) empty_row = empty_row && e.is_zero();
    if (empty_row) continue;
    kept.push_back(std::move(m[r]));
    rhs.push_back(std::move(b));
  }
  const auto n = static_cast<std::size_t>(chart->dimension());
  auto sol = solve_linear(kept, rhs, n, chart->zero(), chart->constant(1));
  if (!sol) throw NotHamiltonian("no vector field v satisfies i_v omega = -d alpha");
  HamiltonianSolution out{VectorField(chart, sol->particular), {}};
  for (auto& k : sol->kernel) out.kernel.emplace_back(chart, std::move(k));
  return out;
}

bool is_closed(const DifferentialForm& a) { return d(a).is_zero(); }

DifferentialForm poincare_primitive(const DifferentialForm& a) {
  const ChartPtr& chart = a.chart();
  const int k = a.degree();
  if (k == 0) {
    if (!a.is_zero()) throw NotExact("a nonzero function is never exact");
    return DifferentialForm(chart, 0);
  }
  if (!a.is_polynomial()) throw Unsupported("primitive requires polynomial coefficients");
  if (!is_closed(a)) throw NotClosed("form is not closed");
  const Variables& vars = chart->variables();
  Components acc;
  for (const auto& [idx, f] : a.components()) {
    // ∫_0^1 t^{k-1} f(tx) dt, monomial by monomial.
    Polynomial g(vars);
    for (const auto& [e, c] : f.numerator().terms()) {
      int total = 0;
      for (auto x : e) total += x;
      g += Polynomial::monomial(vars, e, c / Rational(k + total));
    }
    int s = 0;
    for (int i : idx.indices()) {
      RationalFunction t(Polynomial::variable(vars, static_cast<std::size_t>(i)) * g);
      accumulate(acc, idx.without(i), s % 2 == 0 ? t : -t);
      ++s;
    }
  }
  return DifferentialForm(chart, k - 1, std::move(acc));
}

std::string to_string(ConservationTag tag) {
  switch (tag) {
    case ConservationTag::Strict: return "strict";
    case ConservationTag::Global: return "global";
    case ConservationTag::Local: return "local";
    case ConservationTag::None: return "none";
    case ConservationTag::Undecided: return "undecided-exactness";
  }
  return "?";
}

int strength(ConservationTag tag) {
  switch (tag) {
    case ConservationTag::Strict: return 3;
    case ConservationTag::Global: return 2;
    case ConservationTag::Local:
    case ConservationTag::Undecided: return 1;
    case ConservationTag::None: return 0;
  }
  return 0;
}

ConservationClass classify_lie_derivative(const DifferentialForm& l) {
  ConservationClass out;
  out.lie_derivative = l;
  if (l.is_zero()) {
    out.tag = ConservationTag::Strict;
    return out;
  }
  if (!is_closed(l)) {
    out.tag = ConservationTag::None;
    return out;
  }
  if (l.degree() == 0) {
    out.tag = ConservationTag::Local;
    return out;
  }
  if (!l.is_polynomial()) {
    out.tag = ConservationTag::Undecided;
    return out;
  }
  out.tag = ConservationTag::Global;
  out.primitive = poincare_primitive(l);
  return out;
}

ConservationClass classify_conservation(const VectorField& v, const DifferentialForm& a) {
  require_same(v.chart(), a.chart());
  return classify_lie_derivative(lie_derivative(v, a));
}

namespace {

void require_prefix(const ChartPtr& base, const ChartPtr& target) {
  const auto& b = base->coordinate_names();
  const auto& t = target->coordinate_names();
  if (b.size() > t.size() || !std::equal(b.begin(), b.end(), t.begin())) throw ChartMismatch();
}

}  // namespace

DifferentialForm pullback_projection(const DifferentialForm& a, const ChartPtr& target) {
  require_prefix(a.chart(), target);
  Components acc;
  for (const auto& [idx, f] : a.components()) acc.emplace(idx, f.embed(target->variables()));
  return DifferentialForm(target, a.degree(), std::move(acc));
}

VectorField lift_trivially(const VectorField& v, const ChartPtr& target) {
  require_prefix(v.chart(), target);
  std::vector<RationalFunction> comps;
  for (const auto& f : v.components()) comps.push_back(f.embed(target->variables()));
  while (static_cast<int>(comps.size()) < target->dimension()) comps.push_back(target->zero());
  return VectorField(target, std::move(comps));
}

VectorField project_field(const VectorField& v, const ChartPtr& base) {
  require_prefix(base, v.chart());
  const int m = base->dimension();
  std::vector<RationalFunction> comps;
  for (int i = 0; i < m; ++i) {
    const RationalFunction& f = v[i];
    for (int j = m; j < v.chart()->dimension(); ++j) {
      if (!f.derivative(static_cast<std::size_t>(j)).is_zero()) {
        throw PreconditionFailed("field component depends on fiber coordinates");
      }
    }
    // Drop the trailing variables by evaluating the shared exponent prefix.
    Polynomial num(base->variables());
    for (const auto& [e, c] : f.numerator().terms()) num += Polynomial::monomial(base->variables(), e, c);
    Polynomial den(base->variables());
    for (const auto& [e, c] : f.denominator().terms()) den += Polynomial::monomial(base->variables(), e, c);
    comps.emplace_back(num, den);
  }
  return VectorField(base, std::move(comps));
}

}  // namespace plectic
