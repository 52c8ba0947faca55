#include "doctest.h"
#include "plectic/errors.hpp"
#include "plectic/momentum.hpp"
#include "test_support.hpp"

using namespace plectic;
using plectic::testing::field;
using plectic::testing::form;
using plectic::testing::Generator;

namespace {

struct Setup {
  PlecticStructure p;
  InfinitesimalAction action;
  CoMomentumMap f;
  DifferentialForm h;
  VectorField v_h;
};

WedgeElement el(const LieAlgebraPtr& g, const std::vector<int>& idx) {
  return WedgeElement::basis(g, IndexSet::of(idx));
}

Setup translation_pair() {
  auto c = plectic::testing::xyz();
  auto p = PlecticStructure::make(form("dx^dy^dz"));
  auto g = abelian_algebra(2, {"a", "b"});
  auto action = InfinitesimalAction::make(g, {field("d/dx"), field("d/dy")}, p);
  CoMomentumMap f(g, c, 2);
  f.set(IndexSet::of({0}), form("-y*dz"));
  f.set(IndexSet::of({1}), form("x*dz"));
  f.set(IndexSet::of({0, 1}), parse_form("-z", c, 0));
  return {p, action, f, form("-x*dy"), field("d/dz")};
}

Setup strict_translation() {
  auto c = plectic::testing::xyz();
  auto p = PlecticStructure::make(form("dx^dy^dz"));
  auto g = abelian_algebra(1, {"e"});
  auto action = InfinitesimalAction::make(g, {field("-d/dy")}, p);
  CoMomentumMap f(g, c, 2);
  f.set(IndexSet::of({0}), form("z*dx"));
  return {p, action, f, form("-x*dy"), field("d/dz")};
}

Setup isotropy_r4() {
  auto c = make_chart({"x1", "x2", "x3", "x4"});
  auto p = PlecticStructure::make(parse_form("dx1^dx2^dx3^dx4", c));
  auto g = abelian_algebra(3);
  auto action = InfinitesimalAction::make(
      g, {parse_vector_field("d/dx1", c), parse_vector_field("d/dx2", c), parse_vector_field("d/dx3", c)}, p);
  CoMomentumMap f(g, c, 3);
  f.set(IndexSet::of({0}), parse_form("-x2*dx3^dx4", c));
  f.set(IndexSet::of({1}), parse_form("x1*dx3^dx4", c));
  f.set(IndexSet::of({2}), parse_form("-x1*dx2^dx4", c));
  f.set(IndexSet::of({0, 1}), parse_form("-x3*dx4", c));
  f.set(IndexSet::of({0, 2}), parse_form("x2*dx4", c));
  f.set(IndexSet::of({1, 2}), parse_form("-x1*dx4", c));
  f.set(IndexSet::of({0, 1, 2}), parse_form("x4", c, 0));
  auto h = parse_form("x4**2*dx1^dx2", c);
  return {p, action, f, h, hamiltonian_vector_field(p.omega, h).field};
}

/// f_k(p) = K(−f_{k−1}(∂p) − ς(k) ι(v_p) ω) with the Poincaré homotopy K.
CoMomentumMap by_primitives(const InfinitesimalAction& action, const PlecticStructure& p) {
  CoMomentumMap f(action.algebra, p.chart(), p.n);
  int top = std::min(p.n, action.algebra->dimension());
  for (int k = 1; k <= top; ++k) {
    for (IndexSet idx : subsets_of_size(action.algebra->dimension(), k)) {
      WedgeElement e = WedgeElement::basis(action.algebra, idx);
      DifferentialForm rhs = Rational(-varsigma(k)) * contract(action.multivector(e), p.omega);
      if (k >= 2) rhs -= f(boundary(e));
      f.set(idx, poincare_primitive(rhs));
    }
  }
  return f;
}

}  // namespace

TEST_CASE("varsigma table") {
  const int expected[] = {1, 1, -1, -1, 1, 1, -1, -1};
  for (int k = 1; k <= 8; ++k) CHECK(varsigma(k) == expected[k - 1]);
  for (int k = 1; k <= 6; ++k) {
    for (int j = 1; j <= 6; ++j) CHECK(varsigma(k + j) == varsigma(k) * varsigma(j) * ((k * j) % 2 == 0 ? -1 : 1));
  }
}

TEST_CASE("plectic structure and action validation") {
  CHECK_THROWS_AS(PlecticStructure::make(form("x*dy^dz")), NotClosed);
  auto p = PlecticStructure::make(form("dx^dy^dz"));
  CHECK(p.n == 2);
  CHECK(p.nondegenerate);
  CHECK_FALSE(PlecticStructure::make(form("dx^dy")).nondegenerate);

  auto g = abelian_algebra(2);
  CHECK_THROWS_AS(InfinitesimalAction::make(g, {field("d/dx"), field("x*d/dy")}, p), PreconditionFailed);
  CHECK_THROWS_AS(InfinitesimalAction::make(g, {field("d/dx"), field("y*d/dy")}, p), PreconditionFailed);
  CHECK_THROWS_AS(InfinitesimalAction::make(g, {field("d/dx")}, p), PreconditionFailed);
  CHECK_NOTHROW(InfinitesimalAction::make(heisenberg_algebra(), {field("d/dx"), field("d/dy + x*d/dz"), field("d/dz")}, p));
}

TEST_CASE("verify_comomentum on the translation pair") {
  auto s = translation_pair();
  auto rep = verify_comomentum(s.f, s.action, s.p);
  CHECK(rep.pass);
  CHECK(rep.checks.size() == 3);
  for (const auto& c : rep.checks) CHECK(c.residual.is_zero());

  s.f.set(IndexSet::of({0, 1}), parse_form("z", s.p.chart(), 0));
  rep = verify_comomentum(s.f, s.action, s.p);
  CHECK_FALSE(rep.pass);
  for (const auto& c : rep.checks) {
    if (c.k == 2) CHECK(c.residual == form("2*dz"));
  }
}

TEST_CASE("verify_comomentum on the strict translation example") {
  auto s = strict_translation();
  CHECK(verify_comomentum(s.f, s.action, s.p).pass);
  CHECK(is_infinitesimally_equivariant(s.f, s.action));
  CHECK_FALSE(is_infinitesimally_equivariant(translation_pair().f, translation_pair().action));
}

TEST_CASE("non-abelian action with co-momentum map from primitives") {
  auto c = plectic::testing::xyzw();
  auto p = PlecticStructure::make(parse_form("dx^dy^dz^dw", c));
  auto action = InfinitesimalAction::make(heisenberg_algebra(),
                                          {parse_vector_field("d/dx", c), parse_vector_field("d/dy + x*d/dz", c),
                                           parse_vector_field("d/dz", c)},
                                          p);
  auto f = by_primitives(action, p);
  CHECK(verify_comomentum(f, action, p).pass);

  // Same construction on R^3 hits the k = n+1 constraint: ι(v_1∧v_2∧v_3)ω ≠ 0 while ∂(e1∧e2∧e3) = 0.
  auto c3 = plectic::testing::xyz();
  auto p3 = PlecticStructure::make(form("dx^dy^dz"));
  auto a3 = InfinitesimalAction::make(heisenberg_algebra(), {field("d/dx"), field("d/dy + x*d/dz"), field("d/dz")}, p3);
  auto rep = verify_comomentum(by_primitives(a3, p3), a3, p3);
  CHECK_FALSE(rep.pass);
  for (const auto& chk : rep.checks) CHECK(chk.pass == (chk.k <= 2));
}

TEST_CASE("L-infinity brackets") {
  auto p = PlecticStructure::make(form("dx^dy^dz"));
  Observable alpha = make_observable(p, form("z*dx"), field("-d/dy"));
  Observable h = make_observable(p, form("-x*dy"));
  CHECK(h.field == field("d/dz"));
  CHECK(l_bracket({alpha, h}, p) == form("-dx"));
  CHECK(l_bracket({alpha}, p).is_zero());
  Observable fn{parse_form("x*y", p.chart(), 0), VectorField(p.chart())};
  CHECK(l_bracket({fn}, p) == form("y*dx + x*dy"));
  CHECK(l_bracket({alpha, fn}, p).is_zero());
  CHECK_THROWS_AS(make_observable(p, form("z*dx"), field("d/dy")), NotHamiltonian);
  CHECK(l_bracket({alpha, h, make_observable(p, form("z*dy"))}, p).degree() == 0);
}

TEST_CASE("H-preservation classes") {
  auto s = translation_pair();
  auto pc = classify_H_preservation(s.action, s.h);
  CHECK(pc.tag == ConservationTag::Global);
  REQUIRE(pc.witnesses.size() == 2);
  CHECK(pc.witnesses[0].lie_derivative == form("-dy"));
  CHECK(pc.witnesses[1].lie_derivative.is_zero());

  auto t = strict_translation();
  CHECK(classify_H_preservation(t.action, t.h).tag == ConservationTag::Strict);

  auto empty = InfinitesimalAction::make(abelian_algebra(0), {}, t.p);
  CHECK(classify_H_preservation(empty, t.h).tag == ConservationTag::Strict);

  auto loc = InfinitesimalAction::make(abelian_algebra(1), {field("d/dz")}, t.p);
  CHECK(classify_H_preservation(loc, form("z*dx")).tag == ConservationTag::Global);
  auto none = InfinitesimalAction::make(abelian_algebra(1), {field("d/dz")}, t.p);
  CHECK(classify_H_preservation(none, form("z**2*dx")).tag == ConservationTag::None);
}

TEST_CASE("conserved quantities from cycles") {
  auto s = translation_pair();
  auto hs = homology(s.action.algebra);
  auto ab = el(s.action.algebra, {0, 1});
  auto q = conserved_from_cycle(s.f, ab, s.v_h, ConservationTag::Global, hs);
  CHECK(q.form == parse_form("-z", s.p.chart(), 0));
  CHECK(q.actual.tag == ConservationTag::Local);
  CHECK(q.actual.lie_derivative == parse_form("-1", s.p.chart(), 0));
  CHECK(q.guaranteed == ConservationTag::Local);
  CHECK(q.consistent);
  CHECK_FALSE(q.is_boundary);

  auto t = strict_translation();
  auto ht = homology(t.action.algebra);
  auto q1 = conserved_from_cycle(t.f, el(t.action.algebra, {0}), t.v_h, ConservationTag::Strict, ht);
  CHECK(q1.actual.tag == ConservationTag::Global);
  REQUIRE(q1.actual.primitive);
  CHECK(*q1.actual.primitive == parse_form("x", t.p.chart(), 0));
  CHECK(q1.actual.lie_derivative == form("dx"));
  CHECK(q1.guaranteed == ConservationTag::Global);

  auto heis = heisenberg_algebra();
  auto p3 = PlecticStructure::make(form("dx^dy^dz"));
  auto a3 = InfinitesimalAction::make(heis, {field("d/dx"), field("d/dy + x*d/dz"), field("d/dz")}, p3);
  CoMomentumMap f3(heis, p3.chart(), 2);
  CHECK_THROWS_AS(conserved_from_cycle(f3, el(heis, {0, 1}), field("d/dz"), ConservationTag::Strict, homology(heis)),
                  NotACycle);
}

TEST_CASE("strict primitive identity") {
  auto t = strict_translation();
  auto chk = check_strict_primitive(t.f, t.action, el(t.action.algebra, {0}), t.h, t.v_h);
  CHECK(chk.holds);
  CHECK(chk.lie_derivative == form("dx"));

  auto r = isotropy_r4();
  CHECK(classify_H_preservation(r.action, r.h).tag == ConservationTag::Strict);
  auto hs = homology(r.action.algebra);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& p : hs[k].cycles) CHECK(check_strict_primitive(r.f, r.action, p, r.h, r.v_h).holds);
  }
}

TEST_CASE("conservation table") {
  auto s = translation_pair();
  auto t = conservation_table(s.f, s.action, s.h, s.v_h);
  CHECK(t.preservation == ConservationTag::Global);
  CHECK(t.consistent);
  for (const auto& row : t.rows) {
    if (row.k == 2 && !row.boundary_row) {
      REQUIRE(row.entries.size() == 1);
      CHECK(row.entries[0].actual.tag == ConservationTag::Local);
      CHECK(row.guaranteed == ConservationTag::Local);
    }
    if (row.k == 2 && row.boundary_row) CHECK(row.entries.empty());
  }

  auto st = strict_translation();
  auto t2 = conservation_table(st.f, st.action, st.h, st.v_h);
  CHECK(t2.preservation == ConservationTag::Strict);
  CHECK(t2.consistent);
  CHECK(t2.rows[0].entries[0].actual.tag == ConservationTag::Global);

  auto r = isotropy_r4();
  CHECK(conservation_table(r.f, r.action, r.h, r.v_h).consistent);
}

TEST_CASE("obstruction map and rewrite lemma") {
  auto s = translation_pair();
  auto hs = homology(s.action.algebra);
  auto a2 = obstruction_A(s.action, s.h, 2, hs);
  REQUIRE(a2.classes.size() == 1);
  CHECK_FALSE(a2.classes[0].zero);
  CHECK(*a2.classes[0].value == 1);
  CHECK(*a2.classes[0].contraction_value == -1);
  CHECK(a2.well_defined);
  CHECK(obstruction_A(s.action, s.h, 1, hs).identically_zero());

  auto rw = rewrite_check_A(s.f, s.action, s.h, s.v_h, el(s.action.algebra, {0, 1}));
  CHECK(rw.holds);
  CHECK(rw.lhs == rw.rhs);

  auto r = isotropy_r4();
  auto hr = homology(r.action.algebra);
  for (int k = 1; k <= 3; ++k) {
    CHECK(obstruction_A(r.action, r.h, k, hr).identically_zero());
    for (const auto& p : hr[k].cycles) CHECK(rewrite_check_A(r.f, r.action, r.h, r.v_h, p).holds);
  }

  auto none = InfinitesimalAction::make(abelian_algebra(1), {field("d/dz")}, s.p);
  CHECK_THROWS_AS(obstruction_A(none, form("z**2*dx"), 1, homology(none.algebra)), PreconditionFailed);
}

TEST_CASE("extension by the Hamiltonian flow") {
  auto t = strict_translation();
  auto ext = extend_comomentum_tilde(t.f, t.action, t.h, t.v_h, t.p);
  CHECK(ext.algebra->dimension() == 2);
  CHECK(verify_comomentum(ext.map, ext.action, t.p).pass);
  CHECK(ext.map(WedgeElement::generator(ext.algebra, 1)) == t.h);
  CHECK(ext.map(el(ext.algebra, {0, 1})) == parse_form("x", t.p.chart(), 0));
  CHECK(ext.map(el(ext.algebra, {0})) == t.f(el(t.action.algebra, {0})));

  auto tc = tilde_conserved(ext, el(t.action.algebra, {0}), t.v_h);
  CHECK(tc.cycle);
  CHECK(tc.route_zero);
  CHECK(tc.actual.tag == ConservationTag::Strict);

  auto s = translation_pair();
  CHECK_THROWS_AS(extend_comomentum_tilde(s.f, s.action, s.h, s.v_h, s.p), PreconditionFailed);

  auto r = isotropy_r4();
  auto er = extend_comomentum_tilde(r.f, r.action, r.h, r.v_h, r.p);
  CHECK(verify_comomentum(er.map, er.action, r.p).pass);
  auto hr = homology(r.action.algebra);
  for (int k = 1; k <= 2; ++k) {
    for (const auto& p : hr[k].cycles) {
      auto x = tilde_conserved(er, p, r.v_h);
      CHECK(x.route_zero);
      CHECK(strength(x.actual.tag) >= strength(ConservationTag::Global));
    }
  }
}

TEST_CASE("isotropy reduction") {
  auto r = isotropy_r4();
  auto p = el(r.action.algebra, {0});
  auto ind = induced_comomentum(r.f, r.action, p, r.p);
  CHECK(ind.reduced_closed);
  CHECK(ind.structure.n == 2);
  CHECK(ind.subalgebra->dimension() == 3);
  CHECK(verify_comomentum(ind.map, ind.action, ind.structure).pass);

  auto rh = reduced_hamiltonian(r.action, p, r.h, r.v_h, r.p);
  CHECK(rh.hamiltonian);
  CHECK_FALSE(rh.literal_sign);

  auto s = translation_pair();
  auto ab = el(s.action.algebra, {0, 1});
  auto top = induced_comomentum(s.f, s.action, ab, s.p);
  CHECK(top.structure.n == 0);
  CHECK(top.structure.omega == form("dz"));
  CHECK(top.map.entries().empty());

  auto sl2 = sl2_algebra();
  auto iso = isotropy_subalgebra(el(sl2, {1, 2}));
  CHECK(iso.size() == 1);
}

TEST_CASE("level sets and the algebra A(v_H)") {
  auto r = isotropy_r4();
  auto hs = homology(r.action.algebra);
  auto tan = level_map_tangency(r.f, r.v_h, hs);
  CHECK(tan.holds);
  CHECK(tan.basis.size() == 1);
  auto s = translation_pair();
  auto tb = level_map_tangency(s.f, s.v_h, homology(s.action.algebra), true);
  CHECK(tb.holds);
  CHECK(tb.basis.empty());

  for (int k = 1; k <= 3; ++k) {
    for (const auto& p : hs[k].cycles) CHECK(a_algebra_membership(r.action, p, r.p, r.v_h));
  }
  Observable h{r.h, r.v_h};
  auto g = r.action.algebra;
  CHECK(a_algebra_membership(r.f, r.action, {WedgeElement::generator(g, 0)}, h, r.p));
  CHECK(a_algebra_membership(r.f, r.action, {WedgeElement::generator(g, 0), WedgeElement::generator(g, 2)}, h, r.p));
  CHECK(in_algebra_A(r.v_h, DifferentialForm(r.p.chart(), 2)));
}

TEST_CASE("brackets of locally conserved Hamiltonian forms") {
  auto p = PlecticStructure::make(form("dx^dy^dz"));
  auto alpha = make_observable(p, form("z*dx"));
  auto beta = make_observable(p, form("z*dy"));
  CHECK(subalgebra_closure_check(p, field("d/dz"), {alpha, beta}));
  CHECK(subalgebra_closure_check(p, field("d/dz"), {}));
  CHECK_THROWS_AS(subalgebra_closure_check(p, field("d/dz"), {make_observable(p, form("z**2*dx"))}), PreconditionFailed);
  auto w = classify_conservation(field("d/dz"), wedge(alpha.form, beta.form));
  CHECK(w.tag == ConservationTag::None);
}

TEST_CASE("Hamiltonian criteria match on random pairs") {
  auto p = PlecticStructure::make(form("dx^dy^dz"));
  Generator gen(51);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    auto a = gen.form(p.chart(), 1, 2);
    auto h = gen.form(p.chart(), 1, 2);
    auto oa = make_observable(p, a);
    auto oh = make_observable(p, h);
    auto c = hamiltonian_criteria(oa, oh);
    CHECK(c.local_match);
    CHECK(c.global_match);
    ++checked;
  }
  CHECK(checked == 60);

  auto s = translation_pair();
  auto c = hamiltonian_criteria(make_observable(s.p, form("z*dx")), Observable{s.h, s.v_h});
  CHECK(c.alpha_under_h.tag == ConservationTag::Global);
  CHECK(c.h_under_alpha.tag == ConservationTag::Strict);
  CHECK(c.global_match);
}
