#include "doctest.h"
#include "plectic/errors.hpp"
#include "plectic/lie_algebra.hpp"
#include "test_support.hpp"

using namespace plectic;
using plectic::testing::Generator;

namespace {

WedgeElement random_element(Generator& gen, const LieAlgebraPtr& g, int k) {
  WedgeElement::Coefficients c;
  for (IndexSet idx : subsets_of_size(g->dimension(), k)) {
    if (gen.uniform(0, 2) == 0) continue;
    Rational q(gen.uniform(-4, 4), gen.uniform(1, 3));
    q.canonicalize();
    c.emplace(idx, q);
  }
  return WedgeElement(g, k, std::move(c));
}

WedgeElement gen_(const LieAlgebraPtr& g, const std::string& name) { return WedgeElement::generator(g, g->index_of(name)); }

std::vector<LieAlgebraPtr> registered() {
  return {abelian_algebra(2), abelian_algebra(4), heisenberg_algebra(), sl2_algebra(), so3_algebra(),
          extend_with_center(sl2_algebra())};
}

}  // namespace

TEST_CASE("structure constants are validated") {
  using B = LieAlgebra::Bracket;
  auto bad = [] {
    return LieAlgebra::from_brackets("bad", {"h", "e", "f"},
                                     {B{0, 1, {0, 3, 0}}, B{0, 2, {0, 0, -2}}, B{1, 2, {1, 0, 0}}});
  };
  CHECK_THROWS_AS(bad(), PreconditionFailed);
  LieAlgebra::Constants c(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
  c[0][1][0] = 1;  // missing antisymmetric partner
  CHECK_THROWS_AS(LieAlgebra::from_constants("x", {"a", "b"}, c), PreconditionFailed);
  CHECK_NOTHROW(sl2_algebra());
  CHECK_NOTHROW(so3_algebra());
}

TEST_CASE("homology boundary examples") {
  auto ab = abelian_algebra(3);
  CHECK(boundary(wedge(gen_(ab, "e1"), gen_(ab, "e2"))).is_zero());

  auto heis = heisenberg_algebra();
  CHECK(boundary(wedge(gen_(heis, "e1"), gen_(heis, "e2"))) == -gen_(heis, "e3"));

  auto sl2 = sl2_algebra();
  auto h = gen_(sl2, "h"), e = gen_(sl2, "e"), f = gen_(sl2, "f");
  CHECK(boundary(wedge(e, f)) == -h);
  CHECK(boundary(wedge(h, e)) == Rational(-2) * e);
  CHECK(boundary(wedge(wedge(h, e), f)).is_zero());
  CHECK(boundary(h).is_zero());
}

TEST_CASE("boundary squares to zero on random elements") {
  Generator gen(41);
  for (const auto& g : registered()) {
    for (int t = 0; t < 40; ++t) {
      int k = gen.uniform(2, g->dimension());
      auto p = random_element(gen, g, k);
      auto bp = boundary(p);
      CHECK(boundary(bp).is_zero());
    }
  }
}

TEST_CASE("homology spaces") {
  auto h2 = homology(abelian_algebra(2));
  CHECK(h2[2].cycles.size() == 1);
  CHECK(h2[2].boundaries.empty());
  CHECK(h2[2].dim_homology == 1);

  auto hs = homology(sl2_algebra());
  CHECK(hs[1].boundaries.size() == 3);
  CHECK(hs[1].cycles.size() == 3);
  CHECK(hs[1].dim_homology == 0);
  CHECK(hs[2].cycles.empty());
  CHECK(hs[3].cycles.size() == 1);
  CHECK(hs[3].dim_homology == 1);
  CHECK(hs[0].dim_homology == 1);

  auto hh = homology(heisenberg_algebra());
  CHECK(hh[1].dim_homology == 2);
  CHECK(hh[2].dim_homology == 2);

  for (const auto& g : registered()) {
    auto hg = homology(g);
    for (int k = 0; k <= g->dimension(); ++k) {
      CHECK(hg[k].dim_homology >= 0);
      CHECK(static_cast<int>(hg[k].homology_representatives.size()) == hg[k].dim_homology);
      for (const auto& b : hg[k].boundaries) {
        CHECK(is_cycle(b));
        CHECK(in_span(b, hg[k].cycles));
      }
      for (const auto& z : hg[k].cycles) CHECK(is_cycle(z));
    }
  }
}

TEST_CASE("Gerstenhaber bracket") {
  auto sl2 = sl2_algebra();
  auto h = gen_(sl2, "h"), e = gen_(sl2, "e"), f = gen_(sl2, "f");
  CHECK(gerstenhaber_bracket(h, wedge(e, f)).is_zero());
  CHECK(gerstenhaber_bracket(h, e) == Rational(2) * e);
  CHECK(gerstenhaber_bracket(e, f) == h);
  auto ab = abelian_algebra(3);
  CHECK(gerstenhaber_bracket(gen_(ab, "e1"), wedge(gen_(ab, "e2"), gen_(ab, "e3"))).is_zero());
}

TEST_CASE("ad_x is a derivation of the wedge product") {
  Generator gen(42);
  for (const auto& g : registered()) {
    for (int t = 0; t < 20; ++t) {
      auto x = random_element(gen, g, 1);
      int k = gen.uniform(1, 2), l = gen.uniform(1, 2);
      if (k + l > g->dimension()) continue;
      auto p = random_element(gen, g, k), q = random_element(gen, g, l);
      auto lhs = gerstenhaber_bracket(x, wedge(p, q));
      auto rhs = wedge(gerstenhaber_bracket(x, p), q) + wedge(p, gerstenhaber_bracket(x, q));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Leibniz rule for the boundary") {
  Generator gen(43);
  for (const auto& g : registered()) {
    for (int t = 0; t < 30; ++t) {
      int k = gen.uniform(0, g->dimension()), l = gen.uniform(0, g->dimension() - k);
      CHECK(check_leibniz(random_element(gen, g, k), random_element(gen, g, l)));
    }
  }
}

TEST_CASE("isotropy subalgebras") {
  auto ab = abelian_algebra(3);
  CHECK(isotropy_subalgebra(wedge(gen_(ab, "e1"), gen_(ab, "e2"))).size() == 3);

  auto sl2 = sl2_algebra();
  auto h = gen_(sl2, "h"), e = gen_(sl2, "e"), f = gen_(sl2, "f");
  auto iso = isotropy_subalgebra(wedge(e, f));
  CHECK(iso.size() == 1);
  CHECK(in_span(h, iso));
  CHECK_THROWS_AS(isotropy_subalgebra(WedgeElement(sl2, 2)), PreconditionFailed);

  Generator gen(44);
  for (const auto& g : registered()) {
    auto hg = homology(g);
    for (int k = 1; k < g->dimension(); ++k) {
      for (const auto& p : hg[k].cycles) {
        for (const auto& x : isotropy_subalgebra(p)) CHECK(is_cycle(wedge(x, p)));
      }
    }
  }
}

TEST_CASE("central extension") {
  auto sl2 = sl2_algebra();
  auto ext = extend_with_center(sl2);
  CHECK(ext->dimension() == 4);
  CHECK(ext->basis_names().back() == "c");

  for (const auto& g : registered()) {
    auto gt = extend_with_center(g, "z0");
    auto hg = homology(g), ht = homology(gt);
    for (int k = 1; k <= g->dimension(); ++k) {
      CHECK(ht[k].cycles.size() == hg[k].cycles.size() + hg[k - 1].cycles.size());
    }
  }

  // p ∈ Z_k: ∂(p⊗c) = (∂p)⊗c = 0.
  auto hs = homology(sl2);
  for (const auto& p : hs[1].cycles) {
    auto pc = tensor_center(p, ext);
    CHECK(is_cycle(pc));
    CHECK(boundary(pc) == tensor_center(boundary(p), ext));
  }
  auto ef = wedge(gen_(sl2, "e"), gen_(sl2, "f"));
  CHECK(boundary(tensor_center(ef, ext)) == tensor_center(boundary(ef), ext));
}

TEST_CASE("SL2 adjoint evaluation") {
  auto g = generic_sl2_matrix();
  Matrix2 h{1, 0, 0, -1}, f{0, 0, 1, 0}, e{0, 1, 0, 0};
  AlternatingForm ef{2, {{IndexSet::of({1, 2}), Rational(1)}}};
  Polynomial v = matrix_adjoint_value(g, h, f, ef);
  Variables vars = g.entries[0].variables();
  Polynomial expected = Polynomial::variable(vars, 1) * Polynomial::variable(vars, 3) * Rational(2);
  CHECK(v == expected);

  SymbolicMatrix2 id{{Polynomial(vars, 1), Polynomial(vars), Polynomial(vars), Polynomial(vars, 1)}};
  CHECK(matrix_adjoint_value(id, h, f, ef).is_zero());
  CHECK(matrix_adjoint_value(id, f, f, ef).is_zero());
  CHECK(matrix_adjoint_value(id, e, f, ef) == Polynomial(vars, 1));

  Matrix2 bad{1, 0, 0, 1};
  CHECK_THROWS_AS(matrix_adjoint_value(g, bad, f, ef), PreconditionFailed);
  CHECK(is_ce_closed(sl2_algebra(), ef));
}
