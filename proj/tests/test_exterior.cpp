#include "doctest.h"
#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"
#include "test_support.hpp"

using namespace plectic;
using plectic::testing::field;
using plectic::testing::fn;
using plectic::testing::form;
using plectic::testing::Generator;
using plectic::testing::xyz;
using plectic::testing::xyzw;

namespace {

MultiVectorField mv(const std::vector<std::string>& fields, const ChartPtr& c = xyz()) {
  std::vector<VectorField> vs;
  for (const auto& f : fields) vs.push_back(field(f, c));
  return MultiVectorField::wedge(c, vs);
}

}  // namespace

TEST_CASE("wedge product") {
  CHECK(wedge(form("z*dx"), form("z*dy")) == form("z**2*dx^dy"));
  CHECK(wedge(form("dx"), form("dx")).is_zero());
  CHECK(wedge(form("1"), form("x*dy + dz")) == form("x*dy + dz"));
  CHECK(wedge(form("dy"), form("dx")) == form("-dx^dy"));
  CHECK(wedge(form("dz"), form("dx^dy")) == form("dx^dy^dz"));
  CHECK_THROWS_AS(wedge(form("dx^dy"), form("dx^dz")), DegreeMismatch);
  CHECK_THROWS_AS(wedge(form("dx"), form("dx", xyzw())), ChartMismatch);
}

TEST_CASE("graded commutativity of wedge") {
  Generator gen(21);
  for (int i = 0; i < 50; ++i) {
    int p = gen.uniform(0, 2), q = gen.uniform(0, 2);
    auto a = gen.form(xyzw(), p, 2), b = gen.form(xyzw(), q, 2);
    auto ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab == ((p * q) % 2 == 0 ? ba : -ba));
  }
}

TEST_CASE("exterior derivative") {
  CHECK(d(form("x*dy + z*dz")) == form("dx^dy"));
  CHECK(d(form("-z")) == form("-dz"));
  CHECK(d(form("x*y*z")) == form("y*z*dx + x*z*dy + x*y*dz"));
  CHECK(d(form("dx^dy^dz")).is_zero());
  Generator gen(22);
  for (int i = 0; i < 50; ++i) {
    auto a = gen.form(xyzw(), gen.uniform(0, 3), 3);
    CHECK(d(d(a)).is_zero());
  }
}

TEST_CASE("contraction with multivector fields") {
  CHECK(contract(mv({"d/dx", "d/dy"}), form("dx^dy^dz")) == form("dz"));
  CHECK(contract(mv({"d/dx", "d/dy"}), form("dx^dy")) == form("1"));
  CHECK(contract(mv({"d/dx", "d/dy"}), form("-dx^dy")) == form("-1"));
  // The last factor is contracted first: ι_{∂y} ι_{∂x}.
  CHECK(contract(mv({"d/dy", "d/dx"}), form("dx^dy")) == form("-1"));
  CHECK_THROWS_AS(contract(mv({"d/dx", "d/dy"}), form("dx")), DegreeMismatch);

  Generator gen(23);
  for (int i = 0; i < 30; ++i) {
    auto v = gen.field(xyz(), 2);
    auto a = gen.form(xyz(), 2, 2);
    auto f = gen.function(xyz(), 2);
    CHECK(interior(v, f * a) == f * interior(v, a));
  }
}

TEST_CASE("contraction agrees with brute-force evaluation") {
  // ι(v1∧v2)ω evaluated as ω(v1, v2, ·) through determinant expansion on coordinate slots.
  Generator gen(24);
  for (int i = 0; i < 20; ++i) {
    auto v1 = gen.field(xyz(), 1), v2 = gen.field(xyz(), 1);
    auto f = gen.function(xyz(), 2);
    DifferentialForm vol = f * form("dx^dy^dz");
    auto r = contract(MultiVectorField::wedge(xyz(), {v1, v2}), vol);
    for (int k = 0; k < 3; ++k) {
      // ω(v1, v2, e_k) = f · det[v1, v2, e_k]
      int a = (k + 1) % 3, b = (k + 2) % 3;
      RationalFunction det = v1[a] * v2[b] - v1[b] * v2[a];
      CHECK(r.component(IndexSet::single(k)) == f * det);
    }
  }
}

TEST_CASE("Lie derivatives") {
  CHECK(lie_derivative(field("-d/dz"), form("x*dy + z*dz")) == form("-dz"));
  CHECK(lie_derivative(field("d/dz"), form("z*dx")) == form("dx"));
  CHECK(lie_derivative(field("d/dz"), form("-z")) == form("-1"));
  Generator gen(25);
  for (int i = 0; i < 40; ++i) {
    auto v = gen.field(xyz(), 2);
    auto a = gen.form(xyz(), gen.uniform(0, 2), 2);
    CHECK(lie_derivative(v, d(a)) == d(lie_derivative(v, a)));
    DifferentialForm cartan = interior(v, d(a));
    if (a.degree() > 0) cartan += d(interior(v, a));
    CHECK(lie_derivative(v, a) == cartan);
  }
}

TEST_CASE("multivector Lie derivative") {
  CHECK(multivector_lie_derivative(mv({"d/dx", "d/dy"}), form("dx^dy^dz")).is_zero());
  CHECK(multivector_lie_derivative(mv({"-d/dy"}), form("-x*dy")).is_zero());
  Generator gen(26);
  for (int i = 0; i < 30; ++i) {
    auto v = gen.field(xyz(), 2);
    auto a = gen.form(xyz(), gen.uniform(0, 2), 2);
    CHECK(multivector_lie_derivative(MultiVectorField::wedge(xyz(), {v}), a) == lie_derivative(v, a));
  }
}

TEST_CASE("vector field bracket") {
  CHECK(bracket(field("d/dx"), field("d/dy")).is_zero());
  CHECK(bracket(field("x*d/dy"), field("d/dx")) == field("-d/dy"));
  Generator gen(27);
  for (int i = 0; i < 20; ++i) {
    auto v = gen.field(xyz(), 2), w = gen.field(xyz(), 2), u = gen.field(xyz(), 1);
    CHECK(bracket(v, v).is_zero());
    CHECK(bracket(v, w) == -bracket(w, v));
    // Jacobi identity.
    VectorField jac = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("L_X ι_Y - ι_Y L_X = ι_[X,Y]") {
  Generator gen(28);
  for (int i = 0; i < 40; ++i) {
    auto x = gen.field(xyz(), 2), y = gen.field(xyz(), 2);
    auto a = gen.form(xyz(), gen.uniform(1, 3), 2);
    CHECK(lie_derivative(x, interior(y, a)) - interior(y, lie_derivative(x, a)) == interior(bracket(x, y), a));
  }
}

TEST_CASE("tech identity examples") {
  CHECK(check_tech_identity({field("x*d/dy")}, form("z*dx^dy")).holds);
  CHECK(check_tech_identity({field("d/dx"), field("d/dy")}, form("z*dx^dy^dz")).holds);
  auto rep = check_tech_identity({field("x*d/dy"), field("d/dx")}, form("x*y*dx^dz + z**2*dy^dz"));
  CHECK(rep.holds);
  CHECK(rep.difference.is_zero());
}

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(form("dx^dy^dz")));
  CHECK_FALSE(is_nondegenerate(form("dx^dy")));
  auto qp = make_chart({"q", "p"});
  CHECK(is_nondegenerate(form("dp^dq", qp)));
  CHECK_FALSE(is_nondegenerate(form("dx^dy + dx^dz")));
  CHECK_THROWS_AS(is_nondegenerate(form("dx")), DegreeMismatch);
  CHECK(is_nondegenerate(form("(1 + x**2)*dx^dy^dz")));
}

TEST_CASE("Hamiltonian vector fields") {
  auto h1 = hamiltonian_vector_field(form("dx^dy^dz"), form("x*dy + z*dz"));
  CHECK(h1.field == field("-d/dz"));
  CHECK(h1.kernel.empty());
  auto h2 = hamiltonian_vector_field(form("dx^dy^dz"), form("-x*dy"));
  CHECK(h2.field == field("d/dz"));
  auto qp = make_chart({"q", "p"});
  auto h3 = hamiltonian_vector_field(form("dp^dq", qp), form("p", qp));
  CHECK(h3.field == field("d/dq", qp));

  CHECK_THROWS_AS(hamiltonian_vector_field(form("dx^dy"), form("z")), NotHamiltonian);
  CHECK_THROWS_AS(hamiltonian_vector_field(form("dx^dy^dz"), form("x")), DegreeMismatch);

  // Degenerate structure: the kernel is reported and every solution works.
  auto deg = hamiltonian_vector_field(form("dx^dy"), form("x"));
  CHECK(deg.kernel.size() == 1);
  CHECK(interior(deg.field, form("dx^dy")) == -d(form("x")));
  for (const auto& k : deg.kernel) CHECK(interior(k, form("dx^dy")).is_zero());

  // Rational-function coefficients.
  auto h4 = hamiltonian_vector_field(form("(1 + x**2)*dx^dy^dz"), form("z*dx"));
  CHECK(interior(h4.field, form("(1 + x**2)*dx^dy^dz")) == -d(form("z*dx")));
  CHECK_FALSE(h4.field.is_polynomial());
}

TEST_CASE("Poincare primitive") {
  auto r2 = make_chart({"x", "y"});
  CHECK(poincare_primitive(form("dx^dy", r2)) == form("1/2*x*dy - 1/2*y*dx", r2));
  CHECK(poincare_primitive(form("dz")) == form("z"));
  CHECK_THROWS_AS(poincare_primitive(form("-1")), NotExact);
  CHECK(poincare_primitive(form("0")).is_zero());
  CHECK_THROWS_AS(poincare_primitive(form("x*dy")), NotClosed);
  CHECK_THROWS_AS(poincare_primitive(form("1/(1 + x**2)*dx")), Unsupported);

  Generator gen(29);
  for (int i = 0; i < 60; ++i) {
    auto beta = gen.form(xyzw(), gen.uniform(0, 2), 3);
    auto a = d(beta);
    if (a.degree() == 0) continue;
    CHECK(d(poincare_primitive(a)) == a);
  }
}

TEST_CASE("conservation classification") {
  auto c1 = classify_conservation(field("d/dz"), form("-z"));
  CHECK(c1.tag == ConservationTag::Local);
  CHECK(c1.lie_derivative == form("-1"));

  auto c2 = classify_conservation(field("d/dz"), form("z*dx"));
  CHECK(c2.tag == ConservationTag::Global);
  REQUIRE(c2.primitive);
  CHECK(*c2.primitive == form("x"));

  auto qp = make_chart({"q", "p"});
  CHECK(classify_conservation(field("d/dq", qp), form("q", qp)).tag == ConservationTag::Local);

  CHECK(classify_conservation(field("d/dz"), form("x*dy")).tag == ConservationTag::Strict);
  CHECK(classify_conservation(field("d/dz"), form("z**2*dx")).tag == ConservationTag::None);
  CHECK(classify_conservation(field("d/dz"), form("z/(1 + x**2)*dx^dy")).tag == ConservationTag::Undecided);
}

TEST_CASE("wedge counterexample: Global factors, non-closed product") {
  auto v = field("d/dz");
  auto alpha = form("z*dx"), beta = form("z*dy");
  CHECK(classify_conservation(v, alpha).tag == ConservationTag::Global);
  CHECK(classify_conservation(v, beta).tag == ConservationTag::Global);
  auto prod = classify_conservation(v, wedge(alpha, beta));
  CHECK(prod.tag == ConservationTag::None);
  CHECK(prod.lie_derivative == form("2*z*dx^dy"));
}

TEST_CASE("strictly conserved forms are closed under wedge") {
  Generator gen(30);
  auto v = field("d/dz");
  for (int i = 0; i < 30; ++i) {
    // z-independent coefficients are strictly conserved by ∂z.
    auto a = gen.form(make_chart({"x", "y"}), gen.uniform(0, 1), 2);
    auto b = gen.form(make_chart({"x", "y"}), gen.uniform(0, 1), 2);
    auto la = pullback_projection(a, xyz()), lb = pullback_projection(b, xyz());
    CHECK(classify_conservation(v, la).tag == ConservationTag::Strict);
    CHECK(classify_conservation(v, wedge(la, lb)).tag == ConservationTag::Strict);
  }
}

TEST_CASE("conserved quantities form a module over A(v)") {
  Generator gen(31);
  auto v = field("d/dz");
  auto plane = make_chart({"x", "y"});
  for (int i = 0; i < 30; ++i) {
    // β: closed, z-free; α: Global (L_v α = d(x^k) type exact form).
    auto beta = pullback_projection(d(gen.form(plane, 0, 3)), xyz());
    auto alpha = form("z*dx") + pullback_projection(gen.form(plane, 1, 2), xyz());
    REQUIRE(classify_conservation(v, alpha).tag == ConservationTag::Global);
    auto prod = classify_conservation(v, wedge(alpha, beta));
    CHECK(strength(prod.tag) >= strength(ConservationTag::Global));
  }
}

TEST_CASE("pullback along projection and field projection") {
  auto base = make_chart({"x", "y"});
  auto big = make_chart({"x", "y", "p"});
  auto a = form("x*dy", base);
  CHECK(pullback_projection(a, big) == form("x*dy", big));
  CHECK(project_field(field("x*d/dx - p*d/dp", big), base) == field("x*d/dx", base));
  CHECK_THROWS_AS(project_field(field("p*d/dx", big), base), PreconditionFailed);
  CHECK_THROWS_AS(pullback_projection(form("dx", xyz()), make_chart({"y", "x"})), ChartMismatch);
}
