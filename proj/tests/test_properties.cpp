#include "doctest.h"
#include "plectic/exterior.hpp"
#include "test_support.hpp"

using namespace plectic;
using plectic::testing::Generator;

TEST_CASE("tech identity on 200 random instances") {
  Generator gen(2024);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    ChartPtr chart = t % 2 == 0 ? plectic::testing::xyz() : plectic::testing::xyzw();
    const int m = gen.uniform(1, 3);
    const int degree = gen.uniform(m, chart->dimension());
    std::vector<VectorField> vs;
    for (int i = 0; i < m; ++i) vs.push_back(gen.field(chart, gen.uniform(0, 3)));
    auto omega = gen.form(chart, degree, gen.uniform(0, 3));
    auto rep = check_tech_identity(vs, omega);
    CHECK(rep.difference.is_zero());
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("d squares to zero and Cartan's formula") {
  Generator gen(77);
  for (int t = 0; t < 100; ++t) {
    ChartPtr chart = t % 2 == 0 ? plectic::testing::xyz() : plectic::testing::xyzw();
    const int k = gen.uniform(0, chart->dimension() - 1);
    auto a = gen.form(chart, k, 3);
    auto v = gen.field(chart, 2);
    CHECK(d(d(a)).is_zero());
    auto cartan = k == 0 ? interior(v, d(a)) : d(interior(v, a)) + interior(v, d(a));
    CHECK(lie_derivative(v, a) == cartan);
    CHECK(d(lie_derivative(v, a)) == lie_derivative(v, d(a)));
  }
}

TEST_CASE("Leibniz rule for d and the wedge product") {
  Generator gen(78);
  for (int t = 0; t < 100; ++t) {
    ChartPtr chart = plectic::testing::xyzw();
    const int p = gen.uniform(0, 2);
    const int q = gen.uniform(0, 3 - p);
    auto a = gen.form(chart, p, 2);
    auto b = gen.form(chart, q, 2);
    auto rhs = wedge(d(a), b) + Rational(p % 2 == 0 ? 1 : -1) * wedge(a, d(b));
    CHECK(d(wedge(a, b)) == rhs);
  }
}

TEST_CASE("Poincare primitive inverts d on exact forms") {
  Generator gen(79);
  for (int t = 0; t < 60; ++t) {
    ChartPtr chart = t % 2 == 0 ? plectic::testing::xyz() : plectic::testing::xyzw();
    const int k = gen.uniform(0, chart->dimension() - 1);
    auto a = d(gen.form(chart, k, 3));
    if (a.is_zero()) continue;
    CHECK(d(poincare_primitive(a)) == a);
  }
}
