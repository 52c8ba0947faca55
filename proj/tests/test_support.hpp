#pragma once

#include <random>
#include <string>
#include <vector>

#include "plectic/expression.hpp"
#include "plectic/exterior.hpp"
#include "plectic/forms.hpp"

namespace plectic::testing {

inline ChartPtr xyz() {
  static ChartPtr c = make_chart({"x", "y", "z"});
  return c;
}

inline ChartPtr xyzw() {
  static ChartPtr c = make_chart({"x", "y", "z", "w"});
  return c;
}

inline DifferentialForm form(const std::string& s, const ChartPtr& c = xyz()) { return parse_form(s, c); }
inline VectorField field(const std::string& s, const ChartPtr& c = xyz()) { return parse_vector_field(s, c); }
inline RationalFunction fn(const std::string& s, const ChartPtr& c = xyz()) { return parse_function(s, c); }

/// Small sparse random polynomials with integer coefficients in [-3, 3].
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Polynomial polynomial(const ChartPtr& c, int max_degree, int max_terms = 3) {
    Polynomial p(c->variables());
    int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Exponent e{};
      int budget = uniform(0, max_degree);
      for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, c->dimension() - 1))];
      int coeff = uniform(-3, 3);
      p += Polynomial::monomial(c->variables(), e, Rational(coeff));
    }
    return p;
  }

  RationalFunction function(const ChartPtr& c, int max_degree) { return RationalFunction(polynomial(c, max_degree)); }

  DifferentialForm form(const ChartPtr& c, int degree, int max_degree) {
    DifferentialForm::Components comps;
    for (IndexSet idx : subsets_of_size(c->dimension(), degree)) {
      if (uniform(0, 2) == 0) continue;
      comps.emplace(idx, function(c, max_degree));
    }
    return DifferentialForm(c, degree, std::move(comps));
  }

  VectorField field(const ChartPtr& c, int max_degree) {
    std::vector<RationalFunction> comps;
    for (int i = 0; i < c->dimension(); ++i) comps.push_back(function(c, max_degree));
    return VectorField(c, std::move(comps));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace plectic::testing
