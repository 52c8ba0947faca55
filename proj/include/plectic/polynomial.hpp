/// @file polynomial.hpp
/// @brief Multivariate polynomials over Q with dense fixed-arity exponent vectors.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

inline constexpr std::size_t kMaxVariables = 16;

/// Ordered symbol names. Shared between every polynomial of a chart.
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);

/// Lexicographic comparison puts variable 0 first, which is the monomial
/// order used by division and gcd.
using Exponent = std::array<std::uint8_t, kMaxVariables>;

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(Variables vars);
  Polynomial(Variables vars, const Rational& constant);

  static Polynomial variable(Variables vars, std::size_t index);
  static Polynomial monomial(Variables vars, const Exponent& exponent, const Rational& coefficient);

  const Variables& variables() const { return vars_; }
  std::size_t arity() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Zero for the zero polynomial; otherwise the degree-0 coefficient.
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  /// Leading term in lex order; undefined on zero.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned n) const;

  /// Formal partial derivative. Throws UnknownVariable for an index outside the arity.
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(const std::string& name) const;

  double evaluate(std::span<const double> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes var := value (rational), keeping the arity.
  Polynomial substitute(std::size_t var, const Rational& value) const;

  /// Re-homes the polynomial on a larger variable list whose prefix is the current one.
  Polynomial embed(const Variables& target) const;

  /// Coefficients of var^0, var^1, ... as polynomials free of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Divides out the leading coefficient; zero stays zero.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  Variables vars_;
  Terms terms_;
};

/// Exact quotient a / b when b divides a, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (lex leading coefficient 1); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

bool same_variables(const Variables& a, const Variables& b);

}  // namespace plectic
