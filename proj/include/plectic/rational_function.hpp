/// @file rational_function.hpp
/// @brief Quotients of polynomials, kept in canonical reduced form.
#pragma once

#include <span>
#include <string>

#include "plectic/polynomial.hpp"

namespace plectic {

/// Canonical form: gcd(num, den) = 1 and den monic in lex order (so its leading
/// coefficient is positive). Polynomials are stored with den == 1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Variables vars);
  RationalFunction(Variables vars, const Rational& constant);
  RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const Variables& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_term(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rational& s);
  friend RationalFunction operator*(const Rational& s, const RationalFunction& a) { return a * s; }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Cross-multiplication equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction derivative(std::size_t var) const;

  /// Throws PoleError when the denominator vanishes (relative to its term magnitudes).
  double evaluate(std::span<const double> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  RationalFunction embed(const Variables& target) const;

  /// Grammar-compatible text: "x*y - 1" or "(x)/(x**2 + 1)".
  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace plectic
