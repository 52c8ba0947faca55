#include "plectic/rational_function.hpp"

#include <cmath>
#include <stdexcept>

#include "plectic/errors.hpp"

namespace plectic {

RationalFunction::RationalFunction(Variables vars) : num_(vars), den_(vars, Rational(1)) {}

RationalFunction::RationalFunction(Variables vars, const Rational& constant)
    : num_(vars, constant), den_(vars, Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(num_.variables(), Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.variables() ? num_.variables() : den_.variables(), Rational(1));
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_term();
    if (c != 1) {
      num_ *= Rational(1) / c;
      den_ = Polynomial(den_.variables(), Rational(1));
    }
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant()) canonicalize();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const Rational& s) {
  RationalFunction r = a;
  r.num_ *= s;
  if (r.num_.is_zero()) r.canonicalize();
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var));
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

double RationalFunction::evaluate(std::span<const double> point) const {
  double n = num_.evaluate(point);
  if (is_polynomial()) return n;
  double d = den_.evaluate(point);
  double scale = 0.0;
  for (const auto& [e, c] : den_.terms()) {
    double t = std::abs(c.get_d());
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (e[i] != 0) t *= std::pow(std::abs(point[i]), e[i]);
    }
    scale += t;
  }
  if (std::abs(d) <= 1e-13 * std::max(scale, 1.0)) throw PoleError("denominator vanishes at evaluation point");
  return n / d;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational n = num_.evaluate(point);
  if (is_polynomial()) return n;
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at evaluation point");
  return n / d;
}

RationalFunction RationalFunction::embed(const Variables& target) const {
  RationalFunction r;
  r.num_ = num_.embed(target);
  r.den_ = den_.embed(target);
  return r;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace plectic
