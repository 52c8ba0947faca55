#include "plectic/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "plectic/errors.hpp"

namespace plectic {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Variables make_variables(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
  return *a == *b;
}

namespace {

const Variables& pick_variables(const Variables& a, const Variables& b) {
  if (a && b && !same_variables(a, b)) throw std::invalid_argument("polynomials over different variable lists");
  return a ? a : b;
}

}  // namespace

Polynomial::Polynomial(Variables vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(Variables vars, const Rational& constant) : vars_(std::move(vars)) {
  add_term(Exponent{}, constant);
}

Polynomial Polynomial::variable(Variables vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw UnknownVariable("variable index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(std::move(vars), e, Rational(1));
}

Polynomial Polynomial::monomial(Variables vars, const Exponent& exponent, const Rational& coefficient) {
  Polynomial p(std::move(vars));
  p.add_term(exponent, coefficient);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (plectic::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (plectic::is_zero(it->second)) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::degree_in(std::size_t var) const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  vars_ = pick_variables(vars_, other.vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  vars_ = pick_variables(vars_, other.vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(pick_variables(a.vars_, b.vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
        if (s > 255) throw std::overflow_error("polynomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (plectic::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(vars_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= arity()) throw UnknownVariable("derivative with respect to unknown variable index " + std::to_string(var));
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::derivative(const std::string& name) const {
  if (vars_) {
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it != vars_->end()) return derivative(static_cast<std::size_t>(it - vars_->begin()));
  }
  throw UnknownVariable("unknown variable '" + name + "'");
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != arity()) throw DegreeMismatch("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (e[i] != 0) t *= std::pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity()) throw DegreeMismatch("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[var] = 0;
    Rational t = c;
    for (unsigned k = 0; k < e[var]; ++k) t *= value;
    r.add_term(d, t);
  }
  return r;
}

Polynomial Polynomial::embed(const Variables& target) const {
  if (!target || target->size() < arity()) throw std::invalid_argument("embedding target too small");
  for (std::size_t i = 0; i < arity(); ++i) {
    if ((*target)[i] != (*vars_)[i]) throw std::invalid_argument("embedding target is not a prefix extension");
  }
  Polynomial r(target);
  r.terms_ = terms_;
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, Polynomial(vars_));
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[var] = 0;
    out[e[var]].add_term(d, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  r *= Rational(1) / leading_coefficient();
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = e == Exponent{};
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << (*vars_)[i];
      if (e[i] > 1) os << "**" << int(e[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial quotient(pick_variables(a.variables(), b.variables()));
  Polynomial rem = a;
  const Exponent& lb = b.leading_exponent();
  const Rational& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponent& lr = rem.leading_exponent();
    Exponent q;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      q[i] = static_cast<std::uint8_t>(lr[i] - lb[i]);
    }
    Polynomial t = Polynomial::monomial(quotient.variables(), q, rem.leading_coefficient() / cb);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

namespace {

int highest_variable(const Polynomial& p) {
  int best = -1;
  for (const auto& [e, c] : p.terms()) {
    for (int i = static_cast<int>(kMaxVariables) - 1; i > best; --i) {
      if (e[static_cast<std::size_t>(i)] != 0) {
        best = i;
        break;
      }
    }
  }
  return best;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.variables());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return *divide_exact(p, content_in(p, var));
}

// Pseudo-remainder of a by b viewed as polynomials in var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lb = b.coefficients_in(var).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Polynomial lr = r.coefficients_in(var).back();
    Exponent shift{};
    shift[var] = static_cast<std::uint8_t>(dr - db);
    r = lb * r - lr * Polynomial::monomial(r.variables(), shift, Rational(1)) * b;
  }
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Variables& vars = pick_variables(a.variables(), b.variables());
  if (a.is_constant() || b.is_constant()) return Polynomial(vars, Rational(1));

  const int top = std::max(highest_variable(a), highest_variable(b));
  const auto var = static_cast<std::size_t>(top);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial g = gcd(ca, cb);
  Polynomial x = *divide_exact(a, ca);
  Polynomial y = *divide_exact(b, cb);
  if (x.degree_in(var) < y.degree_in(var)) std::swap(x, y);
  for (;;) {
    Polynomial r = pseudo_remainder(x, y, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return g.monic();
    x = std::move(y);
    y = primitive_part(r, var);
  }
  return (g * primitive_part(y, var)).monic();
}

}  // namespace plectic
