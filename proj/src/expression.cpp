#include "plectic/expression.hpp"

#include <cctype>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"

namespace plectic {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, Power, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E')) {
        throw ParseError("floating-point literals are not allowed in symbolic expressions", i);
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '*':
        if (i + 1 < s.size() && s[i + 1] == '*') {
          out.push_back({Tok::Power, "**", start});
          i += 2;
          continue;
        }
        k = Tok::Star;
        break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, ChartPtr chart) : toks_(tokenize(text)), chart_(std::move(chart)) {}

  Expression parse() {
    Expression e = sum();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    e.warnings = std::move(warnings_);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  Expression scalar(const RationalFunction& f) const {
    Expression e;
    e.form = DifferentialForm::function(chart_, f);
    return e;
  }

  static bool is_function(const Expression& e) { return e.kind == Expression::Kind::Form && e.form.degree() == 0; }

  Expression add(Expression a, Expression b, bool subtract, std::size_t at) const {
    if (a.kind != b.kind) throw ParseError("cannot add a vector field and a form", at);
    if (a.kind == Expression::Kind::Vector) {
      a.field = subtract ? a.field - b.field : a.field + b.field;
      return a;
    }
    if (a.form.degree() != b.form.degree()) {
      // A vanishing summand adopts the other degree ("0 + dx", "dx^dx + dy").
      if (b.form.is_zero()) return a;
      if (a.form.is_zero()) {
        if (subtract) b.form = -b.form;
        return b;
      }
      throw ParseError("adding forms of degree " + std::to_string(a.form.degree()) + " and " +
                           std::to_string(b.form.degree()),
                       at);
    }
    a.form = subtract ? a.form - b.form : a.form + b.form;
    return a;
  }

  Expression multiply(Expression a, Expression b, std::size_t at) const {
    if (is_function(a)) return scale(a.form.as_function(), std::move(b));
    if (is_function(b)) return scale(b.form.as_function(), std::move(a));
    throw ParseError("'*' needs a function on one side; use '^' for wedge products", at);
  }

  Expression scale(const RationalFunction& f, Expression e) const {
    if (e.kind == Expression::Kind::Vector) e.field = f * e.field;
    else e.form = f * e.form;
    return e;
  }

  Expression sum() {
    Expression acc = product();
    for (;;) {
      std::size_t at = peek().pos;
      if (accept(Tok::Plus)) acc = add(std::move(acc), product(), false, at);
      else if (accept(Tok::Minus)) acc = add(std::move(acc), product(), true, at);
      else return acc;
    }
  }

  Expression product() {
    Expression acc = wedge_chain();
    for (;;) {
      std::size_t at = peek().pos;
      if (accept(Tok::Star)) {
        acc = multiply(std::move(acc), wedge_chain(), at);
      } else if (accept(Tok::Slash)) {
        Expression den = wedge_chain();
        if (!is_function(den)) throw ParseError("division by a non-function", at);
        RationalFunction f = den.form.as_function();
        if (f.is_zero()) throw ParseError("division by zero", at);
        acc = scale(chart_->constant(1) / f, std::move(acc));
      } else {
        return acc;
      }
    }
  }

  Expression wedge_chain() {
    Expression acc = unary();
    for (;;) {
      std::size_t at = peek().pos;
      if (!accept(Tok::Caret)) return acc;
      Expression rhs = unary();
      if (acc.kind != Expression::Kind::Form || rhs.kind != Expression::Kind::Form) {
        throw ParseError("wedge of vector fields is not part of the expression language", at);
      }
      if (acc.form.degree() + rhs.form.degree() > chart_->dimension()) {
        throw ParseError("wedge degree exceeds chart dimension", at);
      }
      bool nonzero = !acc.form.is_zero() && !rhs.form.is_zero();
      acc.form = wedge(acc.form, rhs.form);
      if (nonzero && acc.form.is_zero()) warnings_.push_back("wedge product vanishes (at offset " + std::to_string(at) + ")");
    }
  }

  Expression unary() {
    if (accept(Tok::Minus)) {
      Expression e = unary();
      if (e.kind == Expression::Kind::Vector) e.field = -e.field;
      else e.form = -e.form;
      return e;
    }
    if (accept(Tok::Plus)) return unary();
    return power();
  }

  Expression power() {
    Expression base = atom();
    std::size_t at = peek().pos;
    if (!accept(Tok::Power)) return base;
    if (!is_function(base)) throw ParseError("only functions can be raised to a power", at);
    const Token& t = next();
    if (t.kind != Tok::Number) throw ParseError("exponent must be a non-negative integer literal", t.pos);
    unsigned long n = std::stoul(t.text);
    const RationalFunction f = base.form.as_function();
    RationalFunction r = chart_->constant(1);
    for (unsigned long i = 0; i < n; ++i) r *= f;
    return scalar(r);
  }

  Expression atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: return scalar(chart_->constant(Rational(mpz_class(t.text))));
      case Tok::LParen: {
        Expression e = sum();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: return identifier(t);
      default: throw ParseError("unexpected '" + (t.kind == Tok::End ? std::string("end of input") : t.text) + "'", t.pos);
    }
  }

  Expression identifier(const Token& t) {
    const std::string& name = t.text;
    int idx = chart_->index_of(name);
    if (idx >= 0) return scalar(chart_->coordinate(idx));
    if (name == "d" && peek().kind == Tok::LParen) {
      next();
      Expression inner = sum();
      expect(Tok::RParen, "')'");
      if (inner.kind != Expression::Kind::Form) throw ParseError("d() applies to forms only", t.pos);
      if (inner.form.degree() >= chart_->dimension()) {
        inner.form = DifferentialForm(chart_, chart_->dimension());
        return inner;
      }
      inner.form = d(inner.form);
      return inner;
    }
    if (name == "d" && peek().kind == Tok::Slash && peek(1).kind == Tok::Ident && peek(1).text.size() > 1 &&
        peek(1).text[0] == 'd') {
      int j = chart_->index_of(peek(1).text.substr(1));
      if (j >= 0) {
        next();
        next();
        Expression e;
        e.kind = Expression::Kind::Vector;
        e.field = VectorField::coordinate(chart_, j);
        return e;
      }
    }
    if (name.size() > 1 && name[0] == 'd') {
      int j = chart_->index_of(name.substr(1));
      if (j >= 0) {
        Expression e;
        e.form = DifferentialForm::differential(chart_, j);
        return e;
      }
    }
    throw ParseError("unknown identifier '" + name + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ChartPtr chart_;
  std::vector<std::string> warnings_;
};

}  // namespace

Expression parse_expression(std::string_view text, const ChartPtr& chart) { return Parser(text, chart).parse(); }

DifferentialForm parse_form(std::string_view text, const ChartPtr& chart) {
  Expression e = parse_expression(text, chart);
  if (e.kind != Expression::Kind::Form) throw ParseError("expected a differential form, got a vector field", 0);
  return e.form;
}

DifferentialForm parse_form(std::string_view text, const ChartPtr& chart, int degree) {
  DifferentialForm f = parse_form(text, chart);
  if (f.degree() == degree) return f;
  if (f.is_zero()) return DifferentialForm(chart, degree);
  throw ParseError("expected a " + std::to_string(degree) + "-form, got degree " + std::to_string(f.degree()), 0);
}

VectorField parse_vector_field(std::string_view text, const ChartPtr& chart) {
  Expression e = parse_expression(text, chart);
  if (e.kind == Expression::Kind::Vector) return e.field;
  if (e.form.is_zero()) return VectorField(chart);
  throw ParseError("expected a vector field", 0);
}

RationalFunction parse_function(std::string_view text, const ChartPtr& chart) {
  return parse_form(text, chart, 0).as_function();
}

}  // namespace plectic
