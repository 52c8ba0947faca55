#include "plectic/forms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "plectic/errors.hpp"

namespace plectic {

Chart::Chart(std::vector<std::string> coordinate_names) : names_(std::move(coordinate_names)) {
  if (names_.empty()) throw std::invalid_argument("chart needs at least one coordinate");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("duplicate coordinate name in chart");
  vars_ = make_variables(names_);
}

int Chart::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RationalFunction Chart::coordinate(int i) const {
  return RationalFunction(Polynomial::variable(vars_, static_cast<std::size_t>(i)));
}

ChartPtr make_chart(std::vector<std::string> coordinate_names) {
  return std::make_shared<const Chart>(std::move(coordinate_names));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  return a == b || (a && b && a->coordinate_names() == b->coordinate_names());
}

namespace {

void require_same(const ChartPtr& a, const ChartPtr& b) {
  if (!same_chart(a, b)) throw ChartMismatch();
}

}  // namespace

// -- DifferentialForm -------------------------------------------------------

DifferentialForm::DifferentialForm(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  // Degree dim + 1 is admitted so that d of a top form can be represented (always zero).
  if (degree_ < 0 || degree_ > chart_->dimension() + 1) {
    throw DegreeMismatch("form degree " + std::to_string(degree_) + " outside 0.." +
                         std::to_string(chart_->dimension()));
  }
}

DifferentialForm::DifferentialForm(ChartPtr chart, int degree, Components components)
    : DifferentialForm(std::move(chart), degree) {
  for (auto& [idx, f] : components) {
    if (idx.size() != degree_) throw DegreeMismatch("component index tuple has wrong length");
    add(idx, f);
  }
}

DifferentialForm DifferentialForm::function(ChartPtr chart, RationalFunction f) {
  DifferentialForm a(std::move(chart), 0);
  a.add(IndexSet{}, f);
  return a;
}

DifferentialForm DifferentialForm::differential(ChartPtr chart, int i) {
  DifferentialForm a(chart, 1);
  a.add(IndexSet::single(i), chart->constant(1));
  return a;
}

void DifferentialForm::add(IndexSet index, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(index, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

RationalFunction DifferentialForm::component(IndexSet index) const {
  auto it = comps_.find(index);
  return it == comps_.end() ? chart_->zero() : it->second;
}

bool DifferentialForm::is_polynomial() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

RationalFunction DifferentialForm::as_function() const {
  if (degree_ != 0) throw DegreeMismatch("as_function on a form of positive degree");
  return component(IndexSet{});
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r = *this;
  for (auto& [idx, f] : r.comps_) f = -f;
  return r;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
  if (!chart_) return *this = other;
  require_same(chart_, other.chart_);
  if (degree_ != other.degree_) throw DegreeMismatch("adding forms of different degree");
  for (const auto& [idx, f] : other.comps_) add(idx, f);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) { return *this += -other; }

DifferentialForm operator*(const RationalFunction& f, const DifferentialForm& a) {
  DifferentialForm r(a.chart_, a.degree_);
  if (f.is_zero()) return r;
  for (const auto& [idx, g] : a.comps_) r.add(idx, f * g);
  return r;
}

DifferentialForm operator*(const Rational& s, const DifferentialForm& a) {
  DifferentialForm r(a.chart_, a.degree_);
  if (is_zero(s)) return r;
  for (const auto& [idx, g] : a.comps_) r.add(idx, g * s);
  return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree_ != b.degree_ || a.comps_.size() != b.comps_.size()) return false;
  if (a.chart_ && b.chart_ && !same_chart(a.chart_, b.chart_)) return false;
  auto it = b.comps_.begin();
  for (const auto& [idx, f] : a.comps_) {
    if (!(idx == it->first) || !(f == it->second)) return false;
    ++it;
  }
  return true;
}

namespace {

bool needs_parens(const std::string& s) {
  // A sum printed in front of a wedge factor must be grouped.
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

}  // namespace

std::string DifferentialForm::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, f] : comps_) {
    std::string basis;
    for (int i : idx.indices()) {
      if (!basis.empty()) basis += "^";
      basis += "d" + chart_->name(i);
    }
    std::string coeff = f.to_string();
    bool negative = false;
    if (!needs_parens(coeff) && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (basis.empty()) {
      os << (needs_parens(coeff) && comps_.size() > 1 ? "(" + coeff + ")" : coeff);
    } else if (coeff == "1") {
      os << basis;
    } else {
      os << (needs_parens(coeff) ? "(" + coeff + ")" : coeff) << "*" << basis;
    }
  }
  return os.str();
}

// -- VectorField ------------------------------------------------------------

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)) {
  comps_.assign(static_cast<std::size_t>(chart_->dimension()), chart_->zero());
}

VectorField::VectorField(ChartPtr chart, std::vector<RationalFunction> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != chart_->dimension()) {
    throw DegreeMismatch("vector field component count differs from chart dimension");
  }
}

VectorField VectorField::coordinate(ChartPtr chart, int i) {
  VectorField v(chart);
  v.comps_[static_cast<std::size_t>(i)] = chart->constant(1);
  return v;
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& f) { return f.is_zero(); });
}

bool VectorField::is_polynomial() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& f) { return f.is_polynomial(); });
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& f : r.comps_) f = -f;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same(a.chart_, b.chart_);
  VectorField r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const RationalFunction& f, const VectorField& v) {
  VectorField r = v;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

VectorField operator*(const Rational& s, const VectorField& v) {
  VectorField r = v;
  for (auto& c : r.comps_) c = c * s;
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (!same_chart(a.chart_, b.chart_)) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    if (!(a.comps_[i] == b.comps_[i])) return false;
  }
  return true;
}

std::string VectorField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < chart_->dimension(); ++i) {
    const auto& f = comps_[static_cast<std::size_t>(i)];
    if (f.is_zero()) continue;
    std::string coeff = f.to_string();
    bool negative = false;
    if (!needs_parens(coeff) && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    std::string basis = "d/d" + chart_->name(i);
    if (coeff == "1") os << basis;
    else os << (needs_parens(coeff) ? "(" + coeff + ")" : coeff) << "*" << basis;
  }
  return first ? "0" : os.str();
}

// -- MultiVectorField -------------------------------------------------------

MultiVectorField::MultiVectorField(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree_ < 0) throw DegreeMismatch("negative multivector degree");
}

MultiVectorField MultiVectorField::wedge(const std::vector<VectorField>& factors) {
  if (factors.empty()) throw DegreeMismatch("empty wedge needs an explicit chart");
  return wedge(factors.front().chart(), factors);
}

MultiVectorField MultiVectorField::wedge(ChartPtr chart, const std::vector<VectorField>& factors) {
  MultiVectorField y(std::move(chart), static_cast<int>(factors.size()));
  y.add_term(Rational(1), factors);
  return y;
}

void MultiVectorField::add_term(const Rational& coefficient, std::vector<VectorField> factors) {
  if (static_cast<int>(factors.size()) != degree_) throw DegreeMismatch("multivector term has wrong number of factors");
  for (const auto& f : factors) require_same(chart_, f.chart());
  if (is_zero(coefficient)) return;
  terms_.push_back(Term{coefficient, std::move(factors)});
}

MultiVectorField& MultiVectorField::operator+=(const MultiVectorField& other) {
  require_same(chart_, other.chart_);
  if (degree_ != other.degree_) throw DegreeMismatch("adding multivectors of different degree");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

}  // namespace plectic
