/// @file forms.hpp
/// @brief Coordinate charts, differential forms, vector fields and multivector fields.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "plectic/index_set.hpp"
#include "plectic/rational_function.hpp"

namespace plectic {

/// A single global, star-shaped coordinate chart.
class Chart {
 public:
  explicit Chart(std::vector<std::string> coordinate_names);

  int dimension() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& coordinate_names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  const Variables& variables() const { return vars_; }
  bool star_shaped() const { return true; }

  RationalFunction zero() const { return RationalFunction(vars_); }
  RationalFunction constant(const Rational& c) const { return RationalFunction(vars_, c); }
  RationalFunction coordinate(int i) const;

 private:
  std::vector<std::string> names_;
  Variables vars_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> coordinate_names);

bool same_chart(const ChartPtr& a, const ChartPtr& b);

/// Sum over strictly increasing index tuples I of f_I dx^I. No zero components are stored.
class DifferentialForm {
 public:
  using Components = std::map<IndexSet, RationalFunction>;

  DifferentialForm() = default;
  DifferentialForm(ChartPtr chart, int degree);
  DifferentialForm(ChartPtr chart, int degree, Components components);

  static DifferentialForm function(ChartPtr chart, RationalFunction f);
  /// dx^{i}.
  static DifferentialForm differential(ChartPtr chart, int i);

  const ChartPtr& chart() const { return chart_; }
  int degree() const { return degree_; }
  const Components& components() const { return comps_; }
  RationalFunction component(IndexSet index) const;

  bool is_zero() const { return comps_.empty(); }
  /// Every coefficient has a constant denominator.
  bool is_polynomial() const;
  /// Value of a 0-form as a function (zero when empty).
  RationalFunction as_function() const;

  DifferentialForm operator-() const;
  DifferentialForm& operator+=(const DifferentialForm& other);
  DifferentialForm& operator-=(const DifferentialForm& other);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(const RationalFunction& f, const DifferentialForm& a);
  friend DifferentialForm operator*(const Rational& s, const DifferentialForm& a);
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

  std::string to_string() const;

 private:
  void add(IndexSet index, const RationalFunction& f);

  ChartPtr chart_;
  int degree_ = 0;
  Components comps_;
};

/// One coefficient per coordinate direction.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(ChartPtr chart);
  VectorField(ChartPtr chart, std::vector<RationalFunction> components);

  /// ∂/∂x^i.
  static VectorField coordinate(ChartPtr chart, int i);

  const ChartPtr& chart() const { return chart_; }
  const std::vector<RationalFunction>& components() const { return comps_; }
  const RationalFunction& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_polynomial() const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const RationalFunction& f, const VectorField& v);
  friend VectorField operator*(const Rational& s, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string to_string() const;

 private:
  ChartPtr chart_;
  std::vector<RationalFunction> comps_;
};

/// Formal sum of decomposable terms c · v_1 ∧ ... ∧ v_m. Degree 0 is a plain scalar.
class MultiVectorField {
 public:
  struct Term {
    Rational coefficient{1};
    std::vector<VectorField> factors;
  };

  MultiVectorField(ChartPtr chart, int degree);
  static MultiVectorField wedge(const std::vector<VectorField>& factors);
  static MultiVectorField wedge(ChartPtr chart, const std::vector<VectorField>& factors);

  const ChartPtr& chart() const { return chart_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(const Rational& coefficient, std::vector<VectorField> factors);
  MultiVectorField& operator+=(const MultiVectorField& other);

 private:
  ChartPtr chart_;
  int degree_;
  std::vector<Term> terms_;
};

}  // namespace plectic
