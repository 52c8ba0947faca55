/// @file expression.hpp
/// @brief Scenario expression language: functions, differential forms and vector fields.
///
/// Grammar (lowest to highest precedence):
///   sum     := product (("+" | "-") product)*
///   product := wedge (("*" | "/") wedge)*
///   wedge   := unary ("^" unary)*
///   unary   := ("-" | "+") unary | power
///   power   := atom ("**" integer)?
///   atom    := integer | coordinate | "d"coordinate | "d/d"coordinate
///            | "d(" sum ")" | "(" sum ")"
/// A coordinate name always wins over the differential reading of the same identifier.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plectic/forms.hpp"

namespace plectic {

struct Expression {
  enum class Kind { Form, Vector };
  Kind kind = Kind::Form;
  DifferentialForm form;
  VectorField field;
  /// Non-fatal notes such as a vanishing wedge ("dx^dx").
  std::vector<std::string> warnings;
};

/// Throws ParseError (with offset) on syntax errors, unknown identifiers and degree clashes.
Expression parse_expression(std::string_view text, const ChartPtr& chart);

DifferentialForm parse_form(std::string_view text, const ChartPtr& chart);
/// Like parse_form but also checks the degree.
DifferentialForm parse_form(std::string_view text, const ChartPtr& chart, int degree);
VectorField parse_vector_field(std::string_view text, const ChartPtr& chart);
RationalFunction parse_function(std::string_view text, const ChartPtr& chart);

}  // namespace plectic
