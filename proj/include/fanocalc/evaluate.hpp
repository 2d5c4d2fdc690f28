#pragma once

#include "fanocalc/class_expr.hpp"
#include "fanocalc/ring.hpp"

#include <map>
#include <string_view>

namespace fanocalc {

/// Polynomial in the basis generators of a model: monomial -> coefficient.
/// The empty monomial holds the constant term.
using Polynomial = std::map<Monomial, Rational>;

/// Full expansion of `expr` over the generators of `model`. Throws
/// UnknownSymbolError for names the model does not know.
Polynomial expand(const VarietyModel& model, const ClassExpr& expr);

/// Intersection number of a degree-n expression on an n-dimensional model.
/// Throws DegreeError when the expression is not homogeneous of degree n.
Rational evaluate(const VarietyModel& model, const ClassExpr& expr);
Rational evaluate(const VarietyModel& model, std::string_view text);

/// The divisor class denoted by a degree-one expression (or the literal 0).
DivisorClass to_class(const VarietyModel& model, const ClassExpr& expr);
DivisorClass to_class(const VarietyModel& model, std::string_view text);

/// Readable form of a class, e.g. "3L - E1 - 2E2"; "0" for the zero class.
std::string format_class(const VarietyModel& model, const DivisorClass& cls);

} // namespace fanocalc
