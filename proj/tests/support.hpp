#pragma once

// Generators and reference computations shared by the unit tests and the
// acceptance runner. The reference code deliberately avoids the library's
// polynomial expansion: it keeps products of linear forms and sums the form
// over every ordered index tuple.

#include "fanocalc/class_expr.hpp"
#include "fanocalc/ring.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

using fanocalc::ClassExpr;
using fanocalc::Rational;
using fanocalc::VarietyModel;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return uniform(0, 1) == 1; }
    Rational rational(int bound = 5);

private:
    std::mt19937_64 engine_;
};

/// Every model the catalog recipes build (X and, for blow-up rows, Y) plus
/// a handful of plain ambients, labelled by recipe text.
struct NamedModel {
    std::string label;
    VarietyModel model;
};
const std::vector<NamedModel>& catalog_models();

/// Sum over all ordered index tuples of prod(coeffs) * form value.
Rational brute_intersection(const VarietyModel& model,
                            const std::vector<std::vector<Rational>>& classes);

/// Reference value of a homogeneous top-degree expression.
Rational brute_evaluate(const VarietyModel& model, const ClassExpr& expr);

/// Random homogeneous expression of the given degree over the model's basis
/// names and aliases. Not necessarily printable; meant for evaluation.
ClassExpr random_homogeneous(Rng& rng, const VarietyModel& model, int degree);

/// Random tree of the shape the parser produces, so pretty_print round-trips.
ClassExpr random_syntax_tree(Rng& rng, int depth);

/// Random text over the expression alphabet, for error-offset fuzzing.
std::string random_expression_text(Rng& rng);

} // namespace support
