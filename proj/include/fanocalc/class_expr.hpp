#pragma once

#include "fanocalc/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanocalc {

/**
 * Syntax tree of a polynomial in divisor-class symbols.
 *
 * Grammar (whitespace between tokens is ignored):
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := '-' factor | number power | power      (number glued to a symbol)
 *   power  := atom ('^' uint)?
 *   atom   := symbol | number | '(' expr ')'
 *   number := uint | uint '/' uint
 *   symbol := [A-Za-z][A-Za-z0-9]*
 *
 * A number written directly against a symbol ("2L", "3E2^2") is a Scale node
 * applying to the following power. Any other juxtaposition is rejected.
 * U+2212 (minus sign) is read as '-'.
 */
struct ClassExpr {
    enum class Kind { Symbol, Number, Scale, Negate, Sum, Difference, Product, Power, Group };

    Kind kind = Kind::Number;
    std::string symbol;                   // Symbol
    Integer numerator = 0;                // Number, Scale
    std::optional<Integer> denominator;   // Number, Scale; set when written as p/q
    unsigned exponent = 0;                // Power
    std::vector<ClassExpr> children;      // Negate/Group/Scale/Power: 1, binary: 2
    std::size_t offset = 0;               // byte offset in the source; not compared

    static ClassExpr make_symbol(std::string name);
    static ClassExpr make_number(Integer numerator, std::optional<Integer> denominator = {});
    static ClassExpr make_scale(Integer numerator, std::optional<Integer> denominator,
                                ClassExpr operand);
    static ClassExpr make_negate(ClassExpr operand);
    static ClassExpr make_binary(Kind kind, ClassExpr lhs, ClassExpr rhs);
    static ClassExpr make_power(ClassExpr base, unsigned exponent);
    static ClassExpr make_group(ClassExpr inner);

    /// Value of a Number or the coefficient of a Scale.
    Rational coefficient() const;
    bool is_zero_literal() const;

    /// Structural equality; source offsets are ignored.
    friend bool operator==(const ClassExpr& a, const ClassExpr& b);
};

/// Throws SyntaxError carrying the byte offset of the failure.
ClassExpr parse_class_expr(std::string_view text);

/// Parses the longest expression starting at `pos` and advances `pos` past
/// it (and trailing whitespace). Stops without error at the first character
/// that cannot continue the expression; throws SyntaxError if no expression
/// starts at `pos`.
ClassExpr parse_class_expr_prefix(std::string_view text, std::size_t& pos);

/// Canonical text; parse_class_expr(pretty_print(e)) == e for every tree the
/// parser can produce.
std::string pretty_print(const ClassExpr& expr);

/// Homogeneous degree: symbols 1, numbers 0. The literal 0 is compatible
/// with any degree in sums. nullopt when the expression mixes degrees.
std::optional<int> degree(const ClassExpr& expr);

/// Symbols used, in first-occurrence order.
std::vector<std::string> symbols(const ClassExpr& expr);

} // namespace fanocalc
