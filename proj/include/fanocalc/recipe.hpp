#pragma once

#include "fanocalc/class_expr.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanocalc {

/// Mori-Mukai identifier rho.N of a deformation family of Fano threefolds.
struct FamilyId {
    int rho = 0;
    int number = 0;

    std::string str() const { return std::to_string(rho) + "." + std::to_string(number); }
    friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

/// Accepts "rho.N" with 1 <= rho <= 10 and N >= 1. Throws SyntaxError.
FamilyId parse_family_id(std::string_view text);

/**
 * A validated variety recipe. Textual form:
 *
 *   P(n)
 *   prod(r1, r2, ...)
 *   bundle(base, summands=[c1, c2, ...])
 *   blowup_point(base, count=k)                      count defaults to 1
 *   blowup_curve(base, genus=g, degrees={name:int, ...})
 *   double_cover(base, half_branch=c)
 *   divisor_in(base, c)
 *   rank_one(index=r, degree=d)
 *
 * Arguments may be given by position or by keyword. Class arguments are
 * degree-one class expressions over the base's generators (or 0).
 */
struct Recipe {
    enum class Kind {
        ProjectiveSpace,
        Product,
        Bundle,
        BlowupPoint,
        BlowupCurve,
        DoubleCover,
        DivisorIn,
        RankOne,
    };

    Kind kind = Kind::ProjectiveSpace;
    std::size_t offset = 0;
    int n = 0;        // P
    int count = 1;    // blowup_point
    int genus = 0;    // blowup_curve
    int index = 0;    // rank_one
    int degree = 0;   // rank_one
    std::vector<std::pair<std::string, Integer>> degrees;  // blowup_curve
    std::vector<Recipe> parts;      // base, or the factors of a product
    std::vector<ClassExpr> classes; // summands / half_branch / hypersurface class

    friend bool operator==(const Recipe& a, const Recipe& b);
};

/// Parses and validates constructor names, arity, keywords and argument
/// kinds. Errors are SyntaxError with the byte offset of the offending part.
Recipe parse_recipe(std::string_view text);

/// Canonical text for a recipe; parse_recipe(to_string(r)) == r.
std::string to_string(const Recipe& recipe);

} // namespace fanocalc
