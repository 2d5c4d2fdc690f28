#pragma once

#include "fanocalc/catalog.hpp"
#include "fanocalc/ring.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fanocalc {

/// -K_X = D1 + D2. free1/free2 are asserted by the caller; when free2 is
/// false, d2_nef_big must hold instead.
struct Splitting {
    DivisorClass d1;
    DivisorClass d2;
    bool free1 = true;
    bool free2 = true;
    bool d2_nef_big = false;
};

enum class Side { First, Second };
enum class PencilSide { None, First, Second };

struct ClassificationOutcome {
    PencilSide pencil_side = PencilSide::None;
    std::optional<Integer> fiber_degree;
    Rational epsilon;
    std::vector<std::string> notes;
};

/// Seshadri constant of -K_S at a very general point of a del Pezzo surface
/// of degree 1..9.
Rational dp_surface_epsilon(int degree);

/// D^2.A == 0 and D.A^2 > 0 for A the model's ample reference.
bool pencil_check(const VarietyModel& model, const DivisorClass& d);

/// L^2.A equals the degree A.C of the center.
bool complete_intersection_check(const VarietyModel& ambient, const DivisorClass& l,
                                 const Integer& curve_degree_vs_ample);

/// (-K_Y - L)^2.L
Integer fibration_degree(const VarietyModel& ambient, const DivisorClass& l);

/// D_other^2 . D_side; throws NotAPencilError unless D_side passes
/// pencil_check.
Integer splitting_fiber_degree(const VarietyModel& model, const Splitting& s, Side side);

/// Throws ArgumentError if D1 + D2 != -K or the freeness assertions do not
/// cover the case, InconsistentModelError if both sides are pencils.
ClassificationOutcome classify_splitting(const VarietyModel& model, const Splitting& s,
                                         std::optional<int> ell_hint = std::nullopt);

struct FamilyEpsilon {
    FamilyId id;
    EpsilonStatus status = EpsilonStatus::Known;
    Rational value;
    /// Set when a recipe exists and was classified.
    std::optional<ClassificationOutcome> recomputed;
};

/// Catalog value, cross-checked against the recipe classification and the
/// rank-one rules. Throws ConsistencyError on disagreement.
FamilyEpsilon epsilon_of_family(const Catalog& catalog, FamilyId id);
FamilyEpsilon epsilon_of_family(FamilyId id);

struct GeneralEpsilon {
    enum class Kind { Exact, LowerBound };
    Kind kind = Kind::Exact;
    Rational value;
    bool conjectural = false;
    /// epsilon >= 1/n holds for every Fano n-fold.
    Rational unconditional;
};

/// Rules for an n-dimensional Fano manifold of index r.
GeneralEpsilon epsilon_general(int n, int r);

std::set<FamilyId> families_with_dp_fibration(const Catalog& catalog, int degree);
std::set<FamilyId> families_with_dp_fibration(int degree);

/// Everything a recipe describes, built and ready to classify.
struct RecipeModel {
    VarietyModel model;
    Splitting splitting;
};

RecipeModel build_recipe(const FamilyRecipe& recipe);

/// Blow-up rows only: the middle variety Y and the class L on it.
struct MiddleModel {
    VarietyModel model;
    DivisorClass pencil;
    Integer center_degree_vs_ample;
};

MiddleModel build_middle(const FamilyRecipe& recipe);

} // namespace fanocalc
