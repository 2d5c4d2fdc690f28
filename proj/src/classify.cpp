#include "fanocalc/classify.hpp"

#include "fanocalc/build.hpp"
#include "fanocalc/error.hpp"
#include "fanocalc/evaluate.hpp"

namespace fanocalc {

namespace {

void require_threefold(const VarietyModel& model, const char* what) {
    if (model.dimension() != 3) {
        throw DimensionError(std::string(what) + " needs a threefold, got dimension " +
                             std::to_string(model.dimension()));
    }
}

Integer integral(const Rational& value, const char* what) {
    if (!is_integral(value)) {
        throw ArgumentError(std::string(what) + " is not an integer: " + to_string(value));
    }
    return numerator_of(value);
}

std::optional<Rational> rank_one_rule(FamilyId id) {
    const auto d = rank_one_descriptor(id);
    if (!d) {
        return std::nullopt;
    }
    if (d->index == 1) {
        // Only -K very ample (genus >= 4 here) is settled.
        if (d->invariant < 4) {
            return std::nullopt;
        }
        return d->invariant == 4 ? Rational(3, 2) : Rational(2);
    }
    return Rational(d->index);
}

const char* side_name(Side side) { return side == Side::First ? "D1" : "D2"; }

} // namespace

Rational dp_surface_epsilon(int degree) {
    if (degree < 1 || degree > 9) {
        throw ArgumentError("del Pezzo degree must be in 1..9, got " + std::to_string(degree));
    }
    switch (degree) {
    case 1:
        return 1;
    case 2:
        return Rational(4, 3);
    case 3:
        return Rational(3, 2);
    case 9:
        return 3;
    default:
        return 2;
    }
}

bool pencil_check(const VarietyModel& model, const DivisorClass& d) {
    require_threefold(model, "pencil_check");
    const DivisorClass& a = model.ample_ref();
    return intersection_number(model, {d, d, a}) == 0 && intersection_number(model, {d, a, a}) > 0;
}

bool complete_intersection_check(const VarietyModel& ambient, const DivisorClass& l,
                                 const Integer& curve_degree_vs_ample) {
    require_threefold(ambient, "complete_intersection_check");
    return intersection_number(ambient, {l, l, ambient.ample_ref()}) ==
           Rational(curve_degree_vs_ample);
}

Integer fibration_degree(const VarietyModel& ambient, const DivisorClass& l) {
    require_threefold(ambient, "fibration_degree");
    const DivisorClass rest = ambient.anticanonical() - l;
    return integral(intersection_number(ambient, {rest, rest, l}), "fibration degree");
}

Integer splitting_fiber_degree(const VarietyModel& model, const Splitting& s, Side side) {
    require_threefold(model, "splitting_fiber_degree");
    const DivisorClass& pencil = side == Side::First ? s.d1 : s.d2;
    const DivisorClass& other = side == Side::First ? s.d2 : s.d1;
    if (!pencil_check(model, pencil)) {
        throw NotAPencilError(std::string(side_name(side)) + " = " +
                              format_class(model, pencil) +
                              " is not composed with a pencil of surfaces");
    }
    return integral(intersection_number(model, {other, other, pencil}), "fiber degree");
}

ClassificationOutcome classify_splitting(const VarietyModel& model, const Splitting& s,
                                         std::optional<int> ell_hint) {
    require_threefold(model, "classify_splitting");
    if (s.d1.model_id() != model.id() || s.d2.model_id() != model.id()) {
        throw ArgumentError("splitting classes belong to another model");
    }
    if (s.d1 + s.d2 != model.anticanonical()) {
        throw ArgumentError("D1 + D2 = " + format_class(model, s.d1 + s.d2) + " is not -K = " +
                            format_class(model, model.anticanonical()));
    }
    if (s.d1.is_zero() || s.d2.is_zero()) {
        throw ArgumentError("both parts of a splitting must be nonzero");
    }
    if (!s.free1 || !(s.free2 || s.d2_nef_big)) {
        throw ArgumentError("need |D1| free and |D2| free or D2 nef and big");
    }

    ClassificationOutcome out;
    const bool first = pencil_check(model, s.d1);
    const bool second = pencil_check(model, s.d2);
    if (first && second) {
        throw InconsistentModelError("both D1 and D2 are composed with a pencil, so -K = D1 + D2 "
                                     "would not be ample");
    }
    const bool long_lines = ell_hint && *ell_hint >= 3;

    if (!first && !second) {
        out.notes.push_back("neither D1 nor D2 is composed with a pencil");
        out.epsilon = long_lines ? 3 : 2;
        out.notes.push_back(long_lines ? "ell_X >= 3 gives epsilon 3"
                                       : "no del Pezzo fibration of degree <= 3: epsilon 2");
        return out;
    }

    const Side side = first ? Side::First : Side::Second;
    out.pencil_side = first ? PencilSide::First : PencilSide::Second;
    const Integer d = splitting_fiber_degree(model, s, side);
    out.fiber_degree = d;
    out.notes.push_back(std::string(side_name(side)) + " is composed with a pencil");
    out.notes.push_back("general fiber is a del Pezzo surface of degree " + d.str());
    if (d < 1 || d > 9) {
        throw InconsistentModelError("fiber degree " + d.str() + " is not a del Pezzo degree");
    }
    if (d <= 3) {
        out.epsilon = dp_surface_epsilon(static_cast<int>(d));
        out.notes.push_back("epsilon equals that of the fiber: " + to_string(out.epsilon));
    } else {
        out.epsilon = long_lines ? 3 : 2;
        out.notes.push_back(long_lines ? "ell_X >= 3 gives epsilon 3"
                                       : "fiber degree >= 4: epsilon 2");
    }
    return out;
}

FamilyEpsilon epsilon_of_family(const Catalog& catalog, FamilyId id) {
    const FanoFamilyRecord& record = catalog.get(id);
    FamilyEpsilon out{id, record.epsilon_status, record.epsilon, std::nullopt};
    const bool known = record.epsilon_status == EpsilonStatus::Known;

    if (id.rho == 1) {
        const auto rule = rank_one_rule(id);
        if (rule.has_value() != known || (rule && *rule != record.epsilon)) {
            throw ConsistencyError("catalog epsilon of " + id.str() + " (" +
                                   (known ? to_string(record.epsilon) : "open") +
                                   ") contradicts the rank-one rules (" +
                                   (rule ? to_string(*rule) : "open") + ")");
        }
    }
    if (has_recipe(id)) {
        const RecipeModel built = build_recipe(recipe(id));
        out.recomputed = classify_splitting(built.model, built.splitting, record.ell);
        if (!known || out.recomputed->epsilon != record.epsilon) {
            throw ConsistencyError("catalog epsilon of " + id.str() + " (" +
                                   (known ? to_string(record.epsilon) : "open") +
                                   ") differs from the recipe classification (" +
                                   to_string(out.recomputed->epsilon) + ")");
        }
    }
    return out;
}

FamilyEpsilon epsilon_of_family(FamilyId id) { return epsilon_of_family(Catalog::standard(), id); }

GeneralEpsilon epsilon_general(int n, int r) {
    if (n < 2 || r < 1 || r > n + 1) {
        throw ArgumentError("need n >= 2 and 1 <= r <= n + 1, got n=" + std::to_string(n) +
                            ", r=" + std::to_string(r));
    }
    GeneralEpsilon out;
    out.unconditional = Rational(1, n);
    if (r == n + 1) {
        out.value = n + 1;
    } else if (r >= std::max(2, n - 2)) {
        out.value = r;
    } else if (r >= n - 3) {
        out.kind = GeneralEpsilon::Kind::LowerBound;
        out.value = r;
    } else {
        out.kind = GeneralEpsilon::Kind::LowerBound;
        out.value = 1;
        out.conjectural = true;
    }
    return out;
}

std::set<FamilyId> families_with_dp_fibration(const Catalog& catalog, int degree) {
    if (degree < 1 || degree > 3) {
        throw ArgumentError("fibration degree must be 1, 2 or 3, got " + std::to_string(degree));
    }
    std::set<FamilyId> out;
    for (const auto& r : catalog.records()) {
        if (r.dp_degrees.count(degree)) {
            out.insert(r.id);
        }
    }
    return out;
}

std::set<FamilyId> families_with_dp_fibration(int degree) {
    return families_with_dp_fibration(Catalog::standard(), degree);
}

RecipeModel build_recipe(const FamilyRecipe& recipe) {
    VarietyModel model = build_model(recipe.model);
    Splitting s{to_class(model, recipe.d1), to_class(model, recipe.d2), recipe.free1,
                recipe.free2, !recipe.free2};
    return {std::move(model), std::move(s)};
}

MiddleModel build_middle(const FamilyRecipe& recipe) {
    if (!recipe.has_center()) {
        throw NoRecipeError("family " + recipe.id.str() + " is not given as a blow-up of a curve");
    }
    VarietyModel y = build_model(*recipe.middle);
    DivisorClass l = to_class(y, *recipe.pencil);
    Rational degree = 0;
    for (const auto& [name, value] : recipe.center_degrees) {
        const auto index = y.index_of(name);
        if (!index) {
            throw UnknownSymbolError("unknown class '" + name + "' in center degrees");
        }
        degree += y.ample_ref()[static_cast<std::size_t>(*index)] * Rational(value);
    }
    return {std::move(y), std::move(l), integral(degree, "A.C")};
}

} // namespace fanocalc
