#include "fanocalc/build.hpp"

#include "fanocalc/error.hpp"
#include "fanocalc/evaluate.hpp"

namespace fanocalc {

VarietyModel build_model(const Recipe& r) {
    using Kind = Recipe::Kind;
    switch (r.kind) {
    case Kind::ProjectiveSpace:
        return make_projective_space(r.n);
    case Kind::RankOne:
        return make_rank_one_threefold(r.index, r.degree);
    case Kind::Product: {
        std::vector<VarietyModel> factors;
        for (const auto& part : r.parts) {
            factors.push_back(build_model(part));
        }
        return make_product(factors);
    }
    default:
        break;
    }

    const VarietyModel base = build_model(r.parts.at(0));
    switch (r.kind) {
    case Kind::Bundle: {
        std::vector<DivisorClass> summands;
        for (const auto& c : r.classes) {
            summands.push_back(to_class(base, c));
        }
        return make_projective_bundle(base, summands);
    }
    case Kind::BlowupPoint:
        return make_point_blowup(base, r.count);
    case Kind::BlowupCurve: {
        std::vector<Integer> degrees(base.rank(), Integer(0));
        for (const auto& [name, value] : r.degrees) {
            const auto index = base.index_of(name);
            if (!index) {
                throw UnknownSymbolError("unknown class '" + name + "' in degrees of " +
                                         base.name());
            }
            degrees[static_cast<std::size_t>(*index)] = value;
        }
        return make_blowup(base, BlowupCenter::curve(r.genus, std::move(degrees)));
    }
    case Kind::DoubleCover:
        return make_double_cover(base, to_class(base, r.classes.at(0)));
    case Kind::DivisorIn:
        return make_divisor_in(base, to_class(base, r.classes.at(0)));
    default:
        break;
    }
    throw std::logic_error("unhandled recipe kind");
}

VarietyModel build_model(std::string_view recipe_text) {
    return build_model(parse_recipe(recipe_text));
}

} // namespace fanocalc
