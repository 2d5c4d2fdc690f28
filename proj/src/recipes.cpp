#include "fanocalc/catalog.hpp"

#include "fanocalc/error.hpp"

#include <algorithm>

namespace fanocalc {

namespace {

using Degrees = std::vector<std::pair<std::string, Integer>>;

std::string degrees_text(const Degrees& degrees) {
    std::string out = "{";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out += (i ? ", " : "") + degrees[i].first + ":" + degrees[i].second.str();
    }
    return out + "}";
}

// X = Bl_C Y with C cut out by two members of |L|; D1 = f^*L - E.
FamilyRecipe blowup_row(FamilyId id, std::string middle, std::string pencil, int genus,
                        Degrees degrees, std::string exceptional, std::string d2,
                        bool free2 = true) {
    FamilyRecipe r;
    r.id = id;
    r.model = "blowup_curve(" + middle + ", genus=" + std::to_string(genus) +
              ", degrees=" + degrees_text(degrees) + ")";
    r.d1 = "(" + pencil + ") - " + exceptional;
    r.d2 = std::move(d2);
    r.free2 = free2;
    r.middle = std::move(middle);
    r.pencil = std::move(pencil);
    r.center_genus = genus;
    r.center_degrees = std::move(degrees);
    return r;
}

FamilyRecipe split_row(FamilyId id, std::string model, std::string d1, std::string d2,
                       std::vector<std::string> triple = {}, bool free2 = true) {
    FamilyRecipe r;
    r.id = id;
    r.model = std::move(model);
    r.d1 = std::move(d1);
    r.d2 = std::move(d2);
    r.free2 = free2;
    r.triple = std::move(triple);
    return r;
}

std::string surface_product(int points) {
    return "prod(P(1), blowup_point(P(2), count=" + std::to_string(points) + "))";
}

std::string surface_anticanonical(int points) {
    std::string out = "H1 + 3H2";
    for (int i = 1; i <= points; ++i) {
        out += " - E" + std::to_string(i);
    }
    return out;
}

std::vector<FamilyRecipe> build_table() {
    const std::string q3 = "divisor_in(P(4), 2H)";
    const std::string w = "divisor_in(prod(P(2), P(2)), H1 + H2)";
    const std::string v7 = "blowup_point(P(3), count=1)";
    const std::string p1p2 = "prod(P(1), P(2))";

    std::vector<FamilyRecipe> t;
    t.push_back(blowup_row({2, 1}, "rank_one(index=2, degree=1)", "H", 1, {{"H", 1}}, "E", "H",
                           false));
    t.push_back(split_row({2, 2}, "double_cover(" + p1p2 + ", half_branch=H1 + 2H2)", "H1", "H2"));
    t.push_back(blowup_row({2, 3}, "double_cover(P(3), half_branch=2H)", "H", 1, {{"H", 2}}, "E",
                           "H"));
    t.push_back(blowup_row({2, 4}, "P(3)", "3H", 10, {{"H", 9}}, "E", "H"));
    t.push_back(blowup_row({2, 5}, "divisor_in(P(4), 3H)", "H", 1, {{"H", 3}}, "E", "H"));

    t.push_back(split_row({3, 1},
                          "double_cover(prod(P(1), P(1), P(1)), half_branch=H1 + H2 + H3)", "H1",
                          "H2 + H3", {"H1", "H2", "H3"}));
    t.push_back(split_row(
        {3, 2},
        "divisor_in(bundle(prod(P(1), P(1)), summands=[0, -H1 - H2, -H1 - H2]), 2xi + 2H1 + 3H2)",
        "H1", "xi + H1 + H2"));
    t.push_back(split_row({3, 3}, "divisor_in(prod(P(1), P(1), P(2)), H1 + H2 + 2H3)", "H1",
                          "H2 + H3", {"H1", "H2", "H3"}));
    t.push_back(blowup_row({3, 4}, "double_cover(" + p1p2 + ", half_branch=H1 + H2)", "H2", 0,
                           {{"H1", 2}, {"H2", 0}}, "E", "H1 + H2"));
    t.push_back(split_row({3, 5}, "blowup_curve(" + p1p2 + ", genus=0, degrees={H1:5, H2:2})",
                          "H1 + 3H2 - E", "H1"));
    t.push_back(blowup_row({3, 7}, w, "H1 + H2", 1, {{"H1", 3}, {"H2", 3}}, "E", "H1 + H2"));
    t.push_back(split_row({3, 8}, "divisor_in(prod(blowup_point(P(2), count=1), P(2)), H1 + 2H2)",
                          "2H1 - E", "H2"));
    t.push_back(blowup_row({3, 11}, v7, "2H - E", 1, {{"H", 4}, {"E", 1}}, "E2", "2H - E"));
    t.push_back(split_row({3, 17}, "divisor_in(prod(P(1), P(1), P(2)), H1 + H2 + H3)", "H1",
                          "H2 + 2H3", {"H1", "H2", "2H3"}));
    t.push_back(split_row({3, 19}, "blowup_point(" + q3 + ", count=2)", "H", "2*(H - E1 - E2)"));
    t.push_back(blowup_row({3, 24}, w, "H2", 0, {{"H1", 1}, {"H2", 0}}, "E", "2H1 + H2"));
    t.push_back(blowup_row({3, 26}, v7, "H", 0, {{"H", 1}, {"E", 0}}, "E2", "3H - 2E"));
    t.push_back(split_row({3, 31}, "bundle(prod(P(1), P(1)), summands=[0, H1 + H2])", "2xi",
                          "H1 + H2"));

    t.push_back(split_row({4, 1}, "divisor_in(prod(P(1), P(1), P(1), P(1)), H1 + H2 + H3 + H4)",
                          "H1", "H2 + H3 + H4", {"H1", "H2", "H3 + H4"}));
    t.push_back(blowup_row({4, 4}, "blowup_point(" + q3 + ", count=2)", "H - E1 - E2", 0,
                           {{"H", 2}, {"E1", 1}, {"E2", 1}}, "E3", "2H - E1 - E2"));
    // Second center: a fiber of the first exceptional divisor, E1.C = -1.
    t.push_back(blowup_row({4, 9},
                           "blowup_curve(blowup_curve(P(3), genus=0, degrees={H:1}), genus=0, "
                           "degrees={H:0, E:-1})",
                           "H", 0, {{"H", 1}, {"E1", 0}, {"E2", 0}}, "E3", "3H - E1 - E2"));
    t.push_back(blowup_row({5, 1}, "blowup_point(" + q3 + ", count=3)", "H - E1 - E2 - E3", 0,
                           {{"H", 2}, {"E1", 1}, {"E2", 1}, {"E3", 1}}, "E4",
                           "2H - E1 - E2 - E3"));

    for (int points = 6; points <= 8; ++points) {
        t.push_back(split_row({points + 2, 1}, surface_product(points), "H1",
                              surface_anticanonical(points), {}, points != 8));
    }
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return t;
}

} // namespace

const std::vector<FamilyRecipe>& all_recipes() {
    static const std::vector<FamilyRecipe> table = build_table();
    return table;
}

bool has_recipe(FamilyId id) {
    const auto& t = all_recipes();
    return std::any_of(t.begin(), t.end(), [&](const auto& r) { return r.id == id; });
}

const FamilyRecipe& recipe(FamilyId id) {
    for (const auto& r : all_recipes()) {
        if (r.id == id) {
            return r;
        }
    }
    throw NoRecipeError("no recipe for family " + id.str());
}

} // namespace fanocalc
