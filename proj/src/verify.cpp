#include "fanocalc/verify.hpp"

#include "fanocalc/build.hpp"
#include "fanocalc/classify.hpp"
#include "fanocalc/error.hpp"
#include "fanocalc/evaluate.hpp"

#include <algorithm>
#include <functional>

namespace fanocalc {

namespace {

std::string id_set(const std::vector<FamilyId>& ids) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out += (i ? ", " : "") + ids[i].str();
    }
    return out + "}";
}

std::string id_set(const std::set<FamilyId>& ids) {
    return id_set(std::vector<FamilyId>(ids.begin(), ids.end()));
}

std::string epsilon_text(const FanoFamilyRecord& r) {
    return r.epsilon_status == EpsilonStatus::Open ? "open" : to_string(r.epsilon);
}

class Collector {
public:
    Collector(Report& report, std::string group) : report_(report), group_(std::move(group)) {}

    // Runs `compute`; a thrown library error becomes a failing check.
    void check(const std::string& name, const std::string& expected,
               const std::function<std::string()>& compute) {
        Check c{group_, group_ + "." + name, expected, {}, false};
        try {
            c.actual = compute();
            c.pass = c.actual == expected;
        } catch (const Error& e) {
            c.actual = "error(" + std::string(e.what()) + ")";
        }
        report_.checks.push_back(std::move(c));
    }

private:
    Report& report_;
    std::string group_;
};

void appendix(Report& report, const Catalog&) {
    Collector c(report, "appendix");
    const std::vector<std::pair<FamilyId, int>> rows = {
        {{3, 4}, 4}, {{3, 7}, 6}, {{3, 11}, 7}, {{3, 24}, 8},
        {{3, 26}, 9}, {{4, 4}, 6}, {{4, 9}, 8}, {{5, 1}, 5}};
    for (const auto& [id, d] : rows) {
        c.check(id.str(), std::to_string(d), [id = id] {
            const MiddleModel y = build_middle(recipe(id));
            return fibration_degree(y.model, y.pencil).str();
        });
    }
}

void intersections(Report& report, const Catalog&) {
    Collector c(report, "intersections");
    const std::vector<std::tuple<std::string, FamilyId, std::string, int>> rows = {
        {"3.2", {3, 2}, "(xi + H1 + H2)^2*H1", 3},
        {"3.8", {3, 8}, "(2H1 - E)^2*H2", 6},
        {"3.19", {3, 19}, "(2*(H - E1 - E2))^2*H", 8},
        {"3.31", {3, 31}, "(2xi)^2*(2xi + 3*(H1 + H2))", 40},
        {"3.31.anticanonical_cube", {3, 31}, "(2xi + H1 + H2)^3", 52},
    };
    for (const auto& [name, id, expr, value] : rows) {
        c.check(name, std::to_string(value), [id = id, expr = expr] {
            return to_string(evaluate(build_model(recipe(id).model), expr));
        });
    }
}

void splitting(Report& report, const Catalog&) {
    Collector c(report, "splitting");
    for (const FamilyId id : {FamilyId{3, 1}, FamilyId{3, 3}, FamilyId{3, 17}, FamilyId{4, 1}}) {
        const FamilyRecipe& r = recipe(id);
        const VarietyModel x = build_model(r.model);
        DivisorClass sum = x.zero();
        for (const auto& part : r.triple) {
            sum += to_class(x, part);
        }
        c.check(id.str(), format_class(x, x.anticanonical()),
                [&x, sum] { return format_class(x, sum); });
    }
}

void partition(Report& report, const Catalog& catalog) {
    Collector c(report, "partition");
    const std::vector<std::pair<Rational, std::vector<FamilyId>>> buckets = {
        {1, {{2, 1}, {10, 1}}},
        {Rational(4, 3), {{2, 2}, {2, 3}, {9, 1}}},
        {Rational(3, 2), {{2, 4}, {2, 5}, {3, 2}, {8, 1}}},
        {3, {{2, 28}, {2, 30}, {2, 33}}},
    };
    FamilyFilter high_rank;
    high_rank.rho_min = 2;
    const auto all = catalog.list(high_rank);
    std::size_t named = 0;
    for (const auto& [value, ids] : buckets) {
        named += ids.size();
        c.check("epsilon=" + to_string(value), id_set(ids), [&, value = value] {
            FamilyFilter f;
            f.rho_min = 2;
            f.epsilon = value;
            std::vector<FamilyId> got;
            for (const auto& r : catalog.list(f)) {
                got.push_back(r.id);
            }
            return id_set(got);
        });
    }
    // 88 families have rho >= 2; every one outside the four sets has epsilon 2.
    c.check("epsilon=2", std::to_string(88 - named), [&] {
        FamilyFilter f;
        f.rho_min = 2;
        f.epsilon = Rational(2);
        return std::to_string(catalog.list(f).size());
    });
    c.check("exhaustive", "0", [&] {
        const std::set<Rational> values = {1, Rational(4, 3), Rational(3, 2), 2, 3};
        return std::to_string(std::count_if(all.begin(), all.end(), [&](const auto& r) {
            return r.epsilon_status != EpsilonStatus::Known || !values.count(r.epsilon);
        }));
    });
}

void fibration(Report& report, const Catalog& catalog) {
    Collector c(report, "fibration");
    const std::vector<std::pair<int, std::vector<FamilyId>>> rows = {
        {1, {{2, 1}, {10, 1}}},
        {2, {{2, 2}, {2, 3}, {9, 1}}},
        {3, {{2, 4}, {2, 5}, {3, 2}, {8, 1}}},
    };
    for (const auto& [d, ids] : rows) {
        c.check("dp" + std::to_string(d), id_set(ids),
                [&, d = d] { return id_set(families_with_dp_fibration(catalog, d)); });
    }
}

void rank_one(Report& report, const Catalog& catalog) {
    Collector c(report, "rank_one");
    const std::vector<std::string> expected = {"open", "open", "3/2", "2", "2", "2", "2", "2",
                                               "2",    "2",    "2",   "2", "2", "2", "2", "3",
                                               "4"};
    for (int n = 1; n <= 17; ++n) {
        const FamilyId id{1, n};
        c.check(id.str(), expected[static_cast<std::size_t>(n - 1)],
                [&, id] { return epsilon_text(catalog.get(id)); });
    }
}

void recipes(Report& report, const Catalog& catalog) {
    Collector c(report, "recipes");
    for (const auto& r : all_recipes()) {
        const FamilyId id = r.id;
        std::string expected = "?";
        if (catalog.contains(id)) {
            expected = epsilon_text(catalog.get(id));
        }
        c.check(id.str() + ".epsilon", expected, [&catalog, id] {
            const RecipeModel built = build_recipe(recipe(id));
            std::optional<int> ell;
            if (catalog.contains(id)) {
                ell = catalog.get(id).ell;
            }
            return to_string(classify_splitting(built.model, built.splitting, ell).epsilon);
        });
        if (r.has_center()) {
            c.check(id.str() + ".adjunction", "equal", [id] {
                const FamilyRecipe& fr = recipe(id);
                const MiddleModel y = build_middle(fr);
                const RecipeModel x = build_recipe(fr);
                const Integer lhs = fibration_degree(y.model, y.pencil);
                const Integer rhs = splitting_fiber_degree(x.model, x.splitting, Side::First);
                return lhs == rhs ? std::string("equal") : lhs.str() + " != " + rhs.str();
            });
        }
    }
}

void consistency(Report& report, const Catalog& catalog) {
    Collector c(report, "consistency");
    c.check("epsilon1=non_bpf=dp1", "{2.1, 10.1}", [&] {
        std::set<FamilyId> eps1, non_bpf, dp1;
        for (const auto& r : catalog.records()) {
            if (r.epsilon_status == EpsilonStatus::Known && r.epsilon == 1) {
                eps1.insert(r.id);
            }
            if (r.non_bpf) {
                non_bpf.insert(r.id);
            }
            if (r.dp_degrees.count(1)) {
                dp1.insert(r.id);
            }
        }
        if (eps1 == non_bpf && non_bpf == dp1) {
            return id_set(eps1);
        }
        return "epsilon1=" + id_set(eps1) + " non_bpf=" + id_set(non_bpf) + " dp1=" + id_set(dp1);
    });
    c.check("fiber_epsilon", "0", [&] {
        // A del Pezzo fibration of degree d <= 3 pins epsilon to that of the fiber.
        int mismatches = 0;
        for (const auto& r : catalog.records()) {
            auto low = std::find_if(r.dp_degrees.begin(), r.dp_degrees.end(),
                                    [](int d) { return d <= 3; });
            if (low != r.dp_degrees.end() &&
                (r.epsilon_status != EpsilonStatus::Known ||
                 r.epsilon != dp_surface_epsilon(*low))) {
                ++mismatches;
            }
        }
        return std::to_string(mismatches);
    });
    c.check("table_rules", "0", [&] {
        const auto violations = catalog_violations(catalog);
        if (violations.empty()) {
            return std::string("0");
        }
        std::string out = std::to_string(violations.size()) + " (" + violations.front();
        return out + (violations.size() > 1 ? "; ...)" : ")");
    });
}

using GroupFn = void (*)(Report&, const Catalog&);

const std::vector<std::pair<std::string, GroupFn>>& group_table() {
    static const std::vector<std::pair<std::string, GroupFn>> table = {
        {"appendix", appendix},   {"intersections", intersections},   {"splitting", splitting},
        {"partition", partition}, {"fibration", fibration}, {"rank_one", rank_one},
        {"recipes", recipes},     {"consistency", consistency},
    };
    return table;
}

} // namespace

std::string Check::line() const {
    return "CHECK " + name + " expected=" + expected + " actual=" + actual +
           (pass ? " PASS" : " FAIL");
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const std::vector<std::string>& verify_groups() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : group_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

Report verify_paper(const Catalog& catalog, std::optional<std::string_view> only) {
    if (only && std::find(verify_groups().begin(), verify_groups().end(), *only) ==
                    verify_groups().end()) {
        throw ArgumentError("unknown verify group '" + std::string(*only) + "'");
    }
    Report report;
    for (const auto& [name, fn] : group_table()) {
        if (!only || *only == name) {
            fn(report, catalog);
        }
    }
    return report;
}

Report verify_paper(std::optional<std::string_view> only) {
    return verify_paper(Catalog::standard(), only);
}

} // namespace fanocalc
