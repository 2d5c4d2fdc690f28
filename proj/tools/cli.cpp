#include "cli.hpp"

#include "fanocalc/build.hpp"
#include "fanocalc/catalog.hpp"
#include "fanocalc/classify.hpp"
#include "fanocalc/error.hpp"
#include "fanocalc/evaluate.hpp"
#include "fanocalc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>

namespace fanocalc {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string set_text(const std::set<int>& values) {
    std::string out = "{";
    for (auto it = values.begin(); it != values.end(); ++it) {
        out += (it == values.begin() ? "" : ",") + std::to_string(*it);
    }
    return out + "}";
}

template <typename T>
std::string maybe_text(const std::optional<T>& value) {
    if (!value) {
        return "?";
    }
    if constexpr (std::is_same_v<T, bool>) {
        return *value ? "true" : "false";
    } else {
        return std::to_string(*value);
    }
}

template <typename T>
json maybe_json(const std::optional<T>& value) {
    return value ? json(*value) : json(nullptr);
}

std::string epsilon_text(const FanoFamilyRecord& r) {
    return r.epsilon_status == EpsilonStatus::Open ? "open" : to_string(r.epsilon);
}

const char* pencil_text(PencilSide side) {
    switch (side) {
    case PencilSide::First:
        return "first";
    case PencilSide::Second:
        return "second";
    default:
        return "none";
    }
}

void print(std::ostream& out, bool as_json, const json& doc, const std::string& text) {
    if (as_json) {
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
}

int cmd_deg(bool as_json, const std::string& recipe_text, const std::string& expr,
            std::ostream& out) {
    const VarietyModel model = build_model(recipe_text);
    const std::string value = to_string(evaluate(model, expr));
    print(out, as_json, json{{"value", value}}, value + "\n");
    return 0;
}

int cmd_family(bool as_json, const std::string& id_text, std::ostream& out) {
    const FamilyId id = parse_family_id(id_text);
    const Catalog& catalog = Catalog::standard();
    const FanoFamilyRecord& r = catalog.get(id);
    const FamilyEpsilon eps = epsilon_of_family(catalog, id);
    const std::string check = eps.recomputed ? "agrees" : "none";

    std::string text;
    text += "id=" + r.id.str() + "\n";
    text += "rho=" + std::to_string(r.rho) + "\n";
    text += "index=" + maybe_text(r.index) + "\n";
    text += "epsilon=" + epsilon_text(r) + "\n";
    text += "dp=" + set_text(r.dp_degrees) + "\n";
    text += std::string("non_bpf=") + (r.non_bpf ? "true" : "false") + "\n";
    text += "clubsuit=" + maybe_text(r.clubsuit) + "\n";
    text += "ci_center=" + maybe_text(r.ci_center) + "\n";
    text += "ell=" + maybe_text(r.ell) + "\n";
    text += "recipe_check=" + check + "\n";
    text += "description=" + r.description + "\n";

    json doc = {
        {"id", r.id.str()},
        {"rho", r.rho},
        {"index", maybe_json(r.index)},
        {"epsilon", epsilon_text(r)},
        {"dp", json(std::vector<int>(r.dp_degrees.begin(), r.dp_degrees.end()))},
        {"non_bpf", r.non_bpf},
        {"clubsuit", maybe_json(r.clubsuit)},
        {"ci_center", maybe_json(r.ci_center)},
        {"ell", maybe_json(r.ell)},
        {"recipe_check", check},
        {"description", r.description},
    };
    print(out, as_json, doc, text);
    return 0;
}

int cmd_classify(bool as_json, const std::string& id_text, const std::string& recipe_text,
                 const std::string& d1_text, const std::string& d2_text,
                 std::optional<int> ell, bool d2_nef_big, std::ostream& out) {
    std::string model_text;
    std::string source;
    std::string d1 = d1_text;
    std::string d2 = d2_text;
    bool free2 = !d2_nef_big;
    if (!id_text.empty()) {
        if (!recipe_text.empty() || !d1.empty() || !d2.empty()) {
            throw UsageError("give either a family id or --recipe/--d1/--d2, not both");
        }
        const FamilyId id = parse_family_id(id_text);
        const FamilyRecipe& r = recipe(id);
        model_text = r.model;
        d1 = r.d1;
        d2 = r.d2;
        free2 = r.free2;
        if (!ell && Catalog::standard().contains(id)) {
            ell = Catalog::standard().get(id).ell;
        }
        source = "family=" + id.str();
    } else {
        if (recipe_text.empty() || d1.empty() || d2.empty()) {
            throw UsageError("classify needs a family id or all of --recipe, --d1, --d2");
        }
        model_text = recipe_text;
        source = "model=" + recipe_text;
    }

    const VarietyModel model = build_model(model_text);
    Splitting s{to_class(model, d1), to_class(model, d2), true, free2, !free2};
    const ClassificationOutcome outcome = classify_splitting(model, s, ell);
    const std::string fiber = outcome.fiber_degree ? outcome.fiber_degree->str() : "none";

    std::string text = source + "\n";
    text += "d1=" + format_class(model, s.d1) + "\n";
    text += "d2=" + format_class(model, s.d2) + "\n";
    text += std::string("pencil_side=") + pencil_text(outcome.pencil_side) + "\n";
    text += "fiber_degree=" + fiber + "\n";
    text += "epsilon=" + to_string(outcome.epsilon) + "\n";
    for (const auto& note : outcome.notes) {
        text += "note=" + note + "\n";
    }

    json doc = {
        {"source", source},
        {"d1", format_class(model, s.d1)},
        {"d2", format_class(model, s.d2)},
        {"pencil_side", pencil_text(outcome.pencil_side)},
        {"fiber_degree", outcome.fiber_degree ? json(fiber) : json(nullptr)},
        {"epsilon", to_string(outcome.epsilon)},
        {"notes", outcome.notes},
    };
    print(out, as_json, doc, text);
    return 0;
}

int cmd_verify(bool as_json, const std::string& only, std::ostream& out, std::ostream& err) {
    std::optional<std::string_view> group;
    if (!only.empty()) {
        group = only;
    }
    const Report report = verify_paper(group);
    std::string text;
    json checks = json::array();
    for (const auto& c : report.checks) {
        text += c.line() + "\n";
        checks.push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    err << "checks=" << report.checks.size() << " failed=" << report.failures() << "\n";
    json doc = {{"checks", checks}, {"failed", report.failures()}};
    print(out, as_json, doc, text);
    return report.all_pass() ? 0 : 1;
}

int cmd_list(bool as_json, const std::string& epsilon, std::optional<int> dp,
             std::optional<int> rho, std::ostream& out) {
    FamilyFilter filter;
    if (!epsilon.empty()) {
        auto value = parse_rational(epsilon);
        if (!value) {
            throw UsageError("--epsilon expects p/q, got '" + epsilon + "'");
        }
        filter.epsilon = *value;
    }
    filter.dp = dp;
    filter.rho = rho;
    const auto rows = list_families(filter);

    std::string text;
    json families = json::array();
    for (const auto& r : rows) {
        text += r.id.str() + "\t" + epsilon_text(r) + "\t" + set_text(r.dp_degrees) + "\t" +
                r.description + "\n";
        families.push_back({{"id", r.id.str()},
                            {"epsilon", epsilon_text(r)},
                            {"dp", std::vector<int>(r.dp_degrees.begin(), r.dp_degrees.end())},
                            {"description", r.description}});
    }
    text += "count=" + std::to_string(rows.size()) + "\n";
    json doc = {{"families", families}, {"count", rows.size()}};
    print(out, as_json, doc, text);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection numbers and Seshadri constants of Fano threefolds", "fanocalc"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print JSON instead of text");

    std::string recipe_text, expr;
    auto* deg = app.add_subcommand("deg", "Evaluate a top-degree class expression on a recipe");
    deg->add_option("recipe", recipe_text, "Variety recipe, e.g. blowup_point(P(3), count=1)")
        ->required();
    deg->add_option("expr", expr, "Class expression, e.g. (2L-E)^3")->required();

    std::string family_id;
    auto* family = app.add_subcommand("family", "Show the catalog record of a family");
    family->add_option("id", family_id, "Family identifier rho.N")->required();

    std::string classify_id, classify_recipe, d1, d2;
    std::optional<int> ell;
    bool nef_big = false;
    auto* classify = app.add_subcommand("classify", "Classify a splitting of -K");
    classify->add_option("id", classify_id, "Family with a built-in recipe");
    classify->add_option("--recipe", classify_recipe, "Recipe of the threefold");
    classify->add_option("--d1", d1, "First part of the splitting");
    classify->add_option("--d2", d2, "Second part of the splitting");
    classify->add_option("--ell", ell, "Known value of ell_X");
    classify->add_flag("--d2-nef-big", nef_big, "D2 is nef and big rather than free");

    std::string only;
    auto* verify = app.add_subcommand("verify", "Recompute reference values and table checks");
    verify->add_option("--only", only, "Run one group")
        ->check(CLI::IsMember(verify_groups()));

    std::string epsilon;
    std::optional<int> dp, rho;
    auto* list = app.add_subcommand("list", "List catalog families");
    list->add_option("--epsilon", epsilon, "Seshadri constant p/q");
    list->add_option("--dp", dp, "Degree of a del Pezzo fibration");
    list->add_option("--rho", rho, "Picard rank");

    for (auto* sub : {deg, family, classify, verify, list}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*deg) {
            return cmd_deg(as_json, recipe_text, expr, out);
        }
        if (*family) {
            return cmd_family(as_json, family_id, out);
        }
        if (*classify) {
            return cmd_classify(as_json, classify_id, classify_recipe, d1, d2, ell, nef_big, out);
        }
        if (*verify) {
            return cmd_verify(as_json, only, out, err);
        }
        return cmd_list(as_json, epsilon, dp, rho, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fanocalc
