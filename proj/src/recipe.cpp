#include "fanocalc/recipe.hpp"

#include "fanocalc/error.hpp"

#include <array>
#include <cctype>
#include <optional>

namespace fanocalc {

namespace {

enum class ParamKind { Recipe, Int, Class, ClassList, DegreeMap };

struct Param {
    const char* name;
    ParamKind kind;
    bool required;
};

struct Schema {
    const char* name;
    Recipe::Kind kind;
    std::vector<Param> params;
    bool variadic_recipes = false;
};

const std::vector<Schema>& schemas() {
    static const std::vector<Schema> table = {
        {"P", Recipe::Kind::ProjectiveSpace, {{"n", ParamKind::Int, true}}},
        {"prod", Recipe::Kind::Product, {}, true},
        {"bundle",
         Recipe::Kind::Bundle,
         {{"base", ParamKind::Recipe, true}, {"summands", ParamKind::ClassList, true}}},
        {"blowup_point",
         Recipe::Kind::BlowupPoint,
         {{"base", ParamKind::Recipe, true}, {"count", ParamKind::Int, false}}},
        {"blowup_curve",
         Recipe::Kind::BlowupCurve,
         {{"base", ParamKind::Recipe, true},
          {"genus", ParamKind::Int, true},
          {"degrees", ParamKind::DegreeMap, true}}},
        {"double_cover",
         Recipe::Kind::DoubleCover,
         {{"base", ParamKind::Recipe, true}, {"half_branch", ParamKind::Class, true}}},
        {"divisor_in",
         Recipe::Kind::DivisorIn,
         {{"base", ParamKind::Recipe, true}, {"class", ParamKind::Class, true}}},
        {"rank_one",
         Recipe::Kind::RankOne,
         {{"index", ParamKind::Int, true}, {"degree", ParamKind::Int, true}}},
    };
    return table;
}

const Schema& schema_for(Recipe::Kind kind) {
    for (const auto& s : schemas()) {
        if (s.kind == kind) {
            return s;
        }
    }
    throw std::logic_error("recipe kind without schema");
}

class RecipeParser {
public:
    explicit RecipeParser(std::string_view text) : text_(text) {}

    Recipe parse() {
        Recipe r = call();
        skip_space();
        if (pos_ < text_.size()) {
            throw SyntaxError(pos_, "unexpected trailing input");
        }
        return r;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const char* what) {
        skip_space();
        if (peek() != c) {
            throw SyntaxError(pos_, std::string("expected ") + what);
        }
        ++pos_;
    }

    std::string identifier() {
        const std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) {
            throw SyntaxError(pos_, "expected identifier");
        }
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    // Identifier followed by `next` (after optional whitespace)? Does not
    // consume anything.
    bool looking_at_identifier_then(char next) const {
        std::size_t p = pos_;
        if (p >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[p]))) {
            return false;
        }
        while (p < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) {
            ++p;
        }
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) {
            ++p;
        }
        return p < text_.size() && text_[p] == next;
    }

    Recipe call() {
        skip_space();
        const std::size_t at = pos_;
        if (!looking_at_identifier_then('(')) {
            throw SyntaxError(pos_, "expected a recipe constructor call");
        }
        const std::string name = identifier();
        const Schema* schema = nullptr;
        for (const auto& s : schemas()) {
            if (name == s.name) {
                schema = &s;
            }
        }
        if (!schema) {
            throw SyntaxError(at, "unknown constructor '" + name + "'");
        }
        expect('(', "'('");

        Recipe r;
        r.kind = schema->kind;
        r.offset = at;
        std::vector<bool> seen(schema->params.size(), false);
        std::size_t next_positional = 0;
        bool keyword_seen = false;

        skip_space();
        if (peek() != ')') {
            for (;;) {
                skip_space();
                const std::size_t arg_at = pos_;
                std::optional<std::string> keyword;
                if (looking_at_identifier_then('=')) {
                    keyword = identifier();
                    expect('=', "'='");
                    keyword_seen = true;
                } else if (keyword_seen) {
                    throw SyntaxError(arg_at, "positional argument after keyword argument");
                }

                if (schema->variadic_recipes) {
                    if (keyword) {
                        throw SyntaxError(arg_at, "'" + name + "' takes no keyword arguments");
                    }
                    r.parts.push_back(call());
                } else {
                    std::size_t slot = 0;
                    if (keyword) {
                        slot = schema->params.size();
                        for (std::size_t i = 0; i < schema->params.size(); ++i) {
                            if (*keyword == schema->params[i].name) {
                                slot = i;
                            }
                        }
                        if (slot == schema->params.size()) {
                            throw SyntaxError(arg_at, "unknown keyword '" + *keyword +
                                                          "' for '" + name + "'");
                        }
                    } else {
                        slot = next_positional++;
                        if (slot >= schema->params.size()) {
                            throw SyntaxError(arg_at, "too many arguments to '" + name + "'");
                        }
                    }
                    if (seen[slot]) {
                        throw SyntaxError(arg_at, "argument '" +
                                                      std::string(schema->params[slot].name) +
                                                      "' given twice");
                    }
                    seen[slot] = true;
                    value(r, schema->params[slot], arg_at);
                }

                skip_space();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        skip_space();
        const std::size_t close = pos_;
        expect(')', "',' or ')'");

        if (schema->variadic_recipes && r.parts.size() < 2) {
            throw SyntaxError(close, "'" + name + "' needs at least two factors");
        }
        for (std::size_t i = 0; i < schema->params.size(); ++i) {
            if (schema->params[i].required && !seen[i]) {
                throw SyntaxError(close, "missing argument '" +
                                             std::string(schema->params[i].name) + "' for '" +
                                             name + "'");
            }
        }
        return r;
    }

    void value(Recipe& r, const Param& param, std::size_t arg_at) {
        skip_space();
        switch (param.kind) {
        case ParamKind::Recipe:
            r.parts.push_back(call());
            break;
        case ParamKind::Int: {
            const int v = integer();
            const std::string name = param.name;
            if (name == "n") {
                r.n = v;
            } else if (name == "count") {
                r.count = v;
            } else if (name == "genus") {
                r.genus = v;
            } else if (name == "index") {
                r.index = v;
            } else if (name == "degree") {
                r.degree = v;
            }
            break;
        }
        case ParamKind::Class:
            r.classes.push_back(class_argument());
            break;
        case ParamKind::ClassList:
            expect('[', "'['");
            skip_space();
            if (peek() != ']') {
                for (;;) {
                    r.classes.push_back(class_argument());
                    skip_space();
                    if (peek() != ',') {
                        break;
                    }
                    ++pos_;
                }
            }
            expect(']', "',' or ']'");
            break;
        case ParamKind::DegreeMap:
            expect('{', "'{'");
            skip_space();
            if (peek() != '}') {
                for (;;) {
                    skip_space();
                    const std::size_t entry_at = pos_;
                    std::string key = identifier();
                    for (const auto& [existing, d] : r.degrees) {
                        if (existing == key) {
                            throw SyntaxError(entry_at, "duplicate degree for '" + key + "'");
                        }
                    }
                    expect(':', "':'");
                    skip_space();
                    r.degrees.emplace_back(std::move(key), Integer(integer()));
                    skip_space();
                    if (peek() != ',') {
                        break;
                    }
                    ++pos_;
                }
            }
            expect('}', "',' or '}'");
            break;
        }
        (void)arg_at;
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw SyntaxError(pos_, "expected integer");
        }
        const std::size_t digits_at = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (pos_ - digits_at > 6) {
            throw SyntaxError(start, "integer out of range");
        }
        const int v = std::stoi(std::string(text_.substr(digits_at, pos_ - digits_at)));
        return negative ? -v : v;
    }

    ClassExpr class_argument() {
        skip_space();
        const std::size_t at = pos_;
        ClassExpr e = parse_class_expr_prefix(text_, pos_);
        const auto d = degree(e);
        if (!e.is_zero_literal() && (!d || *d != 1)) {
            throw SyntaxError(at, "class argument '" + pretty_print(e) + "' must have degree one");
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string class_list(const std::vector<ClassExpr>& classes) {
    std::string out = "[";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out += (i ? ", " : "") + pretty_print(classes[i]);
    }
    return out + "]";
}

} // namespace

bool operator==(const Recipe& a, const Recipe& b) {
    return a.kind == b.kind && a.n == b.n && a.count == b.count && a.genus == b.genus &&
           a.index == b.index && a.degree == b.degree && a.degrees == b.degrees &&
           a.parts == b.parts && a.classes == b.classes;
}

Recipe parse_recipe(std::string_view text) { return RecipeParser(text).parse(); }

std::string to_string(const Recipe& r) {
    const std::string name = schema_for(r.kind).name;
    switch (r.kind) {
    case Recipe::Kind::ProjectiveSpace:
        return name + "(" + std::to_string(r.n) + ")";
    case Recipe::Kind::Product: {
        std::string out = name + "(";
        for (std::size_t i = 0; i < r.parts.size(); ++i) {
            out += (i ? ", " : "") + to_string(r.parts[i]);
        }
        return out + ")";
    }
    case Recipe::Kind::Bundle:
        return name + "(" + to_string(r.parts[0]) + ", summands=" + class_list(r.classes) + ")";
    case Recipe::Kind::BlowupPoint:
        return name + "(" + to_string(r.parts[0]) + ", count=" + std::to_string(r.count) + ")";
    case Recipe::Kind::BlowupCurve: {
        std::string out = name + "(" + to_string(r.parts[0]) +
                          ", genus=" + std::to_string(r.genus) + ", degrees={";
        for (std::size_t i = 0; i < r.degrees.size(); ++i) {
            out += (i ? ", " : "") + r.degrees[i].first + ":" + r.degrees[i].second.str();
        }
        return out + "})";
    }
    case Recipe::Kind::DoubleCover:
        return name + "(" + to_string(r.parts[0]) +
               ", half_branch=" + pretty_print(r.classes[0]) + ")";
    case Recipe::Kind::DivisorIn:
        return name + "(" + to_string(r.parts[0]) + ", " + pretty_print(r.classes[0]) + ")";
    case Recipe::Kind::RankOne:
        return name + "(index=" + std::to_string(r.index) +
               ", degree=" + std::to_string(r.degree) + ")";
    }
    return {};
}

FamilyId parse_family_id(std::string_view text) {
    auto digits_end = [&](std::size_t from) {
        std::size_t p = from;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            ++p;
        }
        return p;
    };
    const std::size_t rho_end = digits_end(0);
    if (rho_end == 0) {
        throw SyntaxError(0, "expected Picard rank digits");
    }
    if (rho_end >= text.size() || text[rho_end] != '.') {
        throw SyntaxError(rho_end, "expected '.'");
    }
    const std::size_t n_end = digits_end(rho_end + 1);
    if (n_end == rho_end + 1) {
        throw SyntaxError(rho_end + 1, "expected family number digits");
    }
    if (n_end != text.size()) {
        throw SyntaxError(n_end, "unexpected trailing input");
    }
    if (rho_end > 3 || n_end - rho_end - 1 > 4) {
        throw SyntaxError(0, "identifier out of range");
    }
    FamilyId id{std::stoi(std::string(text.substr(0, rho_end))),
                std::stoi(std::string(text.substr(rho_end + 1)))};
    if (id.rho < 1 || id.rho > 10) {
        throw SyntaxError(0, "Picard rank " + std::to_string(id.rho) +
                                 " out of range (Fano threefolds have 1 <= rho <= 10)");
    }
    if (id.number < 1) {
        throw SyntaxError(rho_end + 1, "family number must be positive");
    }
    return id;
}

} // namespace fanocalc
