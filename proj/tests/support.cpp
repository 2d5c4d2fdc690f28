#include "support.hpp"

#include "fanocalc/catalog.hpp"
#include "fanocalc/build.hpp"
#include "fanocalc/error.hpp"

namespace support {

using fanocalc::Integer;

Rational Rng::rational(int bound) {
    const int num = uniform(-bound, bound);
    const int den = uniform(1, 3);
    return Rational(num, den);
}

const std::vector<NamedModel>& catalog_models() {
    static const std::vector<NamedModel> models = [] {
        std::vector<NamedModel> out;
        auto add = [&](const std::string& text) {
            for (const auto& m : out) {
                if (m.label == text) {
                    return;
                }
            }
            out.push_back({text, fanocalc::build_model(text)});
        };
        for (const auto& r : fanocalc::all_recipes()) {
            add(r.model);
            if (r.middle) {
                add(*r.middle);
            }
        }
        add("P(2)");
        add("P(3)");
        add("P(4)");
        add("prod(P(2), P(2))");
        add("prod(P(1), P(1), P(2))");
        add("bundle(prod(P(1), P(1)), summands=[0, -H1 - H2, -H1 - H2])");
        add("bundle(P(2), summands=[0, 2H])");
        return out;
    }();
    return models;
}

Rational brute_intersection(const VarietyModel& model,
                            const std::vector<std::vector<Rational>>& classes) {
    const std::size_t n = classes.size();
    const std::size_t b = model.rank();
    std::vector<int> tuple(n, 0);
    Rational total = 0;
    for (;;) {
        Rational term = 1;
        for (std::size_t k = 0; k < n && term != 0; ++k) {
            term *= classes[k][static_cast<std::size_t>(tuple[k])];
        }
        if (term != 0) {
            term *= Rational(model.form().value(tuple));
            total += term;
        }
        std::size_t k = 0;
        while (k < n && ++tuple[k] == static_cast<int>(b)) {
            tuple[k] = 0;
            ++k;
        }
        if (k == n) {
            return total;
        }
    }
}

namespace {

using Kind = ClassExpr::Kind;

// A product of linear forms with a scalar in front.
struct Term {
    Rational coefficient;
    std::vector<std::vector<Rational>> factors;
};

std::vector<Term> terms_of(const VarietyModel& model, const ClassExpr& e);

std::vector<Term> product(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Term t{x.coefficient * y.coefficient, x.factors};
            t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<Term> scaled(std::vector<Term> terms, const Rational& k) {
    for (auto& t : terms) {
        t.coefficient *= k;
    }
    return terms;
}

std::vector<Term> terms_of(const VarietyModel& model, const ClassExpr& e) {
    switch (e.kind) {
    case Kind::Symbol: {
        const auto index = model.index_of(e.symbol);
        if (!index) {
            throw fanocalc::UnknownSymbolError(e.symbol);
        }
        std::vector<Rational> v(model.rank(), Rational(0));
        v[static_cast<std::size_t>(*index)] = 1;
        return {Term{1, {v}}};
    }
    case Kind::Number:
        return {Term{e.coefficient(), {}}};
    case Kind::Scale:
        return scaled(terms_of(model, e.children[0]), e.coefficient());
    case Kind::Negate:
        return scaled(terms_of(model, e.children[0]), -1);
    case Kind::Group:
        return terms_of(model, e.children[0]);
    case Kind::Sum:
    case Kind::Difference: {
        auto out = terms_of(model, e.children[0]);
        auto rhs = scaled(terms_of(model, e.children[1]), e.kind == Kind::Sum ? 1 : -1);
        out.insert(out.end(), rhs.begin(), rhs.end());
        return out;
    }
    case Kind::Product:
        return product(terms_of(model, e.children[0]), terms_of(model, e.children[1]));
    case Kind::Power: {
        std::vector<Term> out = {Term{1, {}}};
        const auto base = terms_of(model, e.children[0]);
        for (unsigned i = 0; i < e.exponent; ++i) {
            out = product(out, base);
        }
        return out;
    }
    }
    return {};
}

// Linear pieces collapse to a single vector so that powers of long sums do
// not multiply out into many terms.
std::vector<Term> collapsed_terms(const VarietyModel& model, const ClassExpr& e) {
    if (fanocalc::degree(e) == 1) {
        std::vector<Rational> v(model.rank(), Rational(0));
        for (const auto& t : terms_of(model, e)) {
            if (t.factors.size() == 1) {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v[i] += t.coefficient * t.factors[0][i];
                }
            }
        }
        return {Term{1, {v}}};
    }
    switch (e.kind) {
    case Kind::Scale:
        return scaled(collapsed_terms(model, e.children[0]), e.coefficient());
    case Kind::Negate:
        return scaled(collapsed_terms(model, e.children[0]), -1);
    case Kind::Group:
        return collapsed_terms(model, e.children[0]);
    case Kind::Sum:
    case Kind::Difference: {
        auto out = collapsed_terms(model, e.children[0]);
        auto rhs = scaled(collapsed_terms(model, e.children[1]), e.kind == Kind::Sum ? 1 : -1);
        out.insert(out.end(), rhs.begin(), rhs.end());
        return out;
    }
    case Kind::Product:
        return product(collapsed_terms(model, e.children[0]),
                       collapsed_terms(model, e.children[1]));
    case Kind::Power: {
        std::vector<Term> out = {Term{1, {}}};
        const auto base = collapsed_terms(model, e.children[0]);
        for (unsigned i = 0; i < e.exponent; ++i) {
            out = product(out, base);
        }
        return out;
    }
    default:
        return terms_of(model, e);
    }
}

std::string random_symbol_name(Rng& rng) {
    static const std::string letters = "HLEKxyzabAB";
    std::string name(1, letters[static_cast<std::size_t>(rng.uniform(0, 10))]);
    const int extra = rng.uniform(0, 2);
    for (int i = 0; i < extra; ++i) {
        name += static_cast<char>(rng.coin() ? '0' + rng.uniform(0, 9) : 'a' + rng.uniform(0, 25));
    }
    return name;
}

ClassExpr random_number(Rng& rng) {
    std::optional<Integer> den;
    if (rng.uniform(0, 3) == 0) {
        den = Integer(rng.uniform(1, 9));
    }
    return ClassExpr::make_number(Integer(rng.uniform(0, 20)), den);
}

ClassExpr syntax_expr(Rng& rng, int depth);

ClassExpr syntax_atom(Rng& rng, int depth) {
    const int pick = depth <= 0 ? rng.uniform(0, 1) : rng.uniform(0, 2);
    if (pick == 0) {
        return ClassExpr::make_symbol(random_symbol_name(rng));
    }
    if (pick == 1) {
        return random_number(rng);
    }
    return ClassExpr::make_group(syntax_expr(rng, depth - 1));
}

ClassExpr syntax_power(Rng& rng, int depth) {
    ClassExpr atom = syntax_atom(rng, depth);
    if (rng.uniform(0, 3) == 0) {
        return ClassExpr::make_power(std::move(atom), static_cast<unsigned>(rng.uniform(0, 5)));
    }
    return atom;
}

ClassExpr syntax_factor(Rng& rng, int depth) {
    switch (rng.uniform(0, 5)) {
    case 0:
        return ClassExpr::make_negate(syntax_factor(rng, depth - 1));
    case 1: {
        // number glued to a symbol, optionally raised to a power
        ClassExpr operand = ClassExpr::make_symbol(random_symbol_name(rng));
        if (rng.coin()) {
            operand = ClassExpr::make_power(std::move(operand),
                                            static_cast<unsigned>(rng.uniform(0, 4)));
        }
        ClassExpr n = random_number(rng);
        return ClassExpr::make_scale(n.numerator, n.denominator, std::move(operand));
    }
    default:
        return syntax_power(rng, depth);
    }
}

ClassExpr syntax_term(Rng& rng, int depth) {
    ClassExpr lhs = syntax_factor(rng, depth);
    while (depth > 0 && rng.uniform(0, 2) == 0) {
        lhs = ClassExpr::make_binary(Kind::Product, std::move(lhs), syntax_factor(rng, depth - 1));
    }
    return lhs;
}

ClassExpr syntax_expr(Rng& rng, int depth) {
    ClassExpr lhs = syntax_term(rng, depth);
    while (depth > 0 && rng.uniform(0, 2) == 0) {
        const Kind kind = rng.coin() ? Kind::Sum : Kind::Difference;
        lhs = ClassExpr::make_binary(kind, std::move(lhs), syntax_term(rng, depth - 1));
    }
    return lhs;
}

std::vector<std::string> names_of(const VarietyModel& model) {
    std::vector<std::string> names = model.basis();
    for (const auto& [alias, index] : model.aliases()) {
        names.push_back(alias);
    }
    return names;
}

ClassExpr random_linear(Rng& rng, const std::vector<std::string>& names, int depth) {
    auto symbol = [&] {
        return ClassExpr::make_symbol(
            names[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(names.size()) - 1))]);
    };
    const int pick = depth <= 0 ? rng.uniform(0, 2) : rng.uniform(0, 5);
    switch (pick) {
    case 0:
        return symbol();
    case 1: {
        const Rational q = rng.rational(4);
        Integer num = abs(numerator(q));
        ClassExpr s = ClassExpr::make_scale(num, Integer(denominator(q)), symbol());
        return q < 0 ? ClassExpr::make_negate(std::move(s)) : s;
    }
    case 2:
        return ClassExpr::make_negate(symbol());
    case 3:
        return ClassExpr::make_group(ClassExpr::make_binary(
            Kind::Sum, random_linear(rng, names, depth - 1), random_linear(rng, names, depth - 1)));
    case 4:
        return ClassExpr::make_group(ClassExpr::make_binary(Kind::Difference,
                                                            random_linear(rng, names, depth - 1),
                                                            random_linear(rng, names, depth - 1)));
    default:
        // a scalar times a linear form
        return ClassExpr::make_binary(Kind::Product, ClassExpr::make_number(rng.uniform(0, 3)),
                                      random_linear(rng, names, depth - 1));
    }
}

ClassExpr random_degree(Rng& rng, const std::vector<std::string>& names, int degree, int depth) {
    if (degree == 1) {
        return random_linear(rng, names, 2);
    }
    const int pick = depth <= 0 ? 0 : rng.uniform(0, 3);
    switch (pick) {
    case 0: {
        const int k = rng.uniform(1, degree - 1);
        return ClassExpr::make_binary(Kind::Product, random_degree(rng, names, k, depth - 1),
                                      random_degree(rng, names, degree - k, depth - 1));
    }
    case 1:
        return ClassExpr::make_power(ClassExpr::make_group(random_linear(rng, names, 2)),
                                     static_cast<unsigned>(degree));
    case 2:
        return ClassExpr::make_group(ClassExpr::make_binary(
            rng.coin() ? Kind::Sum : Kind::Difference, random_degree(rng, names, degree, depth - 1),
            random_degree(rng, names, degree, depth - 1)));
    default:
        return ClassExpr::make_negate(ClassExpr::make_group(random_degree(rng, names, degree,
                                                                          depth - 1)));
    }
}

} // namespace

Rational brute_evaluate(const VarietyModel& model, const ClassExpr& expr) {
    Rational total = 0;
    for (const auto& t : collapsed_terms(model, expr)) {
        if (t.coefficient == 0) {
            continue;
        }
        if (static_cast<int>(t.factors.size()) != model.dimension()) {
            throw fanocalc::DegreeError("reference: term of wrong degree");
        }
        total += t.coefficient * brute_intersection(model, t.factors);
    }
    return total;
}

ClassExpr random_homogeneous(Rng& rng, const VarietyModel& model, int degree) {
    return random_degree(rng, names_of(model), degree, 3);
}

ClassExpr random_syntax_tree(Rng& rng, int depth) { return syntax_expr(rng, depth); }

std::string random_expression_text(Rng& rng) {
    static const std::vector<std::string> pieces = {
        "H", "E1", "L", "2", "3/4", "+", "-", "*", "^", "^2", "(", ")", " ", "x", "/", "0",
        "\xE2\x88\x92", "#", "2H", "^^", "1/0"};
    std::string out;
    const int n = rng.uniform(0, 12);
    for (int i = 0; i < n; ++i) {
        out += pieces[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pieces.size()) - 1))];
    }
    return out;
}

} // namespace support
