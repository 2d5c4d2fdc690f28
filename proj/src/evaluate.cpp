#include "fanocalc/evaluate.hpp"

#include "fanocalc/error.hpp"

#include <algorithm>

namespace fanocalc {

namespace {

void add_into(Polynomial& target, const Monomial& m, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = target.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            target.erase(it);
        }
    }
}

Polynomial scaled(Polynomial p, const Rational& k) {
    if (k == 0) {
        return {};
    }
    for (auto& [m, c] : p) {
        c *= k;
    }
    return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            add_into(out, m, ca * cb);
        }
    }
    return out;
}

Polynomial expand_node(const VarietyModel& model, const ClassExpr& e) {
    using Kind = ClassExpr::Kind;
    switch (e.kind) {
    case Kind::Symbol: {
        auto index = model.index_of(e.symbol);
        if (!index) {
            throw UnknownSymbolError("unknown symbol '" + e.symbol + "' at offset " +
                                     std::to_string(e.offset) + " on model '" + model.name() +
                                     "'");
        }
        return {{Monomial{*index}, Rational(1)}};
    }
    case Kind::Number: {
        Polynomial p;
        add_into(p, {}, e.coefficient());
        return p;
    }
    case Kind::Scale:
        return scaled(expand_node(model, e.children[0]), e.coefficient());
    case Kind::Negate:
        return scaled(expand_node(model, e.children[0]), Rational(-1));
    case Kind::Group:
        return expand_node(model, e.children[0]);
    case Kind::Sum:
    case Kind::Difference: {
        Polynomial out = expand_node(model, e.children[0]);
        const Rational sign = e.kind == Kind::Sum ? 1 : -1;
        for (const auto& [m, c] : expand_node(model, e.children[1])) {
            add_into(out, m, sign * c);
        }
        return out;
    }
    case Kind::Product:
        return multiply(expand_node(model, e.children[0]), expand_node(model, e.children[1]));
    case Kind::Power: {
        const Polynomial base = expand_node(model, e.children[0]);
        Polynomial out{{Monomial{}, Rational(1)}};
        for (unsigned i = 0; i < e.exponent; ++i) {
            out = multiply(out, base);
        }
        return out;
    }
    }
    return {};
}

} // namespace

Polynomial expand(const VarietyModel& model, const ClassExpr& expr) {
    return expand_node(model, expr);
}

Rational evaluate(const VarietyModel& model, const ClassExpr& expr) {
    const auto d = degree(expr);
    if (!d) {
        throw DegreeError("expression is not homogeneous");
    }
    if (*d != model.dimension()) {
        throw DegreeError("expression has degree " + std::to_string(*d) + " but '" +
                          model.name() + "' has dimension " + std::to_string(model.dimension()));
    }
    // Every monomial of a homogeneous expansion is a sorted n-tuple, so its
    // value is a single form lookup.
    Rational total = 0;
    for (const auto& [m, c] : expand(model, expr)) {
        total += c * Rational(model.form().value(m));
    }
    return total;
}

Rational evaluate(const VarietyModel& model, std::string_view text) {
    return evaluate(model, parse_class_expr(text));
}

DivisorClass to_class(const VarietyModel& model, const ClassExpr& expr) {
    const auto d = degree(expr);
    if (!expr.is_zero_literal() && (!d || *d != 1)) {
        throw DegreeError("'" + pretty_print(expr) + "' is not a divisor class (degree one)");
    }
    std::vector<Rational> coeffs(model.rank(), Rational(0));
    for (const auto& [m, c] : expand(model, expr)) {
        if (m.size() != 1) {
            throw DegreeError("'" + pretty_print(expr) + "' is not a divisor class (degree one)");
        }
        coeffs[static_cast<std::size_t>(m.front())] = c;
    }
    return model.make_class(std::move(coeffs));
}

DivisorClass to_class(const VarietyModel& model, std::string_view text) {
    return to_class(model, parse_class_expr(text));
}

std::string format_class(const VarietyModel& model, const DivisorClass& cls) {
    std::string out;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const Rational& c = cls[i];
        if (c == 0) {
            continue;
        }
        const Rational magnitude = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) {
            out += to_string(magnitude);
        }
        out += model.basis()[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace fanocalc
