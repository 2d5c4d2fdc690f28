#include "fanocalc/class_expr.hpp"

#include "fanocalc/error.hpp"

#include <algorithm>
#include <cctype>

namespace fanocalc {

// ---------------------------------------------------------------------------
// Node construction

ClassExpr ClassExpr::make_symbol(std::string name) {
    ClassExpr e;
    e.kind = Kind::Symbol;
    e.symbol = std::move(name);
    return e;
}

ClassExpr ClassExpr::make_number(Integer numerator, std::optional<Integer> denominator) {
    ClassExpr e;
    e.kind = Kind::Number;
    e.numerator = std::move(numerator);
    e.denominator = std::move(denominator);
    return e;
}

ClassExpr ClassExpr::make_scale(Integer numerator, std::optional<Integer> denominator,
                                ClassExpr operand) {
    ClassExpr e;
    e.kind = Kind::Scale;
    e.numerator = std::move(numerator);
    e.denominator = std::move(denominator);
    e.children.push_back(std::move(operand));
    return e;
}

ClassExpr ClassExpr::make_negate(ClassExpr operand) {
    ClassExpr e;
    e.kind = Kind::Negate;
    e.children.push_back(std::move(operand));
    return e;
}

ClassExpr ClassExpr::make_binary(Kind kind, ClassExpr lhs, ClassExpr rhs) {
    ClassExpr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

ClassExpr ClassExpr::make_power(ClassExpr base, unsigned exponent) {
    ClassExpr e;
    e.kind = Kind::Power;
    e.exponent = exponent;
    e.children.push_back(std::move(base));
    return e;
}

ClassExpr ClassExpr::make_group(ClassExpr inner) {
    ClassExpr e;
    e.kind = Kind::Group;
    e.children.push_back(std::move(inner));
    return e;
}

Rational ClassExpr::coefficient() const {
    return Rational(numerator, denominator.value_or(Integer(1)));
}

bool ClassExpr::is_zero_literal() const {
    if (kind == Kind::Group || kind == Kind::Negate) {
        return children.front().is_zero_literal();
    }
    return kind == Kind::Number && numerator == 0;
}

bool operator==(const ClassExpr& a, const ClassExpr& b) {
    return a.kind == b.kind && a.symbol == b.symbol && a.numerator == b.numerator &&
           a.denominator == b.denominator && a.exponent == b.exponent && a.children == b.children;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

    std::size_t position() const { return pos_; }

    ClassExpr expr() {
        skip_space();
        ClassExpr lhs = term();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('+')) {
                lhs = binary(ClassExpr::Kind::Sum, std::move(lhs), term(), at);
            } else if (accept_minus()) {
                lhs = binary(ClassExpr::Kind::Difference, std::move(lhs), term(), at);
            } else {
                return lhs;
            }
        }
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

private:
    static ClassExpr binary(ClassExpr::Kind kind, ClassExpr lhs, ClassExpr rhs, std::size_t at) {
        ClassExpr e = ClassExpr::make_binary(kind, std::move(lhs), std::move(rhs));
        e.offset = at;
        return e;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_minus() {
        if (accept('-')) {
            return true;
        }
        // U+2212 MINUS SIGN
        if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    ClassExpr term() {
        skip_space();
        ClassExpr lhs = factor();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (!accept('*')) {
                return lhs;
            }
            lhs = binary(ClassExpr::Kind::Product, std::move(lhs), factor(), at);
        }
    }

    ClassExpr factor() {
        skip_space();
        const std::size_t at = pos_;
        if (accept_minus()) {
            ClassExpr e = ClassExpr::make_negate(factor());
            e.offset = at;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            auto [num, den] = number();
            if (std::isalpha(static_cast<unsigned char>(peek()))) {
                ClassExpr e = ClassExpr::make_scale(std::move(num), std::move(den), power());
                e.offset = at;
                return e;
            }
            ClassExpr e = ClassExpr::make_number(std::move(num), std::move(den));
            e.offset = at;
            return maybe_power(std::move(e));
        }
        return power();
    }

    ClassExpr power() { return maybe_power(atom()); }

    ClassExpr maybe_power(ClassExpr base) {
        skip_space();
        const std::size_t at = pos_;
        if (!accept('^')) {
            return base;
        }
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw SyntaxError(pos_, "expected unsigned integer exponent");
        }
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (pos_ - start > 4) {
            throw SyntaxError(start, "exponent too large");
        }
        const auto exponent =
            static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
        ClassExpr e = ClassExpr::make_power(std::move(base), exponent);
        e.offset = at;
        return e;
    }

    ClassExpr atom() {
        skip_space();
        const std::size_t at = pos_;
        const char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (std::isalnum(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            ClassExpr e = ClassExpr::make_symbol(std::string(text_.substr(at, pos_ - at)));
            e.offset = at;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto [num, den] = number();
            ClassExpr e = ClassExpr::make_number(std::move(num), std::move(den));
            e.offset = at;
            return e;
        }
        if (accept('(')) {
            ClassExpr inner = expr();
            skip_space();
            if (!accept(')')) {
                throw SyntaxError(pos_, "expected ')'");
            }
            ClassExpr e = ClassExpr::make_group(std::move(inner));
            e.offset = at;
            return e;
        }
        throw SyntaxError(pos_, "expected atom");
    }

    std::pair<Integer, std::optional<Integer>> number() {
        Integer num = digits();
        std::optional<Integer> den;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                throw SyntaxError(pos_, "expected denominator");
            }
            const std::size_t at = pos_;
            den = digits();
            if (*den == 0) {
                throw SyntaxError(at, "zero denominator");
            }
        }
        return {std::move(num), std::move(den)};
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_;
};

std::string describe(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) {
        return std::string("'") + c + "'";
    }
    return "byte " + std::to_string(static_cast<unsigned char>(c));
}

std::string number_text(const ClassExpr& e) {
    std::string out = e.numerator.str();
    if (e.denominator) {
        out += "/" + e.denominator->str();
    }
    return out;
}

void collect_symbols(const ClassExpr& e, std::vector<std::string>& out) {
    if (e.kind == ClassExpr::Kind::Symbol &&
        std::find(out.begin(), out.end(), e.symbol) == out.end()) {
        out.push_back(e.symbol);
    }
    for (const auto& child : e.children) {
        collect_symbols(child, out);
    }
}

} // namespace

ClassExpr parse_class_expr_prefix(std::string_view text, std::size_t& pos) {
    Parser parser(text, pos);
    ClassExpr result = parser.expr();
    parser.skip_space();
    pos = parser.position();
    return result;
}

ClassExpr parse_class_expr(std::string_view text) {
    std::size_t pos = 0;
    ClassExpr result = parse_class_expr_prefix(text, pos);
    if (pos < text.size()) {
        const char c = text[pos];
        std::string message = "unexpected " + describe(c);
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
            message += " (implicit multiplication is not supported; use '*')";
        } else {
            message += ", expected operator or end of input";
        }
        throw SyntaxError(pos, message);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Printing and degree

std::string pretty_print(const ClassExpr& e) {
    using Kind = ClassExpr::Kind;
    switch (e.kind) {
    case Kind::Symbol:
        return e.symbol;
    case Kind::Number:
        return number_text(e);
    case Kind::Scale:
        return number_text(e) + pretty_print(e.children[0]);
    case Kind::Negate:
        return "-" + pretty_print(e.children[0]);
    case Kind::Sum:
        return pretty_print(e.children[0]) + " + " + pretty_print(e.children[1]);
    case Kind::Difference:
        return pretty_print(e.children[0]) + " - " + pretty_print(e.children[1]);
    case Kind::Product:
        return pretty_print(e.children[0]) + "*" + pretty_print(e.children[1]);
    case Kind::Power:
        return pretty_print(e.children[0]) + "^" + std::to_string(e.exponent);
    case Kind::Group:
        return "(" + pretty_print(e.children[0]) + ")";
    }
    return {};
}

std::optional<int> degree(const ClassExpr& e) {
    using Kind = ClassExpr::Kind;
    switch (e.kind) {
    case Kind::Symbol:
        return 1;
    case Kind::Number:
        return 0;
    case Kind::Scale:
    case Kind::Negate:
    case Kind::Group:
        return degree(e.children[0]);
    case Kind::Sum:
    case Kind::Difference: {
        const auto& lhs = e.children[0];
        const auto& rhs = e.children[1];
        if (lhs.is_zero_literal()) {
            return degree(rhs);
        }
        if (rhs.is_zero_literal()) {
            return degree(lhs);
        }
        auto a = degree(lhs);
        auto b = degree(rhs);
        if (!a || !b || *a != *b) {
            return std::nullopt;
        }
        return a;
    }
    case Kind::Product: {
        auto a = degree(e.children[0]);
        auto b = degree(e.children[1]);
        if (!a || !b) {
            return std::nullopt;
        }
        return *a + *b;
    }
    case Kind::Power: {
        auto a = degree(e.children[0]);
        if (!a) {
            return std::nullopt;
        }
        return *a * static_cast<int>(e.exponent);
    }
    }
    return std::nullopt;
}

std::vector<std::string> symbols(const ClassExpr& expr) {
    std::vector<std::string> out;
    collect_symbols(expr, out);
    return out;
}

} // namespace fanocalc
