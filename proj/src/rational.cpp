#include "fanocalc/rational.hpp"

#include <cctype>

namespace fanocalc {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

std::optional<Integer> parse_digits(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }
    return Integer(std::string(text));
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    auto num = parse_digits(text.substr(0, slash));
    if (!num) {
        return std::nullopt;
    }
    Integer den = 1;
    if (slash != std::string_view::npos) {
        auto parsed = parse_digits(text.substr(slash + 1));
        if (!parsed || *parsed == 0) {
            return std::nullopt;
        }
        den = *parsed;
    }
    Rational value(*num, den);
    return negative ? Rational(-value) : value;
}

} // namespace fanocalc
