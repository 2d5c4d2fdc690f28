#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace fanocalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or a plain integer when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "[-]p" or "[-]p/q" with q > 0. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

inline bool is_integral(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

inline Integer numerator_of(const Rational& value) {
    return boost::multiprecision::numerator(value);
}

} // namespace fanocalc
