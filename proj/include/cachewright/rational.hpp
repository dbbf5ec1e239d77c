#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cachewright {

// Exact arithmetic for memory/rate coordinates and certificate multipliers.
using Rational = boost::rational<std::int64_t>;

/// Always renders as "numerator/denominator", including integers ("3/1").
std::string to_fraction_string(const Rational& q);

/// Renders integers without a denominator ("3"), otherwise "u/v".
std::string to_short_string(const Rational& q);

std::string to_decimal_string(const Rational& q, int digits = 6);

double to_double(const Rational& q);

/// Accepts "u/v", "u" or "-u/v". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace cachewright
