/// @file rational.hpp
/// @brief Arbitrary-precision rationals (thin layer over GMP's mpq_class).
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plectic {

/// Always canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Parses "7", "-3/4" or "+2". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "3", "-3/4".
std::string to_string(const Rational& q);

}  // namespace plectic
