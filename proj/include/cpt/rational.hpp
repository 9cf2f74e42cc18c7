#pragma once

/**
 * @file rational.hpp
 * Exact rational scalars for circle geometry, plus the mod-1 helpers
 * that keep circle positions in [0, 1).
 */

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpt {

using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return {num, den}; }

inline std::int64_t rational_floor(const Rational& q) {
  std::int64_t n = q.numerator(), d = q.denominator();  // d > 0 by construction
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

// q - floor(q), canonical position on the unit circle.
inline Rational mod1(const Rational& q) { return q - Rational(rational_floor(q)); }

std::string rational_to_string(const Rational& q);  // "3/8", "0", "1"

// Accepts "3/8", "-1/2", "0", "2"; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

// Parses a decimal string such as "4.5" exactly.
Rational parse_decimal(const std::string& text);

}  // namespace cpt
