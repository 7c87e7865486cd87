#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost::rational's mixed integer == recurses
// into itself. Exact non-template overloads take precedence and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
inline bool operator==(const rational<std::int64_t>& a, long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
}  // namespace boost

namespace phasesphere {

// Every coordinate in the toolkit is an exact rational; angles are measured in
// turns so that a half-turn is the rational 1/2.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Fractional part, always in [0,1).
Rational frac(const Rational& r);

}  // namespace phasesphere
