#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace surfsing {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders `p/q` in lowest terms with q > 0, or just `p` when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& i);

/// Parses `p`, `-p`, `p/q` (q != 0). Throws std::invalid_argument on
/// anything else.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

} // namespace surfsing
