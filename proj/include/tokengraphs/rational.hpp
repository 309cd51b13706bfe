#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tokengraphs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Floor of a rational, as a 64-bit integer.
std::int64_t floor_of(const Rational& r);

} // namespace tokengraphs
