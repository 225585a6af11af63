#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace stieltjes {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive denominator
// by the backing type.  All library arithmetic is exact; nothing ever touches
// floating point.
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p", or "p/q" (optional sign on either part, q != 0).
// Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string rat_to_string(const Rat& value);

// value^exp for exp >= 0.
Rat rat_pow(const Rat& value, unsigned exp);

}  // namespace stieltjes
