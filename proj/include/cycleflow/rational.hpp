#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cycleflow {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Lowest terms, "p" when the denominator is 1 and "p/q" otherwise.
std::string format_rational(const Rational& value);

// Accepts an optionally negated integer "p" or fraction "p/q" with a
// positive integer denominator. Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace cycleflow
