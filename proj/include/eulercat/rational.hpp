#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulercat {

// Exact arithmetic throughout; cpp_rational keeps values reduced with a
// positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, "/q" omitted when q == 1: "-1", "1/2", "0".
std::string format_rational(const Rational& value);

// Strict inverse of format_rational: optional leading '-', decimal digits,
// optional "/digits" with a positive denominator. Throws Error(ParseError).
Rational parse_rational(const std::string& text);

}  // namespace eulercat
