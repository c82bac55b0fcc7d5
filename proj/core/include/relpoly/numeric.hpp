#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace relpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) in exact integers. Rows are memoized; out-of-range k yields 0.
const BigInt& binomial(int n, int k);

/// Largest integer <= x.
BigInt floor_rational(const Rational& x);

double to_double(const Rational& x);

/// Canonical "num/den" text form (reduced, den always present).
std::string rational_string(const Rational& x);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(const std::string& text);

/// Shortest decimal with 12 significant digits, locale-independent.
std::string format_double12(double value);

}  // namespace relpoly
