#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace brac {

// All classical bound arithmetic is exact: big integers and rationals in
// lowest terms with positive denominators. Floating point only enters on
// the quantum/entropy side.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(BigInt base, unsigned exp);

// Parses "2", "-0.5", "1.99940", "3e-4" or "p/q" into an exact rational.
// Decimal inputs become exact decimal fractions (1.99940 -> 9997/5000).
Rational rational_from_string(std::string_view text);

// Exact dyadic conversion; every finite double is a rational.
Rational rational_from_double(double value);

double to_double(const Rational& r);

// "3/4", or "2" when the denominator is 1.
std::string fraction_string(const Rational& r);

// Exact decimal expansion when the denominator is of the form 2^a 5^b,
// otherwise falls back to fraction_string. Round-trips through
// rational_from_string.
std::string decimal_or_fraction_string(const Rational& r);

// printf "%.*g" formatting; project-wide default of 12 significant digits.
std::string format_sig(double value, int significant_digits = 12);

} // namespace brac
