#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace multicomp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Combinatorial conventions: binomial(a, b) = 0 unless 0 <= b <= a.
BigInt binomial(long long a, long long b);
BigInt factorial(long long n);
BigInt power(const BigInt& base, unsigned exponent);

std::string to_string(const BigInt& value);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace multicomp
