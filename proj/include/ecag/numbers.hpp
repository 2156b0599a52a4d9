#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ecag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(long k);

/// C(n, k) for integer n >= 0; zero when k > n.
BigInt binomial(const BigInt& n, long k);

/// Falling factorial x(x-1)...(x-k+1) for rational x.
Rational falling_factorial(const Rational& x, long k);

/// Generalized binomial C(x, k) = (x)_k / k! for rational x; may be negative.
Rational binomial(const Rational& x, long k);

/// Exact rational equal to the given double (doubles are dyadic rationals).
Rational rational_from_double(double v);

/// "num/den" with an explicit denominator, e.g. "35/9", "5/1".
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace ecag
