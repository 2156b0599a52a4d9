#include "ecag/numbers.hpp"

#include "ecag/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace ecag {

BigInt factorial(long k) {
  if (k < 0) fail(ErrorKind::ParameterOutOfRange, "factorial of negative argument");
  BigInt out = 1;
  for (long i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) fail(ErrorKind::ParameterOutOfRange, "binomial with negative k");
  if (k == 0) return 1;
  if (n < 0) fail(ErrorKind::ParameterOutOfRange, "binomial with negative argument");
  if (n < k) return 0;
  BigInt out = 1;
  for (long i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return out;
}

Rational falling_factorial(const Rational& x, long k) {
  // single normalization at the end: prod (a - i b) / b^k for x = a/b
  const BigInt a = numerator(x), b = denominator(x);
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= a - i * b;
    den *= b;
  }
  return Rational(num, den);
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) fail(ErrorKind::ParameterOutOfRange, "binomial with negative k");
  return falling_factorial(x, k) / Rational(factorial(k));
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::ParameterOutOfRange, "non-finite double");
  return Rational(v);
}

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::ConfigParse, "zero denominator in rational " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::ConfigParse, "bad rational literal " + s);
  }
}

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

}  // namespace ecag
