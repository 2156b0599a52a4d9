#pragma once

#include "ecag/numbers.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace ecag {

/// Cycle type of a permutation of S_k: c[i-1] cycles of length i, with
/// sum(i * c_i) = k.  One value per conjugacy class / partition of k.
struct PermType {
  std::vector<long> c;

  long k() const;
  long cycle_count() const;                      // l(tau), trivial cycles included
  int sign() const { return (k() - cycle_count()) % 2 == 0 ? 1 : -1; }
};

/// Number of permutations of this cycle type: k! / prod(i^{c_i} c_i!).
BigInt perm_type_count(const PermType& t);

/// All cycle types with sum(i*c_i) = k, i.e. the partitions of k.  Desk cap
/// k <= 20 (627 partitions).
std::vector<PermType> partitions(long k);

/// Distinct-coordinate sieve over a symmetric set with a symmetric summand:
/// F = sum over conjugacy classes of sign(tau) * C(tau) * F_tau.  The caller
/// supplies F_tau by class.
template <typename T>
T sieve_distinct_sum(long k, const std::function<T(const PermType&)>& tau_sum);

extern template BigInt sieve_distinct_sum<BigInt>(long, const std::function<BigInt(const PermType&)>&);
extern template Rational sieve_distinct_sum<Rational>(long, const std::function<Rational(const PermType&)>&);
extern template std::complex<double> sieve_distinct_sum<std::complex<double>>(
    long, const std::function<std::complex<double>(const PermType&)>&);

/// Cycle-type generating polynomial at t_i = q for all i; equals the rising
/// factorial (q+k-1)_k, which is asserted.
Rational gen_poly_uniform(long k, const Rational& q);

/// Cycle-type generating polynomial at t_i = q for d | i, t_i = s otherwise,
/// via the closed binomial form.
Rational gen_poly_mixed(long k, long d, const Rational& q, const Rational& s);

/// Seeded self-test: random small groups and characters, sieve versus the
/// direct sum over pairwise-distinct tuples.  Returns the max absolute
/// deviation seen; exact BigInt comparisons are asserted internally.
struct SieveCheckResult {
  long instances = 0;
  double max_deviation = 0.0;
  bool passed = false;
};
SieveCheckResult sieve_self_check(long k_max, long trials, std::uint64_t seed);

}  // namespace ecag
