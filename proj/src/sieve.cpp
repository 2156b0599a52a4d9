#include "ecag/sieve.hpp"

#include "ecag/chars.hpp"
#include "ecag/errors.hpp"

#include <algorithm>
#include <random>

namespace ecag {

long PermType::k() const {
  long sum = 0;
  for (size_t i = 0; i < c.size(); ++i) sum += long(i + 1) * c[i];
  return sum;
}

long PermType::cycle_count() const {
  long sum = 0;
  for (long ci : c) sum += ci;
  return sum;
}

BigInt perm_type_count(const PermType& t) {
  long k = 0;
  for (size_t i = 0; i < t.c.size(); ++i) {
    if (t.c[i] < 0) fail(ErrorKind::InvalidType, "negative cycle count");
    k += long(i + 1) * t.c[i];
  }
  if (k == 0) fail(ErrorKind::InvalidType, "empty cycle type");
  BigInt num = factorial(k);
  BigInt den = 1;
  for (size_t i = 0; i < t.c.size(); ++i) {
    long len = long(i + 1);
    for (long j = 0; j < t.c[i]; ++j) den *= len;
    den *= factorial(t.c[i]);
  }
  return num / den;
}

namespace {

void partitions_rec(long remaining, long max_part, PermType& cur, std::vector<PermType>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    ++cur.c[part - 1];
    partitions_rec(remaining - part, part, cur, out);
    --cur.c[part - 1];
  }
}

}  // namespace

std::vector<PermType> partitions(long k) {
  if (k < 1) fail(ErrorKind::ParameterOutOfRange, "k must be >= 1");
  if (k > 20) fail(ErrorKind::CapExceeded, "partition enumeration capped at k = 20");
  std::vector<PermType> out;
  PermType cur;
  cur.c.assign(k, 0);
  partitions_rec(k, k, cur, out);
  return out;
}

namespace {

// sign * count * term, with the count downcast for inexact value types.
BigInt scale_term(const BigInt& term, const BigInt& count, int sign) {
  BigInt out = term * count;
  return sign > 0 ? out : BigInt(-out);
}
Rational scale_term(const Rational& term, const BigInt& count, int sign) {
  Rational out = term * Rational(count);
  return sign > 0 ? out : -out;
}
std::complex<double> scale_term(const std::complex<double>& term, const BigInt& count, int sign) {
  return term * (double(sign) * count.convert_to<double>());
}

}  // namespace

template <typename T>
T sieve_distinct_sum(long k, const std::function<T(const PermType&)>& tau_sum) {
  T total{};
  for (const auto& type : partitions(k))
    total += scale_term(tau_sum(type), perm_type_count(type), type.sign());
  return total;
}

template BigInt sieve_distinct_sum<BigInt>(long, const std::function<BigInt(const PermType&)>&);
template Rational sieve_distinct_sum<Rational>(long, const std::function<Rational(const PermType&)>&);
template std::complex<double> sieve_distinct_sum<std::complex<double>>(
    long, const std::function<std::complex<double>(const PermType&)>&);

Rational gen_poly_uniform(long k, const Rational& q) {
  Rational total = 0;
  for (const auto& type : partitions(k)) {
    Rational term = Rational(perm_type_count(type));
    for (long i = 0; i < type.cycle_count(); ++i) term *= q;
    total += term;
  }
  // (q+k-1)_k, the rising factorial of q
  Rational check = falling_factorial(q + (k - 1), k);
  if (total != check) fail(ErrorKind::InvariantViolation, "cycle-type sum differs from the rising factorial");
  return total;
}

Rational gen_poly_mixed(long k, long d, const Rational& q, const Rational& s) {
  if (d < 2) fail(ErrorKind::ParameterOutOfRange, "d must be >= 2");
  if (k < 1) fail(ErrorKind::ParameterOutOfRange, "k must be >= 1");
  Rational a = (q - s) / d;
  Rational total = 0;
  for (long i = 0; i * d <= k; ++i)
    total += binomial(a + (i - 1), i) * binomial(s + (k - d * i - 1), k - d * i);
  total *= Rational(factorial(k));

  // The binomial cap fails in the corner s < 1, q < k with fractional
  // (q-s)/d (counterexample: k=2, d=2, q=1, s=0 gives 1 > 3/4); it holds
  // whenever s >= 1, q >= k, or d | q-s.
  if (q >= s && s >= 0 && (s >= 1 || q >= k || denominator(a) == 1)) {
    Rational cap = Rational(factorial(k)) * binomial(s + k + a - 1, k);
    if (total > cap) fail(ErrorKind::InvariantViolation, "mixed generating value exceeds its binomial cap");
  }
  return total;
}

SieveCheckResult sieve_self_check(long k_max, long trials, std::uint64_t seed) {
  if (k_max < 1 || k_max > 8) fail(ErrorKind::ParameterOutOfRange, "self-check supports 1 <= k <= 8");
  std::mt19937_64 rng(seed);
  SieveCheckResult res;

  for (long t = 0; t < trials; ++t) {
    long n1 = 1 + long(rng() % 12);
    std::vector<long> divs;
    for (long d = 1; d <= n1; ++d)
      if (n1 % d == 0) divs.push_back(d);
    AbelianGroup G{n1, divs[rng() % divs.size()]};

    long dsize = 1 + long(rng() % std::min<long>(8, G.size()));
    std::vector<long> all(G.size());
    for (long i = 0; i < G.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<long> D(all.begin(), all.begin() + dsize);
    std::sort(D.begin(), D.end());

    long k = 1 + long(rng() % k_max);
    bool trivial_char = (t % 8 == 0);
    CharIndex chi{trivial_char ? 0 : long(rng() % G.n1), trivial_char ? 0 : long(rng() % G.n2)};

    // Class sums F_tau = prod_i s_{chi^i}(D)^{c_i}.
    std::vector<std::complex<double>> power_sums(k + 1);
    for (long i = 1; i <= k; ++i)
      power_sums[i] = char_sum_naive(G, CharIndex{chi.u * i, chi.v * i}, D);

    auto tau_sum = [&](const PermType& type) {
      std::complex<double> out{1.0, 0.0};
      for (size_t i = 0; i < type.c.size(); ++i)
        for (long j = 0; j < type.c[i]; ++j) out *= power_sums[i + 1];
      return out;
    };
    std::complex<double> sieved =
        sieve_distinct_sum<std::complex<double>>(k, std::function<std::complex<double>(const PermType&)>(tau_sum));

    // Direct sum over pairwise-distinct tuples.
    std::complex<double> direct{0.0, 0.0};
    std::vector<long> tuple(k);
    std::vector<char> used(dsize, 0);
    auto rec = [&](auto&& self, long depth, std::complex<double> prod) -> void {
      if (depth == k) {
        direct += prod;
        return;
      }
      for (long i = 0; i < dsize; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        self(self, depth + 1, prod * char_eval(G, chi, D[i]));
        used[i] = 0;
      }
    };
    rec(rec, 0, {1.0, 0.0});

    res.max_deviation = std::max(res.max_deviation, std::abs(sieved - direct));
    ++res.instances;

    if (trivial_char) {
      // Integer route: F_tau = n^{l(tau)}, F = (n)_k exactly.
      auto int_tau = [&](const PermType& type) {
        BigInt out = 1;
        for (long j = 0; j < type.cycle_count(); ++j) out *= dsize;
        return out;
      };
      BigInt exact = sieve_distinct_sum<BigInt>(k, std::function<BigInt(const PermType&)>(int_tau));
      BigInt expect = 1;
      for (long j = 0; j < k; ++j) expect *= dsize - j;
      if (exact != expect) {
        res.passed = false;
        return res;
      }
    }
  }

  res.passed = res.max_deviation <= 1e-9;
  return res;
}

}  // namespace ecag
