#include "ecag/bound.hpp"

#include "ecag/errors.hpp"

#include <algorithm>

namespace ecag {

namespace {

// Upper-bound terms dominate absolute values, so a negative generalized
// binomial is clamped up to zero; clamps are recorded in the report.
Rational clamp_term(Rational v, const std::string& label, std::vector<std::string>& clamped) {
  if (v < 0) {
    clamped.push_back(label);
    return Rational(0);
  }
  return v;
}

void check_params(const AbelianGroup& G, const CharSumProfile& profile, long n, long k) {
  if (k < 1 || k > n || n > G.size())
    fail(ErrorKind::ParameterOutOfRange, "need 1 <= k <= n <= |G|");
  if (profile.n1 != G.n1 || profile.n2 != G.n2)
    fail(ErrorKind::ParameterOutOfRange, "profile from a different group");
  if (profile.d_size != n)
    fail(ErrorKind::ParameterOutOfRange, "n does not match the profiled subset");
}

// Cap on |class sum| / k! for one order-2 character.  The sum of an order-2
// character over D is an integer s with s == n (mod 2) and |s| <= phi, and
// the signed class sum collapses exactly to
//   k! * sum_i (-1)^i C((n-s)/2, i) C(s, k-2i),
// so the triangle inequality gives the exact-rational cap below, maximized
// over every feasible s.  Monotone in phi_used, which keeps certificates
// sound under the phi + tolerance policy.
Rational order2_cap(long n, long k, const Rational& phi_used) {
  long sigma_max = std::min<long>(n, (numerator(phi_used) / denominator(phi_used)).convert_to<long>());
  Rational best = 0;
  for (long sig = (n % 2 == 0 ? 0 : 1); sig <= sigma_max; sig += 2) {
    BigInt plus = 0, minus = 0;
    for (long i = 0; 2 * i <= k; ++i) {
      // s = +sig
      plus += binomial(BigInt((n - sig) / 2), i) * binomial(BigInt(sig), k - 2 * i);
      if (sig == 0) continue;
      // s = -sig: C(-sig, j) has magnitude C(sig + j - 1, j)
      minus += binomial(BigInt((n + sig) / 2), i) * binomial(BigInt(sig + k - 2 * i - 1), k - 2 * i);
    }
    best = std::max(best, Rational(std::max(plus, minus)));
  }
  return best;
}

}  // namespace

BoundReport eval_bound(const AbelianGroup& G, const CharSumProfile& profile, long n, long k) {
  check_params(G, profile, n, k);

  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.group_order = G.size();
  rep.phi_used = rational_from_double(profile.phi + profile.tolerance);
  rep.s_count = count_chars_order_gt(G, k);

  const Rational Nq(G.size());
  rep.main_term = Rational(binomial(BigInt(n), k)) / Nq;

  rep.term_S = clamp_term(Rational(rep.s_count) / Nq * binomial(rep.phi_used + (k - 1), k),
                          "term_S", rep.clamped);
  rep.phi_2 = count_chars_order_eq(G, 2);
  rep.term_d2 =
      clamp_term(Rational(rep.phi_2) / Nq * order2_cap(n, k, rep.phi_used), "term_d2", rep.clamped);

  rep.rhs_total = rep.term_S + rep.term_d2;
  for (long d = 3; d <= std::min(k, G.exponent()); ++d) {
    if (G.exponent() % d != 0) continue;
    long phi_d = count_chars_order_eq(G, d);
    if (phi_d == 0) continue;
    Rational value = clamp_term(
        Rational(phi_d) / Nq * binomial((n + rep.phi_used) / d + (k - 1), k),
        "term_d" + std::to_string(d), rep.clamped);
    rep.terms_d.push_back(BoundTerm{d, phi_d, value});
    rep.rhs_total += value;
  }

  rep.certified_positive = rep.main_term > rep.rhs_total;
  return rep;
}

MBound eval_M_bound(const AbelianGroup& G, const CharSumProfile& profile, long n, long k) {
  check_params(G, profile, n, k);

  Rational phi_used = rational_from_double(profile.phi + profile.tolerance);
  MBound mb;
  mb.k = k;
  mb.M = std::max(Rational(phi_used + (k - 1)), Rational((n + phi_used) / 2));
  for (long d = 3; d <= k; ++d) {
    if (G.size() % d != 0) continue;
    mb.d = d;
    mb.third_arg_present = true;
    mb.M = std::max(mb.M, Rational((n + phi_used) / d + (k - 1)));
    break;  // smallest such divisor only
  }
  mb.c_m_k = binomial(mb.M, k);
  return mb;
}

bool certify_positive(const AbelianGroup& G, const CharSumProfile& profile, long n, long k) {
  return eval_bound(G, profile, n, k).certified_positive;
}

}  // namespace ecag
