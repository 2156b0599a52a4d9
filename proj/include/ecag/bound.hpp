#pragma once

#include "ecag/chars.hpp"
#include "ecag/numbers.hpp"

#include <string>
#include <vector>

namespace ecag {

/// One d-indexed tail term: phi_d characters of order exactly d contribute
/// (phi_d / |G|) * C((n + phi_used)/d + k - 1, k).
struct BoundTerm {
  long d = 0;
  long phi_d = 0;
  Rational value;
};

/// Exact-rational evaluation of the subset-sum deviation bound
///   |N(k,b,D) - C(n,k)/|G||  <=  rhs_total,
/// with every binomial taken as a falling-factorial generalized binomial and
/// the character-sum maximum entering through phi_used = Phi(D) + tolerance.
///
/// The order-2 term is the exact-rational cap on the order-2 class sums,
/// counted with multiplicity phi_2; the single-binomial form
/// C((n+phi)/2, k)/|G| admits exact counterexamples (full 2-torsion duals,
/// tiny n) and is not used.
struct BoundReport {
  long n = 0;
  long k = 0;
  long group_order = 0;
  long s_count = 0;          // characters of order > k
  long phi_2 = 0;            // characters of order exactly 2
  Rational phi_used;
  Rational main_term;        // C(n,k) / |G|
  Rational term_S;           // (|S|/|G|) * C(phi_used + k - 1, k)
  Rational term_d2;          // (phi_2/|G|) * max feasible order-2 class sum / k!
  std::vector<BoundTerm> terms_d;  // divisors d of exp(G), 2 < d <= k
  Rational rhs_total;
  bool certified_positive = false;
  std::vector<std::string> clamped;  // labels of terms clamped up to zero
};

BoundReport eval_bound(const AbelianGroup& G, const CharSumProfile& profile, long n, long k);

/// Single-binomial form: M is the max of the three binomial arguments, d the
/// smallest divisor of |G| in (2, k]; |N - C(n,k)/|G|| <= C(M, k).
struct MBound {
  long k = 0;
  Rational M;
  Rational c_m_k;  // C(M, k)
  bool third_arg_present = false;
  long d = 0;
};

MBound eval_M_bound(const AbelianGroup& G, const CharSumProfile& profile, long n, long k);

/// True exactly when the main term strictly dominates the deviation bound,
/// which certifies N(k, b, D) > 0 for every b.
bool certify_positive(const AbelianGroup& G, const CharSumProfile& profile, long n, long k);

}  // namespace ecag
