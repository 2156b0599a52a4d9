#pragma once

#include "ecag/group.hpp"

#include <complex>
#include <vector>

namespace ecag {

/// Additive character chi_{(u,v)}(a,b) = exp(2*pi*i*(u*a/n1 + v*b/n2)).
struct CharIndex {
  long u = 0;
  long v = 0;

  bool trivial() const { return u == 0 && v == 0; }
  friend bool operator==(const CharIndex& x, const CharIndex& y) { return x.u == y.u && x.v == y.v; }
};

long char_order(const AbelianGroup& G, CharIndex chi);

std::complex<double> char_eval(const AbelianGroup& G, CharIndex chi, long gidx);
std::complex<double> char_eval(const GroupStructure& gs, CharIndex chi, const CurvePoint& P);

/// Direct per-character sum over D; the slow reference for the transform path.
std::complex<double> char_sum_naive(const AbelianGroup& G, CharIndex chi, const std::vector<long>& D);

/// s_chi(D) for every character plus the max nontrivial modulus.
struct CharSumProfile {
  long n1 = 1, n2 = 1;
  long d_size = 0;
  std::vector<std::complex<double>> sums;  // indexed u*n2 + v
  double phi = 0.0;                        // max |s_chi| over chi != chi0
  CharIndex argmax;                        // first maximizer in (u, v) order
  double tolerance = 0.0;                  // 1e-9 * |D|

  const std::complex<double>& sum(CharIndex chi) const { return sums[chi.u * n2 + chi.v]; }
};

/// Row-column transform over Z/n1 then Z/n2, O(N*(n1+n2)) instead of O(N^2),
/// with compensated accumulation.
CharSumProfile char_sum_profile(const AbelianGroup& G, const std::vector<long>& D);
CharSumProfile char_sum_profile(const GroupStructure& gs, const std::vector<CurvePoint>& D);

/// |S|: number of characters of order strictly greater than k.
long count_chars_order_gt(const AbelianGroup& G, long k);

/// Number of characters of order exactly d.
long count_chars_order_eq(const AbelianGroup& G, long d);

}  // namespace ecag
