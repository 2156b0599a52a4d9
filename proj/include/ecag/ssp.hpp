#pragma once

#include "ecag/group.hpp"
#include "ecag/numbers.hpp"

#include <vector>

namespace ecag {

/// Exact subset-sum counts: dp(j, g) = number of j-subsets of D summing to
/// the group element g, for every 0 <= j <= k and every g.
struct CountTable {
  AbelianGroup group;
  long k = 0;
  std::vector<BigInt> dp;  // (k+1) rows of group.size() entries

  const BigInt& at(long j, long gidx) const { return dp[size_t(j) * group.size() + gidx]; }
  BigInt row_sum(long j) const;
  BigInt min_over_b(long j) const;
};

/// Element-by-element recurrence, O(|D| * k * |G|) big-integer additions.
/// D holds distinct group indices.
CountTable count_subset_sums(const AbelianGroup& G, const std::vector<long>& D, long k);
CountTable count_subset_sums(const GroupStructure& gs, const std::vector<CurvePoint>& D, long k);

/// Ground truth by enumerating k-subsets; capped at C(|D|, k) <= 10^7.
BigInt brute_force_count(const AbelianGroup& G, const std::vector<long>& D, long k, long b);
BigInt brute_force_count(const GroupStructure& gs, const std::vector<CurvePoint>& D, long k,
                         const CurvePoint& b);

}  // namespace ecag
