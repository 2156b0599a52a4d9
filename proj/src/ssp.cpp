#include "ecag/ssp.hpp"

#include "ecag/errors.hpp"

#include <algorithm>

namespace ecag {

BigInt CountTable::row_sum(long j) const {
  BigInt sum = 0;
  const long N = group.size();
  for (long g = 0; g < N; ++g) sum += dp[size_t(j) * N + g];
  return sum;
}

BigInt CountTable::min_over_b(long j) const {
  const long N = group.size();
  BigInt best = dp[size_t(j) * N];
  for (long g = 1; g < N; ++g) best = std::min(best, dp[size_t(j) * N + g]);
  return best;
}

CountTable count_subset_sums(const AbelianGroup& G, const std::vector<long>& D, long k) {
  const long N = G.size();
  if (k < 0 || k > long(D.size()))
    fail(ErrorKind::KOutOfRange, "need 0 <= k <= |D|");
  {
    std::vector<char> seen(N, 0);
    for (long g : D) {
      if (g < 0 || g >= N) fail(ErrorKind::UnknownPoint, "group index out of range");
      if (seen[g]) fail(ErrorKind::DuplicateElement, "repeated element in D");
      seen[g] = 1;
    }
  }

  CountTable table;
  table.group = G;
  table.k = k;
  table.dp.assign(size_t(k + 1) * N, BigInt(0));
  table.dp[0] = 1;  // empty subset sums to the zero element (gidx 0)

  std::vector<long> shifted(N);
  long processed = 0;
  for (long e : D) {
    ++processed;
    for (long g = 0; g < N; ++g) shifted[g] = G.add(g, e);
    // descending j keeps each element used at most once
    for (long j = std::min(k, processed); j >= 1; --j) {
      BigInt* row = table.dp.data() + size_t(j) * N;
      const BigInt* prev = table.dp.data() + size_t(j - 1) * N;
      for (long g = 0; g < N; ++g) {
        if (!prev[g].is_zero()) row[shifted[g]] += prev[g];
      }
    }
  }
  return table;
}

CountTable count_subset_sums(const GroupStructure& gs, const std::vector<CurvePoint>& D, long k) {
  std::vector<long> idx;
  idx.reserve(D.size());
  for (const auto& pt : D) idx.push_back(gs.index_of(pt));
  return count_subset_sums(gs.group(), idx, k);
}

BigInt brute_force_count(const AbelianGroup& G, const std::vector<long>& D, long k, long b) {
  const long n = long(D.size());
  if (k < 0 || k > n) fail(ErrorKind::KOutOfRange, "need 0 <= k <= |D|");
  if (b < 0 || b >= G.size()) fail(ErrorKind::UnknownPoint, "group index out of range");
  if (binomial(BigInt(n), k) > 10'000'000) fail(ErrorKind::TooLarge, "C(|D|, k) beyond the oracle cap");

  BigInt count = 0;
  // combinations in lexicographic order, partial sums carried down the stack
  auto rec = [&](auto&& self, long next, long depth, long sum) -> void {
    if (depth == k) {
      if (sum == b) ++count;
      return;
    }
    for (long i = next; i <= n - (k - depth); ++i) self(self, i + 1, depth + 1, G.add(sum, D[i]));
  };
  rec(rec, 0, 0, 0);
  return count;
}

BigInt brute_force_count(const GroupStructure& gs, const std::vector<CurvePoint>& D, long k,
                         const CurvePoint& b) {
  std::vector<long> idx;
  idx.reserve(D.size());
  for (const auto& pt : D) idx.push_back(gs.index_of(pt));
  return brute_force_count(gs.group(), idx, k, gs.index_of(b));
}

}  // namespace ecag
