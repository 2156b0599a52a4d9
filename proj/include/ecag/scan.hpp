#pragma once

#include "ecag/bound.hpp"
#include "ecag/group.hpp"
#include "ecag/numbers.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecag {

/// How the evaluation-set size n is chosen per curve.
enum class NPolicy {
  QPlus2,  // n = q + 2, seeded random subset avoiding O and the divisor point
  Ratio,   // n = floor(ratio * |G|), same sampling
  MaxD,    // n = |G| - 2, everything except O and the divisor point
};

struct ScanConfig {
  std::vector<long> qs;        // prime powers to scan
  NPolicy n_policy = NPolicy::QPlus2;
  double ratio = 0.0;          // for NPolicy::Ratio
  long curves_per_q = 0;       // 0 = exhaustive over coefficient tuples
  long min_group_order = 0;    // extra |G| filter on top of feasibility
  long k_min = 0, k_max = 0;   // 0 = defaults [6, q-2]
  bool full_k_window = false;  // override: k in [1, n-1]
  std::uint64_t seed = 1;
  int jobs = 0;                // 0 = ECAG_JOBS or hardware concurrency
  bool with_bound = true;      // evaluate positivity certificates per row
  bool with_summary = true;    // per-curve k-window aggregate (widens the DP)
};

struct ScanRow {
  long q = 0;
  std::string curve_id;
  long n_points = 0;  // |G|
  long n1 = 0, n2 = 0;
  long n = 0;
  long k = 0;
  BigInt min_n;       // min over b of N(k, b, D)
  bool certified = false;
  long d = 0;         // minimum distance for the canonical divisor point
  bool mds = false;
  double wall_ms = 0.0;
};

/// Per-curve aggregate: the k-window inside [1, n-1] where min_b N(k,b,D)
/// stays positive.
struct ScanSummaryRow {
  long q = 0;
  std::string curve_id;
  long n_points = 0;
  long n = 0;
  long k_star_low = 0;   // smallest k with min_b N > 0 (0 = none)
  long k_star_high = 0;  // largest such k
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<ScanSummaryRow> summary;
  long curves_scanned = 0;
  long curves_skipped = 0;  // singular or infeasible for the n policy
  /// Rows where a positivity certificate was not matched by the exact count;
  /// must stay empty.
  std::vector<std::string> certificate_violations;
};

ScanReport scan_region(const ScanConfig& config);

void write_scan_csv(std::ostream& out, const ScanReport& report);
void write_scan_summary_csv(std::ostream& out, const ScanReport& report);

/// Prime powers in [lo, hi].
std::vector<long> prime_powers_in(long lo, long hi);

int default_jobs();

}  // namespace ecag
