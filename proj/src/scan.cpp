#include "ecag/scan.hpp"

#include "ecag/chars.hpp"
#include "ecag/errors.hpp"
#include "ecag/ssp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

namespace ecag {

namespace {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  long p;
  int m;
};

PrimePower split_prime_power(long q) {
  for (long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    if (!is_prime_long(p)) continue;
    long rest = q;
    int m = 0;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) break;
    return {p, m};
  }
  if (!is_prime_long(q)) fail(ErrorKind::ParameterOutOfRange, std::to_string(q) + " is not a prime power");
  return {q, 1};
}

// splitmix64, the usual seed scrambler
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d4649d6d2b51a5ull;
  return z ^ (z >> 31);
}

struct CurveTask {
  long q;
  std::uint64_t tuple;  // coefficient tuple packed base q
};

std::array<Field::Elt, 5> unpack_tuple(std::uint64_t t, long q) {
  std::array<Field::Elt, 5> a{};
  for (int i = 0; i < 5; ++i) {
    a[i] = Field::Elt(t % q);
    t /= q;
  }
  return a;
}

}  // namespace

std::vector<long> prime_powers_in(long lo, long hi) {
  std::vector<long> out;
  for (long q = std::max(2L, lo); q <= hi; ++q) {
    long p = 0;
    for (long d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    long rest = q;
    while (rest % p == 0) rest /= p;
    if (rest == 1 && is_prime_long(p)) out.push_back(q);
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("ECAG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

namespace {

struct PerCurveOutput {
  std::vector<ScanRow> rows;
  std::vector<ScanSummaryRow> summary;
  std::vector<std::string> violations;
  bool scanned = false;
};

PerCurveOutput scan_one_curve(const ScanConfig& config, const FieldPtr& field, std::uint64_t tuple) {
  PerCurveOutput out;
  const long q = field->q();

  CurvePtr curve;
  try {
    curve = Curve::make(field, unpack_tuple(tuple, q));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularCurve) return out;
    throw;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto gs = GroupStructure::from_curve(curve);
  const long N = gs.order();

  long n = 0;
  switch (config.n_policy) {
    case NPolicy::QPlus2: n = q + 2; break;
    case NPolicy::Ratio: n = long(config.ratio * double(N)); break;
    case NPolicy::MaxD: n = N - 2; break;
  }
  // room for O and the divisor point outside D
  if (n < 1 || n > N - 2) return out;
  if (N < config.min_group_order) return out;

  // canonical divisor point: first point after O in enumeration order
  const CurvePoint P0 = gs.points()[1];
  const long p0_idx = gs.index_of(P0);

  std::vector<long> D;
  {
    std::vector<long> pool;
    pool.reserve(N - 2);
    for (long g = 0; g < N; ++g)
      if (g != 0 && g != p0_idx) pool.push_back(g);
    if (n == N - 2) {
      D = pool;
    } else {
      std::mt19937_64 rng(mix(config.seed ^ mix(std::uint64_t(q) << 32 ^ tuple)));
      std::shuffle(pool.begin(), pool.end(), rng);
      D.assign(pool.begin(), pool.begin() + n);
      std::sort(D.begin(), D.end());
    }
  }

  long k_lo = config.full_k_window ? 1 : (config.k_min > 0 ? config.k_min : 6);
  long k_hi = config.full_k_window ? n - 1 : (config.k_max > 0 ? config.k_max : q - 2);
  k_hi = std::min(k_hi, n - 1);
  if (k_lo > k_hi) return out;

  // the summary wants the full k window, plain scans only the configured one
  auto table = count_subset_sums(gs.group(), D, config.with_summary ? n - 1 : k_hi);

  CharSumProfile profile;
  if (config.with_bound) profile = char_sum_profile(gs.group(), D);

  if (config.with_summary) {
    ScanSummaryRow sum;
    sum.q = q;
    sum.curve_id = curve->id();
    sum.n_points = N;
    sum.n = n;
    for (long k = 1; k <= n - 1; ++k) {
      if (table.min_over_b(k) > 0) {
        if (sum.k_star_low == 0) sum.k_star_low = k;
        sum.k_star_high = k;
      }
    }
    out.summary.push_back(sum);
  }

  auto t1 = std::chrono::steady_clock::now();
  double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  for (long k = k_lo; k <= k_hi; ++k) {
    ScanRow row;
    row.q = q;
    row.curve_id = curve->id();
    row.n_points = N;
    row.n1 = gs.n1();
    row.n2 = gs.n2();
    row.n = n;
    row.k = k;
    row.min_n = table.min_over_b(k);
    if (config.with_bound) row.certified = certify_positive(gs.group(), profile, n, k);
    const BigInt& at_p = table.at(k, p0_idx);
    row.d = at_p > 0 ? n - k : n - k + 1;
    row.mds = at_p.is_zero();
    row.wall_ms = wall_ms;
    if (row.certified && row.min_n < 1)
      out.violations.push_back(curve->id() + " k=" + std::to_string(k));
    out.rows.push_back(std::move(row));
  }
  out.scanned = true;
  return out;
}

}  // namespace

ScanReport scan_region(const ScanConfig& config) {
  ScanReport report;
  const int jobs = config.jobs > 0 ? config.jobs : default_jobs();

  for (long q : config.qs) {
    auto pp = split_prime_power(q);
    FieldPtr field = Field::make(pp.p, pp.m);

    // Decide the tuple list up front so worker scheduling cannot affect it.
    std::vector<std::uint64_t> tuples;
    std::uint64_t total = 1;
    for (int i = 0; i < 5; ++i) total *= std::uint64_t(q);
    if (config.curves_per_q <= 0) {
      tuples.resize(total);
      for (std::uint64_t t = 0; t < total; ++t) tuples[t] = t;
    } else {
      std::mt19937_64 rng(mix(config.seed ^ std::uint64_t(q)));
      long accepted = 0;
      std::uint64_t attempts = 0, attempt_cap = 200000;
      while (accepted < config.curves_per_q && attempts < attempt_cap) {
        std::uint64_t t = rng() % total;
        ++attempts;
        try {
          auto curve = Curve::make(field, unpack_tuple(t, q));
          long N = long(curve->points().size());
          long need = config.n_policy == NPolicy::QPlus2 ? q + 4
                      : config.n_policy == NPolicy::Ratio ? long(config.ratio * N) + 2
                                                          : 3;
          if (N < need || N < config.min_group_order) continue;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::SingularCurve) continue;
          throw;
        }
        tuples.push_back(t);
        ++accepted;
      }
      if (accepted < config.curves_per_q)
        fail(ErrorKind::CapExceeded, "could not sample enough curves over q = " + std::to_string(q));
    }

    std::atomic<size_t> next{0};
    std::mutex merge_mutex;
    std::vector<std::thread> workers;
    std::exception_ptr first_error;

    auto work = [&]() {
      std::vector<ScanRow> rows;
      std::vector<ScanSummaryRow> summary;
      std::vector<std::string> violations;
      long scanned = 0, skipped = 0;
      try {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= tuples.size()) break;
          auto out = scan_one_curve(config, field, tuples[i]);
          out.scanned ? ++scanned : ++skipped;
          rows.insert(rows.end(), std::make_move_iterator(out.rows.begin()),
                      std::make_move_iterator(out.rows.end()));
          summary.insert(summary.end(), out.summary.begin(), out.summary.end());
          violations.insert(violations.end(), out.violations.begin(), out.violations.end());
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      report.rows.insert(report.rows.end(), std::make_move_iterator(rows.begin()),
                         std::make_move_iterator(rows.end()));
      report.summary.insert(report.summary.end(), summary.begin(), summary.end());
      report.certificate_violations.insert(report.certificate_violations.end(), violations.begin(),
                                           violations.end());
      report.curves_scanned += scanned;
      report.curves_skipped += skipped;
    };

    if (jobs <= 1 || tuples.size() < 2) {
      work();
    } else {
      for (int t = 0; t < jobs; ++t) workers.emplace_back(work);
      for (auto& w : workers) w.join();
    }
    if (first_error) std::rethrow_exception(first_error);
  }

  auto row_key = [](const ScanRow& r) { return std::tie(r.q, r.curve_id, r.n, r.k); };
  std::sort(report.rows.begin(), report.rows.end(),
            [&](const ScanRow& a, const ScanRow& b) { return row_key(a) < row_key(b); });
  std::sort(report.summary.begin(), report.summary.end(), [](const ScanSummaryRow& a, const ScanSummaryRow& b) {
    return std::tie(a.q, a.curve_id) < std::tie(b.q, b.curve_id);
  });
  std::sort(report.certificate_violations.begin(), report.certificate_violations.end());
  return report;
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
  out << "q,curve_id,N_points,n1,n2,n,k,minN,certified,d,is_mds,wall_ms\n";
  for (const auto& r : report.rows) {
    out << r.q << ',' << r.curve_id << ',' << r.n_points << ',' << r.n1 << ',' << r.n2 << ',' << r.n
        << ',' << r.k << ',' << r.min_n.str() << ',' << (r.certified ? 1 : 0) << ',' << r.d << ','
        << (r.mds ? 1 : 0) << ',' << r.wall_ms << '\n';
  }
}

void write_scan_summary_csv(std::ostream& out, const ScanReport& report) {
  out << "q,curve_id,N_points,n,k_star_low,k_star_high\n";
  for (const auto& r : report.summary) {
    out << r.q << ',' << r.curve_id << ',' << r.n_points << ',' << r.n << ',' << r.k_star_low << ','
        << r.k_star_high << '\n';
  }
}

}  // namespace ecag
