#include "ecag/chars.hpp"

#include "ecag/errors.hpp"
#include "ecag/numbers.hpp"

#include <cmath>
#include <numbers>

namespace ecag {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long kProfileOpsCap = 1'000'000'000;

// Compensated (Kahan) accumulator over complex doubles.
struct Kahan {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> comp{0.0, 0.0};

  void add(std::complex<double> x) {
    std::complex<double> y = x - comp;
    std::complex<double> t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

std::vector<std::complex<double>> unit_roots(long n) {
  std::vector<std::complex<double>> out(n);
  for (long j = 0; j < n; ++j) out[j] = std::polar(1.0, kTwoPi * double(j) / double(n));
  return out;
}

}  // namespace

long char_order(const AbelianGroup& G, CharIndex chi) {
  long u = ((chi.u % G.n1) + G.n1) % G.n1;
  long v = ((chi.v % G.n2) + G.n2) % G.n2;
  return lcm_long(G.n1 / gcd_long(u, G.n1), G.n2 / gcd_long(v, G.n2));
}

std::complex<double> char_eval(const AbelianGroup& G, CharIndex chi, long gidx) {
  if (gidx < 0 || gidx >= G.size()) fail(ErrorKind::UnknownPoint, "group index out of range");
  auto [a, b] = G.coords(gidx);
  long u = ((chi.u % G.n1) + G.n1) % G.n1;
  long v = ((chi.v % G.n2) + G.n2) % G.n2;
  double arg = kTwoPi * (double(u * a % G.n1) / double(G.n1) + double(v * b % G.n2) / double(G.n2));
  return std::polar(1.0, arg);
}

std::complex<double> char_eval(const GroupStructure& gs, CharIndex chi, const CurvePoint& P) {
  return char_eval(gs.group(), chi, gs.index_of(P));
}

std::complex<double> char_sum_naive(const AbelianGroup& G, CharIndex chi, const std::vector<long>& D) {
  Kahan acc;
  for (long g : D) acc.add(char_eval(G, chi, g));
  return acc.sum;
}

CharSumProfile char_sum_profile(const AbelianGroup& G, const std::vector<long>& D) {
  const long n1 = G.n1, n2 = G.n2, N = G.size();
  if (N * (n1 + n2) > kProfileOpsCap) fail(ErrorKind::CapExceeded, "group too large for a character profile");

  std::vector<char> ind(N, 0);
  for (long g : D) {
    if (g < 0 || g >= N) fail(ErrorKind::UnknownPoint, "group index out of range");
    if (ind[g]) fail(ErrorKind::DuplicateElement, "subset with a repeated element");
    ind[g] = 1;
  }

  auto roots1 = unit_roots(n1), roots2 = unit_roots(n2);

  // Stage 1: transform along the Z/n2 coordinate.
  std::vector<std::complex<double>> stage(size_t(n1) * n2);
  for (long a = 0; a < n1; ++a) {
    for (long v = 0; v < n2; ++v) {
      Kahan acc;
      for (long b = 0; b < n2; ++b)
        if (ind[a * n2 + b]) acc.add(roots2[v * b % n2]);
      stage[a * n2 + v] = acc.sum;
    }
  }

  CharSumProfile prof;
  prof.n1 = n1;
  prof.n2 = n2;
  prof.d_size = long(D.size());
  prof.sums.resize(size_t(n1) * n2);
  prof.tolerance = 1e-9 * double(D.size());

  // Stage 2: transform along Z/n1 and track the nontrivial max.
  for (long u = 0; u < n1; ++u) {
    for (long v = 0; v < n2; ++v) {
      Kahan acc;
      for (long a = 0; a < n1; ++a) {
        const auto& t = stage[a * n2 + v];
        if (t.real() != 0.0 || t.imag() != 0.0) acc.add(t * roots1[u * a % n1]);
      }
      prof.sums[u * n2 + v] = acc.sum;
      if (u == 0 && v == 0) continue;
      double mod = std::abs(acc.sum);
      if (mod > prof.phi) {
        prof.phi = mod;
        prof.argmax = CharIndex{u, v};
      }
    }
  }
  return prof;
}

CharSumProfile char_sum_profile(const GroupStructure& gs, const std::vector<CurvePoint>& D) {
  std::vector<long> idx;
  idx.reserve(D.size());
  for (const auto& pt : D) idx.push_back(gs.index_of(pt));
  return char_sum_profile(gs.group(), idx);
}

long count_chars_order_gt(const AbelianGroup& G, long k) {
  if (k < 1) fail(ErrorKind::ParameterOutOfRange, "k must be >= 1");
  long count = 0;
  for (long u = 0; u < G.n1; ++u)
    for (long v = 0; v < G.n2; ++v)
      if (char_order(G, CharIndex{u, v}) > k) ++count;
  return count;
}

long count_chars_order_eq(const AbelianGroup& G, long d) {
  if (d < 1) fail(ErrorKind::ParameterOutOfRange, "d must be >= 1");
  long count = 0;
  for (long u = 0; u < G.n1; ++u)
    for (long v = 0; v < G.n2; ++v)
      if (char_order(G, CharIndex{u, v}) == d) ++count;
  if (d > 1 && count > d * d - 1)
    fail(ErrorKind::InvariantViolation, "character count of order d exceeds d^2 - 1");
  return count;
}

}  // namespace ecag
