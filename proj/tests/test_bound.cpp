#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ecag/bound.hpp"
#include "ecag/curve.hpp"
#include "ecag/errors.hpp"
#include "ecag/ssp.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace ecag;

namespace {

std::vector<long> everything(const AbelianGroup& G) {
  std::vector<long> out(G.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

CharSumProfile exact_zero_profile(const AbelianGroup& G, long n) {
  // synthetic profile with phi and tolerance pinned to zero
  CharSumProfile prof;
  prof.n1 = G.n1;
  prof.n2 = G.n2;
  prof.d_size = n;
  prof.phi = 0.0;
  prof.tolerance = 0.0;
  return prof;
}

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// |N(k,b,D) - C(n,k)/|G|| <= rhs for every b
void check_soundness(const AbelianGroup& G, const std::vector<long>& D, long k) {
  auto prof = char_sum_profile(G, D);
  auto rep = eval_bound(G, prof, long(D.size()), k);
  auto table = count_subset_sums(G, D, k);
  for (long b = 0; b < G.size(); ++b) {
    Rational dev = abs_rational(Rational(table.at(k, b)) - rep.main_term);
    CHECK(dev <= rep.rhs_total);
  }
}

}  // namespace

TEST_CASE("zero phi kills the order-S term") {
  AbelianGroup G{12, 1};
  for (long k = 1; k <= 4; ++k) {
    auto prof = exact_zero_profile(G, 12);
    auto rep = eval_bound(G, prof, 12, k);
    CHECK(rep.term_S == 0);  // C(k-1, k) = 0
    CHECK(rep.phi_used == 0);
    CHECK(rep.main_term == Rational(binomial(BigInt(12), k), BigInt(12)));
  }
}

TEST_CASE("report structure on the 9-point curve") {
  auto f5 = Field::make(5, 1);
  auto gs = GroupStructure::from_curve(Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 1, 1}));
  const auto& G = gs.group();

  // D = G minus O and one more point: n = 7, k = 3
  std::vector<long> D;
  for (long g = 2; g < 9; ++g) D.push_back(g);

  auto prof = char_sum_profile(G, D);
  auto rep = eval_bound(G, prof, 7, 3);
  CHECK(rep.main_term == Rational(35, 9));
  CHECK(rep.s_count == 6);   // six characters of order 9
  CHECK(rep.phi_2 == 0);     // odd-order group: no order-2 characters
  CHECK(rep.term_d2 == 0);
  // d-loop: divisors of 9 in (2,3] = {3}, two characters of order 3
  REQUIRE(rep.terms_d.size() == 1);
  CHECK(rep.terms_d[0].d == 3);
  CHECK(rep.terms_d[0].phi_d == 2);
  CHECK(rep.rhs_total == rep.term_S + rep.term_d2 + rep.terms_d[0].value);

  // summing the terms in the opposite order gives the identical exact total
  Rational reversed = rep.terms_d[0].value + rep.term_d2 + rep.term_S;
  CHECK(reversed == rep.rhs_total);

  check_soundness(G, D, 3);
}

TEST_CASE("order-2 characters are covered with multiplicity") {
  // Z/2 x Z/2, |D| = 2, k = 2: all three nontrivial characters have order 2
  // and each class sum has magnitude 2.  A single binomial C((n+phi)/2, k)
  // cannot cover them; the multiplicity-aware cap must.
  AbelianGroup G{2, 2};
  std::vector<long> D = {2, 3};
  auto prof = char_sum_profile(G, D);
  auto rep = eval_bound(G, prof, 2, 2);
  CHECK(rep.phi_2 == 3);
  CHECK(rep.s_count == 0);

  auto table = count_subset_sums(G, D, 2);
  Rational max_dev = 0;
  for (long b = 0; b < 4; ++b)
    max_dev = std::max(max_dev, abs_rational(Rational(table.at(2, b)) - rep.main_term));
  CHECK(max_dev == Rational(3, 4));
  CHECK(max_dev <= rep.rhs_total);
  // the single-binomial form evaluates to about 1/4 here: genuinely short
  Rational single = binomial((2 + rep.phi_used) / 2, 2) / 4;
  CHECK(single < max_dev);

  // cyclic even order, D = G, k = 2: the order-2 class sum is n, reached at
  // s = 0, which C((n+phi)/2, 2) also understates
  AbelianGroup Z4{4, 1};
  std::vector<long> full = {0, 1, 2, 3};
  auto prof4 = char_sum_profile(Z4, full);
  auto rep4 = eval_bound(Z4, prof4, 4, 2);
  auto table4 = count_subset_sums(Z4, full, 2);
  for (long b = 0; b < 4; ++b)
    CHECK(abs_rational(Rational(table4.at(2, b)) - rep4.main_term) <= rep4.rhs_total);
}

TEST_CASE("order-S count tracks k") {
  AbelianGroup G{9, 1};
  auto prof = char_sum_profile(G, everything(G));
  CHECK(eval_bound(G, prof, 9, 2).s_count == 8);
  CHECK(eval_bound(G, prof, 9, 3).s_count == 6);  // the order-3 characters drop out
  CHECK(eval_bound(G, prof, 9, 9).s_count == 0);
}

TEST_CASE("soundness on random desk instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    long n1 = 4 + long(rng() % 60);
    std::vector<long> divs;
    for (long d = 1; d <= n1; ++d)
      if (n1 % d == 0 && d * n1 <= 100) divs.push_back(d);
    AbelianGroup G{n1, divs[rng() % divs.size()]};

    auto all = everything(G);
    std::shuffle(all.begin(), all.end(), rng);
    long n = 1 + long(rng() % G.size());
    std::vector<long> D(all.begin(), all.begin() + n);
    long k = 1 + long(rng() % std::min<long>(n, 8));
    check_soundness(G, D, k);
  }
}

TEST_CASE("monotone in the character-sum budget") {
  AbelianGroup G{30, 1};
  auto D = everything(G);
  D.resize(24);
  auto prof = char_sum_profile(G, D);
  for (long k = 2; k <= 8; ++k) {
    auto base = eval_bound(G, prof, 24, k);
    auto raised = prof;
    raised.phi = prof.phi + 1.5;
    auto rep = eval_bound(G, raised, 24, k);
    if (base.certified_positive) {
      CHECK(rep.rhs_total >= base.rhs_total);
    }
  }
}

TEST_CASE("k = 1 cannot be certified on a proper subset") {
  // some N(1, b, D) = 0 whenever |D| < |G|, so a sound certificate must fail
  AbelianGroup G{15, 1};
  for (long n : {3L, 7L, 14L}) {
    std::vector<long> D;
    for (long g = 0; g < n; ++g) D.push_back(g);
    auto prof = char_sum_profile(G, D);
    CHECK(!certify_positive(G, prof, n, 1));
  }
}

TEST_CASE("certified instances have positive counts everywhere") {
  // the full group at 81 scale certifies for mid-range k
  AbelianGroup G{81, 1};
  auto D = everything(G);
  auto prof = char_sum_profile(G, D);

  bool any_certified = false;
  auto table = count_subset_sums(G, D, 40);
  for (long k = 4; k <= 40; k += 4) {
    if (certify_positive(G, prof, 81, k)) {
      any_certified = true;
      CHECK(table.min_over_b(k) >= 1);
    }
  }
  CHECK(any_certified);
}

TEST_CASE("single-binomial form dominates") {
  auto f5 = Field::make(5, 1);
  auto gs = GroupStructure::from_curve(Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 1, 1}));
  const auto& G = gs.group();

  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    auto all = everything(G);
    std::shuffle(all.begin(), all.end(), rng);
    long n = 3 + long(rng() % 6);
    std::vector<long> D(all.begin(), all.begin() + n);
    long k = 1 + long(rng() % std::min<long>(n, 4));

    auto prof = char_sum_profile(G, D);
    auto rep = eval_bound(G, prof, n, k);
    auto mb = eval_M_bound(G, prof, n, k);
    CHECK(mb.c_m_k >= rep.rhs_total);
    if (k >= 3) {
      CHECK(mb.third_arg_present);
      CHECK(mb.d == 3);  // smallest divisor of 9 above 2
    }

    auto table = count_subset_sums(G, D, k);
    for (long b = 0; b < G.size(); ++b) {
      Rational dev = abs_rational(Rational(table.at(k, b)) - rep.main_term);
      CHECK(dev <= mb.c_m_k);
    }
  }
}

TEST_CASE("parameter validation") {
  AbelianGroup G{10, 1};
  auto D = everything(G);
  auto prof = char_sum_profile(G, D);
  CHECK_THROWS_AS(eval_bound(G, prof, 10, 0), Error);
  CHECK_THROWS_AS(eval_bound(G, prof, 10, 11), Error);
  CHECK_THROWS_AS(eval_bound(G, prof, 9, 2), Error);  // profile says |D| = 10
  AbelianGroup H{5, 1};
  CHECK_THROWS_AS(eval_bound(H, prof, 10, 2), Error);
}
