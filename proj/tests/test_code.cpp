#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ecag/code.hpp"
#include "ecag/errors.hpp"
#include "ecag/scan.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace ecag;

namespace {

CurvePtr f5_curve() {
  auto f5 = Field::make(5, 1);
  return Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 1, 1});
}

// first affine point in enumeration order
CurvePoint first_affine(const GroupStructure& gs) { return gs.points()[1]; }

}  // namespace

TEST_CASE("basis shapes at the zero divisor point") {
  auto c = f5_curve();
  auto O = CurvePoint::at_infinity();

  auto b1 = rr_basis(c, 1, O);
  REQUIRE(b1.funcs.size() == 1);
  CHECK(b1.funcs[0].a == std::vector<Field::Elt>{1});  // the constant 1
  CHECK(b1.funcs[0].b.empty());

  auto b3 = rr_basis(c, 3, O);
  REQUIRE(b3.funcs.size() == 3);
  CHECK(b3.funcs[0].a == std::vector<Field::Elt>{1});     // 1
  CHECK(b3.funcs[1].a == std::vector<Field::Elt>{0, 1});  // x
  CHECK(b3.funcs[1].b.empty());
  CHECK(b3.funcs[2].a.empty());
  CHECK(b3.funcs[2].b == std::vector<Field::Elt>{1});     // y

  CHECK_THROWS_AS(rr_basis(c, 0, O), Error);
}

TEST_CASE("basis at an affine divisor point") {
  auto c = f5_curve();
  auto gs = GroupStructure::from_curve(c);
  auto P = first_affine(gs);

  auto basis = rr_basis(c, 2, P);
  REQUIRE(basis.funcs.size() == 2);

  // every function must be finite at every point off {O, P} — including the
  // cancellation point sharing x with P
  for (const auto& f : basis.funcs) {
    for (const auto& pt : gs.points()) {
      if (pt.infinity || pt == P) continue;
      CHECK_NOTHROW(rr_eval(*c, f, pt));
    }
    CHECK(f.den.size() == 2);  // x - x_P
  }

  // at P itself each basis function has a pole (num nonzero, den zero) or a
  // removable value; the space allows a simple pole there
  bool some_pole_at_P = false;
  for (const auto& f : basis.funcs) {
    try {
      rr_eval(*c, f, P);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::FunctionPole) some_pole_at_P = true;
    }
  }
  CHECK(some_pole_at_P);
}

TEST_CASE("all-ones row from the constant function") {
  auto c = f5_curve();
  auto gs = GroupStructure::from_curve(c);
  auto D = all_points_except(gs, CurvePoint::at_infinity());
  auto code = build_code(c, D, 3, CurvePoint::at_infinity());

  CHECK(code.n() == 8);
  for (Field::Elt v : code.gen_matrix[0]) CHECK(v == c->field()->one());

  auto word = encode(code, {1, 0, 0});
  long weight = 0;
  for (Field::Elt v : word)
    if (v != 0) ++weight;
  CHECK(weight == code.n());
}

TEST_CASE("the [7,3] code over F_5") {
  auto c = f5_curve();
  auto gs = GroupStructure::from_curve(c);
  auto P = first_affine(gs);
  auto D = all_points_except(gs, P);
  REQUIRE(D.n() == 7);

  auto code = build_code(c, D, 3, P);
  long d_ssp = min_distance_ssp(gs, code);
  long d_brute = min_distance_bruteforce(code);
  CHECK(d_ssp == d_brute);
  CHECK((d_ssp == 4 || d_ssp == 5));

  // nonzero codewords respect the design distance
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Field::Elt> msg(3);
    bool nonzero = false;
    for (auto& m : msg) {
      m = Field::Elt(rng() % 5);
      nonzero = nonzero || m != 0;
    }
    if (!nonzero) continue;
    long weight = 0;
    for (Field::Elt v : encode(code, msg))
      if (v != 0) ++weight;
    CHECK(weight >= code.n() - code.k);
  }
}

TEST_CASE("repetition-style code at k = 1") {
  auto c = f5_curve();
  auto gs = GroupStructure::from_curve(c);
  auto D = all_points_except(gs, CurvePoint::at_infinity());
  auto code = build_code(c, D, 1, CurvePoint::at_infinity());
  CHECK(min_distance_bruteforce(code) == code.n());
  CHECK(min_distance_ssp(gs, code) == code.n());  // N(1, O, D) = 0 since O is excluded
}

TEST_CASE("two-torsion divisor point") {
  // y^2 = x^3 - x over F_5: (0,0) is 2-torsion
  auto f5 = Field::make(5, 1);
  auto c = Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 4, 0});
  auto gs = GroupStructure::from_curve(c);
  CurvePoint P = CurvePoint::affine(0, 0);
  REQUIRE(c->contains(P));
  REQUIRE(c->neg(P) == P);

  for (long k = 2; k <= 4; ++k) {
    auto D = all_points_except(gs, P);
    auto code = build_code(c, D, k, P);
    CHECK(min_distance_ssp(gs, code) == min_distance_bruteforce(code));
  }
}

TEST_CASE("characteristic-2 codes") {
  // y^2 + y = x^3 over F_4: nine points, full 3-torsion
  auto f4 = Field::make(2, 2);
  auto c = Curve::make(f4, std::array<Field::Elt, 5>{0, 0, 1, 0, 0});
  auto gs = GroupStructure::from_curve(c);
  CHECK(gs.order() == 9);
  CHECK(gs.n1() == 3);
  CHECK(gs.n2() == 3);

  auto P = first_affine(gs);
  for (long k = 2; k <= 4; ++k) {
    auto code = build_code(c, all_points_except(gs, P), k, P);
    CHECK(min_distance_ssp(gs, code) == min_distance_bruteforce(code));
  }
  // divisor point at infinity too
  for (long k = 2; k <= 4; ++k) {
    auto code = build_code(c, all_points_except(gs, CurvePoint::at_infinity()), k,
                           CurvePoint::at_infinity());
    CHECK(min_distance_ssp(gs, code) == min_distance_bruteforce(code));
  }
}

TEST_CASE("distance criterion across small instances") {
  std::mt19937_64 rng(417);
  struct Inst {
    long p, m;
    std::array<Field::Elt, 5> a;
  };
  for (auto [p, m] : {std::pair<long, int>{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = Field::make(p, m);
    const long q = f->q();
    // two random nonsingular curves per field
    for (int pick = 0; pick < 2; ++pick) {
      CurvePtr c;
      while (!c) {
        std::array<Field::Elt, 5> a{};
        for (auto& v : a) v = Field::Elt(rng() % q);
        try {
          c = Curve::make(f, a);
        } catch (const Error&) {
        }
      }
      auto gs = GroupStructure::from_curve(c);
      if (gs.order() < 5) continue;
      auto P = first_affine(gs);
      auto D = all_points_except(gs, P);
      for (long k = 1; k < std::min<long>(D.n(), 5); ++k) {
        double qk = std::pow(double(q), double(k));
        if (qk > 1e6) break;
        auto code = build_code(c, D, k, P);
        CHECK(min_distance_ssp(gs, code) == min_distance_bruteforce(code));
      }
    }
  }
}

TEST_CASE("mds detection at the top dimension") {
  // q = 5, n = 7, k = 6: the single count N(6, P, D) decides
  auto c = f5_curve();
  auto gs = GroupStructure::from_curve(c);
  auto P = first_affine(gs);
  auto D = all_points_except(gs, P);
  auto code = build_code(c, D, 6, P);

  auto table = count_subset_sums(gs, D.points, 6);
  bool expect_mds = table.at(6, gs.index_of(P)).is_zero();
  CHECK(is_mds(gs, code) == expect_mds);
  CHECK(min_distance_bruteforce(code) == (expect_mds ? 2 : 1));
}

TEST_CASE("construction guards") {
  auto c = f5_curve();
  auto gs = GroupStructure::from_curve(c);
  auto P = first_affine(gs);

  auto D = all_points_except(gs, P);
  CHECK_THROWS_AS(build_code(c, D, 7, P), Error);  // k >= n

  EvaluationSet with_p = D;
  with_p.points.push_back(P);
  try {
    build_code(c, with_p, 3, P);
    FAIL("divisor point accepted in D");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisorPointInD);
  }

  EvaluationSet dup = D;
  dup.points.push_back(D.points[0]);
  CHECK_THROWS_AS(build_code(c, dup, 3, P), Error);

  // enumeration cap: 7^8 messages is far past 10^6
  auto f7 = Field::make(7, 1);
  CurvePtr c7 = Curve::make(f7, std::array<Field::Elt, 5>{0, 0, 0, 1, 3});
  auto gs7 = GroupStructure::from_curve(c7);
  if (gs7.order() >= 10) {
    auto D7 = all_points_except(gs7, first_affine(gs7));
    auto code7 = build_code(c7, D7, 8, first_affine(gs7));
    try {
      min_distance_bruteforce(code7);
      FAIL("cap not enforced");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }
}

TEST_CASE("scan smoke: dichotomy and determinism") {
  ScanConfig cfg;
  cfg.qs = {5, 7};
  cfg.n_policy = NPolicy::MaxD;
  cfg.full_k_window = true;
  cfg.seed = 9;
  cfg.jobs = 2;

  auto rep = scan_region(cfg);
  CHECK(rep.certificate_violations.empty());
  CHECK(rep.curves_scanned > 0);
  CHECK(!rep.rows.empty());
  for (const auto& row : rep.rows) {
    CHECK((row.d == row.n - row.k || row.d == row.n - row.k + 1));
    CHECK(row.mds == (row.d == row.n - row.k + 1));
    CHECK(row.n_points == row.n1 * row.n2);
  }

  auto rep2 = scan_region(cfg);
  REQUIRE(rep.rows.size() == rep2.rows.size());
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto &a = rep.rows[i], &b = rep2.rows[i];
    CHECK(a.curve_id == b.curve_id);
    CHECK(a.k == b.k);
    CHECK(a.min_n == b.min_n);
    CHECK(a.certified == b.certified);
    CHECK(a.d == b.d);
  }
}

TEST_CASE("positivity window grows no faster than log q") {
  ScanConfig cfg;
  cfg.qs = {8, 16, 32, 64};
  cfg.n_policy = NPolicy::Ratio;
  cfg.ratio = 0.75;
  cfg.curves_per_q = 3;
  cfg.full_k_window = true;
  cfg.with_bound = false;
  cfg.seed = 23;
  cfg.jobs = 2;

  auto rep = scan_region(cfg);
  REQUIRE(!rep.summary.empty());
  double cov = 0, var = 0, mean_x = 0, mean_y = 0;
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : rep.summary) {
    REQUIRE(s.k_star_low > 0);
    CHECK(double(s.k_star_low) <= 4.0 * std::log(double(s.q)) + 2.0);
    // the window is symmetric-ish: vanishing returns near n
    CHECK(s.k_star_high >= s.n - s.k_star_low - 1);
    pts.push_back({std::log(double(s.q)), double(s.k_star_low)});
  }
  for (auto [x, y] : pts) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= double(pts.size());
  mean_y /= double(pts.size());
  for (auto [x, y] : pts) {
    cov += (x - mean_x) * (y - mean_y);
    var += (x - mean_x) * (x - mean_x);
  }
  CHECK(cov / var >= 0.0);  // nondecreasing trend in log q
}
