#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ecag/curve.hpp"
#include "ecag/errors.hpp"
#include "ecag/group.hpp"
#include "ecag/numbers.hpp"

#include <map>
#include <set>

using namespace ecag;

namespace {

// y^2 = x^3 + x + 1 over F_5; the workhorse 9-point example.
CurvePtr f5_curve() {
  auto f5 = Field::make(5, 1);
  return Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 1, 1});
}

}  // namespace

TEST_CASE("construction and discriminants") {
  CHECK(f5_curve()->id() == "q5:0.0.0.1.1");

  auto f5 = Field::make(5, 1);
  try {
    Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 0, 0});  // y^2 = x^3, cusp
    FAIL("singular curve accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularCurve);
  }

  // char 2: y^2 + y = x^3 is nonsingular in the general form
  auto f2 = Field::make(2, 1);
  auto c2 = Curve::make(f2, std::array<Field::Elt, 5>{0, 0, 1, 0, 0});
  CHECK(!c2->discriminant().is_zero());
  CHECK(c2->points().size() == 3);
}

TEST_CASE("point enumeration") {
  auto c = f5_curve();
  auto pts = c->points();
  CHECK(pts.size() == 9);  // 8 affine + O
  CHECK(pts[0].infinity);
  for (const auto& pt : pts) CHECK(c->contains(pt));

  // squares mod 5 are {0,1,4}: recount affine points x by x
  auto f = c->field();
  long affine = 0;
  for (long x = 0; x < 5; ++x) {
    long rhs = (x * x * x + x + 1) % 5;
    for (long y = 0; y < 5; ++y)
      if ((y * y) % 5 == rhs) ++affine;
  }
  CHECK(affine + 1 == long(pts.size()));
  CHECK(f->q() == 5);
}

TEST_CASE("group law basics") {
  auto c = f5_curve();
  auto pts = c->points();
  auto O = CurvePoint::at_infinity();

  for (const auto& P : pts) {
    CHECK(c->add(P, O) == P);
    CHECK(c->add(P, c->neg(P)) == O);
  }
  // commutativity and associativity, exhaustive on 9 points
  for (const auto& P : pts)
    for (const auto& Q : pts) {
      CHECK(c->add(P, Q) == c->add(Q, P));
      for (const auto& R : pts) CHECK(c->add(c->add(P, Q), R) == c->add(P, c->add(Q, R)));
    }

  // scalar_mul against repeated addition
  const CurvePoint P = CurvePoint::affine(0, 1);
  CHECK(c->contains(P));
  CurvePoint acc = O;
  for (long n = 0; n <= 12; ++n) {
    CHECK(c->scalar_mul(n, P) == acc);
    acc = c->add(acc, P);
  }
  CHECK(c->scalar_mul(-3, P) == c->neg(c->scalar_mul(3, P)));

  // order of (0,1) divides |G| = 9
  long order = 1;
  CurvePoint Q = P;
  while (!Q.infinity) {
    Q = c->add(Q, P);
    ++order;
  }
  CHECK(9 % order == 0);

  CHECK_THROWS_AS(c->add(CurvePoint::affine(1, 1), P), Error);  // (1,1) off the curve
}

TEST_CASE("cyclic structure of the 9-point group") {
  auto gs = GroupStructure::from_curve(f5_curve());
  CHECK(gs.order() == 9);
  CHECK(gs.n1() == 9);
  CHECK(gs.n2() == 1);
  CHECK(gs.structure_case() == "i");
  CHECK(gs.g2().infinity);

  // coords form a bijection
  std::set<long> seen;
  for (const auto& pt : gs.points()) {
    long g = gs.index_of(pt);
    CHECK(gs.point_at(g) == pt);
    seen.insert(g);
  }
  CHECK(long(seen.size()) == gs.order());

  // g1 has exact order n1
  auto c = gs.curve();
  CHECK(c->scalar_mul(gs.n1(), gs.g1()).infinity);
  for (long d = 1; d < gs.n1(); ++d)
    if (gs.n1() % d == 0) CHECK(!c->scalar_mul(d, gs.g1()).infinity);

  // the coordinate map is a homomorphism
  const auto& G = gs.group();
  for (const auto& P : gs.points())
    for (const auto& Q : gs.points())
      CHECK(gs.index_of(c->add(P, Q)) == G.add(gs.index_of(P), gs.index_of(Q)));

  CHECK_THROWS_AS(gs.index_of(CurvePoint::affine(1, 1)), Error);
}

TEST_CASE("full 2-torsion gives invariant factors (4, 2)") {
  // y^2 = x^3 - x over F_5: roots x = 0, 1, 4 are 2-torsion
  auto f5 = Field::make(5, 1);
  auto c = Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 4, 0});
  auto gs = GroupStructure::from_curve(c);
  CHECK(gs.order() == 8);
  CHECK(gs.n1() == 4);
  CHECK(gs.n2() == 2);

  const auto& G = gs.group();
  for (const auto& P : gs.points())
    for (const auto& Q : gs.points())
      CHECK(gs.index_of(c->add(P, Q)) == G.add(gs.index_of(P), gs.index_of(Q)));
}

TEST_CASE("trivial and prime orders") {
  // y^2 + y = x^3 + x + 1 over F_2 has only O
  auto f2 = Field::make(2, 1);
  auto c1 = Curve::make(f2, std::array<Field::Elt, 5>{0, 0, 1, 1, 1});
  auto gs1 = GroupStructure::from_curve(c1);
  CHECK(gs1.order() == 1);
  CHECK(gs1.n1() == 1);
  CHECK(gs1.n2() == 1);

  // prime order is forced cyclic
  auto gs3 = GroupStructure::from_curve(Curve::make(f2, std::array<Field::Elt, 5>{0, 0, 1, 0, 0}));
  CHECK(gs3.order() == 3);
  CHECK(gs3.n2() == 1);
}

TEST_CASE("small sweep: Hasse window and pairing constraint") {
  // every nonsingular curve over F_q, q <= 8: |N - q - 1| <= 2 sqrt(q) and
  // n2 | gcd(n1, q-1)
  for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1),
                 Field::make(7, 1), Field::make(2, 3)}) {
    const long q = f->q();
    long tuples = q * q * q * q * q;
    for (long t = 0; t < tuples; ++t) {
      long rest = t;
      std::array<Field::Elt, 5> a{};
      for (int i = 0; i < 5; ++i) {
        a[i] = Field::Elt(rest % q);
        rest /= q;
      }
      CurvePtr c;
      try {
        c = Curve::make(f, a);
      } catch (const Error&) {
        continue;
      }
      long N = long(c->points().size());  // throws HasseViolation if broken
      auto gs = GroupStructure::from_curve(c);
      CHECK(gs.order() == N);
      CHECK(gs.n1() % gs.n2() == 0);
      CHECK(gcd_long(gs.n1(), q - 1) % gs.n2() == 0);
    }
  }
}

TEST_CASE("structure case labels") {
  // q = 4, trace -4: the 9-point maximal curve is (Z/3)^2
  auto f4 = Field::make(2, 2);
  bool found_ii = false;
  for (long t = 0; t < 4 * 4 * 4 * 4 * 4; ++t) {
    long rest = t;
    std::array<Field::Elt, 5> a{};
    for (int i = 0; i < 5; ++i) {
      a[i] = Field::Elt(rest % 4);
      rest /= 4;
    }
    CurvePtr c;
    try {
      c = Curve::make(f4, a);
    } catch (const Error&) {
      continue;
    }
    auto gs = GroupStructure::from_curve(c);
    if (gs.order() == 9) {
      CHECK(gs.n1() == 3);
      CHECK(gs.n2() == 3);
      CHECK(gs.structure_case() == "ii");
      found_ii = true;
    }
  }
  CHECK(found_ii);

  // supersingular y^2 = x^3 + 1 over F_5: trace 0
  auto f5 = Field::make(5, 1);
  auto gs = GroupStructure::from_curve(Curve::make(f5, std::array<Field::Elt, 5>{0, 0, 0, 0, 1}));
  CHECK(gs.order() == 6);
  CHECK(gs.structure_case() == "v/vi");
}
