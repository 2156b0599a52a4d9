#include "ecag/curve.hpp"

#include "ecag/errors.hpp"

#include <string>

namespace ecag {

CurvePtr Curve::make(FieldPtr field, const std::array<Field::Elt, 5>& a) {
  if (!field) fail(ErrorKind::ParameterOutOfRange, "curve needs a field");
  for (Field::Elt c : a)
    if (long(c) >= field->q()) fail(ErrorKind::ParameterOutOfRange, "coefficient outside the field");
  auto c = std::shared_ptr<Curve>(new Curve());
  c->field_ = std::move(field);
  c->a_ = a;
  if (c->discriminant().is_zero()) fail(ErrorKind::SingularCurve, "discriminant vanishes");
  return c;
}

CurvePtr Curve::make(FieldPtr field, const std::array<FieldElement, 5>& a) {
  std::array<Field::Elt, 5> idx{};
  for (int i = 0; i < 5; ++i) {
    if (!a[i].field() || !a[i].field()->same(*field))
      fail(ErrorKind::ParameterOutOfRange, "coefficient from a different field");
    idx[i] = a[i].index();
  }
  return make(std::move(field), idx);
}

FieldElement Curve::discriminant() const {
  const Field& F = *field_;
  auto e = [&](Field::Elt v) { return FieldElement(field_, v); };
  auto n = [&](long long v) { return FieldElement(field_, F.from_int(v)); };
  FieldElement a1 = e(a_[0]), a2 = e(a_[1]), a3 = e(a_[2]), a4 = e(a_[3]), a6 = e(a_[4]);

  FieldElement b2 = a1 * a1 + n(4) * a2;
  FieldElement b4 = n(2) * a4 + a1 * a3;
  FieldElement b6 = a3 * a3 + n(4) * a6;
  FieldElement b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;

  return n(-1) * b2 * b2 * b8 - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
}

bool Curve::contains(const CurvePoint& pt) const {
  if (pt.infinity) return true;
  const Field& F = *field_;
  Field::Elt x = pt.x, y = pt.y;
  Field::Elt lhs = F.add(F.mul(y, y), F.add(F.mul(F.mul(a_[0], x), y), F.mul(a_[2], y)));
  Field::Elt x2 = F.mul(x, x);
  Field::Elt rhs = F.add(F.mul(x2, x), F.add(F.mul(a_[1], x2), F.add(F.mul(a_[3], x), a_[4])));
  return lhs == rhs;
}

CurvePoint Curve::neg(const CurvePoint& pt) const {
  if (pt.infinity) return pt;
  const Field& F = *field_;
  // (x, -y - a1 x - a3)
  Field::Elt y = F.neg(F.add(pt.y, F.add(F.mul(a_[0], pt.x), a_[2])));
  return CurvePoint::affine(pt.x, y);
}

CurvePoint Curve::add_raw(const CurvePoint& P, const CurvePoint& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (Q == neg(P)) return CurvePoint::at_infinity();

  const Field& F = *field_;
  Field::Elt a1 = a_[0], a2 = a_[1], a3 = a_[2], a4 = a_[3], a6 = a_[4];
  Field::Elt lam, nu;
  if (P == Q) {
    // tangent slope (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
    Field::Elt den = F.add(F.mul(F.from_int(2), P.y), F.add(F.mul(a1, P.x), a3));
    Field::Elt x2 = F.mul(P.x, P.x);
    Field::Elt num = F.sub(F.add(F.mul(F.from_int(3), x2), F.add(F.mul(F.mul(F.from_int(2), a2), P.x), a4)),
                           F.mul(a1, P.y));
    lam = F.div(num, den);
    Field::Elt nnum = F.sub(F.add(F.neg(F.mul(x2, P.x)), F.add(F.mul(a4, P.x), F.mul(F.from_int(2), a6))),
                            F.mul(a3, P.y));
    nu = F.div(nnum, den);
  } else {
    Field::Elt den = F.sub(Q.x, P.x);
    lam = F.div(F.sub(Q.y, P.y), den);
    nu = F.div(F.sub(F.mul(P.y, Q.x), F.mul(Q.y, P.x)), den);
  }
  Field::Elt x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), P.x), Q.x);
  Field::Elt y3 = F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), nu), a3);
  return CurvePoint::affine(x3, y3);
}

CurvePoint Curve::add(const CurvePoint& P, const CurvePoint& Q) const {
  if (!contains(P) || !contains(Q)) fail(ErrorKind::PointNotOnCurve, "operand off the curve");
  return add_raw(P, Q);
}

CurvePoint Curve::sub(const CurvePoint& P, const CurvePoint& Q) const { return add(P, neg(Q)); }

CurvePoint Curve::scalar_mul(long long n, const CurvePoint& P) const {
  if (!contains(P)) fail(ErrorKind::PointNotOnCurve, "operand off the curve");
  CurvePoint base = P;
  if (n < 0) {
    base = neg(base);
    n = -n;
  }
  CurvePoint acc = CurvePoint::at_infinity();
  while (n > 0) {
    if (n & 1) acc = add_raw(acc, base);
    base = add_raw(base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<CurvePoint> Curve::points() const {
  const Field& F = *field_;
  std::vector<CurvePoint> out;
  out.push_back(CurvePoint::at_infinity());
  for (long xi = 0; xi < F.q(); ++xi) {
    Field::Elt x = Field::Elt(xi);
    // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
    Field::Elt c = F.add(F.mul(a_[0], x), a_[2]);
    Field::Elt x2 = F.mul(x, x);
    Field::Elt d = F.add(F.mul(x2, x), F.add(F.mul(a_[1], x2), F.add(F.mul(a_[3], x), a_[4])));
    for (Field::Elt y : F.solve_quadratic(c, d)) out.push_back(CurvePoint::affine(x, y));
  }
  long N = long(out.size());
  long diff = N - F.q() - 1;
  if (diff * diff > 4 * F.q())
    fail(ErrorKind::HasseViolation,
         "point count " + std::to_string(N) + " outside the Hasse window for q = " + std::to_string(F.q()));
  return out;
}

std::string Curve::id() const {
  std::string s = "q" + std::to_string(field_->q()) + ":";
  for (int i = 0; i < 5; ++i) {
    if (i) s += '.';
    s += std::to_string(a_[i]);
  }
  return s;
}

}  // namespace ecag
