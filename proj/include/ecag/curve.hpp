#pragma once

#include "ecag/field.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace ecag {

/// Affine point or the point at infinity (the group zero).  Coordinates are
/// Field element indices; a point is only meaningful next to its curve.
struct CurvePoint {
  bool infinity = true;
  Field::Elt x = 0;
  Field::Elt y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Field::Elt x, Field::Elt y) { return {false, x, y}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity != b.infinity) return a.infinity;  // O sorts first
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/// Nonsingular Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// in the general form, so characteristics 2 and 3 are first-class.
class Curve : public std::enable_shared_from_this<Curve> {
 public:
  /// Coefficients ordered (a1, a2, a3, a4, a6).
  static CurvePtr make(FieldPtr field, const std::array<Field::Elt, 5>& a);
  static CurvePtr make(FieldPtr field, const std::array<FieldElement, 5>& a);

  const FieldPtr& field() const { return field_; }
  const std::array<Field::Elt, 5>& coeff_indices() const { return a_; }
  FieldElement a1() const { return {field_, a_[0]}; }
  FieldElement a2() const { return {field_, a_[1]}; }
  FieldElement a3() const { return {field_, a_[2]}; }
  FieldElement a4() const { return {field_, a_[3]}; }
  FieldElement a6() const { return {field_, a_[4]}; }

  FieldElement discriminant() const;
  bool contains(const CurvePoint& pt) const;

  CurvePoint neg(const CurvePoint& pt) const;
  /// Chord-tangent addition; validates both inputs lie on the curve.
  CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
  CurvePoint sub(const CurvePoint& P, const CurvePoint& Q) const;
  CurvePoint scalar_mul(long long n, const CurvePoint& P) const;

  /// All rational points, O first, then affine points in (x, y) index order.
  /// The count is checked against the Hasse window before returning.
  std::vector<CurvePoint> points() const;

  /// Compact id, e.g. "q5:0.0.0.1.1" (coefficient indices over F_q).
  std::string id() const;

  /// Unchecked group law for interior loops; callers guarantee membership.
  CurvePoint add_raw(const CurvePoint& P, const CurvePoint& Q) const;

 private:
  Curve() = default;

  FieldPtr field_;
  std::array<Field::Elt, 5> a_{};
};

}  // namespace ecag
