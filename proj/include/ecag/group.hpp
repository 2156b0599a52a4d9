#pragma once

#include "ecag/curve.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ecag {

/// Z/n1 x Z/n2 with n2 | n1, elements addressed by gidx = a*n2 + b.
/// All of the counting machinery works on these indices; curve points enter
/// only through GroupStructure's coordinate tables.
struct AbelianGroup {
  long n1 = 1;
  long n2 = 1;

  long size() const { return n1 * n2; }
  long exponent() const { return n1; }

  std::pair<long, long> coords(long g) const { return {g / n2, g % n2}; }
  long index(long a, long b) const { return a * n2 + b; }

  long add(long g, long h) const {
    long a = (g / n2 + h / n2) % n1;
    long b = (g % n2 + h % n2) % n2;
    return a * n2 + b;
  }
  long neg(long g) const {
    long a = (n1 - g / n2) % n1;
    long b = (n2 - g % n2) % n2;
    return a * n2 + b;
  }
  long sub(long g, long h) const { return add(g, neg(h)); }
  long scalar_mul(long long s, long g) const;
  long order_of(long g) const;

  friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
    return x.n1 == y.n1 && x.n2 == y.n2;
  }
};

/// E(F_q) as an explicit Z/n1 x Z/n2: generators, full discrete-log table,
/// and the structure-classification label from the rational point group
/// taxonomy ("i".."iv", "v/vi", or "unclassified" for the lenient trace-zero
/// cases).
class GroupStructure {
 public:
  static GroupStructure from_curve(CurvePtr curve);

  const AbelianGroup& group() const { return group_; }
  long order() const { return group_.size(); }
  long n1() const { return group_.n1; }
  long n2() const { return group_.n2; }
  const CurvePtr& curve() const { return curve_; }

  const CurvePoint& g1() const { return g1_; }
  const CurvePoint& g2() const { return g2_; }

  /// Points in enumeration order (O first).
  const std::vector<CurvePoint>& points() const { return points_; }

  long index_of(const CurvePoint& pt) const;  // UnknownPoint if foreign
  const CurvePoint& point_at(long gidx) const;
  std::pair<long, long> coords_of(const CurvePoint& pt) const;

  const std::string& structure_case() const { return case_label_; }
  bool case_warning() const { return case_warning_; }

 private:
  GroupStructure() = default;

  void classify();

  CurvePtr curve_;
  AbelianGroup group_;
  CurvePoint g1_, g2_;
  std::vector<CurvePoint> points_;               // enumeration order
  std::vector<CurvePoint> point_by_gidx_;        // gidx -> point
  std::unordered_map<std::uint64_t, long> gidx_; // packed point -> gidx
  std::string case_label_;
  bool case_warning_ = false;
};

}  // namespace ecag
