#pragma once

#include "ecag/group.hpp"
#include "ecag/ssp.hpp"

#include <vector>

namespace ecag {

/// Rational function on a curve in the reduced shape
/// (a(x) + b(x) y) / den(x); numerators carry y-degree <= 1 because y^2 is
/// always eliminated through the curve equation.
struct RrFunction {
  std::vector<Field::Elt> a;    // little-endian polynomial in x
  std::vector<Field::Elt> b;    // coefficient of y
  std::vector<Field::Elt> den;  // polynomial in x only
};

/// Evaluate at an affine point, cancelling a removable zero of the linear
/// denominator when the numerator vanishes with it; throws FunctionPole at a
/// genuine pole.
Field::Elt rr_eval(const Curve& curve, const RrFunction& f, const CurvePoint& pt);

/// Basis of the k-dimensional space of functions with pole divisor bounded
/// by (k-1)O + P.
struct RrBasis {
  CurvePtr curve;
  long k = 0;
  CurvePoint P;
  std::vector<RrFunction> funcs;
};

RrBasis rr_basis(CurvePtr curve, long k, const CurvePoint& P);

/// Ordered evaluation points; distinct, and avoiding both O and the divisor
/// point P of the code they are used with.
struct EvaluationSet {
  std::vector<CurvePoint> points;

  long n() const { return long(points.size()); }
};

/// Evaluation code of dimension k: row i of gen_matrix lists basis function i
/// at each evaluation point.
struct EcagCode {
  CurvePtr curve;
  EvaluationSet eval_set;
  long k = 0;
  CurvePoint P;
  std::vector<std::vector<Field::Elt>> gen_matrix;

  long n() const { return eval_set.n(); }
};

EcagCode build_code(CurvePtr curve, EvaluationSet D, long k, const CurvePoint& P);

std::vector<Field::Elt> encode(const EcagCode& code, const std::vector<Field::Elt>& message);

/// Exact minimum distance over all q^k - 1 nonzero messages; capped at
/// q^k <= 10^6.
long min_distance_bruteforce(const EcagCode& code);

/// Minimum distance through the subset-sum criterion: n-k when some k-subset
/// of the evaluation set sums to P, n-k+1 otherwise.
long min_distance_ssp(const GroupStructure& gs, const EcagCode& code);

bool is_mds(const GroupStructure& gs, const EcagCode& code);

/// Evaluation set "every rational point except O, P and the given extras".
EvaluationSet all_points_except(const GroupStructure& gs, const CurvePoint& P,
                                const std::vector<CurvePoint>& extra = {});

}  // namespace ecag
