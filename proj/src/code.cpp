#include "ecag/code.hpp"

#include "ecag/errors.hpp"
#include "ecag/numbers.hpp"

#include <algorithm>
#include <set>

namespace ecag {

namespace {

using Poly = std::vector<Field::Elt>;  // little-endian over F_q

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Field::Elt poly_eval(const Field& F, const Poly& p, Field::Elt x) {
  Field::Elt acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
  return acc;
}

Poly poly_add(const Field& F, const Poly& p, const Poly& q) {
  Poly out(std::max(p.size(), q.size()), 0);
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[i];
  for (size_t i = 0; i < q.size(); ++i) out[i] = F.add(out[i], q[i]);
  trim(out);
  return out;
}

Poly poly_mul(const Field& F, const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly out(p.size() + q.size() - 1, 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (size_t j = 0; j < q.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(p[i], q[j]));
  }
  trim(out);
  return out;
}

Poly poly_neg(const Field& F, Poly p) {
  for (auto& c : p) c = F.neg(c);
  return p;
}

// Synthetic division by (x - r): quotient, with the remainder reported.
Poly poly_div_linear(const Field& F, const Poly& p, Field::Elt r, Field::Elt& rem) {
  if (p.empty()) {
    rem = 0;
    return {};
  }
  Poly quot(p.size() - 1, 0);
  Field::Elt carry = 0;
  for (size_t i = p.size(); i-- > 0;) {
    Field::Elt cur = F.add(p[i], F.mul(carry, r));
    if (i == 0) {
      rem = cur;
    } else {
      quot[i - 1] = cur;
      carry = cur;
    }
  }
  trim(quot);
  return quot;
}

Poly x_power(long e) {
  Poly p(e + 1, 0);
  p[e] = 1;
  return p;
}

// x^3 + a2 x^2 + a4 x + a6 and a1 x + a3 for the curve.
Poly curve_cubic(const Curve& c) {
  const auto& a = c.coeff_indices();
  Poly f = {a[4], a[3], a[1], c.field()->one()};
  trim(f);
  return f;
}
Poly curve_linear_y(const Curve& c) {
  const auto& a = c.coeff_indices();
  Poly f = {a[2], a[0]};
  trim(f);
  return f;
}

// Norm of a + b y down to F_q[x]: a^2 - a b (a1 x + a3) - b^2 (x^3 + ...).
Poly function_norm(const Curve& c, const Poly& a, const Poly& b) {
  const Field& F = *c.field();
  Poly out = poly_mul(F, a, a);
  out = poly_add(F, out, poly_neg(F, poly_mul(F, poly_mul(F, a, b), curve_linear_y(c))));
  out = poly_add(F, out, poly_neg(F, poly_mul(F, poly_mul(F, b, b), curve_cubic(c))));
  return out;
}

}  // namespace

Field::Elt rr_eval(const Curve& curve, const RrFunction& f, const CurvePoint& pt) {
  if (pt.infinity) fail(ErrorKind::FunctionPole, "evaluation at infinity is not supported");
  const Field& F = *curve.field();

  Field::Elt dv = poly_eval(F, f.den, pt.x);
  Field::Elt num = F.add(poly_eval(F, f.a, pt.x), F.mul(poly_eval(F, f.b, pt.x), pt.y));
  if (dv != 0) return F.div(num, dv);
  if (num != 0) fail(ErrorKind::FunctionPole, "denominator vanishes, numerator does not");

  // 0/0 at a simple zero x0 of a linear denominator.
  if (f.den.size() != 2) fail(ErrorKind::FunctionPole, "removable zero needs a linear denominator");
  Field::Elt x0 = pt.x;

  Field::Elt ra = 0, rb = 0;
  Poly qa = poly_div_linear(F, f.a, x0, ra);
  Poly qb = poly_div_linear(F, f.b, x0, rb);
  Field::Elt inv_lead = F.inv(f.den[1]);
  if (ra == 0 && rb == 0) {
    // numerator divisible by the denominator outright
    Field::Elt v = F.add(poly_eval(F, qa, x0), F.mul(poly_eval(F, qb, x0), pt.y));
    return F.mul(v, inv_lead);
  }

  // Multiply by the conjugate numerator: value = (Norm/(x-x0))(x0) / s with
  // s the numerator at the conjugate point.
  CurvePoint conj = curve.neg(pt);
  Field::Elt s = F.add(poly_eval(F, f.a, x0), F.mul(poly_eval(F, f.b, x0), conj.y));
  if (s == 0) fail(ErrorKind::FunctionPole, "unresolvable zero of the denominator");
  Poly norm = function_norm(curve, f.a, f.b);
  Field::Elt nrem = 0;
  Poly nq = poly_div_linear(F, norm, x0, nrem);
  if (nrem != 0) fail(ErrorKind::InvariantViolation, "norm not divisible at a shared zero");
  return F.mul(F.div(poly_eval(F, nq, x0), s), inv_lead);
}

namespace {

// Monomial spanning set of the functions with pole order <= cap at O alone:
// x^i y^j with j <= 1 and 2i + 3j <= cap, ordered by pole order.
std::vector<RrFunction> pole_monomials(const Field& F, long cap) {
  std::vector<RrFunction> out;
  out.push_back(RrFunction{{F.one()}, {}, {F.one()}});  // the constant 1
  for (long order = 2; order <= cap; ++order) {
    RrFunction f;
    f.den = {F.one()};
    if (order % 2 == 0) {
      f.a = x_power(order / 2);
      for (auto& c : f.a) c = 0;
      f.a.back() = F.one();
    } else {
      if (order < 3) continue;
      f.b = x_power((order - 3) / 2);
      for (auto& c : f.b) c = 0;
      f.b.back() = F.one();
    }
    out.push_back(std::move(f));
  }
  return out;
}

void verify_basis(const RrBasis& basis) {
  const Curve& curve = *basis.curve;
  const Field& F = *curve.field();
  auto pts = curve.points();

  std::vector<std::vector<Field::Elt>> values;
  for (const auto& pt : pts) {
    if (pt.infinity || pt == basis.P) continue;
    std::vector<Field::Elt> row;
    row.reserve(basis.funcs.size());
    for (const auto& f : basis.funcs) {
      try {
        row.push_back(rr_eval(curve, f, pt));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::FunctionPole)
          fail(ErrorKind::DegenerateBasis, "basis function has a pole off the divisor support");
        throw;
      }
    }
    values.push_back(std::move(row));
  }

  // With more evaluation points than k, a rank drop would mean a dependent
  // basis (a nonzero function has at most k zeros).
  if (long(values.size()) > basis.k) {
    long rank = 0;
    const long k = basis.k;
    for (long col = 0; col < k && rank < long(values.size()); ++col) {
      long pivot = -1;
      for (long r = rank; r < long(values.size()); ++r)
        if (values[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(values[rank], values[pivot]);
      Field::Elt inv = F.inv(values[rank][col]);
      for (long r = 0; r < long(values.size()); ++r) {
        if (r == rank || values[r][col] == 0) continue;
        Field::Elt factor = F.mul(values[r][col], inv);
        for (long c2 = col; c2 < k; ++c2)
          values[r][c2] = F.sub(values[r][c2], F.mul(factor, values[rank][c2]));
      }
      ++rank;
    }
    if (rank < basis.k) fail(ErrorKind::DegenerateBasis, "basis functions are linearly dependent");
  }
}

}  // namespace

RrBasis rr_basis(CurvePtr curve, long k, const CurvePoint& P) {
  if (k < 1) fail(ErrorKind::UnsupportedK, "k must be >= 1");
  if (!curve->contains(P)) fail(ErrorKind::PointNotOnCurve, "divisor point off the curve");
  const Field& F = *curve->field();

  RrBasis basis;
  basis.curve = curve;
  basis.k = k;
  basis.P = P;

  if (P.infinity) {
    basis.funcs = pole_monomials(F, k);
  } else {
    // Functions h/u with h in the pole-order <= k+1 space vanishing at the
    // residual point of u = x - x_P; div(u) = P + P' - 2O (or 2P - 2O when
    // P is its own negative).
    CurvePoint Pconj = curve->neg(P);
    CurvePoint where = (Pconj == P) ? P : Pconj;
    auto monoms = pole_monomials(F, k + 1);

    Poly den = {F.neg(P.x), F.one()};
    for (size_t t = 1; t < monoms.size(); ++t) {
      Field::Elt c = F.add(poly_eval(F, monoms[t].a, where.x),
                           F.mul(poly_eval(F, monoms[t].b, where.x), where.y));
      RrFunction f;
      f.a = monoms[t].a;
      if (c != 0) {
        if (f.a.empty()) f.a.assign(1, 0);
        f.a[0] = F.sub(f.a[0], c);
        trim(f.a);
      }
      f.b = monoms[t].b;
      f.den = den;
      basis.funcs.push_back(std::move(f));
    }
  }

  if (long(basis.funcs.size()) != k)
    fail(ErrorKind::DegenerateBasis, "basis has the wrong dimension");
  verify_basis(basis);
  return basis;
}

EcagCode build_code(CurvePtr curve, EvaluationSet D, long k, const CurvePoint& P) {
  const long n = D.n();
  if (k < 1) fail(ErrorKind::UnsupportedK, "k must be >= 1");
  if (k >= n) fail(ErrorKind::ParameterOutOfRange, "need 0 < k < n");

  std::set<CurvePoint> seen;
  for (const auto& pt : D.points) {
    if (!curve->contains(pt)) fail(ErrorKind::PointNotOnCurve, "evaluation point off the curve");
    if (pt.infinity || pt == P) fail(ErrorKind::DivisorPointInD, "evaluation set meets the divisor support");
    if (!seen.insert(pt).second) fail(ErrorKind::DuplicateElement, "repeated evaluation point");
  }

  EcagCode code;
  code.curve = curve;
  code.eval_set = std::move(D);
  code.k = k;
  code.P = P;

  auto basis = rr_basis(curve, k, P);
  const Field& F = *curve->field();
  code.gen_matrix.assign(k, std::vector<Field::Elt>(n, 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < n; ++j)
      code.gen_matrix[i][j] = rr_eval(*curve, basis.funcs[i], code.eval_set.points[j]);

  // row rank must be k
  auto mat = code.gen_matrix;
  long rank = 0;
  for (long col = 0; col < n && rank < k; ++col) {
    long pivot = -1;
    for (long r = rank; r < k; ++r)
      if (mat[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    Field::Elt inv = F.inv(mat[rank][col]);
    for (long r = 0; r < k; ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      Field::Elt factor = F.mul(mat[r][col], inv);
      for (long c2 = col; c2 < n; ++c2) mat[r][c2] = F.sub(mat[r][c2], F.mul(factor, mat[rank][c2]));
    }
    ++rank;
  }
  if (rank < k) fail(ErrorKind::RankDeficient, "generator matrix rank below k");

  return code;
}

std::vector<Field::Elt> encode(const EcagCode& code, const std::vector<Field::Elt>& message) {
  if (long(message.size()) != code.k) fail(ErrorKind::ParameterOutOfRange, "message length must equal k");
  const Field& F = *code.curve->field();
  std::vector<Field::Elt> word(code.n(), 0);
  for (long i = 0; i < code.k; ++i) {
    if (message[i] == 0) continue;
    for (long j = 0; j < code.n(); ++j)
      word[j] = F.add(word[j], F.mul(message[i], code.gen_matrix[i][j]));
  }
  return word;
}

long min_distance_bruteforce(const EcagCode& code) {
  const Field& F = *code.curve->field();
  const long n = code.n(), k = code.k, q = F.q();

  double total = 1;
  for (long i = 0; i < k; ++i) {
    total *= double(q);
    if (total > 1e6) fail(ErrorKind::TooLarge, "q^k beyond the enumeration cap");
  }

  // scaled rows, so the message walk is pure vector addition
  std::vector<std::vector<Field::Elt>> scaled(size_t(k) * q);
  for (long i = 0; i < k; ++i)
    for (long s = 0; s < q; ++s) {
      auto& row = scaled[size_t(i) * q + s];
      row.resize(n);
      for (long j = 0; j < n; ++j) row[j] = F.mul(Field::Elt(s), code.gen_matrix[i][j]);
    }

  long best = n + 1;
  std::vector<Field::Elt> partial(n, 0);
  auto rec = [&](auto&& self, long depth, bool nonzero) -> void {
    if (depth == k) {
      if (!nonzero) return;
      long w = 0;
      for (long j = 0; j < n; ++j)
        if (partial[j] != 0) ++w;
      best = std::min(best, w);
      return;
    }
    std::vector<Field::Elt> saved = partial;
    for (long s = 0; s < q; ++s) {
      if (s != 0) {
        const auto& row = scaled[size_t(depth) * q + s];
        for (long j = 0; j < n; ++j) partial[j] = F.add(saved[j], row[j]);
      } else {
        partial = saved;
      }
      self(self, depth + 1, nonzero || s != 0);
    }
    partial = saved;
  };
  rec(rec, 0, false);

  if (best < n - k || best > n - k + 1)
    fail(ErrorKind::InvariantViolation, "minimum distance escaped the genus-1 window");
  return best;
}

long min_distance_ssp(const GroupStructure& gs, const EcagCode& code) {
  auto table = count_subset_sums(gs, code.eval_set.points, code.k);
  long target = gs.index_of(code.P);
  return table.at(code.k, target) > 0 ? code.n() - code.k : code.n() - code.k + 1;
}

bool is_mds(const GroupStructure& gs, const EcagCode& code) {
  return min_distance_ssp(gs, code) == code.n() - code.k + 1;
}

EvaluationSet all_points_except(const GroupStructure& gs, const CurvePoint& P,
                                const std::vector<CurvePoint>& extra) {
  EvaluationSet D;
  for (const auto& pt : gs.points()) {
    if (pt.infinity || pt == P) continue;
    if (std::find(extra.begin(), extra.end(), pt) != extra.end()) continue;
    D.points.push_back(pt);
  }
  return D;
}

}  // namespace ecag
