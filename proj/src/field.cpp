#include "ecag/field.hpp"

#include "ecag/errors.hpp"

#include <algorithm>
#include <string>

namespace ecag {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Little-endian coefficient vectors over F_p.
using Poly = std::vector<long>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

// Remainder of a modulo monic b.
Poly poly_rem(Poly a, const Poly& b, long p) {
  trim(a);
  long db = long(b.size()) - 1;
  while (long(a.size()) - 1 >= db) {
    long lead = a.back();
    long shift = long(a.size()) - 1 - db;
    if (lead != 0) {
      for (long i = 0; i <= db; ++i) {
        long& c = a[shift + i];
        c = ((c - lead * b[i]) % p + p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_from_index(long idx, long p, int deg) {
  Poly out(deg, 0);
  for (int i = 0; i < deg; ++i) {
    out[i] = idx % p;
    idx /= p;
  }
  return out;
}

bool poly_is_zero(const Poly& a) {
  for (long c : a)
    if (c != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& monic, long p) {
  int deg = int(monic.size()) - 1;
  if (deg <= 0) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly div = poly_from_index(idx, p, d);
      div.push_back(1);  // monic of degree d
      if (poly_is_zero(poly_rem(monic, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::make(long p, int m, std::optional<std::vector<long>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  if (m < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be >= 1");

  long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) fail(ErrorKind::CapExceeded, "q = p^m exceeds the desk-scale cap 2^20");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = q;

  if (m == 1) {
    if (modulus && !modulus->empty())
      fail(ErrorKind::DegreeMismatch, "prime field takes no modulus");
  } else if (modulus) {
    Poly mod = *modulus;
    for (long& c : mod) c = ((c % p) + p) % p;
    if (long(mod.size()) != m + 1 || mod.back() != 1)
      fail(ErrorKind::DegreeMismatch, "modulus must be monic of degree m");
    if (!is_irreducible(mod, p))
      fail(ErrorKind::ReducibleModulus, "modulus factors over F_p");
    f->modulus_ = mod;
  } else {
    // First monic irreducible of degree m in index order.
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly cand = poly_from_index(idx, p, m);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        f->modulus_ = cand;
        break;
      }
    }
    if (f->modulus_.empty()) fail(ErrorKind::ReducibleModulus, "no irreducible found");  // unreachable
  }

  if (m > 1) {
    // red_[i] = x^{m+i} mod modulus.
    Poly cur(m + 1, 0);
    cur.back() = 1;
    for (int i = 0; i + 1 < m; ++i) {
      Poly r = poly_rem(cur, f->modulus_, p);
      r.resize(m, 0);
      f->red_.push_back(r);
      cur.insert(cur.begin(), 0);  // multiply by x
    }
  }

  f->build_tables();
  return f;
}

void Field::build_tables() {
  if (m_ > 1 && q_ <= kTableQ) {
    mul_table_.resize(size_t(q_) * q_);
    add_table_.resize(size_t(q_) * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (long a = 0; a < q_; ++a) {
      for (long b = 0; b < q_; ++b) {
        Elt prod = mul_slow(Elt(a), Elt(b));
        mul_table_[size_t(a) * q_ + b] = prod;
        if (prod == one()) inv_table_[a] = Elt(b);
        // digitwise addition mod p
        long x = a, y = b, s = 0, scale = 1;
        for (int i = 0; i < m_; ++i) {
          s += ((x % p_) + (y % p_)) % p_ * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        add_table_[size_t(a) * q_ + b] = Elt(s);
        if (s == 0) neg_table_[a] = Elt(b);
      }
    }
    has_tables_ = true;
  }

  if (q_ <= kSolverQ) {
    if (p_ == 2) {
      sqrt2_table_.resize(q_);
      artin_root_.assign(q_, kNoRoot);
      for (long z = 0; z < q_; ++z) {
        Elt sq = mul(Elt(z), Elt(z));
        sqrt2_table_[sq] = Elt(z);  // squaring is a bijection in char 2
        Elt w = add(sq, Elt(z));    // z^2 + z
        if (artin_root_[w] == kNoRoot || Elt(z) < artin_root_[w]) artin_root_[w] = Elt(z);
      }
    } else {
      sqrt_table_.assign(q_, {});
      for (long z = 0; z < q_; ++z) sqrt_table_[mul(Elt(z), Elt(z))].push_back(Elt(z));
      for (auto& roots : sqrt_table_) std::sort(roots.begin(), roots.end());
    }
    has_solver_ = true;
  }
}

Field::Elt Field::add(Elt a, Elt b) const {
  if (m_ == 1) return Elt((long(a) + b) % q_);
  if (p_ == 2) return a ^ b;
  if (has_tables_) return add_table_[size_t(a) * q_ + b];
  long x = a, y = b, s = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    s += ((x % p_) + (y % p_)) % p_ * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elt(s);
}

Field::Elt Field::neg(Elt a) const {
  if (m_ == 1) return Elt(a == 0 ? 0 : q_ - a);
  if (p_ == 2) return a;
  if (has_tables_) return neg_table_[a];
  long x = a, s = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    long c = x % p_;
    s += (c == 0 ? 0 : p_ - c) * scale;
    x /= p_;
    scale *= p_;
  }
  return Elt(s);
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::mul_slow(Elt a, Elt b) const {
  Poly pa = coeffs(a), pb = coeffs(b);
  Poly conv(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (pa[i] == 0) continue;
    for (int j = 0; j < m_; ++j) conv[i + j] = (conv[i + j] + pa[i] * pb[j]) % p_;
  }
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    long c = conv[i];
    if (c == 0) continue;
    const auto& red = red_[i - m_];
    for (int j = 0; j < m_; ++j) conv[j] = (conv[j] + c * red[j]) % p_;
    conv[i] = 0;
  }
  long idx = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    idx += conv[i] * scale;
    scale *= p_;
  }
  return Elt(idx);
}

Field::Elt Field::mul(Elt a, Elt b) const {
  if (m_ == 1) return Elt((long(a) * b) % q_);
  if (has_tables_) return mul_table_[size_t(a) * q_ + b];
  return mul_slow(a, b);
}

Field::Elt Field::pow(Elt a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elt out = one(), base = a;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

Field::Elt Field::inv(Elt a) const {
  if (a == 0) fail(ErrorKind::ZeroInverse, "inverse of zero");
  if (m_ == 1) {
    // extended Euclid on (a, p)
    long r0 = a, r1 = q_, s0 = 1, s1 = 0;
    while (r1 != 0) {
      long qt = r0 / r1;
      long r2 = r0 - qt * r1;
      long s2 = s0 - qt * s1;
      r0 = r1;
      r1 = r2;
      s0 = s1;
      s1 = s2;
    }
    return Elt(((s0 % q_) + q_) % q_);
  }
  if (has_tables_) return inv_table_[a];
  return pow(a, q_ - 2);
}

Field::Elt Field::from_int(long long v) const {
  long r = long(((v % p_) + p_) % p_);
  return Elt(r);
}

std::vector<long> Field::coeffs(Elt a) const {
  std::vector<long> out(m_, 0);
  long x = a;
  for (int i = 0; i < m_; ++i) {
    out[i] = x % p_;
    x /= p_;
  }
  return out;
}

Field::Elt Field::from_coeffs(const std::vector<long>& c) const {
  if (long(c.size()) != m_) fail(ErrorKind::DegreeMismatch, "coefficient vector must have length m");
  long idx = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    idx += (((c[i] % p_) + p_) % p_) * scale;
    scale *= p_;
  }
  return Elt(idx);
}

std::vector<Field::Elt> Field::sqrt_set(Elt a) const {
  if (has_solver_) {
    if (p_ == 2) return {sqrt2_table_[a]};
    return sqrt_table_[a];
  }
  std::vector<Elt> out;
  for (long z = 0; z < q_; ++z)
    if (mul(Elt(z), Elt(z)) == a) out.push_back(Elt(z));
  return out;
}

std::vector<Field::Elt> Field::solve_quadratic(Elt c, Elt d) const {
  if (c == 0) return sqrt_set(d);
  if (p_ == 2) {
    if (has_solver_) {
      // y = c z reduces y^2 + c y = d to z^2 + z = d / c^2.
      Elt w = div(d, mul(c, c));
      Elt z = artin_root_[w];
      if (z == kNoRoot) return {};
      Elt y0 = mul(c, z), y1 = mul(c, add(z, one()));
      if (y1 < y0) std::swap(y0, y1);
      return {y0, y1};
    }
  } else {
    // complete the square: (y + c/2)^2 = d + c^2/4
    Elt half = inv(from_int(2));
    Elt shift = mul(c, half);
    Elt rhs = add(d, mul(shift, shift));
    std::vector<Elt> out;
    for (Elt s : sqrt_set(rhs)) out.push_back(sub(s, shift));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Elt> out;
  for (long y = 0; y < q_; ++y)
    if (add(mul(Elt(y), Elt(y)), mul(c, Elt(y))) == d) out.push_back(Elt(y));
  return out;
}

bool Field::same(const Field& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

namespace {
const Field& check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field()) fail(ErrorKind::ParameterOutOfRange, "element without a field");
  if (a.field() != b.field() && !a.field()->same(*b.field()))
    fail(ErrorKind::ParameterOutOfRange, "elements of different fields");
  return *a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), check_same(a, b).add(a.index(), b.index()));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), check_same(a, b).sub(a.index(), b.index()));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), check_same(a, b).mul(a.index(), b.index()));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field(), check_same(a, b).div(a.index(), b.index()));
}

}  // namespace ecag
