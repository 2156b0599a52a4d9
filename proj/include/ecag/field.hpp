#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ecag {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^m} with elements addressed by index sum(c_i * p^i) over the
/// little-endian coefficient vector (c_0, ..., c_{m-1}).  Index order is the
/// canonical element order used everywhere (point enumeration, default
/// modulus search, generator picks).
class Field : public std::enable_shared_from_this<Field> {
 public:
  using Elt = std::uint32_t;

  static constexpr long kMaxQ = 1 << 20;

  /// p prime, m >= 1.  For m > 1 a monic irreducible modulus of degree m is
  /// required; when omitted the first irreducible in index order is used.
  static FieldPtr make(long p, int m, std::optional<std::vector<long>> modulus = std::nullopt);

  long p() const { return p_; }
  int m() const { return m_; }
  long q() const { return q_; }

  /// Monic modulus, little-endian, length m+1; empty for prime fields.
  const std::vector<long>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1 % q_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long long e) const;

  /// Integer embedding through the prime subfield.
  Elt from_int(long long v) const;

  std::vector<long> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<long>& c) const;

  /// All y with y*y == a (empty, one, or two roots).
  std::vector<Elt> sqrt_set(Elt a) const;

  /// All y with y*y + c*y == d; covers the characteristic-2 case where
  /// completing the square is unavailable.
  std::vector<Elt> solve_quadratic(Elt c, Elt d) const;

  bool same(const Field& other) const;

 private:
  Field() = default;

  void build_tables();
  Elt mul_slow(Elt a, Elt b) const;

  long p_ = 0;
  int m_ = 1;
  long q_ = 0;
  std::vector<long> modulus_;

  // x^{m+i} mod modulus for i = 0..m-2, as coefficient vectors.
  std::vector<std::vector<long>> red_;

  // Dense op tables, built for small extension fields only.
  bool has_tables_ = false;
  std::vector<Elt> mul_table_;
  std::vector<Elt> add_table_;
  std::vector<Elt> inv_table_;
  std::vector<Elt> neg_table_;

  // Quadratic solver tables (q <= kSolverQ).
  bool has_solver_ = false;
  std::vector<std::vector<Elt>> sqrt_table_;  // odd p: value -> sorted roots
  std::vector<Elt> sqrt2_table_;              // p = 2: unique square root
  std::vector<Elt> artin_root_;               // p = 2: min z with z^2+z == w, or kNoRoot

  static constexpr Elt kNoRoot = ~Elt(0);
  static constexpr long kTableQ = 512;
  static constexpr long kSolverQ = 1 << 16;
};

/// Value-type element carrying its field; the thin API layer over Field's
/// index-level operations.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, Field::Elt idx) : field_(std::move(field)), idx_(idx) {}

  const FieldPtr& field() const { return field_; }
  Field::Elt index() const { return idx_; }
  std::vector<long> coeffs() const { return field_->coeffs(idx_); }
  bool is_zero() const { return idx_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return FieldElement(field_, field_->neg(idx_)); }
  FieldElement inverse() const { return FieldElement(field_, field_->inv(idx_)); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.idx_ == b.idx_ && (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same(*b.field_)));
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.idx_ < b.idx_; }

 private:
  FieldPtr field_;
  Field::Elt idx_ = 0;
};

}  // namespace ecag
