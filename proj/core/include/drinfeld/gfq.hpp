#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace drinfeld {

/// Element of the constant field F_q, stored as an index in [0, q).
///
/// For prime q the index is the residue itself.  For q = p^e with e > 1 the
/// index encodes the coefficient vector of a polynomial in F_p[x] modulo the
/// smallest monic irreducible of degree e, read as base-p digits.
using Coef = std::uint32_t;

class GFq;
using GFqPtr = std::shared_ptr<const GFq>;

/// The constant field F_q.  Instances are interned: `GFq::make(q)` returns the
/// same object for the same q, so pointer equality is field equality.
class GFq {
 public:
  static GFqPtr make(std::uint64_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  bool is_prime_field() const noexcept { return e_ == 1; }

  Coef add(Coef a, Coef b) const noexcept {
    if (e_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_table_[a * q_ + b];
  }
  Coef neg(Coef a) const noexcept {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Coef sub(Coef a, Coef b) const noexcept { return add(a, neg(b)); }
  Coef mul(Coef a, Coef b) const noexcept {
    if (e_ == 1) return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % p_);
    return mul_table_[a * q_ + b];
  }
  /// Throws ZeroInverse on 0.
  Coef inv(Coef a) const;
  Coef div(Coef a, Coef b) const { return mul(a, inv(b)); }
  Coef pow(Coef a, std::uint64_t k) const noexcept;

  /// Image of an integer under Z -> F_p -> F_q.
  Coef from_int(std::int64_t v) const noexcept;

  /// Lexicographically least monic irreducible of degree e over F_p used for
  /// the prime-power representation (ascending digits, leading 1).  Empty for
  /// prime fields.
  const std::vector<std::uint32_t>& defining_polynomial() const noexcept { return def_poly_; }

 private:
  GFq(std::uint32_t q, std::uint32_t p, std::uint32_t e);

  std::uint32_t q_;
  std::uint32_t p_;
  std::uint32_t e_;
  std::vector<std::uint32_t> def_poly_;
  std::vector<Coef> add_table_;
  std::vector<Coef> mul_table_;
  std::vector<Coef> neg_table_;
  std::vector<Coef> inv_table_;
};

/// Smallest prime factor test used for q validation.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace drinfeld
