#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/gfq.hpp"

namespace drinfeld {

/// d_inf, the degree of the place at infinity of F_q(t).  Formulas that carry
/// q^{d_inf * (...)} keep the factor visible through this constant.
inline constexpr int kDegInfinity = 1;

/// An element of A = F_q[t], coefficients stored in ascending t-degree with no
/// trailing zeros (so the zero polynomial has an empty coefficient vector).
class BasePoly {
 public:
  BasePoly() = default;
  explicit BasePoly(GFqPtr gf) : gf_(std::move(gf)) {}
  BasePoly(GFqPtr gf, std::vector<Coef> coeffs);

  static BasePoly constant(GFqPtr gf, Coef c);
  static BasePoly monomial(GFqPtr gf, int degree, Coef c = 1);
  static BasePoly t(GFqPtr gf) { return monomial(std::move(gf), 1); }
  /// Inverse of `index()`.
  static BasePoly from_index(GFqPtr gf, std::uint64_t index);

  const GFqPtr& field() const noexcept { return gf_; }
  const std::vector<Coef>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Coef coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  Coef lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

  /// Integer encoding sum c_i q^i; monic polynomials of a fixed degree are
  /// enumerated in increasing index order.
  std::uint64_t index() const noexcept;

  BasePoly monic() const;
  BasePoly scaled(Coef s) const;
  BasePoly shifted(int k) const;  // * t^k, k >= 0
  BasePoly derivative() const;
  /// a(t)^{q^i} = a(t^{q^i}).
  BasePoly frobenius(int i) const;
  Coef eval(Coef x) const noexcept;

  BasePoly operator-() const;
  friend BasePoly operator+(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator-(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  BasePoly& operator+=(const BasePoly& o) { return *this = *this + o; }
  BasePoly& operator-=(const BasePoly& o) { return *this = *this - o; }
  BasePoly& operator*=(const BasePoly& o) { return *this = *this * o; }

  friend bool operator==(const BasePoly& a, const BasePoly& b) noexcept {
    return a.c_ == b.c_ && (a.gf_ == b.gf_ || !a.gf_ || !b.gf_);
  }
  /// Degree first, then coefficients from the top: the enumeration order.
  friend bool operator<(const BasePoly& a, const BasePoly& b) noexcept;

  std::string to_string(char var = 't') const;

 private:
  void normalize();

  GFqPtr gf_;
  std::vector<Coef> c_;
};

/// Throws DivisionByZero when g = 0.
std::pair<BasePoly, BasePoly> divmod(const BasePoly& f, const BasePoly& g);
BasePoly operator%(const BasePoly& f, const BasePoly& g);
/// Monic gcd; gcd(0, 0) throws DivisionByZero.
BasePoly gcd(const BasePoly& f, const BasePoly& g);

struct ExtGcd {
  BasePoly g;  // monic
  BasePoly s;  // s*f + t*h = g
  BasePoly t;
};
ExtGcd ext_gcd(const BasePoly& f, const BasePoly& h);

/// base^e mod m.
BasePoly powmod(const BasePoly& base, std::uint64_t e, const BasePoly& m);
/// x^{q^k} mod m by k successive q-th powers.
BasePoly frobenius_mod(const BasePoly& x, int k, const BasePoly& m);

/// Ben-Or criterion: gcd(f, t^{q^i} - t) = 1 for all i <= deg f / 2.
bool is_irreducible(const BasePoly& f);

/// Complete list of monic irreducibles of degree d in increasing index order.
std::vector<BasePoly> irreducible_monics(const GFqPtr& gf, int d);

/// (1/d) sum_{e | d} mobius(e) q^{d/e}.
std::uint64_t necklace_count(std::uint64_t q, int d);
int mobius(int n) noexcept;

/// Factorization of a nonzero polynomial into monic irreducibles with
/// multiplicity (trial division, desk scale), plus the leading unit.
struct Factorization {
  Coef unit = 1;
  std::vector<std::pair<BasePoly, int>> factors;
};
Factorization factor(const BasePoly& f);

/// ord_inf as an integer, or nullopt for +infinity (the zero element).
using OrdInf = std::optional<int>;
OrdInf ord_inf(const BasePoly& f);

/// A rational function num/den over F_q, den != 0.
struct RationalFunction {
  BasePoly num;
  BasePoly den;
};
OrdInf ord_inf(const RationalFunction& f);

}  // namespace drinfeld
