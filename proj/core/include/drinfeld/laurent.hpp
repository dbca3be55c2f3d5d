#pragma once

#include <functional>
#include <string>
#include <vector>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Truncated Laurent series in the uniformizer pi over a finite coefficient
/// field.  With the coefficient field F_q (degree-1 context) this models
/// F_inf = F_q((pi)), pi = 1/t; with F_{q^n} it models the unramified
/// extension W.
///
/// A nonzero value is pi^lead * (c_0 + c_1 pi + ... + c_{prec-1} pi^{prec-1})
/// + O(pi^{lead+prec}) with c_0 != 0.  A value that is zero to the known
/// precision is O(pi^N), stored with no coefficients and lead = N.
class LaurentSeries {
 public:
  /// Strips leading zero coefficients (each one costs a digit of precision).
  LaurentSeries(FieldPtr ctx, int lead, std::vector<FFElem> coeffs);

  static LaurentSeries zero(FieldPtr ctx, int absolute_precision);
  static LaurentSeries constant(const FFElem& c, int precision);
  static LaurentSeries one(FieldPtr ctx, int precision);
  /// pi^k with the given relative precision.
  static LaurentSeries pi_power(FieldPtr ctx, int k, int precision);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// ord_pi; for a zero-to-precision value this is the absolute precision.
  int valuation() const noexcept { return lead_; }
  int lead() const noexcept { return lead_; }
  int precision() const noexcept { return static_cast<int>(c_.size()); }
  int absolute_precision() const noexcept { return lead_ + precision(); }
  const std::vector<FFElem>& coeffs() const noexcept { return c_; }

  /// Coefficient of pi^k.  Throws PrecisionExhausted beyond the known digits.
  FFElem coeff(int k) const;

  /// Coefficients of pi^0 .. pi^{j-1} (the class in O / pi^j).  Requires
  /// valuation >= 0 (InvalidArgument) and enough digits (PrecisionExhausted).
  std::vector<FFElem> residue(int j) const;

  /// Drops digits at and beyond pi^N; throws PrecisionExhausted if N is
  /// beyond what is known.
  LaurentSeries truncated(int absolute_precision) const;

  /// Applies a ring homomorphism of the coefficient field coefficientwise.
  LaurentSeries map_coeffs(const std::function<FFElem(const FFElem&)>& f) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  LaurentSeries scaled(const FFElem& s) const;

  /// Throws InverseOfZero for a zero-to-precision value.
  LaurentSeries inv() const;

  std::string to_string() const;

 private:
  FieldPtr ctx_;
  int lead_;
  std::vector<FFElem> c_;
};

/// a - b is zero to the combined precision.
bool equal_to_precision(const LaurentSeries& a, const LaurentSeries& b);

/// The coefficient field F_q as a degree-1 context.
FieldPtr constant_field(const GFqPtr& gf);

/// pi-adic expansion (pi = 1/t) with `precision` significant digits.
LaurentSeries expand_at_infinity(const RationalFunction& f, int precision);
LaurentSeries expand_at_infinity(const BasePoly& f, int precision);

}  // namespace drinfeld
