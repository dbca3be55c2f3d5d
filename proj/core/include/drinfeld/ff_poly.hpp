#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Univariate polynomial over an extension field F_{q^d}, ascending
/// coefficients, normalized.
class FFPoly {
 public:
  explicit FFPoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  FFPoly(FieldPtr ctx, std::vector<FFElem> coeffs);
  /// Coefficients over F_q lifted into ctx.
  static FFPoly from_base(FieldPtr ctx, const BasePoly& f);
  static FFPoly x(FieldPtr ctx);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const std::vector<FFElem>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  FFElem coeff(int i) const;
  FFElem lead() const { return c_.back(); }
  FFElem eval(const FFElem& x) const;
  FFPoly monic() const;

  friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend bool operator==(const FFPoly& a, const FFPoly& b) noexcept { return a.c_ == b.c_; }

 private:
  void normalize();

  FieldPtr ctx_;
  std::vector<FFElem> c_;
};

std::pair<FFPoly, FFPoly> divmod(const FFPoly& f, const FFPoly& g);
FFPoly operator%(const FFPoly& f, const FFPoly& g);
FFPoly gcd(const FFPoly& f, const FFPoly& g);
FFPoly powmod(const FFPoly& base, std::uint64_t e, const FFPoly& m);

/// All distinct roots in the coefficient field, lex-sorted.  Deterministic
/// (equal-degree splitting driven by a fixed-seed generator).
std::vector<FFElem> roots(const FFPoly& f);

}  // namespace drinfeld
