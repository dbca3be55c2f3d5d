#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Coefficient-ring glue for SkewPoly: the ring L and its q-power Frobenius.
template <class C>
struct SkewTraits;

template <>
struct SkewTraits<FFElem> {
  using Ctx = FieldPtr;
  static FFElem zero(const Ctx& k) { return k->zero(); }
  static FFElem one(const Ctx& k) { return k->one(); }
  static bool is_zero(const FFElem& a) { return a.is_zero(); }
  static FFElem frob(const FFElem& a, int i) { return frobenius_power(a, i); }
  static FFElem div_exact(const FFElem& a, const FFElem& b) { return a / b; }
  static void check_same(const Ctx& a, const Ctx& b) {
    if (!a->same_as(*b)) fail(ErrorCode::ContextMismatch, "skew polynomials over different fields");
  }
  static std::string to_string(const FFElem& a) { return a.to_string('w'); }
};

/// L = F_q(t) restricted to A = F_q[t]; a^{q^i} = a(t^{q^i}).
template <>
struct SkewTraits<BasePoly> {
  using Ctx = GFqPtr;
  static BasePoly zero(const Ctx& gf) { return BasePoly(gf); }
  static BasePoly one(const Ctx& gf) { return BasePoly::constant(gf, 1); }
  static bool is_zero(const BasePoly& a) { return a.is_zero(); }
  static BasePoly frob(const BasePoly& a, int i) {
    if (i < 0) fail(ErrorCode::Unsupported, "inverse Frobenius on F_q(t)");
    return a.frobenius(i);
  }
  static BasePoly div_exact(const BasePoly& a, const BasePoly& b) {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) fail(ErrorCode::NotADivisor, "inexact coefficient division in F_q[t]");
    return quo;
  }
  static void check_same(const Ctx& a, const Ctx& b) {
    if (a != b) fail(ErrorCode::ContextMismatch, "skew polynomials over different constant fields");
  }
  static std::string to_string(const BasePoly& a) { return a.to_string('t'); }
};

/// Element of the twisted polynomial ring L[tau], tau * a = a^q * tau.
/// coeffs()[i] is the coefficient of tau^i; no trailing zeros.
template <class C>
class SkewPoly {
 public:
  using Traits = SkewTraits<C>;
  using Ctx = typename Traits::Ctx;

  explicit SkewPoly(Ctx ctx) : ctx_(std::move(ctx)) {}
  SkewPoly(Ctx ctx, std::vector<C> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { normalize(); }

  static SkewPoly constant(Ctx ctx, C c) { return SkewPoly(std::move(ctx), std::vector<C>{std::move(c)}); }
  static SkewPoly one(Ctx ctx) {
    C c = Traits::one(ctx);
    return constant(std::move(ctx), std::move(c));
  }
  /// tau^h.
  static SkewPoly tau(Ctx ctx, int h = 1) {
    std::vector<C> v(static_cast<std::size_t>(h) + 1, Traits::zero(ctx));
    v.back() = Traits::one(ctx);
    return SkewPoly(std::move(ctx), std::move(v));
  }

  const Ctx& ctx() const noexcept { return ctx_; }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  C coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Traits::zero(ctx_);
    return c_[static_cast<std::size_t>(i)];
  }
  const C& lead() const { return c_.back(); }
  /// The tau^0 coefficient map L[tau] -> L.
  C constant_term() const { return coeff(0); }

  SkewPoly operator-() const {
    std::vector<C> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(Traits::zero(ctx_) - c);
    return SkewPoly(ctx_, std::move(v));
  }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) { return a.combine(b, false); }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a.combine(b, true); }

  /// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^{q^i} tau^{i+j}.
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    Traits::check_same(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return SkewPoly(a.ctx_);
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, Traits::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        v[i + j] = v[i + j] + a.c_[i] * Traits::frob(b.c_[j], static_cast<int>(i));
      }
    }
    return SkewPoly(a.ctx_, std::move(v));
  }

  SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
  SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
  SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

  /// Left scalar multiplication c * f.
  SkewPoly scaled(const C& s) const {
    std::vector<C> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(s * c);
    return SkewPoly(ctx_, std::move(v));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  /// Coefficientwise image under a ring map into another coefficient ring.
  template <class D>
  SkewPoly<D> map(typename SkewTraits<D>::Ctx target, const std::function<D(const C&)>& f) const {
    std::vector<D> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return SkewPoly<D>(std::move(target), std::move(v));
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (Traits::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + Traits::to_string(c_[i]) + ")";
      if (i > 0) out += i == 1 ? "*tau" : "*tau^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  SkewPoly combine(const SkewPoly& b, bool subtract) const {
    Traits::check_same(ctx_, b.ctx_);
    const std::size_t n = std::max(c_.size(), b.c_.size());
    std::vector<C> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int k = static_cast<int>(i);
      v.push_back(subtract ? coeff(k) - b.coeff(k) : coeff(k) + b.coeff(k));
    }
    return SkewPoly(ctx_, std::move(v));
  }

  Ctx ctx_;
  std::vector<C> c_;
};

using SkewPolyL = SkewPoly<FFElem>;
using SkewPolyA = SkewPoly<BasePoly>;

/// f = quotient * g + remainder with deg remainder < deg g.  Throws
/// DivisionByZero for g = 0.
template <class C>
std::pair<SkewPoly<C>, SkewPoly<C>> skew_right_divmod(const SkewPoly<C>& f, const SkewPoly<C>& g) {
  using Traits = SkewTraits<C>;
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "skew division by 0");
  Traits::check_same(f.ctx(), g.ctx());
  const auto& ctx = f.ctx();
  const int m = g.degree();
  if (f.degree() < m) return {SkewPoly<C>(ctx), f};
  std::vector<C> quot(static_cast<std::size_t>(f.degree() - m) + 1, Traits::zero(ctx));
  SkewPoly<C> r = f;
  while (!r.is_zero() && r.degree() >= m) {
    const int k = r.degree() - m;
    // a tau^k * lead(g) tau^m = a lead(g)^{q^k} tau^{k+m}
    const C a = Traits::div_exact(r.lead(), Traits::frob(g.lead(), k));
    quot[static_cast<std::size_t>(k)] = a;
    std::vector<C> term(static_cast<std::size_t>(k) + 1, Traits::zero(ctx));
    term.back() = a;
    const auto before = r.degree();
    r = r - SkewPoly<C>(ctx, std::move(term)) * g;
    if (!r.is_zero() && r.degree() >= before) fail(ErrorCode::InvalidArgument, "skew division did not reduce");
  }
  return {SkewPoly<C>(ctx, std::move(quot)), r};
}

/// fg = gf exactly.
template <class C>
bool commutes(const SkewPoly<C>& f, const SkewPoly<C>& g) {
  return f * g == g * f;
}

/// Evaluation as an additive polynomial: sum a_i x^{q^i}.  x may live in an
/// extension of the coefficient field (coefficients are embedded).
FFElem skew_apply(const SkewPolyL& f, const FFElem& x);

/// Truncated element of L((tau^{-1})):
///   sum_{k < prec} c_k tau^{lead - k} + O(tau^{lead - prec}),
/// c_0 != 0 unless the value is zero to precision, in which case it is stored
/// as O(tau^{floor}) with no coefficients and lead = floor.
class SkewLaurentTrunc {
 public:
  SkewLaurentTrunc() = default;
  SkewLaurentTrunc(FieldPtr ctx, int lead, std::vector<FFElem> coeffs);

  static SkewLaurentTrunc zero(FieldPtr ctx, int floor);
  static SkewLaurentTrunc one(FieldPtr ctx, int precision);
  static SkewLaurentTrunc tau(FieldPtr ctx, int h, int precision);
  /// An exact polynomial seen as a truncation with `precision` digits.
  static SkewLaurentTrunc from_poly(const SkewPolyL& f, int precision);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int lead() const noexcept { return lead_; }
  int precision() const noexcept { return static_cast<int>(c_.size()); }
  /// Exponents strictly above floor() are known.
  int floor() const noexcept { return lead_ - precision(); }
  const std::vector<FFElem>& coeffs() const noexcept { return c_; }
  /// Coefficient of tau^e; PrecisionExhausted when e <= floor().
  FFElem coeff(int e) const;

  friend SkewLaurentTrunc operator+(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b);
  friend SkewLaurentTrunc operator-(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b);
  friend SkewLaurentTrunc operator*(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b);
  SkewLaurentTrunc operator-() const;
  /// Throws InverseOfZero.
  SkewLaurentTrunc inv() const;

  std::string to_string() const;

 private:
  FieldPtr ctx_;
  int lead_;
  std::vector<FFElem> c_;
};

/// ord_{tau^{-1}} = -lead; for values zero to precision, the floor is returned.
int ord_tau_inv(const SkewLaurentTrunc& x);
/// x - y vanishes to the known precision.
bool equal_to_precision(const SkewLaurentTrunc& x, const SkewLaurentTrunc& y);
bool commutes(const SkewLaurentTrunc& f, const SkewLaurentTrunc& g);

/// Output of conjugate_to_constants.  All values live in `field`, an
/// extension of the input coefficient field L reached by a chain of
/// embeddings; `transport` maps elements of L along that chain.
struct ConjugationResult {
  FieldPtr field;
  FFElem base_generator;  // image of L's generator in `field`
  int h = 0;
  FFElem delta;
  std::vector<FFElem> a;  // a_0 = 1, a_1, ...
  SkewLaurentTrunc u;

  FFElem transport(const FFElem& x) const;
  SkewPolyL transport(const SkewPolyL& f) const;
};

/// Finds u = delta * sum_{i < prec} a_i tau^{-i} with phi_y * u = u * tau^h to
/// precision for phi_y of tau-degree h >= 1 over a finite field, and checks
/// that identity before returning.
ConjugationResult conjugate_to_constants(const SkewPolyL& phi_y, int prec);

}  // namespace drinfeld
