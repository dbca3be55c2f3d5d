#include "drinfeld/ff_poly.hpp"

#include <algorithm>
#include <random>

#include "drinfeld/error.hpp"

namespace drinfeld {

FFPoly::FFPoly(FieldPtr ctx, std::vector<FFElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  normalize();
}

void FFPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FFPoly FFPoly::from_base(FieldPtr ctx, const BasePoly& f) {
  std::vector<FFElem> v;
  v.reserve(f.coeffs().size());
  for (Coef c : f.coeffs()) v.push_back(ctx->from_base(c));
  return FFPoly(std::move(ctx), std::move(v));
}

FFPoly FFPoly::x(FieldPtr ctx) {
  std::vector<FFElem> v{ctx->zero(), ctx->one()};
  return FFPoly(std::move(ctx), std::move(v));
}

FFElem FFPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return ctx_->zero();
  return c_[static_cast<std::size_t>(i)];
}

FFElem FFPoly::eval(const FFElem& x) const {
  FFElem acc = ctx_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FFPoly FFPoly::monic() const {
  if (is_zero()) return *this;
  const FFElem inv = lead().inv();
  std::vector<FFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * inv);
  return FFPoly(ctx_, std::move(v));
}

FFPoly operator+(const FFPoly& a, const FFPoly& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<FFElem> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  return FFPoly(a.ctx_, std::move(v));
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<FFElem> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
  return FFPoly(a.ctx_, std::move(v));
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  if (a.is_zero() || b.is_zero()) return FFPoly(a.ctx_);
  std::vector<FFElem> v(a.c_.size() + b.c_.size() - 1, a.ctx_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return FFPoly(a.ctx_, std::move(v));
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& f, const FFPoly& g) {
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by 0");
  const FieldPtr& ctx = f.ctx();
  if (f.degree() < g.degree()) return {FFPoly(ctx), f};
  std::vector<FFElem> r = f.coeffs();
  const int dg = g.degree();
  const FFElem inv_lead = g.lead().inv();
  std::vector<FFElem> quot(static_cast<std::size_t>(f.degree() - dg) + 1, ctx->zero());
  for (int k = f.degree(); k >= dg; --k) {
    const FFElem c = r[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const FFElem m = c * inv_lead;
    quot[static_cast<std::size_t>(k - dg)] = m;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(k - dg + i)] -= m * g.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {FFPoly(ctx, std::move(quot)), FFPoly(ctx, std::move(r))};
}

FFPoly operator%(const FFPoly& f, const FFPoly& g) { return divmod(f, g).second; }

FFPoly gcd(const FFPoly& f, const FFPoly& g) {
  FFPoly a = f;
  FFPoly b = g;
  while (!b.is_zero()) {
    FFPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FFPoly powmod(const FFPoly& base, std::uint64_t e, const FFPoly& m) {
  FFPoly result = FFPoly(m.ctx(), {m.ctx()->one()}) % m;
  FFPoly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

namespace {

// x^{p^k} mod m via k successive p-th powers (p = characteristic).
FFPoly char_power(const FFPoly& x, std::uint64_t k, const FFPoly& m) {
  FFPoly r = x % m;
  const std::uint32_t p = m.ctx()->base()->p();
  for (std::uint64_t i = 0; i < k; ++i) r = powmod(r, p, m);
  return r;
}

// Splits a monic squarefree product of distinct linear factors.
void split_linear(const FFPoly& g, std::mt19937_64& rng, std::vector<FFElem>& out) {
  if (g.degree() <= 0) return;
  const FieldPtr& ctx = g.ctx();
  if (g.degree() == 1) {
    out.push_back(-(g.coeff(0) * g.lead().inv()));
    return;
  }
  const GFq& gf = *ctx->base();
  const std::uint64_t ext = static_cast<std::uint64_t>(gf.e()) * static_cast<std::uint64_t>(ctx->degree());
  std::uniform_int_distribution<std::uint32_t> digit(0, gf.q() - 1);
  const FFPoly x = FFPoly::x(ctx);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Coef> rc(static_cast<std::size_t>(ctx->degree()));
    for (auto& c : rc) c = digit(rng);
    FFElem a(ctx, rc);
    FFPoly w(ctx);
    if (gf.p() == 2) {
      // absolute trace of a X: sum_{k < ext} (aX)^{2^k}
      FFPoly term = FFPoly(ctx, {ctx->zero(), a}) % g;
      w = term;
      for (std::uint64_t k = 1; k < ext; ++k) {
        term = (term * term) % g;
        w = w + term;
      }
    } else {
      // (X + a)^{(Q-1)/2} with Q = p^ext: product of b^{p^k}, b = (X+a)^{(p-1)/2}
      FFPoly b = powmod(x + FFPoly(ctx, {a}), (gf.p() - 1) / 2, g);
      w = b;
      FFPoly bp = b;
      for (std::uint64_t k = 1; k < ext; ++k) {
        bp = char_power(bp, 1, g);
        w = (w * bp) % g;
      }
      w = w - FFPoly(ctx, {ctx->one()});
    }
    FFPoly d = gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).first.monic(), rng, out);
      return;
    }
  }
  fail(ErrorCode::InvalidArgument, "root splitting did not converge");
}

}  // namespace

std::vector<FFElem> roots(const FFPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  const FieldPtr& ctx = f.ctx();
  std::vector<FFElem> out;
  if (f.degree() == 0) return out;
  FFPoly g = f.monic();
  // X^{q^d} - X where q^d = p^{e d}
  const std::uint64_t ext = static_cast<std::uint64_t>(ctx->base()->e()) * static_cast<std::uint64_t>(ctx->degree());
  const FFPoly x = FFPoly::x(ctx);
  FFPoly xq = char_power(x, ext, g);
  FFPoly lin = gcd(g, xq - x);
  std::mt19937_64 rng(0x5eedULL);
  split_linear(lin, rng, out);
  std::sort(out.begin(), out.end(), [](const FFElem& a, const FFElem& b) { return lex_less(a, b); });
  return out;
}

}  // namespace drinfeld
