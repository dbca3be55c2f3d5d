#include "drinfeld/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/error.hpp"

namespace drinfeld {

LaurentSeries::LaurentSeries(FieldPtr ctx, int lead, std::vector<FFElem> coeffs)
    : ctx_(std::move(ctx)), lead_(lead), c_(std::move(coeffs)) {
  std::size_t skip = 0;
  while (skip < c_.size() && c_[skip].is_zero()) ++skip;
  if (skip > 0) {
    lead_ += static_cast<int>(skip);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
  }
}

LaurentSeries LaurentSeries::zero(FieldPtr ctx, int absolute_precision) {
  return LaurentSeries(std::move(ctx), absolute_precision, {});
}

LaurentSeries LaurentSeries::constant(const FFElem& c, int precision) {
  if (c.is_zero()) return zero(c.ctx(), precision);
  std::vector<FFElem> v(static_cast<std::size_t>(precision), c.ctx()->zero());
  v[0] = c;
  return LaurentSeries(c.ctx(), 0, std::move(v));
}

LaurentSeries LaurentSeries::one(FieldPtr ctx, int precision) { return constant(ctx->one(), precision); }

LaurentSeries LaurentSeries::pi_power(FieldPtr ctx, int k, int precision) {
  std::vector<FFElem> v(static_cast<std::size_t>(precision), ctx->zero());
  v[0] = ctx->one();
  return LaurentSeries(std::move(ctx), k, std::move(v));
}

FFElem LaurentSeries::coeff(int k) const {
  if (k >= absolute_precision())
    fail(ErrorCode::PrecisionExhausted,
         "coefficient pi^" + std::to_string(k) + " beyond precision " + std::to_string(absolute_precision()));
  if (k < lead_) return ctx_->zero();
  return c_[static_cast<std::size_t>(k - lead_)];
}

std::vector<FFElem> LaurentSeries::residue(int j) const {
  if (!is_zero() && lead_ < 0) fail(ErrorCode::InvalidArgument, "residue of a non-integral series");
  std::vector<FFElem> out;
  out.reserve(static_cast<std::size_t>(j));
  for (int k = 0; k < j; ++k) out.push_back(coeff(k));
  return out;
}

LaurentSeries LaurentSeries::truncated(int n) const {
  if (n > absolute_precision()) fail(ErrorCode::PrecisionExhausted, "truncation beyond known precision");
  if (n <= lead_) return zero(ctx_, n);
  std::vector<FFElem> v(c_.begin(), c_.begin() + (n - lead_));
  return LaurentSeries(ctx_, lead_, std::move(v));
}

LaurentSeries LaurentSeries::map_coeffs(const std::function<FFElem(const FFElem&)>& f) const {
  std::vector<FFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(f(c));
  return LaurentSeries(ctx_, lead_, std::move(v));
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<FFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return LaurentSeries(ctx_, lead_, std::move(v));
}

namespace {

LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  const FieldPtr& ctx = a.ctx();
  const int abs = std::min(a.absolute_precision(), b.absolute_precision());
  const int lo = std::min(a.is_zero() ? abs : a.lead(), b.is_zero() ? abs : b.lead());
  if (lo >= abs) return LaurentSeries::zero(ctx, abs);
  std::vector<FFElem> v;
  v.reserve(static_cast<std::size_t>(abs - lo));
  for (int k = lo; k < abs; ++k) {
    FFElem x = a.coeff(k);
    const FFElem y = b.coeff(k);
    v.push_back(subtract ? x - y : x + y);
  }
  LaurentSeries r(ctx, lo, std::move(v));
  return r.is_zero() ? LaurentSeries::zero(ctx, abs) : r;
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, false); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, true); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const FieldPtr& ctx = a.ctx();
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(ctx, a.lead_ + b.lead_);
  if (a.is_zero()) return LaurentSeries::zero(ctx, a.lead_ + b.lead_);
  if (b.is_zero()) return LaurentSeries::zero(ctx, a.lead_ + b.lead_);
  const std::size_t prec = std::min(a.c_.size(), b.c_.size());
  std::vector<FFElem> v(prec, ctx->zero());
  for (std::size_t i = 0; i < prec; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < prec; ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentSeries(ctx, a.lead_ + b.lead_, std::move(v));
}

LaurentSeries LaurentSeries::scaled(const FFElem& s) const {
  if (s.is_zero()) return zero(ctx_, absolute_precision());
  std::vector<FFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * s);
  return LaurentSeries(ctx_, lead_, std::move(v));
}

LaurentSeries LaurentSeries::inv() const {
  if (is_zero()) fail(ErrorCode::InverseOfZero, "inverse of a series that is zero to precision");
  const std::size_t prec = c_.size();
  const FFElem inv0 = c_[0].inv();
  std::vector<FFElem> v(prec, ctx_->zero());
  v[0] = inv0;
  for (std::size_t k = 1; k < prec; ++k) {
    FFElem acc = ctx_->zero();
    for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * v[k - i];
    v[k] = -(acc * inv0);
  }
  return LaurentSeries(ctx_, -lead_, std::move(v));
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[i].to_string() << ")*pi^" << lead_ + static_cast<int>(i);
  }
  if (!first) os << " + ";
  os << "O(pi^" << absolute_precision() << ')';
  return os.str();
}

bool equal_to_precision(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_zero(); }

FieldPtr constant_field(const GFqPtr& gf) { return FieldCtx::standard(gf, 1); }

LaurentSeries expand_at_infinity(const RationalFunction& f, int precision) {
  if (f.den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const GFqPtr& gf = f.den.field();
  FieldPtr k = constant_field(gf);
  if (f.num.is_zero()) return LaurentSeries::zero(k, precision);
  // f = pi^{deg den - deg num} * rev(num)(pi) / rev(den)(pi)
  const int dn = f.num.degree();
  const int dd = f.den.degree();
  const auto p = static_cast<std::size_t>(precision);
  std::vector<Coef> rn(p, 0), rd(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    rn[i] = f.num.coeff(dn - static_cast<int>(i));
    rd[i] = f.den.coeff(dd - static_cast<int>(i));
  }
  // power series division rn / rd, rd[0] = lead(den) != 0
  const Coef inv0 = gf->inv(rd[0]);
  std::vector<Coef> out(p, 0);
  for (std::size_t k2 = 0; k2 < p; ++k2) {
    Coef acc = rn[k2];
    for (std::size_t i = 1; i <= k2; ++i) acc = gf->sub(acc, gf->mul(rd[i], out[k2 - i]));
    out[k2] = gf->mul(acc, inv0);
  }
  std::vector<FFElem> v;
  v.reserve(p);
  for (Coef c : out) v.push_back(k->from_base(c));
  return LaurentSeries(k, dd - dn, std::move(v));
}

LaurentSeries expand_at_infinity(const BasePoly& f, int precision) {
  return expand_at_infinity(RationalFunction{f, BasePoly::constant(f.field(), 1)}, precision);
}

}  // namespace drinfeld
