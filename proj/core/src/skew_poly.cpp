#include "drinfeld/skew_poly.hpp"

#include <sstream>

#include "drinfeld/ff_poly.hpp"

namespace drinfeld {

FFElem skew_apply(const SkewPolyL& f, const FFElem& x) {
  const FieldPtr& target = x.ctx();
  FFElem acc = target->zero();
  FFElem power = x;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i > 0) power = frobenius_power(power, 1);
    const FFElem& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    acc += embed(c, target) * power;
  }
  return acc;
}

// ---------------------------------------------------------------- Laurent in 1/tau

SkewLaurentTrunc::SkewLaurentTrunc(FieldPtr ctx, int lead, std::vector<FFElem> coeffs)
    : ctx_(std::move(ctx)), lead_(lead), c_(std::move(coeffs)) {
  std::size_t skip = 0;
  while (skip < c_.size() && c_[skip].is_zero()) ++skip;
  if (skip > 0) {
    lead_ -= static_cast<int>(skip);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
  }
}

SkewLaurentTrunc SkewLaurentTrunc::zero(FieldPtr ctx, int floor) { return SkewLaurentTrunc(std::move(ctx), floor, {}); }

SkewLaurentTrunc SkewLaurentTrunc::one(FieldPtr ctx, int precision) { return tau(std::move(ctx), 0, precision); }

SkewLaurentTrunc SkewLaurentTrunc::tau(FieldPtr ctx, int h, int precision) {
  std::vector<FFElem> v(static_cast<std::size_t>(precision), ctx->zero());
  if (!v.empty()) v[0] = ctx->one();
  return SkewLaurentTrunc(std::move(ctx), h, std::move(v));
}

SkewLaurentTrunc SkewLaurentTrunc::from_poly(const SkewPolyL& f, int precision) {
  if (f.is_zero()) return zero(f.ctx(), -precision);
  std::vector<FFElem> v;
  v.reserve(static_cast<std::size_t>(precision));
  for (int k = 0; k < precision; ++k) v.push_back(f.coeff(f.degree() - k));
  return SkewLaurentTrunc(f.ctx(), f.degree(), std::move(v));
}

FFElem SkewLaurentTrunc::coeff(int e) const {
  if (e <= floor())
    fail(ErrorCode::PrecisionExhausted,
         "coefficient tau^" + std::to_string(e) + " at or below the floor " + std::to_string(floor()));
  if (e > lead_) return ctx_->zero();
  return c_[static_cast<std::size_t>(lead_ - e)];
}

namespace {

SkewLaurentTrunc add_impl(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b, bool subtract) {
  SkewTraits<FFElem>::check_same(a.ctx(), b.ctx());
  const int fl = std::max(a.floor(), b.floor());
  const int top = std::max(a.lead(), b.lead());
  if (top <= fl) return SkewLaurentTrunc::zero(a.ctx(), fl);
  std::vector<FFElem> v;
  v.reserve(static_cast<std::size_t>(top - fl));
  for (int e = top; e > fl; --e) v.push_back(subtract ? a.coeff(e) - b.coeff(e) : a.coeff(e) + b.coeff(e));
  SkewLaurentTrunc r(a.ctx(), top, std::move(v));
  return r.is_zero() ? SkewLaurentTrunc::zero(a.ctx(), fl) : r;
}

}  // namespace

SkewLaurentTrunc operator+(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b) { return add_impl(a, b, false); }
SkewLaurentTrunc operator-(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b) { return add_impl(a, b, true); }

SkewLaurentTrunc SkewLaurentTrunc::operator-() const {
  std::vector<FFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return SkewLaurentTrunc(ctx_, lead_, std::move(v));
}

SkewLaurentTrunc operator*(const SkewLaurentTrunc& a, const SkewLaurentTrunc& b) {
  SkewTraits<FFElem>::check_same(a.ctx_, b.ctx_);
  // a zero value stores its floor as lead, so the bound is lead_a + lead_b in every case
  if (a.is_zero() || b.is_zero()) return SkewLaurentTrunc::zero(a.ctx_, a.lead_ + b.lead_);
  const std::size_t prec = std::min(a.c_.size(), b.c_.size());
  std::vector<FFElem> v(prec, a.ctx_->zero());
  for (std::size_t i = 0; i < prec; ++i) {
    if (a.c_[i].is_zero()) continue;
    // a_i tau^{lead_a - i} * b_j tau^{...} = a_i b_j^{q^{lead_a - i}} tau^{...}
    const int shift = a.lead_ - static_cast<int>(i);
    for (std::size_t j = 0; i + j < prec; ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * frobenius_power(b.c_[j], shift);
    }
  }
  return SkewLaurentTrunc(a.ctx_, a.lead_ + b.lead_, std::move(v));
}

SkewLaurentTrunc SkewLaurentTrunc::inv() const {
  if (is_zero()) fail(ErrorCode::InverseOfZero, "inverse of a truncation that is zero to precision");
  // x = s * tau^lead with s = sum c_k tau^{-k}; x^{-1} = tau^{-lead} * s^{-1}.
  const std::size_t prec = c_.size();
  const FFElem inv0 = c_[0].inv();
  std::vector<FFElem> y(prec, ctx_->zero());
  y[0] = inv0;
  for (std::size_t n = 1; n < prec; ++n) {
    FFElem acc = ctx_->zero();
    for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * frobenius_power(y[n - k], -static_cast<int>(k));
    y[n] = -(acc * inv0);
  }
  for (auto& c : y) c = frobenius_power(c, -lead_);
  return SkewLaurentTrunc(ctx_, -lead_, std::move(y));
}

std::string SkewLaurentTrunc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[i].to_string('w') << ")*tau^" << lead_ - static_cast<int>(i);
  }
  if (!first) os << " + ";
  os << "O(tau^" << floor() << ')';
  return os.str();
}

int ord_tau_inv(const SkewLaurentTrunc& x) { return -x.lead(); }

bool equal_to_precision(const SkewLaurentTrunc& x, const SkewLaurentTrunc& y) { return (x - y).is_zero(); }

bool commutes(const SkewLaurentTrunc& f, const SkewLaurentTrunc& g) { return equal_to_precision(f * g, g * f); }

// ---------------------------------------------------------------- conjugation

FFElem ConjugationResult::transport(const FFElem& x) const {
  FFElem acc = field->zero();
  for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it)
    acc = acc * base_generator + field->from_base(*it);
  return acc;
}

SkewPolyL ConjugationResult::transport(const SkewPolyL& f) const {
  std::vector<FFElem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(transport(c));
  return SkewPolyL(field, std::move(v));
}

ConjugationResult conjugate_to_constants(const SkewPolyL& phi_y, int prec) {
  const int h = phi_y.degree();
  if (h < 1) fail(ErrorCode::InvalidArgument, "conjugation needs tau-degree at least 1");
  if (prec < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  const FieldPtr& base = phi_y.ctx();
  const GFqPtr& gf = base->base();

  ConjugationResult res;
  res.h = h;
  res.field = base;
  res.base_generator = base->generator();
  std::vector<FFElem> b = phi_y.coeffs();

  auto grow = [&](const FieldPtr& next) {
    if (next->same_as(*res.field)) return;
    res.base_generator = embed(res.base_generator, next);
    for (auto& c : b) c = embed(c, next);
    for (auto& c : res.a) c = embed(c, next);
    res.delta = embed(res.delta, next);
    res.field = next;
  };

  // delta^{q^h - 1} = 1 / b_h
  std::uint64_t qh = 1;
  for (int i = 0; i < h; ++i) qh *= gf->q();
  bool found = false;
  for (int k = 1; k <= 64 && !found; ++k) {
    FieldPtr f = k == 1 ? res.field : FieldCtx::standard(gf, res.field->degree() * k);
    const FFElem target = embed(b[static_cast<std::size_t>(h)].inv(), f);
    std::vector<FFElem> coeffs(static_cast<std::size_t>(qh), f->zero());
    coeffs[0] = -target;
    coeffs.back() = f->one();
    const auto rs = roots(FFPoly(f, std::move(coeffs)));
    if (rs.empty()) continue;
    res.base_generator = embed(res.base_generator, f);
    for (auto& c : b) c = embed(c, f);
    res.field = f;
    res.delta = rs.front();
    found = true;
  }
  if (!found) fail(ErrorCode::NoSolution, "no solution of delta^{q^h-1} = 1/b_h in the searched extensions");

  // twisted coefficients b'_j = delta^{-1} b_j delta^{q^j}
  auto twisted = [&]() {
    std::vector<FFElem> bt;
    const FFElem dinv = res.delta.inv();
    for (int j = 0; j <= h; ++j) bt.push_back(dinv * b[static_cast<std::size_t>(j)] * frobenius_power(res.delta, j));
    return bt;
  };

  res.a.push_back(res.field->one());
  for (int i = 1; i < prec; ++i) {
    const std::vector<FFElem> bt = twisted();
    FFElem c = res.field->zero();
    for (int j = 0; j < h; ++j) {
      const int idx = i + j - h;
      if (idx < 0) continue;
      c += bt[static_cast<std::size_t>(j)] * frobenius_power(res.a[static_cast<std::size_t>(idx)], j);
    }
    auto sol = solve_artin_schreier(h, c);
    grow(sol.field);
    res.a.push_back(sol.roots.front());
  }

  std::vector<FFElem> uc;
  uc.reserve(res.a.size());
  for (const auto& ai : res.a) uc.push_back(res.delta * ai);
  res.u = SkewLaurentTrunc(res.field, 0, std::move(uc));

  // phi_y u = u tau^h to precision
  const SkewPolyL phi_k(res.field, b);
  const auto lhs = SkewLaurentTrunc::from_poly(phi_k, prec + h + 1) * res.u;
  const auto rhs = res.u * SkewLaurentTrunc::tau(res.field, h, prec + h + 1);
  if (!equal_to_precision(lhs, rhs))
    fail(ErrorCode::InvalidArgument, "conjugation identity failed: " + (lhs - rhs).to_string());
  return res;
}

}  // namespace drinfeld
