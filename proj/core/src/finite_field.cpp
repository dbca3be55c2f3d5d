#include "drinfeld/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "drinfeld/error.hpp"
#include "drinfeld/ff_poly.hpp"

namespace drinfeld {

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(GFqPtr gf, int d, BasePoly modulus) : gf_(std::move(gf)), d_(d), modulus_(std::move(modulus)) {
  build_frobenius();
}

FieldPtr FieldCtx::create(const GFqPtr& gf, int d, std::optional<BasePoly> modulus) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  BasePoly f(gf);
  if (modulus) {
    if (modulus->field() != gf || modulus->degree() != d || !modulus->is_monic())
      fail(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(d));
    if (!is_irreducible(*modulus)) fail(ErrorCode::ReducibleModulus, modulus->to_string('X'));
    f = *modulus;
  } else if (d == 1) {
    f = BasePoly::t(gf);
  } else {
    std::uint64_t base = 1;
    for (int i = 0; i < d; ++i) {
      if (base > (~std::uint64_t{0}) / gf->q()) fail(ErrorCode::Unsupported, "extension degree too large");
      base *= gf->q();
    }
    for (std::uint64_t low = 1;; ++low) {
      BasePoly cand = BasePoly::from_index(gf, base + low);
      if (cand.coeff(0) != 0 && is_irreducible(cand)) {
        f = std::move(cand);
        break;
      }
    }
  }
  return FieldPtr(new FieldCtx(gf, d, std::move(f)));
}

FieldPtr FieldCtx::create(std::uint64_t q, int d, std::optional<BasePoly> modulus) {
  return create(GFq::make(q), d, std::move(modulus));
}

FieldPtr FieldCtx::standard(const GFqPtr& gf, int d) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, FieldPtr> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({gf->q(), d}); it != cache.end()) return it->second;
  }
  FieldPtr f = create(gf, d);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(gf->q(), d), f).first->second;
}

void FieldCtx::build_frobenius() {
  const std::size_t d = static_cast<std::size_t>(d_);
  const GFq& gf = *gf_;
  frob_.reserve(d);
  FqMatrix id(gf_, d, d);
  for (std::size_t i = 0; i < d; ++i) id(i, i) = 1;
  frob_.push_back(id);
  if (d == 1) return;
  // columns of x -> x^q: (X^k)^q mod f
  const BasePoly xq = powmod(BasePoly::t(gf_), gf.q(), modulus_);
  FqMatrix m1(gf_, d, d);
  BasePoly col = BasePoly::constant(gf_, 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < d; ++r) m1(r, k) = col.coeff(static_cast<int>(r));
    col = (col * xq) % modulus_;
  }
  for (std::size_t i = 1; i < d; ++i) {
    const FqMatrix& prev = frob_.back();
    FqMatrix next(gf_, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Coef acc = 0;
        for (std::size_t k = 0; k < d; ++k) {
          const Coef a = m1(r, k);
          const Coef b = prev(k, c);
          if (a != 0 && b != 0) acc = gf.add(acc, gf.mul(a, b));
        }
        next(r, c) = acc;
      }
    frob_.push_back(std::move(next));
  }
}

std::uint64_t FieldCtx::order() const {
  std::uint64_t v = 1;
  for (int i = 0; i < d_; ++i) {
    if (v > (~std::uint64_t{0}) / q()) fail(ErrorCode::Unsupported, "field order exceeds 64 bits");
    v *= q();
  }
  return v;
}

FFElem FieldCtx::zero() const { return FFElem(shared_from_this(), std::vector<Coef>(static_cast<std::size_t>(d_), 0)); }

FFElem FieldCtx::one() const { return from_base(1); }

FFElem FieldCtx::generator() const { return from_poly(BasePoly::t(gf_)); }

FFElem FieldCtx::from_base(Coef c) const {
  std::vector<Coef> v(static_cast<std::size_t>(d_), 0);
  v[0] = c;
  return FFElem(shared_from_this(), std::move(v));
}

FFElem FieldCtx::from_poly(const BasePoly& f) const {
  const BasePoly r = f.degree() >= d_ ? f % modulus_ : f;
  std::vector<Coef> v(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i <= r.degree(); ++i) v[static_cast<std::size_t>(i)] = r.coeff(i);
  return FFElem(shared_from_this(), std::move(v));
}

FFElem FieldCtx::from_index(std::uint64_t index) const {
  std::vector<Coef> v(static_cast<std::size_t>(d_), 0);
  for (auto& c : v) {
    c = static_cast<Coef>(index % q());
    index /= q();
  }
  return FFElem(shared_from_this(), std::move(v));
}

// ---------------------------------------------------------------- FFElem

FFElem::FFElem(FieldPtr ctx, std::vector<Coef> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  const auto d = static_cast<std::size_t>(ctx_->degree());
  if (c_.size() > d) {
    *this = ctx_->from_poly(BasePoly(ctx_->base(), c_));
    return;
  }
  c_.resize(d, 0);
}

void require_same_field(const FFElem& a, const FFElem& b) {
  if (!a.ctx() || !b.ctx() || !a.ctx()->same_as(*b.ctx()))
    fail(ErrorCode::ContextMismatch, "elements of different fields");
}

bool FFElem::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Coef c) { return c == 0; });
}

bool FFElem::is_one() const noexcept {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coef c) { return c == 0; });
}

std::uint64_t FFElem::index() const noexcept {
  std::uint64_t v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * ctx_->q() + *it;
  return v;
}

BasePoly FFElem::to_poly() const { return BasePoly(ctx_->base(), c_); }

FFElem FFElem::operator-() const {
  const GFq& gf = *ctx_->base();
  std::vector<Coef> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = gf.neg(c_[i]);
  return FFElem(ctx_, std::move(v));
}

FFElem operator+(const FFElem& a, const FFElem& b) {
  require_same_field(a, b);
  const GFq& gf = *a.ctx_->base();
  std::vector<Coef> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = gf.add(a.c_[i], b.c_[i]);
  return FFElem(a.ctx_, std::move(v));
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  require_same_field(a, b);
  const GFq& gf = *a.ctx_->base();
  std::vector<Coef> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = gf.sub(a.c_[i], b.c_[i]);
  return FFElem(a.ctx_, std::move(v));
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  require_same_field(a, b);
  const GFq& gf = *a.ctx_->base();
  const std::size_t d = a.c_.size();
  if (d == 1) return FFElem(a.ctx_, {gf.mul(a.c_[0], b.c_[0])});
  std::vector<Coef> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const Coef ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] = gf.add(prod[i + j], gf.mul(ai, b.c_[j]));
  }
  const auto& m = a.ctx_->modulus().coeffs();  // monic, size d + 1
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    const Coef c = prod[k];
    if (c != 0) {
      prod[k] = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (m[i] != 0) prod[k - d + i] = gf.sub(prod[k - d + i], gf.mul(c, m[i]));
    }
  }
  prod.resize(d);
  return FFElem(a.ctx_, std::move(prod));
}

FFElem FFElem::scaled(Coef s) const {
  const GFq& gf = *ctx_->base();
  std::vector<Coef> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = gf.mul(c_[i], s);
  return FFElem(ctx_, std::move(v));
}

FFElem FFElem::inv() const {
  if (is_zero()) fail(ErrorCode::ZeroInverse, "inverse of 0");
  if (c_.size() == 1) return FFElem(ctx_, {ctx_->base()->inv(c_[0])});
  const ExtGcd eg = ext_gcd(to_poly(), ctx_->modulus());
  return ctx_->from_poly(eg.s);
}

FFElem FFElem::pow(std::uint64_t k) const {
  FFElem result = ctx_->one();
  FFElem base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool lex_less(const FFElem& a, const FFElem& b) noexcept {
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string FFElem::to_string(char var) const { return to_poly().to_string(var); }

// ---------------------------------------------------------------- maps

FFElem frobenius_power(const FFElem& x, int i) {
  const int d = x.ctx()->degree();
  int r = i % d;
  if (r < 0) r += d;
  if (r == 0) return x;
  return FFElem(x.ctx(), x.ctx()->frobenius_matrix(r).apply(x.coeffs()));
}

bool in_subfield(const FFElem& x, int s) { return frobenius_power(x, s) == x; }

TraceNorm relative_trace_norm(const FFElem& x, int sub, std::optional<int> over) {
  const int d = x.ctx()->degree();
  const int top = over.value_or(d);
  if (top < 1 || d % top != 0) fail(ErrorCode::NotADivisor, std::to_string(top) + " does not divide " + std::to_string(d));
  if (sub < 1 || top % sub != 0)
    fail(ErrorCode::NotADivisor, std::to_string(sub) + " does not divide " + std::to_string(top));
  if (top != d && !in_subfield(x, top)) fail(ErrorCode::InvalidArgument, "element not in the stated subfield");
  FFElem trace = x.ctx()->zero();
  FFElem norm = x.ctx()->one();
  for (int k = 0; k < top / sub; ++k) {
    const FFElem c = frobenius_power(x, sub * k);
    trace += c;
    norm *= c;
  }
  return {trace, norm};
}

FFElem embedding_root(const FieldPtr& source, const FieldPtr& target) {
  if (target->degree() % source->degree() != 0 || source->base() != target->base())
    fail(ErrorCode::IncompatibleDegrees,
         "cannot embed degree " + std::to_string(source->degree()) + " into degree " + std::to_string(target->degree()));
  using Key = std::tuple<std::uint32_t, std::vector<Coef>, std::vector<Coef>>;
  static std::mutex mu;
  static std::map<Key, std::vector<Coef>> cache;
  Key key{source->q(), source->modulus().coeffs(), target->modulus().coeffs()};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return FFElem(target, it->second);
  }
  const auto rs = roots(FFPoly::from_base(target, source->modulus()));
  if (rs.empty()) fail(ErrorCode::IncompatibleDegrees, "source modulus has no root in target");
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), rs.front().coeffs());
  return rs.front();
}

FFElem embed(const FFElem& x, const FieldPtr& target) {
  const FieldPtr& src = x.ctx();
  if (src->same_as(*target)) return FFElem(target, x.coeffs());
  if (src->degree() == 1) {
    if (src->base() != target->base()) fail(ErrorCode::IncompatibleDegrees, "different constant fields");
    return target->from_base(x.coeffs()[0]);
  }
  const FFElem r = embedding_root(src, target);
  FFElem acc = target->zero();
  for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it) acc = acc * r + target->from_base(*it);
  return acc;
}

ArtinSchreierRoots solve_artin_schreier(int h, const FFElem& c) {
  if (h < 1) fail(ErrorCode::InvalidArgument, "Artin-Schreier exponent must be positive");
  const FieldPtr& src = c.ctx();
  const GFqPtr& gf = src->base();
  const int d = src->degree();
  const int kmax = std::lcm(d, h) / d * static_cast<int>(gf->p());
  for (int k = 1; k <= kmax; ++k) {
    const int e = d * k;
    FieldPtr field = k == 1 ? src : FieldCtx::standard(gf, e);
    const FFElem ce = embed(c, field);
    const auto n = static_cast<std::size_t>(e);
    FqMatrix a = field->frobenius_matrix(h % e);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = gf->sub(a(i, i), 1);
    std::vector<Coef> rhs = (-ce).coeffs();
    auto sol = solve(a, rhs);
    if (!sol) continue;
    // x0 + span(kernel)
    const std::size_t dim = sol->kernel.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) count *= gf->q();
    std::vector<FFElem> roots_out;
    roots_out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Coef> v = sol->particular;
      std::uint64_t rest = idx;
      for (std::size_t b = 0; b < dim; ++b) {
        const Coef coef = static_cast<Coef>(rest % gf->q());
        rest /= gf->q();
        if (coef == 0) continue;
        for (std::size_t i = 0; i < n; ++i) v[i] = gf->add(v[i], gf->mul(coef, sol->kernel[b][i]));
      }
      roots_out.emplace_back(field, std::move(v));
    }
    std::sort(roots_out.begin(), roots_out.end(), [](const FFElem& x, const FFElem& y) { return lex_less(x, y); });
    return {field, ce, std::move(roots_out)};
  }
  fail(ErrorCode::NoSolution, "Artin-Schreier equation unsolved within the expected extension");
}

BasePoly minimal_polynomial(const FFElem& x) {
  const FieldPtr& ctx = x.ctx();
  std::vector<FFElem> conj{x};
  for (int i = 1; i < ctx->degree(); ++i) {
    FFElem c = frobenius_power(x, i);
    if (c == x) break;
    conj.push_back(std::move(c));
  }
  FFPoly m(ctx, {ctx->one()});
  for (const auto& c : conj) m = m * FFPoly(ctx, {-c, ctx->one()});
  std::vector<Coef> v;
  for (const auto& coef : m.coeffs()) {
    for (std::size_t i = 1; i < coef.coeffs().size(); ++i)
      if (coef.coeffs()[i] != 0) fail(ErrorCode::InvalidArgument, "minimal polynomial not over F_q");
    v.push_back(coef.coeffs()[0]);
  }
  return BasePoly(ctx->base(), std::move(v));
}

}  // namespace drinfeld
