#include "drinfeld/base_poly.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

const GFqPtr& pick(const BasePoly& a, const BasePoly& b) {
  if (a.field() && b.field() && a.field() != b.field())
    fail(ErrorCode::ContextMismatch, "polynomials over different constant fields");
  return a.field() ? a.field() : b.field();
}

}  // namespace

BasePoly::BasePoly(GFqPtr gf, std::vector<Coef> coeffs) : gf_(std::move(gf)), c_(std::move(coeffs)) {
  normalize();
}

void BasePoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BasePoly BasePoly::constant(GFqPtr gf, Coef c) { return BasePoly(std::move(gf), std::vector<Coef>{c}); }

BasePoly BasePoly::monomial(GFqPtr gf, int degree, Coef c) {
  std::vector<Coef> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return BasePoly(std::move(gf), std::move(v));
}

BasePoly BasePoly::from_index(GFqPtr gf, std::uint64_t index) {
  std::vector<Coef> v;
  const std::uint64_t q = gf->q();
  while (index > 0) {
    v.push_back(static_cast<Coef>(index % q));
    index /= q;
  }
  return BasePoly(std::move(gf), std::move(v));
}

std::uint64_t BasePoly::index() const noexcept {
  std::uint64_t v = 0;
  const std::uint64_t q = gf_ ? gf_->q() : 2;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * q + *it;
  return v;
}

BasePoly BasePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(gf_->inv(lead()));
}

BasePoly BasePoly::scaled(Coef s) const {
  std::vector<Coef> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = gf_->mul(c_[i], s);
  return BasePoly(gf_, std::move(v));
}

BasePoly BasePoly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Coef> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return BasePoly(gf_, std::move(v));
}

BasePoly BasePoly::derivative() const {
  if (c_.size() <= 1) return BasePoly(gf_);
  std::vector<Coef> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = gf_->mul(gf_->from_int(static_cast<std::int64_t>(i)), c_[i]);
  return BasePoly(gf_, std::move(v));
}

BasePoly BasePoly::frobenius(int i) const {
  if (is_zero() || i == 0 || degree() == 0) return *this;
  std::uint64_t step = 1;
  for (int k = 0; k < i; ++k) step *= gf_->q();
  std::vector<Coef> v(static_cast<std::size_t>(degree() * step + 1), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) v[k * step] = c_[k];
  return BasePoly(gf_, std::move(v));
}

Coef BasePoly::eval(Coef x) const noexcept {
  Coef acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = gf_->add(gf_->mul(acc, x), *it);
  return acc;
}

BasePoly BasePoly::operator-() const {
  std::vector<Coef> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = gf_->neg(c_[i]);
  return BasePoly(gf_, std::move(v));
}

BasePoly operator+(const BasePoly& a, const BasePoly& b) {
  const GFqPtr& gf = pick(a, b);
  std::vector<Coef> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = gf->add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
  return BasePoly(gf, std::move(v));
}

BasePoly operator-(const BasePoly& a, const BasePoly& b) {
  const GFqPtr& gf = pick(a, b);
  std::vector<Coef> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = gf->sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
  return BasePoly(gf, std::move(v));
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  const GFqPtr& gf = pick(a, b);
  if (a.is_zero() || b.is_zero()) return BasePoly(gf);
  std::vector<Coef> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = gf->add(v[i + j], gf->mul(a.c_[i], b.c_[j]));
  }
  return BasePoly(gf, std::move(v));
}

bool operator<(const BasePoly& a, const BasePoly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ai = a.coeff(i);
    const auto bi = b.coeff(i);
    if (ai != bi) return ai < bi;
  }
  return false;
}

std::string BasePoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Coef c = coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::pair<BasePoly, BasePoly> divmod(const BasePoly& f, const BasePoly& g) {
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by 0");
  const GFqPtr& gf = pick(f, g);
  if (f.degree() < g.degree()) return {BasePoly(gf), f};
  std::vector<Coef> r = f.coeffs();
  const auto& gc = g.coeffs();
  const int dg = g.degree();
  const Coef inv_lead = gf->inv(g.lead());
  std::vector<Coef> quot(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
  for (int k = f.degree(); k >= dg; --k) {
    const Coef c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Coef m = gf->mul(c, inv_lead);
    quot[static_cast<std::size_t>(k - dg)] = m;
    for (int i = 0; i <= dg; ++i) {
      auto& slot = r[static_cast<std::size_t>(k - dg + i)];
      slot = gf->sub(slot, gf->mul(m, gc[static_cast<std::size_t>(i)]));
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {BasePoly(gf, std::move(quot)), BasePoly(gf, std::move(r))};
}

BasePoly operator%(const BasePoly& f, const BasePoly& g) { return divmod(f, g).second; }

BasePoly gcd(const BasePoly& f, const BasePoly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::DivisionByZero, "gcd(0, 0)");
  BasePoly a = f;
  BasePoly b = g;
  while (!b.is_zero()) {
    BasePoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const BasePoly& f, const BasePoly& h) {
  const GFqPtr& gf = pick(f, h);
  if (f.is_zero() && h.is_zero()) fail(ErrorCode::DivisionByZero, "ext_gcd(0, 0)");
  BasePoly r0 = f, r1 = h;
  BasePoly s0 = BasePoly::constant(gf, 1), s1(gf);
  BasePoly t0(gf), t1 = BasePoly::constant(gf, 1);
  while (!r1.is_zero()) {
    auto [qt, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    BasePoly s2 = s0 - qt * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    BasePoly t2 = t0 - qt * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Coef inv = gf->inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

BasePoly powmod(const BasePoly& base, std::uint64_t e, const BasePoly& m) {
  BasePoly result = BasePoly::constant(m.field(), 1) % m;
  BasePoly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

BasePoly frobenius_mod(const BasePoly& x, int k, const BasePoly& m) {
  BasePoly r = x % m;
  for (int i = 0; i < k; ++i) r = powmod(r, m.field()->q(), m);
  return r;
}

bool is_irreducible(const BasePoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const GFqPtr& gf = f.field();
  const BasePoly t = BasePoly::t(gf);
  BasePoly x = t % f;
  for (int i = 1; 2 * i <= d; ++i) {
    x = powmod(x, gf->q(), f);
    if (gcd(f, x - t).degree() > 0) return false;
  }
  return true;
}

std::vector<BasePoly> irreducible_monics(const GFqPtr& gf, int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "irreducible_monics requires d >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= gf->q();
  std::vector<BasePoly> out;
  out.reserve(static_cast<std::size_t>(necklace_count(gf->q(), d)));
  for (std::uint64_t low = 0; low < count; ++low) {
    BasePoly f = BasePoly::from_index(gf, low + count);
    // cheap sieve: skip polynomials with a root in F_q (for d >= 2)
    if (d >= 2 && f.coeff(0) == 0) continue;
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

int mobius(int n) noexcept {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t necklace_count(std::uint64_t q, int d) {
  std::int64_t sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= static_cast<std::int64_t>(q);
    sum += mobius(e) * pw;
  }
  return static_cast<std::uint64_t>(sum / d);
}

Factorization factor(const BasePoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "factor(0)");
  Factorization out;
  out.unit = f.lead();
  BasePoly rest = f.monic();
  for (int d = 1; rest.degree() > 0; ++d) {
    if (2 * d > rest.degree()) {
      out.factors.emplace_back(rest, 1);
      break;
    }
    for (const auto& p : irreducible_monics(f.field(), d)) {
      int mult = 0;
      while (true) {
        auto [qt, r] = divmod(rest, p);
        if (!r.is_zero()) break;
        rest = std::move(qt);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(p, mult);
      if (rest.degree() == 0) break;
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

OrdInf ord_inf(const BasePoly& f) {
  if (f.is_zero()) return std::nullopt;
  return -f.degree();
}

OrdInf ord_inf(const RationalFunction& f) {
  if (f.den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (f.num.is_zero()) return std::nullopt;
  return f.den.degree() - f.num.degree();
}

}  // namespace drinfeld
