#include "drinfeld/gfq.hpp"

#include <map>
#include <mutex>
#include <string>

#include "drinfeld/error.hpp"

namespace drinfeld {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint32_t kMaxTabulatedQ = 256;

// Digit-vector helpers for F_p[x] used only while building the tables.
using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
  Digits d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Multiply two residues of F_p[x]/(g), g monic of degree e.
Digits mul_mod(const Digits& a, const Digits& b, const Digits& g, std::uint32_t p) {
  const std::size_t e = g.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t k = 2 * e - 1; k >= e && k > 0; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - g[i]) * c) % p;
  }
  Digits out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// Irreducibility over F_p by brute force: no monic factor of degree <= e/2.
bool irreducible_small(const Digits& g, std::uint32_t p) {
  const std::size_t e = g.size() - 1;
  for (std::size_t k = 1; 2 * k <= e; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits f(k + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[k] = 1;
      // remainder of g by f
      std::vector<std::int64_t> r(g.begin(), g.end());
      for (std::size_t top = e; top >= k; --top) {
        const std::int64_t c = r[top];
        if (c != 0)
          for (std::size_t i = 0; i <= k; ++i)
            r[top - k + i] = ((r[top - k + i] - c * f[i]) % static_cast<std::int64_t>(p) + p) % p;
        if (top == k) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

GFq::GFq(std::uint32_t q, std::uint32_t p, std::uint32_t e) : q_(q), p_(p), e_(e) {
  if (e_ == 1) return;
  // Smallest monic irreducible of degree e over F_p by integer encoding.
  std::uint32_t pe = 1;
  for (std::uint32_t i = 0; i < e_; ++i) pe *= p_;
  for (std::uint32_t low = 0; low < pe; ++low) {
    Digits g = to_digits(low, p_, e_);
    g.push_back(1);
    if (irreducible_small(g, p_)) {
      def_poly_ = g;
      break;
    }
  }
  add_table_.resize(std::size_t{q_} * q_);
  mul_table_.resize(std::size_t{q_} * q_);
  neg_table_.resize(q_);
  inv_table_.assign(q_, 0);
  std::vector<Digits> digits(q_);
  for (std::uint32_t a = 0; a < q_; ++a) digits[a] = to_digits(a, p_, e_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits n(e_);
    for (std::uint32_t i = 0; i < e_; ++i) n[i] = (p_ - digits[a][i]) % p_;
    neg_table_[a] = from_digits(n, p_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Digits s(e_);
      for (std::uint32_t i = 0; i < e_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_table_[a * q_ + b] = from_digits(s, p_);
      mul_table_[a * q_ + b] = from_digits(mul_mod(digits[a], digits[b], def_poly_, p_), p_);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = b;
        break;
      }
}

GFqPtr GFq::make(std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::uint64_t, GFqPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;

  if (q < 2 || q > 0x7fffffffULL) fail(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) fail(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
  if (e > 1 && q > kMaxTabulatedQ)
    fail(ErrorCode::Unsupported, "prime-power constant fields are limited to q <= 256");
  GFqPtr f(new GFq(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(p), e));
  cache.emplace(q, f);
  return f;
}

Coef GFq::inv(Coef a) const {
  if (a == 0) fail(ErrorCode::ZeroInverse, "inverse of 0 in F_q");
  if (e_ > 1) return inv_table_[a];
  // Fermat in the prime field
  return pow(a, p_ - 2);
}

Coef GFq::pow(Coef a, std::uint64_t k) const noexcept {
  Coef result = 1;
  Coef base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coef GFq::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  // The prime subfield of the tabulated representation is the constants,
  // whose index is the digit itself.
  return static_cast<Coef>(r);
}

}  // namespace drinfeld
