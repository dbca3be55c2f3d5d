#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/gfq.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

class FieldCtx;
class FFElem;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// The extension F_{q^d} = F_q[X]/(modulus) of the constant field, with the
/// q-power Frobenius tabulated as d x d matrices over F_q.
///
/// Immutable once built; share freely across threads.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// Validates q and the modulus.  Without a modulus, picks the smallest monic
  /// irreducible of degree d by index order (X for d = 1).
  static FieldPtr create(const GFqPtr& gf, int d, std::optional<BasePoly> modulus = std::nullopt);
  static FieldPtr create(std::uint64_t q, int d, std::optional<BasePoly> modulus = std::nullopt);
  /// Interned default-modulus field of degree d.
  static FieldPtr standard(const GFqPtr& gf, int d);

  const GFqPtr& base() const noexcept { return gf_; }
  std::uint32_t q() const noexcept { return gf_->q(); }
  int degree() const noexcept { return d_; }
  const BasePoly& modulus() const noexcept { return modulus_; }
  /// q^d; throws Unsupported when it does not fit in 64 bits.
  std::uint64_t order() const;

  FFElem zero() const;
  FFElem one() const;
  /// The class of X.
  FFElem generator() const;
  FFElem from_base(Coef c) const;
  /// Reduces an arbitrary polynomial over F_q modulo the modulus.
  FFElem from_poly(const BasePoly& f) const;
  /// Inverse of FFElem::index().
  FFElem from_index(std::uint64_t index) const;

  /// Column-major action of x -> x^{q^i} for 0 <= i < d.
  const FqMatrix& frobenius_matrix(int i) const { return frob_[static_cast<std::size_t>(i)]; }

  bool same_as(const FieldCtx& other) const noexcept {
    return this == &other || (gf_ == other.gf_ && modulus_ == other.modulus_);
  }

 private:
  FieldCtx(GFqPtr gf, int d, BasePoly modulus);
  void build_frobenius();

  GFqPtr gf_;
  int d_;
  BasePoly modulus_;
  std::vector<FqMatrix> frob_;
};

/// An element of F_{q^d}: exactly d coefficients over F_q, reduced modulo the
/// context's modulus.
class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldPtr ctx, std::vector<Coef> coeffs);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const std::vector<Coef>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Integer encoding sum c_i q^i (requires q^d < 2^64).
  std::uint64_t index() const noexcept;
  BasePoly to_poly() const;

  FFElem operator-() const;
  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inv(); }
  FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
  FFElem& operator-=(const FFElem& o) { return *this = *this - o; }
  FFElem& operator*=(const FFElem& o) { return *this = *this * o; }
  FFElem scaled(Coef s) const;

  /// Throws ZeroInverse on 0.
  FFElem inv() const;
  FFElem pow(std::uint64_t k) const;

  friend bool operator==(const FFElem& a, const FFElem& b) noexcept { return a.c_ == b.c_; }

  /// Lexicographic order reading coefficients from the top (matches index()).
  friend bool lex_less(const FFElem& a, const FFElem& b) noexcept;

  std::string to_string(char var = 'X') const;

 private:
  FieldPtr ctx_;
  std::vector<Coef> c_;
};

/// Checks that both elements live in the same field; throws ContextMismatch.
void require_same_field(const FFElem& a, const FFElem& b);

/// x^{q^i}; negative i applies the inverse automorphism.
FFElem frobenius_power(const FFElem& x, int i);

/// True iff x lies in the degree-s subfield (x^{q^s} = x).
bool in_subfield(const FFElem& x, int s);

struct TraceNorm {
  FFElem trace;
  FFElem norm;
};

/// Relative trace and norm from the degree-`over` subfield containing x down
/// to the degree-`sub` subfield (results stay represented in x's field).
/// `over` defaults to the degree of x's field.  Throws NotADivisor.
TraceNorm relative_trace_norm(const FFElem& x, int sub, std::optional<int> over = std::nullopt);

/// Image of x under the cached embedding into `target`, realized by the
/// smallest root of the source modulus in the target.  Throws
/// IncompatibleDegrees.
FFElem embed(const FFElem& x, const FieldPtr& target);

/// Image of the source generator used by `embed`.
FFElem embedding_root(const FieldPtr& source, const FieldPtr& target);

/// Roots of x^{q^h} - x + c = 0 in the smallest extension of c's field that
/// contains one.  `c_embedded` is c in that extension.
struct ArtinSchreierRoots {
  FieldPtr field;
  FFElem c_embedded;
  std::vector<FFElem> roots;  // lex-sorted
};
ArtinSchreierRoots solve_artin_schreier(int h, const FFElem& c);

/// Minimal polynomial over F_q of x.
BasePoly minimal_polynomial(const FFElem& x);

}  // namespace drinfeld
