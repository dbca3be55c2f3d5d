#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drinfeld/laurent.hpp"

namespace drinfeld {

class DivAlgCtx;
using DivAlgPtr = std::shared_ptr<const DivAlgCtx>;

/// The central division algebra over F_inf = F_q((pi)) of invariant -1/n in
/// its cyclic form W + W beta + ... + W beta^{n-1}, where W = F_{q^n}((pi)),
/// beta^n = pi and beta a beta^{-1} = sigma(a) for the coefficientwise
/// q-power Frobenius sigma.
class DivAlgCtx {
 public:
  static DivAlgPtr create(const GFqPtr& gf, int n, int precision);

  const GFqPtr& base() const noexcept { return gf_; }
  int n() const noexcept { return n_; }
  int precision() const noexcept { return prec_; }
  /// Coefficient field F_{q^n} of W.
  const FieldPtr& residue_field() const noexcept { return w_; }
  /// F_q as a degree-1 context (coefficients of F_inf).
  const FieldPtr& constants() const noexcept { return k_; }

 private:
  DivAlgCtx(GFqPtr gf, int n, int prec, FieldPtr w, FieldPtr k)
      : gf_(std::move(gf)), n_(n), prec_(prec), w_(std::move(w)), k_(std::move(k)) {}
  GFqPtr gf_;
  int n_;
  int prec_;
  FieldPtr w_;
  FieldPtr k_;
};

/// sum_i a_i beta^i with a_i in W.
class DivAlgElem {
 public:
  DivAlgElem(DivAlgPtr ctx, std::vector<LaurentSeries> components);

  static DivAlgElem zero(const DivAlgPtr& ctx);
  static DivAlgElem one(const DivAlgPtr& ctx);
  static DivAlgElem beta(const DivAlgPtr& ctx);
  /// a in W placed in the beta^0 slot.
  static DivAlgElem from_w(const DivAlgPtr& ctx, const LaurentSeries& a);
  /// s in F_inf (series over F_q), central.
  static DivAlgElem scalar(const DivAlgPtr& ctx, const LaurentSeries& s);

  const DivAlgPtr& ctx() const noexcept { return ctx_; }
  const std::vector<LaurentSeries>& components() const noexcept { return a_; }
  const LaurentSeries& component(int i) const { return a_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  DivAlgElem operator-() const;
  friend DivAlgElem operator+(const DivAlgElem& x, const DivAlgElem& y);
  friend DivAlgElem operator-(const DivAlgElem& x, const DivAlgElem& y);
  friend DivAlgElem operator*(const DivAlgElem& x, const DivAlgElem& y);
  DivAlgElem& operator+=(const DivAlgElem& o) { return *this = *this + o; }
  DivAlgElem& operator*=(const DivAlgElem& o) { return *this = *this * o; }
  /// Left multiplication by w in W.
  DivAlgElem left_scaled(const LaurentSeries& w) const;

  /// Via the reduced characteristic polynomial.  Throws InverseOfZero.
  DivAlgElem inv() const;

  std::string to_string() const;

 private:
  DivAlgPtr ctx_;
  std::vector<LaurentSeries> a_;
};

bool equal_to_precision(const DivAlgElem& x, const DivAlgElem& y);

/// min_i (n ord(a_i) + i).  Throws ZeroValuation for zero, PrecisionExhausted
/// when a zero-to-precision component could still decide the minimum.
int da_valuation(const DivAlgElem& x);

/// Matrix of y -> y x on the left W-basis 1, beta, ..., beta^{n-1}; row i is
/// beta^i x.
std::vector<std::vector<LaurentSeries>> right_regular_matrix(const DivAlgElem& x);

/// Tr_{W/F_inf}(a_0), as a series over F_q.
LaurentSeries da_reduced_trace(const DivAlgElem& x);
/// det of the right-regular matrix, as a series over F_q.
LaurentSeries da_reduced_norm(const DivAlgElem& x);
/// det(T - right_regular_matrix), ascending and monic, coefficients over F_q.
std::vector<LaurentSeries> da_reduced_charpoly(const DivAlgElem& x);

// ---------------------------------------------------------------- counting

/// Which finite quotient is enumerated.
enum class CosetScope {
  WUnits,  // a_0 in (O_W - p_W) / p_W^j
  DUnits,  // alpha in (O_D - pi O_D) / pi^j O_D
};

struct CosetCondition {
  CosetScope scope = CosetScope::WUnits;
  /// Allowed classes of the trace in O_inf / pi^j, each j digits over F_q
  /// (ascending).  Empty means any trace.
  std::vector<std::vector<Coef>> trace_residues;
};

struct CosetCount {
  std::string condition;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  std::uint64_t ratio_num = 0;  // count / total in lowest terms
  std::uint64_t ratio_den = 1;
};

/// Exact count over the finite quotient.  The enumerated part has q^{n j}
/// elements; above `cap` this throws QuotientTooLarge.
CosetCount coset_count(const GFqPtr& gf, int n, int j, const CosetCondition& cond, std::uint64_t cap = 1u << 22);

/// {condition, count, total, exact_ratio_num, exact_ratio_den}.
nlohmann::json coset_count_to_json(const CosetCount& c);

}  // namespace drinfeld
