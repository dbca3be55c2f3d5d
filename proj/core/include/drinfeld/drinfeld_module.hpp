#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/ff_poly.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/skew_poly.hpp"

namespace drinfeld {

/// An additive polynomial sum_i c_i X^{q^i}; coeffs()[i] multiplies X^{q^i}.
template <class C>
struct AdditivePolynomial {
  std::uint32_t q = 0;
  std::vector<C> coeffs;

  /// Degree in X (q^{top index}); saturates at UINT64_MAX.
  std::uint64_t degree() const {
    std::uint64_t d = 1;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      if (d > UINT64_MAX / q) return UINT64_MAX;
      d *= q;
    }
    return d;
  }
  /// The X-coefficient is nonzero.
  bool separable() const { return !coeffs.empty() && !SkewTraits<C>::is_zero(coeffs.front()); }
};

/// phi: A -> L[tau] with L a finite field.
class FiniteDrinfeldModule {
 public:
  /// phi_t = b_0 + b_1 tau + ... + b_n tau^n.  Throws ConstantImage for n = 0
  /// and ZeroLeadingCoefficient when the last supplied b is zero.
  FiniteDrinfeldModule(FieldPtr field, std::vector<FFElem> phi_t);

  const FieldPtr& field() const noexcept { return field_; }
  const SkewPolyL& phi_t() const noexcept { return phi_t_; }
  int rank() const noexcept { return phi_t_.degree(); }
  /// Minimal polynomial of b_0 over F_q.
  const BasePoly& characteristic() const noexcept { return characteristic_; }

  /// phi_a by Horner's rule in t.
  SkewPolyL eval(const BasePoly& a) const;
  AdditivePolynomial<FFElem> torsion_polynomial(const BasePoly& a) const;
  /// The torsion polynomial as a dense polynomial in X (for small degrees).
  FFPoly torsion_poly_dense(const BasePoly& a) const;

 private:
  FieldPtr field_;
  SkewPolyL phi_t_;
  BasePoly characteristic_;
};

/// phi: A -> L[tau] with L = F_q(t), given by its integral model: phi_t has
/// coefficients in A = F_q[t] and b_0 = t (generic characteristic).
class RationalDrinfeldModule {
 public:
  RationalDrinfeldModule(GFqPtr gf, std::vector<BasePoly> phi_t);

  const GFqPtr& base() const noexcept { return gf_; }
  const SkewPolyA& phi_t() const noexcept { return phi_t_; }
  int rank() const noexcept { return phi_t_.degree(); }
  /// Always generic for this type.
  bool generic_characteristic() const noexcept { return true; }

  SkewPolyA eval(const BasePoly& a) const;
  AdditivePolynomial<BasePoly> torsion_polynomial(const BasePoly& a) const;

  /// True iff p does not divide the leading coefficient b_n.
  bool good_reduction_at(const BasePoly& p) const;
  /// Reduction modulo a monic irreducible p, over F_x = A/(p) presented with
  /// modulus p.  Throws BadReduction when p | b_n.
  FiniteDrinfeldModule reduce_at(const BasePoly& p) const;

 private:
  GFqPtr gf_;
  SkewPolyA phi_t_;
};

/// The Carlitz module phi_t = t + tau over F_q(t).
RationalDrinfeldModule carlitz(std::uint64_t q);

using DrinfeldModule = std::variant<RationalDrinfeldModule, FiniteDrinfeldModule>;

/// Descriptor {q, field: "rational" | {d, modulus}, phi_t: [[...], ...]}.
/// Finite-field coefficients are coefficient arrays modulo the modulus,
/// rational ones are ascending arrays in t.  Throws InvalidArgument on a
/// malformed descriptor.
DrinfeldModule module_from_json(const nlohmann::json& j);
nlohmann::json module_to_json(const DrinfeldModule& m);

/// Polynomial as ascending coefficient array.
nlohmann::json poly_to_json(const BasePoly& f);
BasePoly poly_from_json(const GFqPtr& gf, const nlohmann::json& j);

}  // namespace drinfeld
