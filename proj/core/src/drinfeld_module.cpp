#include "drinfeld/drinfeld_module.hpp"

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

void check_shape(std::size_t size, bool lead_zero) {
  if (size <= 1) fail(ErrorCode::ConstantImage, "phi_t must have tau-degree at least 1");
  if (lead_zero) fail(ErrorCode::ZeroLeadingCoefficient, "leading coefficient of phi_t is zero");
}

template <class Poly, class Lift>
Poly horner(const BasePoly& a, const Poly& phi_t, const Poly& zero, Lift lift) {
  Poly acc = zero;
  for (int i = a.degree(); i >= 0; --i) {
    acc = acc * phi_t;
    const Coef c = a.coeff(i);
    if (c != 0) acc = acc + Poly::constant(phi_t.ctx(), lift(c));
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- finite

FiniteDrinfeldModule::FiniteDrinfeldModule(FieldPtr field, std::vector<FFElem> phi_t)
    : field_(std::move(field)), phi_t_(field_) {
  check_shape(phi_t.size(), !phi_t.empty() && phi_t.back().is_zero());
  for (const auto& c : phi_t)
    if (!c.ctx()->same_as(*field_)) fail(ErrorCode::ContextMismatch, "coefficient outside the module's field");
  phi_t_ = SkewPolyL(field_, std::move(phi_t));
  characteristic_ = minimal_polynomial(phi_t_.constant_term());
}

SkewPolyL FiniteDrinfeldModule::eval(const BasePoly& a) const {
  return horner(a, phi_t_, SkewPolyL(field_), [this](Coef c) { return field_->from_base(c); });
}

AdditivePolynomial<FFElem> FiniteDrinfeldModule::torsion_polynomial(const BasePoly& a) const {
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "torsion of a = 0");
  return {field_->q(), eval(a).coeffs()};
}

FFPoly FiniteDrinfeldModule::torsion_poly_dense(const BasePoly& a) const {
  const auto tp = torsion_polynomial(a);
  const std::uint64_t deg = tp.degree();
  if (deg > (1u << 20)) fail(ErrorCode::Unsupported, "torsion polynomial too large for a dense representation");
  std::vector<FFElem> v(static_cast<std::size_t>(deg) + 1, field_->zero());
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < tp.coeffs.size(); ++i) {
    v[static_cast<std::size_t>(e)] = tp.coeffs[i];
    e *= tp.q;
  }
  return FFPoly(field_, std::move(v));
}

// ---------------------------------------------------------------- rational

RationalDrinfeldModule::RationalDrinfeldModule(GFqPtr gf, std::vector<BasePoly> phi_t) : gf_(std::move(gf)), phi_t_(gf_) {
  check_shape(phi_t.size(), !phi_t.empty() && phi_t.back().is_zero());
  if (!(phi_t.front() == BasePoly::t(gf_)))
    fail(ErrorCode::InvalidArgument, "integral model over F_q(t) needs b_0 = t");
  for (const auto& c : phi_t)
    if (c.field() && c.field() != gf_) fail(ErrorCode::ContextMismatch, "coefficient over a different F_q");
  phi_t_ = SkewPolyA(gf_, std::move(phi_t));
}

SkewPolyA RationalDrinfeldModule::eval(const BasePoly& a) const {
  return horner(a, phi_t_, SkewPolyA(gf_), [this](Coef c) { return BasePoly::constant(gf_, c); });
}

AdditivePolynomial<BasePoly> RationalDrinfeldModule::torsion_polynomial(const BasePoly& a) const {
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "torsion of a = 0");
  return {gf_->q(), eval(a).coeffs()};
}

bool RationalDrinfeldModule::good_reduction_at(const BasePoly& p) const { return !(phi_t_.lead() % p).is_zero(); }

FiniteDrinfeldModule RationalDrinfeldModule::reduce_at(const BasePoly& p) const {
  if (!p.is_monic() || p.degree() < 1) fail(ErrorCode::InvalidArgument, "reduction needs a monic prime");
  if (!good_reduction_at(p))
    fail(ErrorCode::BadReduction, "leading coefficient vanishes modulo " + p.to_string());
  FieldPtr fx = FieldCtx::create(gf_, p.degree(), p);
  std::vector<FFElem> v;
  v.reserve(phi_t_.coeffs().size());
  for (const auto& c : phi_t_.coeffs()) v.push_back(fx->from_poly(c));
  return FiniteDrinfeldModule(fx, std::move(v));
}

RationalDrinfeldModule carlitz(std::uint64_t q) {
  auto gf = GFq::make(q);
  return RationalDrinfeldModule(gf, {BasePoly::t(gf), BasePoly::constant(gf, 1)});
}

// ---------------------------------------------------------------- json

nlohmann::json poly_to_json(const BasePoly& f) { return nlohmann::json(f.coeffs()); }

BasePoly poly_from_json(const GFqPtr& gf, const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "polynomial must be a coefficient array");
  std::vector<Coef> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::InvalidArgument, "coefficients must be integers");
    const auto v = x.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(gf->q()))
      fail(ErrorCode::InvalidArgument, "coefficient " + std::to_string(v) + " outside [0, q)");
    c.push_back(static_cast<Coef>(v));
  }
  return BasePoly(gf, std::move(c));
}

DrinfeldModule module_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("field") || !j.contains("phi_t"))
    fail(ErrorCode::InvalidArgument, "module descriptor needs q, field and phi_t");
  if (!j["q"].is_number_unsigned()) fail(ErrorCode::InvalidArgument, "q must be a positive integer");
  auto gf = GFq::make(j["q"].get<std::uint64_t>());
  const auto& field = j["field"];
  const auto& phi = j["phi_t"];
  if (!phi.is_array()) fail(ErrorCode::InvalidArgument, "phi_t must be an array");
  if (field.is_string()) {
    if (field.get<std::string>() != "rational") fail(ErrorCode::InvalidArgument, "unknown field kind");
    std::vector<BasePoly> b;
    for (const auto& c : phi) b.push_back(poly_from_json(gf, c));
    return RationalDrinfeldModule(gf, std::move(b));
  }
  if (!field.is_object() || !field.contains("d") || !field["d"].is_number_unsigned())
    fail(ErrorCode::InvalidArgument, "finite field descriptor needs d");
  const int d = field["d"].get<int>();
  std::optional<BasePoly> modulus;
  if (field.contains("modulus")) modulus = poly_from_json(gf, field["modulus"]);
  FieldPtr k = FieldCtx::create(gf, d, modulus);
  std::vector<FFElem> b;
  for (const auto& c : phi) b.push_back(k->from_poly(poly_from_json(gf, c)));
  return FiniteDrinfeldModule(k, std::move(b));
}

nlohmann::json module_to_json(const DrinfeldModule& m) {
  return std::visit(
      [](const auto& mod) -> nlohmann::json {
        using T = std::decay_t<decltype(mod)>;
        nlohmann::json out;
        nlohmann::json phi = nlohmann::json::array();
        if constexpr (std::is_same_v<T, RationalDrinfeldModule>) {
          out["q"] = mod.base()->q();
          out["field"] = "rational";
          for (const auto& c : mod.phi_t().coeffs()) phi.push_back(poly_to_json(c));
        } else {
          out["q"] = mod.field()->q();
          out["field"] = {{"d", mod.field()->degree()}, {"modulus", poly_to_json(mod.field()->modulus())}};
          for (const auto& c : mod.phi_t().coeffs()) phi.push_back(poly_to_json(c.to_poly()));
        }
        out["phi_t"] = phi;
        return out;
      },
      m);
}

}  // namespace drinfeld
