#include "doctest.h"
#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/error.hpp"
#include "support.hpp"

using namespace drinfeld;
using namespace testing_support;

namespace {

RationalDrinfeldModule random_rational(std::mt19937_64& rng, const GFqPtr& gf, int rank) {
  std::vector<BasePoly> b{BasePoly::t(gf)};
  for (int i = 1; i < rank; ++i) b.push_back(random_poly(rng, gf, 2));
  b.push_back(random_nonzero_poly(rng, gf, 1));
  return RationalDrinfeldModule(gf, b);
}

FFPoly derivative(const FFPoly& f) {
  std::vector<FFElem> v;
  for (int i = 1; i <= f.degree(); ++i) v.push_back(f.coeff(i).scaled(f.ctx()->base()->from_int(i)));
  return FFPoly(f.ctx(), v);
}

int code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

}  // namespace

TEST_CASE("drinfeld_create") {
  const auto c2 = carlitz(2);
  CHECK(c2.rank() == 1);
  CHECK(c2.generic_characteristic());
  CHECK(c2.phi_t().coeff(0) == BasePoly::t(GFq::make(2)));
  auto gf2 = GFq::make(2);
  const RationalDrinfeldModule r2(gf2, {BasePoly::t(gf2), BasePoly::constant(gf2, 1), BasePoly::constant(gf2, 1)});
  CHECK(r2.rank() == 2);

  auto f4 = FieldCtx::create(2, 2);
  const FiniteDrinfeldModule m(f4, {f4->generator(), f4->one()});
  CHECK(m.characteristic() == poly(gf2, {1, 1, 1}));
  CHECK(m.rank() == 1);

  CHECK(code_of([&] { RationalDrinfeldModule(gf2, {BasePoly::t(gf2)}); }) == static_cast<int>(ErrorCode::ConstantImage));
  CHECK(code_of([&] { RationalDrinfeldModule(gf2, {BasePoly::t(gf2), BasePoly(gf2)}); }) ==
        static_cast<int>(ErrorCode::ZeroLeadingCoefficient));
  CHECK(code_of([&] { FiniteDrinfeldModule(f4, {f4->one(), f4->zero()}); }) ==
        static_cast<int>(ErrorCode::ZeroLeadingCoefficient));
}

TEST_CASE("phi_eval examples") {
  auto gf2 = GFq::make(2);
  const auto c = carlitz(2);
  CHECK(c.eval(BasePoly::constant(gf2, 1)) == SkewPolyA::one(gf2));
  CHECK(c.eval(BasePoly(gf2)).is_zero());
  const auto phi_t2 = c.eval(BasePoly::monomial(gf2, 2));
  CHECK(phi_t2 == SkewPolyA(gf2, {poly(gf2, {0, 0, 1}), poly(gf2, {0, 1, 1}), BasePoly::constant(gf2, 1)}));
  const RationalDrinfeldModule r3(gf2, {BasePoly::t(gf2), BasePoly::constant(gf2, 1), BasePoly::t(gf2)});
  CHECK(r3.eval(BasePoly::monomial(gf2, 3)).degree() == 6);
}

TEST_CASE("homomorphism and degree laws") {
  std::mt19937_64 rng(41);
  for (std::uint64_t q : {2u, 3u}) {
    auto gf = GFq::make(q);
    // coefficients of phi_a have t-degree about q^{deg_tau}, so keep a, b small
    const int max_deg = q == 2 ? 2 : 1;
    for (int i = 0; i < kCases; ++i) {
      const auto phi = random_rational(rng, gf, 1 + static_cast<int>(rng() % 2));
      const BasePoly a = random_poly(rng, gf, max_deg);
      const BasePoly b = random_poly(rng, gf, max_deg);
      CHECK(phi.eval(a + b) == phi.eval(a) + phi.eval(b));
      CHECK(phi.eval(a * b) == phi.eval(a) * phi.eval(b));
      if (!a.is_zero()) {
        CHECK(phi.eval(a).degree() == phi.rank() * a.degree());
        CHECK(phi.eval(a).constant_term() == a);
      }
    }
  }
  // over a finite field: constant term is a(b_0)
  for (const FieldPtr& k : {FieldCtx::create(2, 3), FieldCtx::create(3, 2), FieldCtx::create(4, 2)}) {
    for (int i = 0; i < kCases; ++i) {
      std::vector<FFElem> bv{random_elem(rng, k), random_elem(rng, k), random_nonzero(rng, k)};
      const FiniteDrinfeldModule phi(k, bv);
      const BasePoly a = random_poly(rng, k->base(), 4);
      const BasePoly b = random_poly(rng, k->base(), 4);
      CHECK(phi.eval(a * b) == phi.eval(a) * phi.eval(b));
      CHECK(phi.eval(a + b) == phi.eval(a) + phi.eval(b));
      if (!a.is_zero()) {
        CHECK(phi.eval(a).degree() == 2 * a.degree());
        CHECK(phi.eval(a).constant_term() == FFPoly::from_base(k, a).eval(bv[0]));
      }
      // characteristic annihilates b_0
      CHECK(FFPoly::from_base(k, phi.characteristic()).eval(bv[0]).is_zero());
      CHECK(is_irreducible(phi.characteristic()));
    }
  }
}

TEST_CASE("torsion_polynomial") {
  auto gf2 = GFq::make(2);
  const auto c = carlitz(2);
  const auto tp = c.torsion_polynomial(BasePoly::t(gf2));
  REQUIRE(tp.coeffs.size() == 2);
  CHECK(tp.coeffs[0] == BasePoly::t(gf2));
  CHECK(tp.coeffs[1] == BasePoly::constant(gf2, 1));
  CHECK(tp.degree() == 2);
  CHECK(tp.separable());
  CHECK_THROWS_AS(c.torsion_polynomial(BasePoly(gf2)), Error);

  std::mt19937_64 rng(42);
  auto f4 = FieldCtx::create(2, 2);
  for (int i = 0; i < kCases; ++i) {
    std::vector<FFElem> bv{random_elem(rng, f4), random_elem(rng, f4), random_nonzero(rng, f4)};
    const FiniteDrinfeldModule phi(f4, bv);
    const BasePoly a = random_nonzero_poly(rng, gf2, 2);
    const auto t = phi.torsion_polynomial(a);
    CHECK(t.degree() == (1u << (2 * a.degree())));
    const bool coprime = gcd(a, phi.characteristic()).degree() == 0;
    CHECK(t.separable() == coprime);
    if (a.degree() >= 1) {
      // squarefree exactly when separable (the X-derivative is the X-coefficient)
      const FFPoly f = phi.torsion_poly_dense(a);
      CHECK((gcd(f, derivative(f)).degree() == 0) == coprime);
    }
  }
}

TEST_CASE("reduce_at") {
  auto gf2 = GFq::make(2);
  const auto c = carlitz(2);
  for (const auto& p : irreducible_monics(gf2, 3)) {
    const auto r = c.reduce_at(p);
    CHECK(r.rank() == 1);
    CHECK(r.characteristic() == p);
    CHECK(r.phi_t().coeff(1).is_one());
  }
  const RationalDrinfeldModule bad(gf2, {BasePoly::t(gf2), BasePoly::constant(gf2, 1), BasePoly::t(gf2)});
  CHECK(code_of([&] { bad.reduce_at(BasePoly::t(gf2)); }) == static_cast<int>(ErrorCode::BadReduction));
  const RationalDrinfeldModule r2(gf2, {BasePoly::t(gf2), BasePoly::constant(gf2, 1), BasePoly::constant(gf2, 1)});
  const auto red = r2.reduce_at(BasePoly::t(gf2));
  CHECK(red.phi_t().coeff(0).is_zero());
  CHECK(red.phi_t().coeff(1).is_one());
  CHECK(red.phi_t().coeff(2).is_one());

  std::mt19937_64 rng(43);
  for (std::uint64_t q : {2u, 3u}) {
    auto gf = GFq::make(q);
    for (int i = 0; i < kCases; ++i) {
      const auto phi = random_rational(rng, gf, 2);
      const auto primes = irreducible_monics(gf, 1 + static_cast<int>(rng() % 3));
      const BasePoly& p = primes[rng() % primes.size()];
      if (!phi.good_reduction_at(p)) {
        CHECK_THROWS_AS(phi.reduce_at(p), Error);
        continue;
      }
      const auto red_phi = phi.reduce_at(p);
      CHECK(red_phi.characteristic() == p);
      const BasePoly a = random_poly(rng, gf, 2);
      const auto lhs = red_phi.eval(a);
      const auto full = phi.eval(a);
      std::vector<FFElem> reduced;
      for (const auto& coef : full.coeffs()) reduced.push_back(red_phi.field()->from_poly(coef));
      CHECK(lhs == SkewPolyL(red_phi.field(), reduced));
    }
  }
}

TEST_CASE("module descriptors") {
  const nlohmann::json j = nlohmann::json::parse(R"({"q": 3, "field": "rational", "phi_t": [[0, 1], [1], [1]]})");
  const auto m = module_from_json(j);
  REQUIRE(std::holds_alternative<RationalDrinfeldModule>(m));
  CHECK(std::get<RationalDrinfeldModule>(m).rank() == 2);
  CHECK(module_to_json(m) == j);

  const nlohmann::json jf =
      nlohmann::json::parse(R"({"q": 2, "field": {"d": 2, "modulus": [1, 1, 1]}, "phi_t": [[0, 1], [1], [1, 1]]})");
  const auto mf = module_from_json(jf);
  REQUIRE(std::holds_alternative<FiniteDrinfeldModule>(mf));
  CHECK(std::get<FiniteDrinfeldModule>(mf).characteristic() == poly(GFq::make(2), {1, 1, 1}));
  CHECK(module_to_json(mf) == jf);

  CHECK_THROWS_AS(module_from_json(nlohmann::json::parse(R"({"q": 3})")), Error);
  CHECK_THROWS_AS(module_from_json(nlohmann::json::parse(R"({"q": 3, "field": "rational", "phi_t": [[0, 1], [5]]})")),
                  Error);
  CHECK_THROWS_AS(module_from_json(nlohmann::json::parse(R"({"q": 3, "field": "rational", "phi_t": [[1], [1]]})")),
                  Error);
}
