#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "drinfeld/carlitz.hpp"
#include "drinfeld/error.hpp"
#include "support.hpp"

using namespace drinfeld;
using namespace testing_support;

namespace {

// Units of A/a counted by gcd over all residues.
std::uint64_t brute_units(const BasePoly& a) {
  const std::uint64_t q = a.field()->q();
  std::uint64_t size = 1;
  for (int i = 0; i < a.degree(); ++i) size *= q;
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const BasePoly r = BasePoly::from_index(a.field(), idx);
    if (!r.is_zero() && gcd(r, a).degree() == 0) ++count;
  }
  return count;
}

APoly apoly_mul(const APoly& f, const APoly& g) {
  APoly h(f.size() + g.size() - 1, BasePoly(f[0].field()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  return h;
}

std::vector<BasePoly> monic_divisors(const BasePoly& a) {
  std::vector<BasePoly> out{BasePoly::constant(a.field(), 1)};
  for (const auto& [p, e] : factor(a).factors) {
    std::vector<BasePoly> next;
    for (const auto& d : out) {
      BasePoly pe = BasePoly::constant(a.field(), 1);
      for (int k = 0; k <= e; ++k) {
        next.push_back(d * pe);
        pe *= p;
      }
    }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("carlitz_frobenius_identity") {
  auto gf2 = GFq::make(2);
  CHECK(carlitz_frobenius_identity(2, BasePoly::t(gf2)));
  CHECK(carlitz_frobenius_identity(2, poly(gf2, {1, 1})));
  CHECK(carlitz_frobenius_identity(2, poly(gf2, {1, 1, 1})));
  // phi_{t^2+t+1} over F_2(t) has the expansion (t^2+t+1) + (t^2+t+1) tau + tau^2
  const auto phi_p = carlitz(2).eval(poly(gf2, {1, 1, 1}));
  CHECK(phi_p == SkewPolyA(gf2, {poly(gf2, {1, 1, 1}), poly(gf2, {1, 1, 1}), BasePoly::constant(gf2, 1)}));
  CHECK_THROWS_AS(carlitz_frobenius_identity(2, poly(gf2, {1, 0, 1})), Error);

  // oracle: reduce the coefficients of phi_p in F_q[t] modulo p directly
  for (std::uint64_t q : {2u, 3u}) {
    auto gf = GFq::make(q);
    const int dmax = q == 2 ? 5 : 3;
    for (int d = 1; d <= dmax; ++d)
      for (const auto& p : irreducible_monics(gf, d)) {
        const auto full = carlitz(q).eval(p);
        bool expect = full.degree() == d && (full.coeff(d) % p).is_one();
        for (int i = 0; i < d; ++i) expect = expect && (full.coeff(i) % p).is_zero();
        CHECK(carlitz_frobenius_identity(q, p) == expect);
        CHECK(expect);
      }
  }
}

TEST_CASE("carlitz_check") {
  for (std::uint64_t q : {2u, 3u}) {
    const auto rows = carlitz_check(q, 4);
    std::uint64_t expected = 0;
    for (int d = 1; d <= 4; ++d) expected += necklace_count(q, d);
    CHECK(rows.size() == expected);
    for (const auto& r : rows) {
      CHECK(r.identity_holds);
      CHECK(r.charpoly_is_t_minus_p);
      CHECK(r.epsilon == Coef{1});
    }
    const auto j = carlitz_check_to_json(rows);
    CHECK(j.size() == rows.size());
    CHECK(j[0]["identity_holds"] == true);
    CHECK(j[0].contains("prime"));
  }
}

TEST_CASE("cyclotomic_degree") {
  auto gf2 = GFq::make(2);
  CHECK(cyclotomic_degree(BasePoly::t(gf2)) == 1);
  CHECK(cyclotomic_degree(poly(gf2, {0, 0, 1})) == 2);
  CHECK(cyclotomic_degree(poly(gf2, {1, 1, 1})) == 3);
  CHECK(cyclotomic_degree(BasePoly::constant(gf2, 1)) == 1);
  CHECK_THROWS_AS(cyclotomic_degree(BasePoly(gf2)), Error);

  std::mt19937_64 rng(71);
  int cases = 0;
  for (std::uint64_t q : {2u, 3u}) {
    auto gf = GFq::make(q);
    for (int i = 0; i < kCases / 2; ++i, ++cases) {
      const BasePoly a = random_nonzero_poly(rng, gf, q == 2 ? 6 : 4);
      CHECK(cyclotomic_degree(a) == brute_units(a));
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("factor_over_rational_function_field") {
  auto gf3 = GFq::make(3);
  const BasePoly one = BasePoly::constant(gf3, 1);
  // X^2 - t is irreducible: t is not a square
  const APoly f1{-BasePoly::t(gf3), BasePoly(gf3), one};
  CHECK(factor_over_rational_function_field(f1).size() == 1);
  // (X + t)(X^2 + t + 1)
  const APoly g1{BasePoly::t(gf3), one};
  const APoly g2{poly(gf3, {1, 1}), BasePoly(gf3), one};
  const auto fs = factor_over_rational_function_field(apoly_mul(g1, g2));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == g1);
  CHECK(fs[1] == g2);
  CHECK_THROWS_AS(factor_over_rational_function_field(APoly{BasePoly(gf3), one}), Error);
  CHECK_THROWS_AS(factor_over_rational_function_field(APoly{one, poly(gf3, {0, 1})}), Error);

  // random products of linear and quadratic factors: the product of the
  // returned factors is f and the degree multiset is refined by the input
  std::mt19937_64 rng(72);
  for (std::uint64_t q : {2u, 3u}) {
    auto gf = GFq::make(q);
    for (int i = 0; i < 40; ++i) {
      APoly f{BasePoly::constant(gf, 1)};
      int total = 0;
      const int parts = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < parts; ++k) {
        const int deg = 1 + static_cast<int>(rng() % 2);
        APoly g(static_cast<std::size_t>(deg) + 1, BasePoly(gf));
        g[static_cast<std::size_t>(deg)] = BasePoly::constant(gf, 1);
        for (int r = 0; r < deg; ++r) g[static_cast<std::size_t>(r)] = random_poly(rng, gf, 1);
        if (g[0].is_zero()) g[0] = BasePoly::constant(gf, 1);
        f = apoly_mul(f, g);
        total += deg;
      }
      const auto fac = factor_over_rational_function_field(f);
      APoly prod{BasePoly::constant(gf, 1)};
      int sum = 0;
      for (const auto& g : fac) {
        prod = apoly_mul(prod, g);
        sum += static_cast<int>(g.size()) - 1;
        CHECK(g.back().is_one());
      }
      CHECK(prod == f);
      CHECK(sum == total);
      CHECK(fac.size() >= static_cast<std::size_t>(1));
      CHECK(fac.size() <= static_cast<std::size_t>(parts * 2));
    }
  }
}

TEST_CASE("cyclotomic_check") {
  for (std::uint64_t q : {2u, 3u}) {
    auto gf = GFq::make(q);
    for (int d = 1; d <= 2; ++d)
      for (std::uint64_t idx = 0; idx < (d == 1 ? q : q * q); ++idx) {
        // every monic a of degree d
        BasePoly a = BasePoly::monomial(gf, d) + BasePoly::from_index(gf, idx);
        const auto chk = cyclotomic_check(a);
        CHECK(chk.galois_checked);
        CHECK(chk.consistent);
        // phi_a(X)/X is the product of the b-th cyclotomic factors, b | a
        std::vector<int> expect;
        for (const auto& b : monic_divisors(a))
          if (b.degree() >= 1) expect.push_back(static_cast<int>(cyclotomic_degree(b)));
        std::sort(expect.begin(), expect.end());
        auto got = chk.factor_degrees;
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
      }
  }
  auto gf2 = GFq::make(2);
  const auto big = cyclotomic_check(poly(gf2, {1, 1, 0, 1}));
  CHECK_FALSE(big.galois_checked);
  CHECK(big.degree == 7);
}

TEST_CASE("artin_schreier_tower") {
  for (std::uint64_t q : {2u, 3u}) {
    const auto levels = artin_schreier_tower(q, 2);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].degree_over_F == 1);
    CHECK(levels[0].certified);
    CHECK(levels[1].degree_over_F == q);
    CHECK(levels[2].degree_over_F == q * q);
    for (std::size_t j = 1; j < levels.size(); ++j) {
      CHECK(levels[j].certified);
      CHECK(levels[j].min_poly_chain.size() == j);
      CHECK(levels[j].degree_over_F == q * levels[j - 1].degree_over_F);
    }
    // oracle for level 1: X^q - X + tbar has no root in A/l, by enumeration
    const BasePoly& l = *levels[1].certificate_prime;
    const FieldPtr k = FieldCtx::create(GFq::make(q), l.degree(), l);
    const FFElem tbar = k->from_poly(BasePoly::t(GFq::make(q)));
    for (std::uint64_t idx = 0; idx < k->order(); ++idx) {
      const FFElem x = k->from_index(idx);
      CHECK_FALSE((x.pow(q) - x + tbar).is_zero());
    }
    const auto j = tower_to_json(levels);
    CHECK(j.size() == 3);
    CHECK(j[2]["level"] == 2);
    CHECK(j[2]["certified"] == true);
  }
  CHECK(artin_schreier_tower(2, 3).back().degree_over_F == 8);
  CHECK_THROWS_AS(artin_schreier_tower(4, 1), Error);
  CHECK(artin_schreier_tower(3, 0).size() == 1);
}
