#include "doctest.h"
#include "drinfeld/division_algebra.hpp"
#include "drinfeld/error.hpp"
#include "support.hpp"

using namespace drinfeld;
using namespace testing_support;

namespace {

LaurentSeries random_series(std::mt19937_64& rng, const FieldPtr& k, int prec) {
  if (rng() % 8 == 0) return LaurentSeries::zero(k, prec);
  std::vector<FFElem> v{random_nonzero(rng, k)};
  for (int i = 1; i < prec; ++i) v.push_back(random_elem(rng, k));
  return LaurentSeries(k, static_cast<int>(rng() % 3) - 1, std::move(v));
}

DivAlgElem random_da(std::mt19937_64& rng, const DivAlgPtr& d) {
  for (;;) {
    std::vector<LaurentSeries> c;
    for (int i = 0; i < d->n(); ++i) c.push_back(random_series(rng, d->residue_field(), d->precision()));
    DivAlgElem x(d, c);
    if (!x.is_zero()) return x;
  }
}

using Matrix = std::vector<std::vector<LaurentSeries>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<LaurentSeries>(n, LaurentSeries::zero(a[0][0].ctx(), 1 << 20)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Tr_{F_{q^n}/F_q} by summing powers x^{q^i} computed with pow.
Coef naive_trace(const FFElem& x) {
  FFElem s = x.ctx()->zero();
  FFElem y = x;
  for (int i = 0; i < x.ctx()->degree(); ++i) {
    s += y;
    y = y.pow(x.ctx()->q());
  }
  return s.coeffs()[0];
}

LaurentSeries series_const(const FieldPtr& k, Coef c, int prec) { return LaurentSeries::constant(k->from_base(c), prec); }

}  // namespace

TEST_CASE("da_arith examples") {
  auto gf2 = GFq::make(2);
  const auto d = DivAlgCtx::create(gf2, 2, 6);
  const FieldPtr& w = d->residue_field();
  const auto beta = DivAlgElem::beta(d);
  const auto b2 = beta * beta;
  CHECK(equal_to_precision(b2, DivAlgElem::from_w(d, LaurentSeries::pi_power(w, 1, 6))));

  const FFElem omega = w->generator();
  const auto om = DivAlgElem::from_w(d, LaurentSeries::constant(omega, 6));
  const auto om2 = DivAlgElem::from_w(d, LaurentSeries::constant(omega * omega, 6));
  CHECK(equal_to_precision(beta * om, om2 * beta));
  CHECK_FALSE(equal_to_precision(beta * om, om * beta));

  // n = 3: beta^3 = pi
  const auto d3 = DivAlgCtx::create(GFq::make(3), 3, 5);
  const auto b = DivAlgElem::beta(d3);
  CHECK(equal_to_precision(b * b * b, DivAlgElem::from_w(d3, LaurentSeries::pi_power(d3->residue_field(), 1, 5))));

  CHECK_THROWS_AS(DivAlgElem::zero(d).inv(), Error);
  CHECK(equal_to_precision(beta.inv() * beta, DivAlgElem::one(d)));
}

TEST_CASE("da_valuation") {
  auto gf2 = GFq::make(2);
  const auto d = DivAlgCtx::create(gf2, 2, 6);
  const FieldPtr& w = d->residue_field();
  CHECK(da_valuation(DivAlgElem::beta(d)) == 1);
  CHECK(da_valuation(DivAlgElem::from_w(d, LaurentSeries::pi_power(w, 1, 6))) == 2);
  CHECK(da_valuation(DivAlgElem::one(d) + DivAlgElem::beta(d)) == 0);
  try {
    da_valuation(DivAlgElem::zero(d));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroValuation);
  }
}

TEST_CASE("reduced trace and norm examples") {
  auto gf2 = GFq::make(2);
  const auto d = DivAlgCtx::create(gf2, 2, 6);
  const FieldPtr k = d->constants();
  CHECK(da_reduced_trace(DivAlgElem::beta(d)).is_zero());
  // det(beta) = -pi
  CHECK(equal_to_precision(da_reduced_norm(DivAlgElem::beta(d)), -LaurentSeries::pi_power(k, 1, 6)));
  const auto d3 = DivAlgCtx::create(GFq::make(3), 2, 6);
  CHECK(equal_to_precision(da_reduced_norm(DivAlgElem::beta(d3)),
                           -LaurentSeries::pi_power(d3->constants(), 1, 6)));
  // scalars
  std::mt19937_64 rng(61);
  for (int n : {2, 3}) {
    for (std::uint64_t q : {2u, 3u}) {
      const auto dd = DivAlgCtx::create(GFq::make(q), n, 6);
      const FieldPtr& kk = dd->constants();
      for (int i = 0; i < 10; ++i) {
        const LaurentSeries s = random_series(rng, kk, 6);
        const auto x = DivAlgElem::scalar(dd, s);
        CHECK(equal_to_precision(da_reduced_trace(x), s * series_const(kk, kk->base()->from_int(n), 6)));
        LaurentSeries sn = LaurentSeries::one(kk, 6);
        for (int r = 0; r < n; ++r) sn *= s;
        CHECK(equal_to_precision(da_reduced_norm(x), sn));
        // det(T - s) = (T - s)^n: compare against binomial expansion
        const auto cp = da_reduced_charpoly(x);
        REQUIRE(cp.size() == static_cast<std::size_t>(n + 1));
        std::vector<LaurentSeries> expect{LaurentSeries::one(kk, 6)};
        for (int r = 0; r < n; ++r) {
          std::vector<LaurentSeries> next(expect.size() + 1, LaurentSeries::zero(kk, 1 << 20));
          for (std::size_t e = 0; e < expect.size(); ++e) {
            next[e + 1] += expect[e];
            next[e] -= expect[e] * s;
          }
          expect = next;
        }
        for (std::size_t e = 0; e < cp.size(); ++e) CHECK(equal_to_precision(cp[e], expect[e]));
      }
    }
  }
}

TEST_CASE("division algebra properties") {
  std::mt19937_64 rng(62);
  int cases = 0;
  for (int n : {2, 3}) {
    for (std::uint64_t q : {2u, 3u}) {
      const auto d = DivAlgCtx::create(GFq::make(q), n, 6);
      for (int i = 0; i < kCases / 4; ++i, ++cases) {
        const auto x = random_da(rng, d);
        const auto y = random_da(rng, d);
        const auto z = random_da(rng, d);
        const auto xy = x * y;
        // associativity and distributivity
        CHECK(equal_to_precision(xy * z, x * (y * z)));
        CHECK(equal_to_precision(x * (y + z), xy + x * z));
        // right-regular representation is multiplicative
        const auto lhs = right_regular_matrix(xy);
        const auto rhs = mat_mul(right_regular_matrix(x), right_regular_matrix(y));
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            CHECK(equal_to_precision(lhs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                     rhs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
        CHECK(da_valuation(xy) == da_valuation(x) + da_valuation(y));
        CHECK(equal_to_precision(da_reduced_trace(xy), da_reduced_trace(y * x)));
        CHECK(equal_to_precision(da_reduced_trace(x + y), da_reduced_trace(x) + da_reduced_trace(y)));
        CHECK(equal_to_precision(da_reduced_norm(xy), da_reduced_norm(x) * da_reduced_norm(y)));
        CHECK(equal_to_precision(x * x.inv(), DivAlgElem::one(d)));
        CHECK(equal_to_precision(x.inv() * x, DivAlgElem::one(d)));
        // v(x) = ord_pi(det x)
        CHECK(da_reduced_norm(x).valuation() == da_valuation(x));

        // elements of W: trace and norm from conjugates
        const LaurentSeries a = random_series(rng, d->residue_field(), 6);
        const auto xa = DivAlgElem::from_w(d, a);
        LaurentSeries prod = LaurentSeries::one(d->residue_field(), 6);
        LaurentSeries sum = LaurentSeries::zero(d->residue_field(), 1 << 20);
        for (int s = 0; s < n; ++s) {
          const auto conj = a.map_coeffs([&](const FFElem& c) {
            FFElem y2 = c;
            for (int r = 0; r < s; ++r) y2 = y2.pow(q);
            return y2;
          });
          prod *= conj;
          sum += conj;
        }
        const auto tr = da_reduced_trace(xa);
        const auto nm = da_reduced_norm(xa);
        for (int e = prod.lead(); e < std::min(prod.absolute_precision(), nm.absolute_precision()); ++e)
          CHECK(nm.coeff(e).coeffs()[0] == prod.coeff(e).coeffs()[0]);
        for (int e = std::min(sum.lead(), tr.lead()); e < std::min(sum.absolute_precision(), tr.absolute_precision()); ++e)
          CHECK(tr.coeff(e).coeffs()[0] == sum.coeff(e).coeffs()[0]);
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("coset_count") {
  auto gf2 = GFq::make(2);
  CosetCondition c1{CosetScope::WUnits, {{1}}};
  auto r = coset_count(gf2, 2, 1, c1);
  CHECK(r.count == 2);
  CHECK(r.total == 3);
  CosetCondition c0{CosetScope::WUnits, {{0}}};
  CHECK(coset_count(gf2, 2, 1, c0).count == 1);
  const auto j = coset_count_to_json(r);
  CHECK(j["count"] == 2);
  CHECK(j["total"] == 3);
  CHECK(j["exact_ratio_num"] == 2);
  CHECK(j["exact_ratio_den"] == 3);
  CHECK(j.contains("condition"));

  for (int n : {2, 3}) {
    for (std::uint64_t q : {2u, 3u}) {
      auto gf = GFq::make(q);
      // brute-force oracle over F_{q^n}
      const FieldPtr w = FieldCtx::create(gf, n);
      std::vector<std::uint64_t> by_trace(q, 0);
      for (std::uint64_t idx = 1; idx < w->order(); ++idx) ++by_trace[naive_trace(w->from_index(idx))];
      std::uint64_t qn1 = 1;
      for (int i = 0; i < n - 1; ++i) qn1 *= q;
      std::uint64_t sum = 0;
      for (Coef kappa = 0; kappa < q; ++kappa) {
        const auto cnt = coset_count(gf, n, 1, CosetCondition{CosetScope::WUnits, {{kappa}}});
        CHECK(cnt.count == by_trace[kappa]);
        CHECK(cnt.count == (kappa == 0 ? qn1 - 1 : qn1));
        sum += cnt.count;
      }
      CHECK(sum == w->order() - 1);
      CHECK(coset_count(gf, n, 1, CosetCondition{CosetScope::WUnits, {}}).count == sum);

      // partition over all trace classes at j = 2
      for (CosetScope scope : {CosetScope::WUnits, CosetScope::DUnits}) {
        std::uint64_t total = 0;
        std::uint64_t parts = 0;
        for (Coef c0d = 0; c0d < q; ++c0d)
          for (Coef c1d = 0; c1d < q; ++c1d) {
            const auto cnt = coset_count(gf, n, 2, CosetCondition{scope, {{c0d, c1d}}});
            parts += cnt.count;
            total = cnt.total;
          }
        CHECK(parts == total);
      }

      // proportion with trace in pi^j O_inf among units of O_D
      for (int jj : {1, 2}) {
        const auto lem = coset_count(gf, n, jj, CosetCondition{CosetScope::DUnits, {std::vector<Coef>(static_cast<std::size_t>(jj), 0)}});
        std::uint64_t qj = 1;
        for (int i = 0; i < jj; ++i) qj *= q;
        CHECK(lem.count * qj <= 2 * lem.total);
      }
    }
  }

  CHECK_THROWS_AS(coset_count(gf2, 3, 8, c1, 1u << 10), Error);
  CHECK_THROWS_AS(coset_count(gf2, 2, 0, c1), Error);
  CHECK_THROWS_AS(coset_count(gf2, 2, 2, c1), Error);
}
