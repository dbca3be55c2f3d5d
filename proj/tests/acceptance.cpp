// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is 0 only
// when every selected criterion passes.
//
//   acceptance               run all criteria
//   acceptance --criterion 5 run one criterion

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/division_algebra.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/experiments.hpp"
#include "drinfeld/frobenius.hpp"
#include "drinfeld/skew_poly.hpp"
#include "support.hpp"

using namespace drinfeld;
using namespace testing_support;

namespace {

// Pinned tolerances.
constexpr double kCarlitzSeconds = 10.0;
constexpr double kRank2Seconds = 60.0;
constexpr double kSatoTateSeconds = 300.0;
constexpr double kLangTrotterFactor = 4.0;
constexpr int kConjugationPrecision = 12;
constexpr int kMinPropertyCases = 200;

struct SatoTateThreshold {
  int d;
  std::uint64_t expected_points;  // 0 when not pinned
  double max_tv;
};
constexpr SatoTateThreshold kSatoTate[] = {{5, 48, 0.20}, {6, 0, 0.20}, {7, 312, 0.10}, {8, 0, 0.12}};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RationalDrinfeldModule rank2_f2() {
  auto gf = GFq::make(2);
  return RationalDrinfeldModule(gf, {BasePoly::t(gf), BasePoly::constant(gf, 1), BasePoly::constant(gf, 1)});
}

RationalDrinfeldModule rank2_f3() {
  auto gf = GFq::make(3);
  return RationalDrinfeldModule(gf, {BasePoly::t(gf), BasePoly::constant(gf, 1), BasePoly::constant(gf, 1)});
}

void carlitz_identity(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t primes = 0;
  for (std::uint64_t q : {2u, 3u}) {
    for (const auto& r : carlitz_check(q, 6)) {
      ++primes;
      o.require(r.identity_holds, "identity at " + r.prime.to_string());
      o.require(r.charpoly_is_t_minus_p, "charpoly at " + r.prime.to_string());
      o.require(r.epsilon == Coef{1}, "epsilon at " + r.prime.to_string());
    }
  }
  const double s = seconds_since(t0);
  o.require(s < kCarlitzSeconds, "runtime");
  o.detail << primes << " primes, epsilon = 1 throughout, " << std::fixed << std::setprecision(2) << s << " s";
}

void rank2_engine(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto phi = rank2_f2();
  auto gf = phi.base();
  std::size_t primes = 0;
  for (int d = 1; d <= 7; ++d)
    for (const auto& p : irreducible_monics(gf, d)) {
      ++primes;
      const auto rec = frob_charpoly_at(phi, p);
      const std::string at = " at " + p.to_string();
      o.require(rec.verified, "multiply-back" + at);
      o.require(hasse_check(rec) && 2 * rec.a_x.degree() <= d, "Hasse bound" + at);
      bool eps_ok = false;
      for (Coef e = 1; e < gf->q(); ++e) eps_ok = eps_ok || rec.c[0] == BasePoly::constant(gf, e) * p;
      o.require(eps_ok, "c_0 = epsilon p" + at);
      if (p == BasePoly::t(gf))
        o.require(rec.c.size() == 2 && rec.c[0] == BasePoly::t(gf) && rec.c[1] == BasePoly::constant(gf, 1),
                  "anchor T^2 + T + t at t");
    }
  const double s = seconds_since(t0);
  o.require(s < kRank2Seconds, "runtime");
  o.detail << primes << " primes, anchor T^2 + T + t at p = t, " << std::fixed << std::setprecision(2) << s << " s";
}

void lambda_adic(Outcome& o) {
  const auto phi = rank2_f2();
  auto gf = phi.base();
  const std::vector<BasePoly> aux{BasePoly::t(gf), BasePoly(gf, {1, 1})};
  std::size_t comparisons = 0;
  for (int d = 1; d <= 4; ++d)
    for (const auto& p : irreducible_monics(gf, d)) {
      const auto red = phi.reduce_at(p);
      const auto rec = frob_charpoly(red);
      for (const auto& l : aux) {
        if (l == p) continue;
        ++comparisons;
        o.require(lambda_adic_oracle(red, l, rec).agrees, "at p = " + p.to_string() + ", l = " + l.to_string());
      }
    }
  o.detail << comparisons << " torsion charpolys agree with P mod l";
}

void measure_oracle(Outcome& o) {
  std::size_t counts = 0;
  for (int n : {2, 3})
    for (std::uint64_t q : {2u, 3u}) {
      auto gf = GFq::make(q);
      std::uint64_t qn1 = 1;
      for (int i = 0; i < n - 1; ++i) qn1 *= q;
      for (Coef kappa = 0; kappa < q; ++kappa) {
        ++counts;
        const auto c = coset_count(gf, n, 1, CosetCondition{CosetScope::WUnits, {{kappa}}});
        o.require(c.count == (kappa == 0 ? qn1 - 1 : qn1), c.condition);
      }
      for (int j : {1, 2}) {
        ++counts;
        const auto lem =
            coset_count(gf, n, j, CosetCondition{CosetScope::DUnits, {std::vector<Coef>(static_cast<std::size_t>(j), 0)}});
        std::uint64_t qj = 1;
        for (int i = 0; i < j; ++i) qj *= q;
        o.require(lem.count * qj <= 2 * lem.total, lem.condition);
      }
    }
  o.detail << counts << " exact counts";
}

void sato_tate(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto phi = rank2_f3();
  int failures = 0;
  std::ostringstream pairs;
  for (const auto& th : kSatoTate) {
    const auto r = sato_tate_histogram(phi, th.d, 1);
    o.require(r.violations == 0, "invariants at d = " + std::to_string(th.d));
    if (th.expected_points != 0)
      o.require(r.sample_size == th.expected_points, "point count at d = " + std::to_string(th.d));
    const auto expect = th.d % 2 == 0 ? std::map<Bucket, Rational>{{{0}, Rational(2, 8)}, {{1}, Rational(3, 8)}, {{2}, Rational(3, 8)}}
                                      : std::map<Bucket, Rational>{{{0}, Rational(1, 3)}, {{1}, Rational(1, 3)}, {{2}, Rational(1, 3)}};
    o.require(r.theoretical == expect, "reference masses at d = " + std::to_string(th.d));
    const double tv = boost::rational_cast<double>(r.tv);
    const bool ok = tv <= th.max_tv;
    if (!ok) ++failures;
    pairs << " d=" << th.d << " N=" << r.sample_size << " counts=[";
    bool first = true;
    for (const auto& [b, c] : r.buckets) {
      pairs << (first ? "" : ",") << c;
      first = false;
    }
    pairs << "] tv=" << r.tv.numerator() << "/" << r.tv.denominator() << (ok ? "<=" : ">") << th.max_tv << ";";
  }
  const double s = seconds_since(t0);
  o.require(s < kSatoTateSeconds, "runtime");
  // a single failing pair is reported for a rerun; two or more fail
  o.require(failures < 2, std::to_string(failures) + " of 4 (d, threshold) pairs out of tolerance");
  if (failures == 1) o.detail << "rerun report: one pair out of tolerance; ";
  o.detail << pairs.str() << " " << std::fixed << std::setprecision(2) << s << " s";
}

void lang_trotter(Outcome& o) {
  const auto phi = rank2_f3();
  auto gf = phi.base();
  for (const BasePoly& a : {BasePoly(gf), BasePoly::constant(gf, 1)}) {
    const auto rep = lang_trotter_counts(phi, a, 1, 7);
    double at3 = 0;
    for (const auto& row : rep.rows) {
      o.require(row.partition_sum == row.good_points, "partition at d = " + std::to_string(row.d));
      if (row.d == 3) at3 = row.ratio_bound;
    }
    o.detail << "a=" << a.to_string() << " ratios:";
    for (const auto& row : rep.rows) {
      o.detail << " " << std::setprecision(4) << row.ratio_bound;
      o.require(row.ratio_bound <= kLangTrotterFactor * at3,
                "ratio at d = " + std::to_string(row.d) + " for a = " + a.to_string());
    }
    o.detail << "; ";
  }
  o.detail << "the ratio bound is heuristic";
}

void conjugation(Outcome& o) {
  auto f4 = FieldCtx::create(2, 2);
  const FFElem w = f4->generator();
  const FFElem one = f4->one();
  const FFElem zero = f4->zero();
  const std::vector<std::vector<FFElem>> modules{
      {w, one, one}, {w, w, one}, {w * w, zero, w}, {one, w * w, w * w}, {w, w + one, w}};
  const BasePoly y = BasePoly::t(f4->base());
  for (const auto& b : modules) {
    const FiniteDrinfeldModule m(f4, b);
    const auto res = conjugate_to_constants(m.eval(y), kConjugationPrecision);
    o.require(res.h == 2, "h = 2");
    const int width = kConjugationPrecision + 4;
    const auto phi_y = SkewLaurentTrunc::from_poly(res.transport(m.eval(y)), width);
    const auto diff = phi_y * res.u - res.u * SkewLaurentTrunc::tau(res.field, res.h, width);
    o.require(diff.is_zero(), "difference vanishes");
    // exponents h, h - 1, ..., h - 11 are known
    o.require(diff.floor() <= res.h - kConjugationPrecision, "checked coefficients");
  }
  o.detail << modules.size() << " modules, " << kConjugationPrecision << " coefficients each";
}

void tower(Outcome& o) {
  for (std::uint64_t q : {2u, 3u}) {
    try {
      const auto levels = artin_schreier_tower(q, 2);
      std::uint64_t expect = 1;
      for (const auto& lv : levels) {
        o.require(lv.certified && lv.degree_over_F == expect,
                  "q = " + std::to_string(q) + " level " + std::to_string(lv.j));
        o.detail << "q=" << q << " j=" << lv.j << " degree " << lv.degree_over_F << "; ";
        expect *= q;
      }
    } catch (const Error& e) {
      o.require(false, e.what());
    }
  }
}

// ---------------------------------------------------------------- properties

SkewPolyL random_skew(std::mt19937_64& rng, const FieldPtr& k, int max_deg) {
  std::vector<FFElem> v;
  const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
  for (int i = 0; i <= d; ++i) v.push_back(random_elem(rng, k));
  return SkewPolyL(k, v);
}

LaurentSeries random_series(std::mt19937_64& rng, const FieldPtr& k, int prec) {
  std::vector<FFElem> v{random_nonzero(rng, k)};
  for (int i = 1; i < prec; ++i) v.push_back(random_elem(rng, k));
  return LaurentSeries(k, static_cast<int>(rng() % 3) - 1, std::move(v));
}

DivAlgElem random_da(std::mt19937_64& rng, const DivAlgPtr& d) {
  std::vector<LaurentSeries> c;
  c.push_back(random_series(rng, d->residue_field(), d->precision()));
  for (int i = 1; i < d->n(); ++i) c.push_back(random_series(rng, d->residue_field(), d->precision()));
  return DivAlgElem(d, c);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void properties(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::ostringstream counts;

  int skew = 0;
  for (const FieldPtr& k : {FieldCtx::create(2, 3), FieldCtx::create(3, 2)})
    for (int i = 0; i < kMinPropertyCases / 2; ++i, ++skew) {
      const auto f = random_skew(rng, k, 3), g = random_skew(rng, k, 3), h = random_skew(rng, k, 3);
      o.require((f * g) * h == f * (g * h), "skew associativity");
      o.require(f * (g + h) == f * g + f * h && (f + g) * h == f * h + g * h, "skew distributivity");
      const FFElem x = random_elem(rng, k);
      o.require(skew_apply(f * g, x) == skew_apply(f, skew_apply(g, x)), "skew composition");
    }
  counts << "skew-ring " << skew;

  int hom = 0, degree = 0;
  auto f8 = FieldCtx::create(2, 3);
  for (int i = 0; i < kMinPropertyCases; ++i, ++hom, ++degree) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    std::vector<FFElem> b{random_nonzero(rng, f8)};
    for (int r = 1; r < rank; ++r) b.push_back(random_elem(rng, f8));
    b.push_back(random_nonzero(rng, f8));
    const FiniteDrinfeldModule m(f8, b);
    const BasePoly a = random_poly(rng, f8->base(), 3), c = random_poly(rng, f8->base(), 3);
    o.require(m.eval(a * c) == m.eval(a) * m.eval(c), "phi_{ac} = phi_a phi_c");
    o.require(m.eval(a + c) == m.eval(a) + m.eval(c), "phi_{a+c} = phi_a + phi_c");
    if (!a.is_zero()) o.require(m.eval(a).degree() == m.rank() * a.degree(), "degree law");
  }
  counts << ", homomorphism " << hom << ", degree law " << degree;

  int neck = 0;
  for (int i = 0; i < kMinPropertyCases; ++i, ++neck) {
    const std::uint64_t q = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
    const int d = 1 + static_cast<int>(rng() % 8);
    std::uint64_t gauss = 0;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) gauss += static_cast<std::uint64_t>(e) * necklace_count(q, e);
    o.require(gauss == ipow(q, d), "sum e N(q, e) = q^d");
    if (ipow(q, d) <= 729)
      o.require(irreducible_monics(GFq::make(q), d).size() == necklace_count(q, d), "enumeration count");
  }
  counts << ", necklace " << neck;

  int val = 0, tn = 0;
  for (int n : {2, 3})
    for (std::uint64_t q : {2u, 3u}) {
      const auto d = DivAlgCtx::create(GFq::make(q), n, 6);
      for (int i = 0; i < kMinPropertyCases / 4; ++i, ++val, ++tn) {
        const auto x = random_da(rng, d), y = random_da(rng, d);
        const auto xy = x * y;
        o.require(da_valuation(xy) == da_valuation(x) + da_valuation(y), "valuation additivity");
        o.require(equal_to_precision(da_reduced_norm(xy), da_reduced_norm(x) * da_reduced_norm(y)),
                  "norm multiplicativity");
        o.require(equal_to_precision(da_reduced_trace(xy), da_reduced_trace(y * x)), "tr(xy) = tr(yx)");
        o.require(equal_to_precision(da_reduced_trace(x + y), da_reduced_trace(x) + da_reduced_trace(y)),
                  "trace additivity");
      }
    }
  counts << ", valuation " << val << ", trace/norm " << tn;

  for (int c : {skew, hom, degree, neck, val, tn}) o.require(c >= kMinPropertyCases, "case count");
  o.detail << counts.str() << " cases";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "carlitz-frobenius-identity", carlitz_identity},
      {2, "rank2-charpoly-engine", rank2_engine},
      {3, "lambda-adic-compatibility", lambda_adic},
      {4, "measure-oracle", measure_oracle},
      {5, "sato-tate-law", sato_tate},
      {6, "lang-trotter-consistency", lang_trotter},
      {7, "u-series-conjugation", conjugation},
      {8, "carlitz-tower", tower},
      {9, "property-suites", properties},
  };

  bool ok = true;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << ": " << o.detail.str() << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
