#include <random>

#include <benchmark/benchmark.h>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/division_algebra.hpp"
#include "drinfeld/experiments.hpp"
#include "drinfeld/frobenius.hpp"
#include "drinfeld/skew_poly.hpp"

using namespace drinfeld;

namespace {

FFElem random_elem(std::mt19937_64& rng, const FieldPtr& k) {
  std::vector<Coef> c(static_cast<std::size_t>(k->degree()));
  for (auto& x : c) x = static_cast<Coef>(rng() % k->base()->q());
  return FFElem(k, c);
}

RationalDrinfeldModule rank2(std::uint64_t q) {
  auto gf = GFq::make(q);
  return RationalDrinfeldModule(gf, {BasePoly::t(gf), BasePoly::constant(gf, 1), BasePoly::constant(gf, 1)});
}

void BM_FieldMul(benchmark::State& state) {
  auto k = FieldCtx::create(3, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  FFElem a = random_elem(rng, k);
  const FFElem b = random_elem(rng, k);
  for (auto _ : state) {
    a = a * b + b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6)->Arg(12);

void BM_SkewMul(benchmark::State& state) {
  auto k = FieldCtx::create(2, 6);
  std::mt19937_64 rng(2);
  std::vector<FFElem> u, v;
  for (int i = 0; i <= state.range(0); ++i) {
    u.push_back(random_elem(rng, k));
    v.push_back(random_elem(rng, k));
  }
  const SkewPolyL f(k, u), g(k, v);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SkewMul)->Arg(4)->Arg(16)->Arg(32);

void BM_FrobCharpoly(benchmark::State& state) {
  const auto phi = rank2(2);
  const auto primes = irreducible_monics(phi.base(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frob_charpoly_at(phi, primes.front()));
}
BENCHMARK(BM_FrobCharpoly)->Arg(4)->Arg(8)->Arg(12);

void BM_SatoTateDegree(benchmark::State& state) {
  const auto phi = rank2(3);
  for (auto _ : state) benchmark::DoNotOptimize(sato_tate_histogram(phi, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_SatoTateDegree)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_DivAlgNorm(benchmark::State& state) {
  const auto d = DivAlgCtx::create(GFq::make(3), static_cast<int>(state.range(0)), 8);
  std::mt19937_64 rng(3);
  std::vector<LaurentSeries> c;
  for (int i = 0; i < d->n(); ++i) {
    std::vector<FFElem> v;
    for (int k = 0; k < 8; ++k) v.push_back(random_elem(rng, d->residue_field()));
    v[0] = d->residue_field()->one();
    c.emplace_back(d->residue_field(), 0, v);
  }
  const DivAlgElem x(d, c);
  for (auto _ : state) benchmark::DoNotOptimize(da_reduced_norm(x));
}
BENCHMARK(BM_DivAlgNorm)->Arg(2)->Arg(3)->Arg(4);

void BM_CosetCount(benchmark::State& state) {
  auto gf = GFq::make(3);
  const int j = static_cast<int>(state.range(0));
  const CosetCondition cond{CosetScope::DUnits, {std::vector<Coef>(static_cast<std::size_t>(j), 0)}};
  for (auto _ : state) benchmark::DoNotOptimize(coset_count(gf, 2, j, cond));
}
BENCHMARK(BM_CosetCount)->Arg(1)->Arg(2)->Arg(3);

void BM_Tower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(artin_schreier_tower(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Tower)->Arg(1)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
