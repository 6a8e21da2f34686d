#include <benchmark/benchmark.h>

#include <random>

#include "tropical/essential.hpp"
#include "tropical/sets.hpp"
#include "tropical/syntax.hpp"
#include "tropical/univariate.hpp"

using namespace tropical;

namespace {

Polynomial random_poly(std::size_t arity, unsigned degree, std::size_t terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-20, 20), exp(0, static_cast<int>(degree));
  Polynomial f(arity);
  for (std::size_t attempt = 0; attempt < 64 * terms && f.size() < terms; ++attempt) {
    Exponent e(arity);
    unsigned total = 0;
    for (auto& x : e) total += x = static_cast<unsigned>(exp(rng));
    if (total <= degree) f.add_term(e, TropicalNumber::tangible(Rational(coeff(rng), 2)));
  }
  return f;
}

void BM_Evaluate(benchmark::State& state) {
  Polynomial f = random_poly(3, 6, static_cast<std::size_t>(state.range(0)), 1);
  std::vector<TropicalNumber> p{TropicalNumber::tangible(1), TropicalNumber::ghost(-2),
                                TropicalNumber::tangible(Rational(1, 3))};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, p));
}
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(32)->Arg(64);

void BM_EssentialPart(benchmark::State& state) {
  Polynomial f = random_poly(static_cast<std::size_t>(state.range(0)), 5, 12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(essential_part(f));
}
BENCHMARK(BM_EssentialPart)->Arg(1)->Arg(2)->Arg(3);

void BM_FullClosure(benchmark::State& state) {
  Polynomial f = random_poly(static_cast<std::size_t>(state.range(0)), 5, 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(full_closure(f));
}
BENCHMARK(BM_FullClosure)->Arg(1)->Arg(2)->Arg(3);

void BM_FactorFull(benchmark::State& state) {
  Polynomial f = random_poly(1, static_cast<unsigned>(state.range(0)), 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(factor_full(f));
}
BENCHMARK(BM_FactorFull)->Arg(8)->Arg(32);

void BM_Comset(benchmark::State& state) {
  Polynomial f = random_poly(1, 20, 12, 5);
  for (auto _ : state) benchmark::DoNotOptimize(comset1d(f));
}
BENCHMARK(BM_Comset);

void BM_CornerLocus(benchmark::State& state) {
  Polynomial f = random_poly(2, 4, 10, 6);
  BBox box{-20, -20, 20, 20};
  for (auto _ : state) benchmark::DoNotOptimize(corner_locus_2d(f, box));
}
BENCHMARK(BM_CornerLocus);

void BM_ParseFormat(benchmark::State& state) {
  std::string text = format_poly(random_poly(3, 6, 30, 7));
  for (auto _ : state) benchmark::DoNotOptimize(format_poly(parse_poly(text)));
}
BENCHMARK(BM_ParseFormat);

}  // namespace

BENCHMARK_MAIN();
