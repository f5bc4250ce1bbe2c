#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "padic/newton.hpp"
#include "padic/padic_number.hpp"
#include "padic/valuation.hpp"

using namespace padic;

namespace {

void bm_vp(benchmark::State& state) {
  place p(3);
  integer n = 1;
  for (int i = 0; i < state.range(0); ++i) n *= 3;
  n *= 7919;
  for (auto _ : state) benchmark::DoNotOptimize(vp(n, p));
}
BENCHMARK(bm_vp)->Arg(8)->Arg(64)->Arg(512);

void bm_legendre(benchmark::State& state) {
  place p(2);
  integer n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legendre_factorial(n, p));
}
BENCHMARK(bm_legendre)->Arg(1000)->Arg(1000000);

void bm_from_rational(benchmark::State& state) {
  integer g(10);
  rational x(314159, 2560);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(padic_number::from_rational(x, g, n));
}
BENCHMARK(bm_from_rational)->Arg(8)->Arg(64)->Arg(256);

void bm_mul(benchmark::State& state) {
  integer g(7);
  auto n = static_cast<std::size_t>(state.range(0));
  auto x = padic_number::from_rational(rational(22, 5), g, n);
  auto y = padic_number::from_rational(rational(13, 11), g, n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(bm_mul)->Arg(8)->Arg(64)->Arg(256);

void bm_inv(benchmark::State& state) {
  integer g(7);
  auto n = static_cast<std::size_t>(state.range(0));
  auto x = padic_number::from_rational(rational(22, 5), g, n);
  for (auto _ : state) benchmark::DoNotOptimize(inv(x));
}
BENCHMARK(bm_inv)->Arg(8)->Arg(64)->Arg(256);

void bm_polygon(benchmark::State& state) {
  place p(2);
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pick_c(1, 1 << 20);
  std::vector<rational> coeffs;
  for (long i = 0; i <= state.range(0); ++i)
    coeffs.push_back(rational(pick_c(rng)));
  poly_q poly(coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(polygon_of(poly, p));
}
BENCHMARK(bm_polygon)->Arg(16)->Arg(128)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
