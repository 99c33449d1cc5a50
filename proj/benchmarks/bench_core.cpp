#include <benchmark/benchmark.h>

#include <random>

#include "df/chain_complex.hpp"
#include "df/coxeter.hpp"
#include "df/davis_complex.hpp"
#include "df/dihedral_census.hpp"
#include "df/smith.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  df::IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 199) - 99;
  for (auto _ : state) benchmark::DoNotOptimize(df::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(20)->Arg(30);

void BM_NormalForm(benchmark::State& state) {
  const df::CoxeterSystem sys({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::mt19937_64 rng(2);
  std::vector<df::CoxWord> words(256);
  for (auto& w : words) {
    w.resize(static_cast<std::size_t>(state.range(0)));
    for (auto& x : w) x = static_cast<std::uint32_t>(rng() % sys.rank());
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(df::normal_form(sys, words[i++ % words.size()]));
}
BENCHMARK(BM_NormalForm)->Arg(12)->Arg(48);

void BM_Ball(benchmark::State& state) {
  const df::CoxeterSystem sys({"a", "b", "c", "d"}, {{0, 2}, {1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(df::ball(sys, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Ball)->Arg(4)->Arg(6);

void BM_DavisHomology(benchmark::State& state) {
  const df::DavisComplex p(df::SimplicialComplex::simplex_boundary(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(df::homology(df::davis_chain_complex(p)));
}
BENCHMARK(BM_DavisHomology)->Arg(3)->Arg(5);

void BM_CrystalCensus(benchmark::State& state) {
  const auto g = df::make_crystal_model(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(df::run_census(*g));
}
BENCHMARK(BM_CrystalCensus)->Arg(1)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
