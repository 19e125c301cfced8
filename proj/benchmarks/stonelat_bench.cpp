#include <benchmark/benchmark.h>

#include "stonelat/cantor.hpp"
#include "stonelat/catalog.hpp"
#include "stonelat/filters.hpp"
#include "stonelat/pathlat.hpp"
#include "stonelat/stone.hpp"

using namespace stonelat;

namespace {

void BM_EnumerateCatalog(benchmark::State& state) {
  const CatalogSpec spec{static_cast<std::size_t>(state.range(0)), CatalogSpec::Mode::kExhaustive, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_catalog(spec));
}
BENCHMARK(BM_EnumerateCatalog)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_RunSuite(benchmark::State& state) {
  const CatalogSpec spec{static_cast<std::size_t>(state.range(0)), CatalogSpec::Mode::kExhaustive, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(spec));
}
BENCHMARK(BM_RunSuite)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_TightFilters(benchmark::State& state) {
  const auto samples = enumerate_catalog(
      {static_cast<std::size_t>(state.range(0)), CatalogSpec::Mode::kRandom, 8, 7});
  for (auto _ : state) {
    for (const auto& s : samples) benchmark::DoNotOptimize(tight_filters(s));
  }
}
BENCHMARK(BM_TightFilters)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ClopenAlgebraOfTruncation(benchmark::State& state) {
  const auto g = parse_graph("vertices: t\nroot: t\nedge a t t\nedge b t t\n");
  const auto p = truncate(g, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clopen_algebra(build_space(p.lattice)).size());
}
BENCHMARK(BM_ClopenAlgebraOfTruncation)->DenseRange(1, 3);

void BM_CantorComplement(benchmark::State& state) {
  const cantor::Alphabet a("abc");
  std::vector<cantor::Word> words;
  for (char x : std::string("abc")) {
    for (char y : std::string("abc")) words.push_back(std::string(static_cast<std::size_t>(state.range(0)), x) + y);
  }
  const auto p = cantor::normalize(a, words);
  for (auto _ : state) benchmark::DoNotOptimize(cantor::complement(p));
}
BENCHMARK(BM_CantorComplement)->RangeMultiplier(2)->Range(1, 16);

void BM_CantorEval(benchmark::State& state) {
  const cantor::Alphabet a("ab");
  const std::string expr = "!(aa | ba) & (ab | !(bbb & b)) | !(a & !aab)";
  for (auto _ : state) benchmark::DoNotOptimize(cantor::eval(a, expr));
}
BENCHMARK(BM_CantorEval);

}  // namespace

BENCHMARK_MAIN();
