#include <benchmark/benchmark.h>

#include "shard/collapse.hpp"
#include "shard/shelling.hpp"

using namespace shard;

namespace {

SimplicialComplex fan(int n) {
  std::vector<Simplex> tris;
  for (int i = 1; i < n; ++i)
    tris.push_back(sx({"o", "v" + std::to_string(i), "v" + std::to_string(i + 1)}));
  return SimplicialComplex::from_facets(tris);
}

void BM_collapse_fan(benchmark::State& state) {
  auto D = fan(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = search_collapse_to_point(D, std::nullopt, 1u << 22);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_collapse_fan)->Arg(8)->Arg(16)->Arg(24);

void BM_shelling_fan(benchmark::State& state) {
  auto D = fan(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = search_shelling(D, std::size_t{1}, 1u << 22);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_shelling_fan)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
