#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>
#include <random>

#include "surfenum/classifier.hpp"
#include "surfenum/enumerator.hpp"
#include "surfenum/geometry.hpp"
#include "surfenum/realizer.hpp"
#include "surfenum/text_format.hpp"

using namespace surfenum;

namespace {

const std::vector<TriangleSet>& surfaces(int n) {
  static std::map<int, std::vector<TriangleSet>> cache;
  auto& v = cache[n];
  if (v.empty()) {
    EnumerationConfig config;
    config.n = n;
    v = enumerate(config);
  }
  return v;
}

TriangleSet torus7() {
  return parse_complex("1,2,3;1,2,4;1,3,7;1,4,5;1,5,6;1,6,7;2,3,6;2,4,7;2,5,6;2,5,7;3,4,5;3,4,6;3,5,7;4,6,7");
}

void BM_EnumerateRaw(benchmark::State& state) {
  EnumerationConfig config;
  config.n = static_cast<int>(state.range(0));
  config.order = state.range(1) ? Order::MixedLex : Order::Lex;
  std::uint64_t emitted = 0;
  for (auto _ : state) {
    emitted = enumerate_raw(config, [](const TriangleSet& c) { benchmark::DoNotOptimize(c.size()); }).emitted;
  }
  state.counters["emitted"] = static_cast<double>(emitted);
}
BENCHMARK(BM_EnumerateRaw)->Args({8, 0})->Args({8, 1})->Args({9, 1})->Unit(benchmark::kMillisecond);

void BM_InvariantKey(benchmark::State& state) {
  const auto& pool = surfaces(9);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invariant_key(pool[i++ % pool.size()]));
}
BENCHMARK(BM_InvariantKey);

void BM_CanonicalForm(benchmark::State& state) {
  const auto& pool = surfaces(9);
  std::mt19937_64 rng(1);
  std::vector<TriangleSet> relabeled;
  for (const auto& c : pool) {
    std::vector<int> perm(10);
    for (int v = 0; v <= 9; ++v) perm[v] = v;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    relabeled.push_back(c.relabeled(perm));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(relabeled[i++ % relabeled.size()]));
}
BENCHMARK(BM_CanonicalForm);

void BM_Deduplicate(benchmark::State& state) {
  EnumerationConfig config;
  config.n = 8;
  config.emit_isomorphic_duplicates = true;
  const auto raw = enumerate(config);
  for (auto _ : state) benchmark::DoNotOptimize(deduplicate(raw).size());
  state.counters["inputs"] = static_cast<double>(raw.size());
}
BENCHMARK(BM_Deduplicate)->Unit(benchmark::kMillisecond);

void BM_Orient3d(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::int64_t bound = std::int64_t{1} << state.range(0);
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<Point3> pts(4096);
  for (auto& p : pts) p = {d(rng), d(rng), d(rng)};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orient3d(pts[i & 4095], pts[(i + 1) & 4095], pts[(i + 2) & 4095], pts[(i + 3) & 4095]));
    ++i;
  }
}
BENCHMARK(BM_Orient3d)->Arg(15)->Arg(30)->Arg(50);

void BM_EmbeddingCheck(benchmark::State& state) {
  const TriangleSet c = torus7();
  const EmbeddingChecker check(c);
  RealizationConfig config;
  std::vector<CoordinateAssignment> tries;
  for (std::uint64_t a = 0; a < 1024; ++a) tries.push_back(random_coordinates(7, config, 0, a));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check(tries[i++ & 1023]));
}
BENCHMARK(BM_EmbeddingCheck);

void BM_RandomRealizeSphere(benchmark::State& state) {
  const auto& pool = surfaces(9);
  const TriangleSet& sphere =
      *std::find_if(pool.begin(), pool.end(), [](const TriangleSet& c) { return euler_characteristic(c) == 2; });
  RealizationConfig config;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(random_realize(sphere, config));
  }
}
BENCHMARK(BM_RandomRealizeSphere)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
