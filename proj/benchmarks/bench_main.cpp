#include <algorithm>
#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "heroix/heroix.hpp"

using namespace heroix;

namespace {

Tournament random_tournament(std::mt19937_64& rng, int n) {
  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1u) t.set_edge(j, i);
    }
  }
  return t;
}

std::vector<Tournament> random_batch(std::uint64_t seed, int n, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Tournament> out;
  for (int i = 0; i < count; ++i) out.push_back(random_tournament(rng, n));
  return out;
}

// Canonical labelling of every 8-vertex class under a random relabelling;
// this is the inner loop of orderly enumeration.
void BM_CanonicalAllClasses8(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Tournament> inputs;
  for (const Tournament& t : enumerate_tournaments(8)) {
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    inputs.push_back(relabel(t, perm));
  }
  for (auto _ : state) {
    for (const Tournament& t : inputs) benchmark::DoNotOptimize(canonical_form(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_CanonicalAllClasses8)->Unit(benchmark::kMillisecond);

void BM_CanonicalRandom(benchmark::State& state) {
  const auto inputs = random_batch(2, static_cast<int>(state.range(0)), 32);
  for (auto _ : state) {
    for (const Tournament& t : inputs) benchmark::DoNotOptimize(canonical_form(t));
  }
  state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_CanonicalRandom)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_ChromaticSubsetDp(benchmark::State& state) {
  const Tournament t = random_batch(3, static_cast<int>(state.range(0)), 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(t));
}
BENCHMARK(BM_ChromaticSubsetDp)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ChromaticD4(benchmark::State& state) {
  const Tournament t = d_tournament(4);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(t));
}
BENCHMARK(BM_ChromaticD4)->Unit(benchmark::kMillisecond);

void BM_RefuteA4ThreeColouring(benchmark::State& state) {
  const Tournament t = a_tournament(4);
  for (auto _ : state) benchmark::DoNotOptimize(decide_k_colorable(t, 3));
}
BENCHMARK(BM_RefuteA4ThreeColouring)->Unit(benchmark::kMillisecond);

void BM_ContainsD3(benchmark::State& state) {
  const auto hosts = random_batch(4, static_cast<int>(state.range(0)), 16);
  const Tournament d3 = d_tournament(3);
  for (auto _ : state) {
    for (const Tournament& h : hosts) benchmark::DoNotOptimize(contains_subtournament(h, d3));
  }
}
BENCHMARK(BM_ContainsD3)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_HeroAllClasses7(benchmark::State& state) {
  const auto& classes = enumerate_tournaments(7);
  for (auto _ : state) {
    for (const Tournament& t : classes) benchmark::DoNotOptimize(is_hero(t));
  }
}
BENCHMARK(BM_HeroAllClasses7)->Unit(benchmark::kMillisecond);

void BM_ForestSearchAllClasses7(benchmark::State& state) {
  const auto& classes = enumerate_tournaments(7);
  for (auto _ : state) {
    for (const Tournament& t : classes) benchmark::DoNotOptimize(find_forest_ordering(t));
  }
}
BENCHMARK(BM_ForestSearchAllClasses7)->Unit(benchmark::kMillisecond);

void BM_ForestSearchRandom9(benchmark::State& state) {
  const auto inputs = random_batch(5, 9, 16);
  for (auto _ : state) {
    for (const Tournament& t : inputs) benchmark::DoNotOptimize(find_forest_ordering(t));
  }
}
BENCHMARK(BM_ForestSearchRandom9)->Unit(benchmark::kMillisecond);

void BM_MemberA(benchmark::State& state) {
  const Tournament t = a_tournament(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(member_A(t));
}
BENCHMARK(BM_MemberA)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_Decomposition(benchmark::State& state) {
  const auto inputs = random_batch(6, static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    for (const Tournament& t : inputs) benchmark::DoNotOptimize(substitution_decomposition(t));
  }
}
BENCHMARK(BM_Decomposition)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
