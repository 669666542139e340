#include <benchmark/benchmark.h>

#include "schur_scope/curves.hpp"
#include "schur_scope/ncposet.hpp"
#include "schur_scope/schur.hpp"

using namespace schur_scope;

namespace {

const char* const kFinite[] = {"A3", "B3", "A4", "D4"};

void BM_HurwitzOrbit(benchmark::State& state) {
  const Orientation o(preset(kFinite[state.range(0)]));
  const auto start = canonical_factorization(o);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_orbit(start, 1'000'000));
  state.SetLabel(kFinite[state.range(0)]);
}
BENCHMARK(BM_HurwitzOrbit)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateNC(benchmark::State& state) {
  const Orientation o(preset(kFinite[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc(o));
  state.SetLabel(kFinite[state.range(0)]);
}
BENCHMARK(BM_EnumerateNC)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PrefixGeneric(benchmark::State& state) {
  const Orientation o(preset("universal:3:2"));
  const auto roots = positive_real_roots(o.cartan(), state.range(0));
  const SchurOptions generic{false, PrefixRoutes::Both};
  for (auto _ : state) {
    for (const auto& beta : roots) benchmark::DoNotOptimize(is_schur_root(beta, o, {}, generic));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(roots.size()));
}
BENCHMARK(BM_PrefixGeneric)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyConjecture(benchmark::State& state) {
  const Orientation o(preset("universal:3:2"));
  for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(o, state.range(0)));
}
BENCHMARK(BM_VerifyConjecture)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IsSimple(benchmark::State& state) {
  const auto words = canonical_words(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(is_simple(w, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_IsSimple)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
