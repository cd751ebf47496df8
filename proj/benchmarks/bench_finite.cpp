#include <benchmark/benchmark.h>

#include "qf/finite_analysis.hpp"
#include "qf/finite_table.hpp"
#include "qf/permutation.hpp"

namespace {

void CheckAxioms(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  qf::FiniteBinaryTable Q = qf::affine_quandle(k, k - 1);
  for (auto _ : state) {
    qf::AxiomReport rep = qf::check_axioms(Q);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(CheckAxioms)->Range(8, 64);

void CheckAxiomsThreaded(benchmark::State& state) {
  qf::FiniteBinaryTable Q = qf::affine_quandle(64, 63);
  for (auto _ : state) {
    qf::AxiomReport rep = qf::check_axioms(Q, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(CheckAxiomsThreaded)->RangeMultiplier(2)->Range(1, 8);

void DisClosure(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  qf::FiniteBinaryTable Q = qf::affine_quandle(k, k - 1);
  for (auto _ : state) {
    qf::PermGroup D = qf::dis(Q);
    benchmark::DoNotOptimize(D);
  }
}
BENCHMARK(DisClosure)->Range(8, 64);

void MedialityVsDisAbelian(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  qf::FiniteBinaryTable Q = qf::affine_quandle(k, k - 1);
  for (auto _ : state) {
    qf::MedialityReport rep = qf::medial_iff_dis_abelian(Q);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(MedialityVsDisAbelian)->Range(8, 32);

void SearchNonMedialWitness(benchmark::State& state) {
  for (auto _ : state) {
    qf::NonMedialSearchResult res = qf::search_nonmedial_quandle(4);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(SearchNonMedialWitness);

}  // namespace

BENCHMARK_MAIN();
