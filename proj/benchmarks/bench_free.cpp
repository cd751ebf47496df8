#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "qf/free_quandle.hpp"
#include "qf/normalize.hpp"
#include "qf/term.hpp"
#include "qf/variety.hpp"
#include "qf/verify.hpp"

namespace {

qf::GeneratorSet numbered_generators(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back("g" + std::to_string(i));
  return qf::GeneratorSet::of(std::move(names));
}

void StarMedial(benchmark::State& state) {
  auto ctx = qf::FreeContext::medial(numbered_generators(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(5);
  qf::FreeElement a = qf::random_element(ctx, rng);
  qf::FreeElement b = qf::random_element(ctx, rng);
  for (auto _ : state) {
    qf::FreeElement c = qf::star(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(StarMedial)->Range(2, 32);

void StarSymmetric3(benchmark::State& state) {
  auto ctx = qf::FreeContext::symmetric(numbered_generators(static_cast<int>(state.range(0))), 3);
  std::mt19937_64 rng(6);
  qf::FreeElement a = qf::random_element(ctx, rng);
  qf::FreeElement b = qf::random_element(ctx, rng);
  for (auto _ : state) {
    qf::FreeElement c = qf::star(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(StarSymmetric3)->Range(2, 32);

// x * (x * (... * (x * y))), depth nestings.
qf::Term nested_term(int depth) {
  qf::Term x = qf::Term::var("x");
  qf::Term t = qf::Term::var("y");
  for (int i = 0; i < depth; ++i) t = qf::Term::star(x, t);
  return t;
}

void NormalizeNested(benchmark::State& state) {
  qf::Term t = nested_term(static_cast<int>(state.range(0)));
  qf::VarietySpec variety = qf::VarietySpec::medial();
  for (auto _ : state) {
    qf::FreeElement nf = qf::normalize(t, variety);
    benchmark::DoNotOptimize(nf);
  }
}
BENCHMARK(NormalizeNested)->Range(8, 128);

void EmbedUnembedRoundTrip(benchmark::State& state) {
  auto ctx = qf::FreeContext::medial(numbered_generators(8));
  std::mt19937_64 rng(7);
  qf::FreeElement p = qf::random_element(ctx, rng);
  for (auto _ : state) {
    qf::FreeElement back = qf::unembed_affine(qf::embed_affine(p));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(EmbedUnembedRoundTrip);

void DecideMediality(benchmark::State& state) {
  qf::Term lhs = qf::Term::parse("(x*y)*(u*v)");
  qf::Term rhs = qf::Term::parse("(x*u)*(y*v)");
  qf::VarietySpec variety = qf::VarietySpec::medial();
  for (auto _ : state) {
    qf::Verdict v = qf::decide_identity(lhs, rhs, variety);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(DecideMediality);

}  // namespace

BENCHMARK_MAIN();
