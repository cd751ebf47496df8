#include <benchmark/benchmark.h>

#include <random>

#include "qf/cyclotomic.hpp"
#include "qf/laurent.hpp"
#include "qf/ring.hpp"

namespace {

qf::LaurentPoly dense_poly(int degree, std::mt19937_64& rng) {
  qf::LaurentPoly p;
  for (int e = 0; e <= degree; ++e)
    p += qf::LaurentPoly::monomial(e, static_cast<long long>(rng() % 19) - 9);
  return p;
}

void LaurentMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int degree = static_cast<int>(state.range(0));
  qf::LaurentPoly a = dense_poly(degree, rng);
  qf::LaurentPoly b = dense_poly(degree, rng);
  for (auto _ : state) {
    qf::LaurentPoly c = a;
    c *= b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(LaurentMul)->Range(8, 256);

void QuotientReduce(benchmark::State& state) {
  std::mt19937_64 rng(2);
  qf::RingSpec spec = qf::RingSpec::quotient(qf::LaurentPoly::parse("1+t+t^2+t^3"));
  qf::LaurentPoly a = dense_poly(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    qf::RingElement r = qf::reduce(a, spec);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(QuotientReduce)->Range(8, 256);

void DivideByOneMinusT(benchmark::State& state) {
  std::mt19937_64 rng(3);
  qf::LaurentPoly a = dense_poly(static_cast<int>(state.range(0)), rng);
  a *= qf::LaurentPoly::parse("1-t");
  for (auto _ : state) {
    qf::LaurentPoly q = qf::divide_by_one_minus_t(a);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(DivideByOneMinusT)->Range(8, 256);

void Cyclotomic105(benchmark::State& state) {
  for (auto _ : state) {
    qf::LaurentPoly p = qf::cyclotomic(105);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(Cyclotomic105);

void CrtResidues(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<qf::LaurentPoly> factors = qf::factor_symmetric_poly(12);
  qf::RingSpec spec = qf::RingSpec::quotient(qf::LaurentPoly::parse(
      "1+t+t^2+t^3+t^4+t^5+t^6+t^7+t^8+t^9+t^10+t^11"));
  qf::RingElement a = qf::reduce(dense_poly(10, rng), spec);
  for (auto _ : state) {
    auto parts = qf::crt_residues(a, factors);
    benchmark::DoNotOptimize(parts);
  }
}
BENCHMARK(CrtResidues);

}  // namespace

BENCHMARK_MAIN();
