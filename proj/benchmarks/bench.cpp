#include <benchmark/benchmark.h>

#include "emf/chern.hpp"
#include "emf/corpus.hpp"
#include "emf/euler.hpp"
#include "emf/instance.hpp"

using namespace emf;

static void BM_MilnorAlgebraE8(benchmark::State& state) {
  ProblemInstance inst = generate_corpus("e8", Json::object());
  for (auto _ : state) {
    MilnorAlgebra m = milnor_algebra(inst.f);
    benchmark::DoNotOptimize(m.mu);
  }
}
BENCHMARK(BM_MilnorAlgebraE8);

static void BM_ResidueGramE8(benchmark::State& state) {
  ProblemInstance inst = generate_corpus("e8", Json::object());
  MilnorAlgebra m = milnor_algebra(inst.f);
  for (auto _ : state) {
    ResidueFunctional res(m);
    benchmark::DoNotOptimize(res.gram_on_basis());
  }
}
BENCHMARK(BM_ResidueGramE8);

static void BM_ChernE8(benchmark::State& state) {
  InstanceContext ctx = build_context(generate_corpus("e8", Json::object()));
  for (auto _ : state) {
    Poly ch = chern_hh(ctx.objects[0], ctx.sectors[0]);
    benchmark::DoNotOptimize(ch);
  }
}
BENCHMARK(BM_ChernE8);

static void BM_EulerOracleQuadric4(benchmark::State& state) {
  ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 4}});
  InstanceContext ctx = build_context(inst);
  for (auto _ : state) {
    long chi = euler_oracle(ctx.objects[0], ctx.objects[0], ctx.group, inst.f);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(BM_EulerOracleQuadric4);

static void BM_EulerHrrQuadric4(benchmark::State& state) {
  ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 4}});
  InstanceContext ctx = build_context(inst);
  for (auto _ : state) {
    Scalar chi = euler_hrr(ctx.objects[0], ctx.objects[0], ctx.group, ctx.sectors);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(BM_EulerHrrQuadric4);

BENCHMARK_MAIN();
