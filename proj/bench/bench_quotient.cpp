// Serial vs OpenMP block-parallel quotient builds, plus the naive reference.

#include <benchmark/benchmark.h>

#include "quiverq/ideal.hpp"
#include "quiverq/quotient.hpp"
#include "quiverq/reference.hpp"

using namespace quiverq;

namespace {

struct Case {
  const char* type;
  int n;
  std::size_t degree;
};

const Case kCases[] = {{"A2", 5, 17}, {"A1xA1", 7, 13}, {"A3", 5, 6}};

template <ScalarField F>
void build(benchmark::State& state, const F& f, Execution ex) {
  const Case& c = kCases[state.range(0)];
  CayleyQuiver cq(cartan_from_type(c.type), c.n);
  const auto gens = elements(ideal_generators(cq, f));
  QuotientOptions o;
  o.max_degree = c.degree;
  o.execution = ex;
  std::size_t total = 0;
  for (auto _ : state) {
    GradedQuotient<F> gq(cq.quiver(), f, gens, o);
    total = gq.total_dimension();
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(std::string(c.type) + " n=" + std::to_string(c.n) + " dim " + std::to_string(total));
}

void BM_QuotientSerial(benchmark::State& state) {
  PrimeField f(kCases[state.range(0)].n);
  build(state, f, Execution::serial);
}

void BM_QuotientParallel(benchmark::State& state) {
  PrimeField f(kCases[state.range(0)].n);
  build(state, f, Execution::parallel);
}

void BM_QuotientExactSerial(benchmark::State& state) {
  CyclotomicField f(5);
  CayleyQuiver cq(cartan_from_type("A2"), 5);
  const auto gens = elements(ideal_generators(cq, f));
  QuotientOptions o;
  o.max_degree = static_cast<std::size_t>(state.range(0));
  o.execution = Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(GradedQuotient<CyclotomicField>(cq.quiver(), f, gens, o).total_dimension());
}

void BM_QuotientExactParallel(benchmark::State& state) {
  CyclotomicField f(5);
  CayleyQuiver cq(cartan_from_type("A2"), 5);
  const auto gens = elements(ideal_generators(cq, f));
  QuotientOptions o;
  o.max_degree = static_cast<std::size_t>(state.range(0));
  o.execution = Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(GradedQuotient<CyclotomicField>(cq.quiver(), f, gens, o).total_dimension());
}

void BM_NaiveReference(benchmark::State& state) {
  PrimeField f(5);
  CayleyQuiver cq(cartan_from_type("A2"), 5);
  const auto gens = elements(ideal_generators(cq, f));
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(naive_graded_dimension(cq.quiver(), f, gens, d));
}

}  // namespace

BENCHMARK(BM_QuotientSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientExactSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientExactParallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveReference)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
