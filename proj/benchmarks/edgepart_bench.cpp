#include <benchmark/benchmark.h>

#include <random>

#include "edgepart/constraints.hpp"
#include "edgepart/encoding.hpp"
#include "edgepart/ga.hpp"
#include "edgepart/generator.hpp"
#include "edgepart/reduction.hpp"

namespace {

using namespace edgepart;

const Graph& standin(int which) {
  static const Graph graphs[] = {generate_instance(standin_spec(1)), generate_instance(standin_spec(2)),
                                 generate_instance(standin_spec(3))};
  return graphs[which - 1];
}

void BM_Reduce(benchmark::State& state) {
  const Graph& g = standin(3);
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g, T));
  state.counters["genes"] = static_cast<double>(reduce(g, T).size());
}
BENCHMARK(BM_Reduce)->Arg(0)->Arg(10)->Arg(20);

void BM_Decode(benchmark::State& state) {
  const Graph& g = standin(3);
  auto rg = reduce(g, static_cast<double>(state.range(0)));
  Rng rng(7);
  std::bernoulli_distribution bit(0.5);
  Chromosome c(rg.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = bit(rng);
  for (auto _ : state) benchmark::DoNotOptimize(decode(c, rg));
  state.counters["genes"] = static_cast<double>(rg.size());
}
BENCHMARK(BM_Decode)->Arg(0)->Arg(10)->Arg(20);

void BM_Generation(benchmark::State& state) {
  const Graph& g = standin(3);
  auto rg = reduce(g, static_cast<double>(state.range(0)));
  GaConfig cfg;
  FitnessEvaluator eval(rg, g.constraints(), default_lambda(g));
  Rng rng(11);
  Population pop;
  pop.members = init_population(rg, cfg, rng);
  for (auto& c : pop.members) pop.fitness.push_back(eval.evaluate(c));
  for (auto _ : state) pop = evolve_generation(pop, eval, cfg, rng);
  state.counters["genes"] = static_cast<double>(rg.size());
}
BENCHMARK(BM_Generation)->Arg(0)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
