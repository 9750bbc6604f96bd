#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "edgepart/constraint_set.hpp"
#include "edgepart/encoding.hpp"
#include "edgepart/reduction.hpp"

namespace edgepart {

using Rng = std::mt19937_64;

enum class CrossoverKind { single_point, uniform };

/// GA parameters. Defaults are the standard settings: population 100,
/// 100 generations, crossover 0.80, per-gene mutation 0.02, 10% elites and
/// 90% offspring, 30 independent runs.
struct GaConfig {
  std::size_t population_size = 100;
  std::size_t generations = 100;
  double crossover_rate = 0.80;
  double mutation_rate = 0.02;
  double elitism_fraction = 0.10;
  double selection_fraction = 0.90;
  std::size_t runs = 30;
  std::uint64_t seed = 1;
  std::optional<double> lambda;  // penalty weight; empty = default_lambda(g)
  CrossoverKind crossover = CrossoverKind::single_point;
  bool normalize = false;  // canonicalize each chromosome before evaluating it
  bool serial = false;     // run replicates one at a time (clean timings)

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;

  /// ⌈elitism_fraction × population_size⌉.
  std::size_t elite_count() const;
};

/// Decodes and scores chromosomes, counting every evaluation and remembering
/// the evaluation at which the current best fitness first appeared.
class FitnessEvaluator {
 public:
  FitnessEvaluator(const ReducedGraph& rg, const ConstraintSet& cs, double lambda,
                   bool normalize = false);

  /// Scores c. With normalization on, c is rewritten in place first.
  double evaluate(Chromosome& c);

  /// Scoring without side effects on the counters.
  double score(const Chromosome& c) const;

  std::uint64_t evaluations() const noexcept { return evaluations_; }
  double best_fitness() const noexcept { return best_fitness_; }
  std::uint64_t best_found_at() const noexcept { return best_found_at_; }
  const Chromosome& best_chromosome() const noexcept { return best_; }
  double lambda() const noexcept { return lambda_; }

 private:
  const ReducedGraph* rg_;
  const ConstraintSet* cs_;
  double lambda_;
  bool normalize_;
  std::uint64_t evaluations_ = 0;
  double best_fitness_;
  std::uint64_t best_found_at_ = 0;
  Chromosome best_;
};

struct Population {
  std::vector<Chromosome> members;
  std::vector<double> fitness;

  std::size_t size() const noexcept { return members.size(); }
  std::size_t best_index() const;
  double best_fitness() const { return fitness.at(best_index()); }
};

/// population_size chromosomes of rg.size() genes, each gene uniform in {0,1}.
std::vector<Chromosome> init_population(const ReducedGraph& rg, const GaConfig& cfg, Rng& rng);

/// Binary tournament with replacement; returns the index of the fitter
/// (lower) of two uniformly drawn individuals, the first drawn on ties.
std::size_t tournament_select(std::span<const double> fitness, Rng& rng);

/// Children swap suffixes at cut point k, 1 <= k < |a|.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b, std::size_t k);

/// Cut point uniform in 1..|a|-1. Throws ContractError unless |a| = |b| >= 2.
std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& a, const Chromosome& b,
                                                         Rng& rng);

/// Each locus swapped between the children with probability 1/2.
std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

/// Flips each gene independently with probability rate.
Chromosome mutate(Chromosome c, double rate, Rng& rng);

/// One generational step: the elite_count() best survive unchanged (and are
/// not re-evaluated); the other slots are filled with offspring produced by
/// tournament selection, crossover with probability crossover_rate, and
/// mutation.
Population evolve_generation(const Population& current, FitnessEvaluator& evaluator,
                             const GaConfig& cfg, Rng& rng);

struct RunResult {
  std::uint64_t seed = 0;
  Chromosome best_chromosome;
  Partition best_partition;
  double best_fitness = 0.0;  // penalized
  bool feasible = false;
  std::uint64_t nvs = 0;           // evaluations up to the first hit of best_fitness
  std::uint64_t evaluations = 0;   // total evaluations
  double elapsed_ms = 0.0;         // wall clock
  std::size_t generations_executed = 0;
  std::vector<double> best_per_generation;  // index 0 = initial population
};

/// One complete GA run seeded with run_seed. Always executes cfg.generations
/// generations.
RunResult run(const ReducedGraph& rg, const ConstraintSet& cs, const GaConfig& cfg,
              std::uint64_t run_seed);

struct AggregateStats {
  double abf = 0.0;           // mean best fitness
  double mean_nvs = 0.0;
  double mrt_ms = 0.0;        // mean wall-clock per run
  double best_overall = 0.0;
  double feasible_rate = 0.0;
  std::size_t runs = 0;
};

AggregateStats aggregate(std::span<const RunResult> runs);

struct MultiRunResult {
  std::vector<RunResult> runs;  // runs[i] used seed cfg.seed + i + 1
  AggregateStats stats;
};

/// cfg.runs independent runs seeded cfg.seed + 1 .. cfg.seed + cfg.runs.
/// Runs execute on worker threads unless cfg.serial is set; results do not
/// depend on scheduling, only the timings do.
MultiRunResult multi_run(const ReducedGraph& rg, const ConstraintSet& cs, const GaConfig& cfg);

/// CSV columns: run,seed,best_fitness,nvs,elapsed_ms,feasible.
void write_run_csv_header(std::ostream& out);
void write_run_csv_row(std::ostream& out, std::size_t run_number, const RunResult& r);
void write_run_csv_rows(std::ostream& out, std::span<const RunResult> runs);

}  // namespace edgepart
