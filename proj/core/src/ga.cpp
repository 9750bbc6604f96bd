#include "edgepart/ga.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "edgepart/constraints.hpp"
#include "edgepart/errors.hpp"

namespace edgepart {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + format_number(p));
  }
}

}  // namespace

void GaConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
  if (runs < 1) throw std::invalid_argument("number of runs must be at least 1");
  require_probability(crossover_rate, "crossover rate");
  require_probability(mutation_rate, "mutation rate");
  require_probability(elitism_fraction, "elitism fraction");
  require_probability(selection_fraction, "selection fraction");
  if (std::abs(elitism_fraction + selection_fraction - 1.0) > 1e-9) {
    throw std::invalid_argument("elitism and selection fractions must sum to 1");
  }
  if (elite_count() >= population_size) {
    throw std::invalid_argument("elitism leaves no room for offspring");
  }
  if (lambda && !(*lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
}

std::size_t GaConfig::elite_count() const {
  const double raw = elitism_fraction * static_cast<double>(population_size);
  return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

// ---------------------------------------------------------------------------

FitnessEvaluator::FitnessEvaluator(const ReducedGraph& rg, const ConstraintSet& cs, double lambda,
                                   bool normalize)
    : rg_(&rg),
      cs_(&cs),
      lambda_(lambda),
      normalize_(normalize),
      best_fitness_(std::numeric_limits<double>::infinity()) {}

double FitnessEvaluator::score(const Chromosome& c) const {
  return penalized_fitness(decode(c, *rg_), *cs_, lambda_);
}

double FitnessEvaluator::evaluate(Chromosome& c) {
  auto p = decode(c, *rg_);
  if (normalize_) c = encode(p, *rg_);
  const double f = penalized_fitness(p, *cs_, lambda_);
  ++evaluations_;
  if (f < best_fitness_) {
    best_fitness_ = f;
    best_found_at_ = evaluations_;
    best_ = c;
  }
  return f;
}

std::size_t Population::best_index() const {
  if (fitness.empty()) throw ContractError("empty population has no best individual");
  return static_cast<std::size_t>(std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
}

// ---------------------------------------------------------------------------
// Operators

std::vector<Chromosome> init_population(const ReducedGraph& rg, const GaConfig& cfg, Rng& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Chromosome> pop;
  pop.reserve(cfg.population_size);
  for (std::size_t i = 0; i < cfg.population_size; ++i) {
    Chromosome c(rg.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = static_cast<Chromosome::Gene>(bit(rng));
    pop.push_back(std::move(c));
  }
  return pop;
}

std::size_t tournament_select(std::span<const double> fitness, Rng& rng) {
  if (fitness.empty()) throw ContractError("tournament on an empty population");
  std::uniform_int_distribution<std::size_t> pick(0, fitness.size() - 1);
  const std::size_t first = pick(rng);
  const std::size_t second = pick(rng);
  return fitness[second] < fitness[first] ? second : first;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b, std::size_t k) {
  if (a.size() != b.size()) throw ContractError("crossover parents differ in length");
  if (k < 1 || k >= a.size()) throw ContractError("crossover point out of range");
  std::vector<Chromosome::Gene> x(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Chromosome::Gene> y(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
  x.insert(x.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  y.insert(y.end(), a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
  return {Chromosome(std::move(x)), Chromosome(std::move(y))};
}

std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& a, const Chromosome& b,
                                                         Rng& rng) {
  if (a.size() != b.size()) throw ContractError("crossover parents differ in length");
  if (a.size() < 2) throw ContractError("single-point crossover needs at least 2 genes");
  std::uniform_int_distribution<std::size_t> point(1, a.size() - 1);
  return crossover_at(a, b, point(rng));
}

std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
  if (a.size() != b.size()) throw ContractError("crossover parents differ in length");
  std::bernoulli_distribution swap(0.5);
  Chromosome x = a;
  Chromosome y = b;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (swap(rng)) std::swap(x[k], y[k]);
  }
  return {std::move(x), std::move(y)};
}

Chromosome mutate(Chromosome c, double rate, Rng& rng) {
  if (rate <= 0.0) return c;
  std::bernoulli_distribution flip(rate);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (flip(rng)) c.flip(k);
  }
  return c;
}

Population evolve_generation(const Population& current, FitnessEvaluator& evaluator,
                             const GaConfig& cfg, Rng& rng) {
  const std::size_t n = current.size();
  const std::size_t elites = std::min(cfg.elite_count(), n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return current.fitness[a] < current.fitness[b]; });

  Population next;
  next.members.reserve(n);
  next.fitness.reserve(n);
  for (std::size_t i = 0; i < elites; ++i) {
    next.members.push_back(current.members[order[i]]);
    next.fitness.push_back(current.fitness[order[i]]);
  }

  std::bernoulli_distribution do_crossover(cfg.crossover_rate);
  while (next.size() < n) {
    const auto& pa = current.members[tournament_select(current.fitness, rng)];
    const auto& pb = current.members[tournament_select(current.fitness, rng)];

    std::pair<Chromosome, Chromosome> kids;
    if (pa.size() >= 2 && do_crossover(rng)) {
      kids = cfg.crossover == CrossoverKind::uniform ? uniform_crossover(pa, pb, rng)
                                                     : single_point_crossover(pa, pb, rng);
    } else {
      kids = {pa, pb};
    }

    for (Chromosome* kid : {&kids.first, &kids.second}) {
      if (next.size() == n) break;
      *kid = mutate(std::move(*kid), cfg.mutation_rate, rng);
      const double f = evaluator.evaluate(*kid);
      next.members.push_back(std::move(*kid));
      next.fitness.push_back(f);
    }
  }
  return next;
}

// ---------------------------------------------------------------------------
// Runs

RunResult run(const ReducedGraph& rg, const ConstraintSet& cs, const GaConfig& cfg,
              std::uint64_t run_seed) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  Rng rng(run_seed);
  FitnessEvaluator evaluator(rg, cs, cfg.lambda.value_or(default_lambda(rg.base())), cfg.normalize);

  Population pop;
  pop.members = init_population(rg, cfg, rng);
  pop.fitness.reserve(pop.members.size());
  for (auto& c : pop.members) pop.fitness.push_back(evaluator.evaluate(c));

  RunResult result;
  result.seed = run_seed;
  result.best_per_generation.reserve(cfg.generations + 1);
  result.best_per_generation.push_back(pop.best_fitness());
  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    pop = evolve_generation(pop, evaluator, cfg, rng);
    result.best_per_generation.push_back(pop.best_fitness());
  }

  result.best_chromosome = evaluator.best_chromosome();
  result.best_fitness = evaluator.best_fitness();
  result.best_partition = decode(result.best_chromosome, rg);
  result.feasible = violations(result.best_partition, cs).feasible();
  result.nvs = evaluator.best_found_at();
  result.evaluations = evaluator.evaluations();
  result.generations_executed = cfg.generations;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

AggregateStats aggregate(std::span<const RunResult> runs) {
  AggregateStats s;
  s.runs = runs.size();
  if (runs.empty()) return s;
  s.best_overall = std::numeric_limits<double>::infinity();
  std::size_t feasible = 0;
  for (const auto& r : runs) {
    s.abf += r.best_fitness;
    s.mean_nvs += static_cast<double>(r.nvs);
    s.mrt_ms += r.elapsed_ms;
    s.best_overall = std::min(s.best_overall, r.best_fitness);
    if (r.feasible) ++feasible;
  }
  const double n = static_cast<double>(runs.size());
  s.abf /= n;
  s.mean_nvs /= n;
  s.mrt_ms /= n;
  s.feasible_rate = static_cast<double>(feasible) / n;
  return s;
}

MultiRunResult multi_run(const ReducedGraph& rg, const ConstraintSet& cs, const GaConfig& cfg) {
  cfg.validate();
  MultiRunResult out;
  out.runs.resize(cfg.runs);

  const std::size_t workers =
      cfg.serial ? 1 : std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, cfg.runs);
  if (workers == 1) {
    for (std::size_t i = 0; i < cfg.runs; ++i) out.runs[i] = run(rg, cs, cfg, cfg.seed + i + 1);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cfg.runs; i = next++) {
          out.runs[i] = run(rg, cs, cfg, cfg.seed + i + 1);
        }
      });
    }
  }
  out.stats = aggregate(out.runs);
  return out;
}

void write_run_csv_header(std::ostream& out) { out << "run,seed,best_fitness,nvs,elapsed_ms,feasible\n"; }

void write_run_csv_row(std::ostream& out, std::size_t run_number, const RunResult& r) {
  out << run_number << ',' << r.seed << ',' << format_number(r.best_fitness) << ',' << r.nvs << ','
      << format_number(r.elapsed_ms) << ',' << (r.feasible ? 1 : 0) << '\n';
}

void write_run_csv_rows(std::ostream& out, std::span<const RunResult> runs) {
  for (std::size_t i = 0; i < runs.size(); ++i) write_run_csv_row(out, i + 1, runs[i]);
}

}  // namespace edgepart
