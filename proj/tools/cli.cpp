#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "edgepart/constraints.hpp"
#include "edgepart/encoding.hpp"
#include "edgepart/errors.hpp"
#include "edgepart/exact.hpp"
#include "edgepart/generator.hpp"
#include "edgepart/graph.hpp"
#include "edgepart/reduction.hpp"
#include "edgepart/sweep.hpp"

namespace edgepart::cli {

namespace {

// Raised for invalid flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a request is well-formed but cannot be answered.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_ga_flags(CLI::App& sub, Options& o) {
  sub.add_option("--seed", o.ga.seed, "Base seed; run i uses seed + i")->capture_default_str();
  sub.add_option("--pop", o.ga.population_size, "Population size")->capture_default_str();
  sub.add_option("--gens", o.ga.generations, "Number of generations")->capture_default_str();
  sub.add_option("--cx", o.ga.crossover_rate, "Crossover rate")->capture_default_str();
  sub.add_option("--mut", o.ga.mutation_rate, "Per-gene mutation rate")->capture_default_str();
  sub.add_option("--elite", o.ga.elitism_fraction, "Elite fraction (selection = 1 - elite)")
      ->capture_default_str();
  sub.add_option("--runs", o.ga.runs, "Independent runs")->capture_default_str();
  sub.add_option("--lambda", o.lambda, "Penalty weight (default: total weight + 1)");
  sub.add_option("--crossover", o.crossover, "Crossover operator")
      ->check(CLI::IsMember({"single", "uniform"}))
      ->capture_default_str();
  sub.add_flag("--normalize", o.ga.normalize, "Canonicalize chromosomes before evaluation");
  sub.add_flag("--serial", o.ga.serial, "Run replicates sequentially for clean timings");
}

GaConfig finish_ga(Options& o) {
  GaConfig cfg = o.ga;
  cfg.selection_fraction = 1.0 - cfg.elitism_fraction;
  cfg.lambda = o.lambda;
  cfg.crossover = o.crossover == "uniform" ? CrossoverKind::uniform : CrossoverKind::single_point;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ": " + e.detail());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> parse_thresholds(const std::string& text, const Graph& g) {
  if (text == "auto") return default_thresholds(g);
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double t = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), t);
    if (ec != std::errc{} || ptr != item.data() + item.size() || t < 0) {
      throw UsageError("--thresholds: '" + item + "' is not a non-negative number");
    }
    out.push_back(t);
  }
  if (out.empty()) throw UsageError("--thresholds: empty list");
  return out;
}

void require_threshold(double t) {
  if (!(t >= 0.0)) throw UsageError("--threshold must be non-negative, got " + format_number(t));
}

void print_header(std::ostream& out, const std::string& command, const Options& o, const GaConfig* cfg) {
  out << "# edgepart " << command;
  if (!o.input.empty()) out << " file=" << o.input;
  if (cfg) {
    out << " seed=" << cfg->seed << " pop=" << cfg->population_size << " gens=" << cfg->generations
        << " cx=" << format_number(cfg->crossover_rate) << " mut=" << format_number(cfg->mutation_rate)
        << " elite=" << format_number(cfg->elitism_fraction) << " runs=" << cfg->runs;
  }
  out << '\n';
}

int do_solve(Options& o, std::ostream& out) {
  const Graph g = load(o.input);
  require_threshold(o.threshold);
  const GaConfig cfg = finish_ga(o);
  const auto rg = reduce(g, o.threshold);
  const auto result = multi_run(rg, g.constraints(), cfg);

  if (o.csv) {
    write_run_csv_header(out);
    write_run_csv_rows(out, result.runs);
    return ok;
  }
  print_header(out, "solve", o, &cfg);
  const auto& s = result.stats;
  out << "threshold " << format_number(o.threshold) << '\n'
      << "active_edges " << rg.size() << " of " << g.edge_count() << '\n'
      << "lambda " << format_number(cfg.lambda.value_or(default_lambda(g))) << '\n'
      << "abf " << format_number(s.abf) << '\n'
      << "mean_nvs " << format_number(s.mean_nvs) << '\n'
      << "mrt_ms " << format_number(s.mrt_ms) << '\n'
      << "best_overall " << format_number(s.best_overall) << '\n'
      << "feasible_rate " << format_number(s.feasible_rate) << '\n';

  const RunResult* best = &result.runs.front();
  for (const auto& r : result.runs) {
    if (r.best_fitness < best->best_fitness) best = &r;
  }
  out << "best_run_seed " << best->seed << '\n'
      << "best_feasible " << (best->feasible ? "yes" : "no") << '\n'
      << "chromosome " << best->best_chromosome.to_string() << '\n'
      << format_partition(best->best_partition);
  return ok;
}

int do_reduce(Options& o, std::ostream& out) {
  const Graph g = load(o.input);
  require_threshold(o.threshold);
  const auto rg = reduce(g, o.threshold);

  std::vector<WeightedEdge> kept;
  kept.reserve(rg.size());
  for (auto k : rg.active_edges()) kept.push_back(g.edge(k));
  const Graph reduced(g.vertex_count(), std::move(kept), g.constraints());
  const std::vector<std::string> comments{
      "reduced from " + o.input,
      "threshold " + format_number(o.threshold),
      "removed " + std::to_string(rg.removed_count()),
      "restored " + std::to_string(rg.restored_count()),
  };
  if (o.output.empty()) {
    out << format_graph(reduced, comments);
  } else {
    write_graph_file(o.output, reduced, comments);
    out << "wrote " << o.output << " (" << rg.size() << " of " << g.edge_count() << " edges)\n";
  }
  return ok;
}

int do_sweep(Options& o, std::ostream& out) {
  const Graph g = load(o.input);
  const auto thresholds = parse_thresholds(o.thresholds, g);
  const GaConfig cfg = finish_ga(o);

  std::ofstream runs_file;
  std::ostream* runs = nullptr;
  if (o.runs_csv) {
    std::filesystem::create_directories(o.out_dir);
    const auto path = std::filesystem::path(o.out_dir) / "runs.csv";
    runs_file.open(path, std::ios::binary);
    if (!runs_file) throw UsageError("cannot write '" + path.string() + "'");
    runs = &runs_file;
  }
  const auto rows = threshold_sweep(g, g.constraints(), thresholds, cfg, runs);
  ReportOptions ropts;
  ropts.timing = !o.no_timing;
  const auto files = emit_report(rows, o.out_dir, ropts);

  if (o.csv) {
    write_sweep_csv(out, rows, ropts);
    return ok;
  }
  print_header(out, "sweep", o, &cfg);
  write_sweep_csv(out, rows, ropts);
  for (const auto& f : files) out << "wrote " << f.string() << '\n';
  if (o.runs_csv) out << "wrote " << (std::filesystem::path(o.out_dir) / "runs.csv").string() << '\n';
  return ok;
}

int do_gen(Options& o, std::ostream& out) {
  GeneratorSpec spec;
  if (o.standin != 0) {
    try {
      spec = standin_spec(o.standin);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--standin: ") + e.what());
    }
  } else {
    if (o.vertices == 0) throw UsageError("gen: --vertices is required (or use --standin)");
    spec.vertices = o.vertices;
    spec.edges = o.edges;
    try {
      spec.weights = WeightDistribution::parse(o.weights);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--weights: ") + e.what());
    }
    spec.seed = o.gen_seed;
    spec.connected = !o.disconnected;
    spec.max_cluster_size = o.bound;
  }
  Graph g;
  try {
    g = generate_instance(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("gen: ") + e.what());
  }
  const std::vector<std::string> comments{
      "generated vertices=" + std::to_string(spec.vertices) + " edges=" + std::to_string(spec.edges) +
      " weights=" + spec.weights.to_string() + " seed=" + std::to_string(spec.seed) +
      (spec.connected ? " connected" : " unconstrained-connectivity")};
  if (o.output.empty()) {
    out << format_graph(g, comments);
  } else {
    write_graph_file(o.output, g, comments);
    out << "wrote " << o.output << '\n';
  }
  return ok;
}

int do_exact(Options& o, std::ostream& out) {
  const Graph g = load(o.input);
  EnumerationBudget budget;
  budget.max_vertices = o.max_vertices;
  if (auto bell = bell_number(o.max_vertices)) budget.max_partitions = *bell;
  ExactResult r;
  try {
    r = brute_force_optimum(g, g.constraints(), budget);
  } catch (const BudgetExceeded& e) {
    throw Refusal(o.input + ": " + e.what());
  }
  if (!r.feasible) throw Refusal(o.input + ": no partition satisfies the constraints");
  print_header(out, "exact", o, nullptr);
  out << "partitions_visited " << r.visited << '\n' << format_partition(r.partition);
  return ok;
}

int do_decode(Options& o, std::ostream& out) {
  const Graph g = load(o.input);
  require_threshold(o.threshold);
  const auto rg = reduce(g, o.threshold);
  Chromosome c;
  try {
    c = Chromosome::from_string(o.chromosome);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--chromosome: ") + e.what());
  }
  if (c.size() != rg.size()) {
    throw UsageError("--chromosome has " + std::to_string(c.size()) + " genes but " + o.input +
                     " has " + std::to_string(rg.size()) + " active edges at threshold " +
                     format_number(o.threshold));
  }
  const auto p = decode(c, rg);
  const auto v = violations(p, g.constraints());
  print_header(out, "decode", o, nullptr);
  out << "clusters " << p.cluster_count << '\n'
      << "violations size_excess=" << v.size_excess << " cohab_breaks=" << v.cohab_breaks
      << " noncohab_breaks=" << v.noncohab_breaks << '\n'
      << "penalized_fitness " << format_number(penalized_fitness(p, g.constraints(), default_lambda(g)))
      << '\n'
      << format_partition(p);
  return ok;
}

}  // namespace

std::unique_ptr<CLI::App> make_app(Options& o) {
  auto app = std::make_unique<CLI::App>("Edge-encoded genetic algorithm for graph partitioning", "edgepart");
  app->require_subcommand(1);

  auto* solve = app->add_subcommand("solve", "Run the GA on an instance");
  solve->add_option("file", o.input, "Instance file")->required();
  solve->add_option("--threshold", o.threshold, "Edge-reduction threshold")->capture_default_str();
  solve->add_flag("--csv", o.csv, "Print per-run CSV rows instead of the summary");
  add_ga_flags(*solve, o);

  auto* red = app->add_subcommand("reduce", "Write the threshold-reduced instance");
  red->add_option("file", o.input, "Instance file")->required();
  red->add_option("--threshold", o.threshold, "Edge-reduction threshold")->required();
  red->add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* sweep = app->add_subcommand("sweep", "Run the GA over a grid of thresholds");
  sweep->add_option("file", o.input, "Instance file")->required();
  sweep->add_option("--thresholds", o.thresholds, "Comma-separated list, or 'auto'")->capture_default_str();
  sweep->add_option("--out", o.out_dir, "Report directory")->required();
  sweep->add_flag("--csv", o.csv, "Print only the sweep CSV");
  sweep->add_flag("--no-timing", o.no_timing, "Write mrt_ms as 0 so the report is reproducible");
  sweep->add_flag("--runs-csv", o.runs_csv, "Also write per-run rows to runs.csv");
  add_ga_flags(*sweep, o);

  auto* gen = app->add_subcommand("gen", "Generate a random instance");
  gen->add_option("--vertices", o.vertices, "Vertex count");
  gen->add_option("--edges", o.edges, "Edge count");
  gen->add_option("--weights", o.weights, "int:LO..HI or real:LO..HI")->capture_default_str();
  gen->add_option("--seed", o.gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--bound", o.bound, "Cluster-size bound written as a 'b' record");
  gen->add_flag("--disconnected", o.disconnected, "Do not force a spanning tree");
  gen->add_option("--standin", o.standin, "Pinned stand-in instance 1, 2 or 3");
  gen->add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* exact = app->add_subcommand("exact", "Exhaustive optimum for small instances");
  exact->add_option("file", o.input, "Instance file")->required();
  exact->add_option("--max-vertices", o.max_vertices, "Refuse larger instances")->capture_default_str();

  auto* dec = app->add_subcommand("decode", "Decode a chromosome bit string");
  dec->add_option("file", o.input, "Instance file")->required();
  dec->add_option("--chromosome", o.chromosome, "0/1 string, one gene per active edge")->required();
  dec->add_option("--threshold", o.threshold, "Edge-reduction threshold")->capture_default_str();

  return app;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  auto app = make_app(opts);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app->exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    const auto* sub = app->get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "solve") return do_solve(opts, out);
    if (name == "reduce") return do_reduce(opts, out);
    if (name == "sweep") return do_sweep(opts, out);
    if (name == "gen") return do_gen(opts, out);
    if (name == "exact") return do_exact(opts, out);
    if (name == "decode") return do_decode(opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const Refusal& e) {
    err << "error: " << e.what() << '\n';
    return refused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace edgepart::cli
