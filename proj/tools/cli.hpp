#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "edgepart/ga.hpp"

namespace edgepart::cli {

enum ExitCode : int { ok = 0, usage_error = 1, refused = 2 };

/// Everything the subcommands can be told. GA fields start at GaConfig{}
/// defaults, which the flag defaults are read from.
struct Options {
  std::string input;
  std::string output;
  std::string out_dir;
  double threshold = 0.0;
  std::string thresholds = "auto";
  std::string chromosome;
  std::optional<double> lambda;
  std::string crossover = "single";
  bool csv = false;
  bool no_timing = false;
  bool runs_csv = false;
  GaConfig ga;

  // gen
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::string weights = "int:1..10";
  std::uint64_t gen_seed = 1;
  std::optional<std::size_t> bound;
  bool disconnected = false;
  int standin = 0;

  // exact
  std::size_t max_vertices = 12;
};

/// Builds the command tree bound to opts. Exposed so tests can inspect flags.
std::unique_ptr<CLI::App> make_app(Options& opts);

/// Entry point. Returns 0 on success, 1 on usage or input errors, 2 when
/// an exhaustive search is refused or no feasible partition exists.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgepart::cli
