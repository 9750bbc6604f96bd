#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "edgepart/constraint_set.hpp"
#include "edgepart/ga.hpp"
#include "edgepart/graph.hpp"

namespace edgepart {

/// One point of a threshold sweep.
struct SweepRow {
  double threshold = 0.0;
  std::size_t active_edges = 0;
  double abf = 0.0;
  double mean_nvs = 0.0;
  double mrt_ms = 0.0;
  double best_overall = 0.0;
  double feasible_rate = 0.0;
};

/// 0 followed by every distinct edge weight, ascending.
std::vector<double> default_thresholds(const Graph& g);

/// For each threshold in input order: reduce g, run cfg.runs GA replicates,
/// aggregate into one row. When run_csv is given, every replicate is written
/// to it as `threshold,run,seed,best_fitness,nvs,elapsed_ms,feasible`.
std::vector<SweepRow> threshold_sweep(const Graph& g, const ConstraintSet& cs,
                                      std::span<const double> thresholds, const GaConfig& cfg,
                                      std::ostream* run_csv = nullptr);

struct ReportOptions {
  /// When false, mrt_ms is written as 0 and no MRT chart is drawn, so that
  /// the report depends only on the inputs.
  bool timing = true;
};

/// Columns: threshold,active_edges,abf,mean_nvs,mrt_ms,best_overall,feasible_rate.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, const ReportOptions& opts = {});

/// Standalone SVG polyline chart.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, std::span<const double> xs,
                              std::span<const double> ys);

/// Writes sweep.csv and, if rows is non-empty, abf.svg, nvs.svg and mrt.svg
/// into out_dir (created if missing). Returns the paths written.
std::vector<std::filesystem::path> emit_report(std::span<const SweepRow> rows,
                                               const std::filesystem::path& out_dir,
                                               const ReportOptions& opts = {});

}  // namespace edgepart
