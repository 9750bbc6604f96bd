#include "edgepart/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgepart/reduction.hpp"

namespace edgepart {

std::vector<double> default_thresholds(const Graph& g) {
  std::vector<double> t{0.0};
  for (const auto& e : g.edges()) t.push_back(e.weight);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

std::vector<SweepRow> threshold_sweep(const Graph& g, const ConstraintSet& cs,
                                      std::span<const double> thresholds, const GaConfig& cfg,
                                      std::ostream* run_csv) {
  if (thresholds.empty()) throw std::invalid_argument("threshold sweep needs at least one threshold");
  cfg.validate();
  if (run_csv) *run_csv << "threshold,run,seed,best_fitness,nvs,elapsed_ms,feasible\n";

  std::vector<SweepRow> rows;
  rows.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto rg = reduce(g, t);
    const auto result = multi_run(rg, cs, cfg);
    if (run_csv) {
      for (std::size_t i = 0; i < result.runs.size(); ++i) {
        *run_csv << format_number(t) << ',';
        write_run_csv_row(*run_csv, i + 1, result.runs[i]);
      }
    }
    rows.push_back({t, rg.size(), result.stats.abf, result.stats.mean_nvs, result.stats.mrt_ms,
                    result.stats.best_overall, result.stats.feasible_rate});
  }
  return rows;
}

}  // namespace edgepart
