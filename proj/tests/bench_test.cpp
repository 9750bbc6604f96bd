#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

#include "edgepart/generator.hpp"
#include "edgepart/reduction.hpp"
#include "edgepart/sweep.hpp"

namespace edgepart {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("edgepart_bench_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

GaConfig quick_config() {
  GaConfig cfg;
  cfg.runs = 4;
  cfg.generations = 10;
  cfg.population_size = 20;
  return cfg;
}

TEST(WeightDistribution, ParseAndPrint) {
  auto d = WeightDistribution::parse("int:1..20");
  EXPECT_EQ(d.kind, WeightDistribution::Kind::uniform_int);
  EXPECT_EQ(d.lo, 1.0);
  EXPECT_EQ(d.hi, 20.0);
  EXPECT_EQ(d.to_string(), "int:1..20");
  EXPECT_EQ(WeightDistribution::parse("real:0.5..2").to_string(), "real:0.5..2");
  EXPECT_THROW(WeightDistribution::parse("int:0..3"), std::invalid_argument);
  EXPECT_THROW(WeightDistribution::parse("int:5..3"), std::invalid_argument);
  EXPECT_THROW(WeightDistribution::parse("gauss:1..3"), std::invalid_argument);
  EXPECT_THROW(WeightDistribution::parse("int:1.5..3"), std::invalid_argument);
  EXPECT_THROW(WeightDistribution::parse("int1..3"), std::invalid_argument);
}

TEST(GenerateInstance, ReferenceShapes) {
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{15, 55}, {30, 45}, {121, 1980}}) {
    GeneratorSpec spec;
    spec.vertices = n;
    spec.edges = m;
    spec.seed = 7;
    auto g = generate_instance(spec);
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_EQ(g.edge_count(), m);
    EXPECT_EQ(component_count(g), 1u);
    for (const auto& e : g.edges()) {
      EXPECT_GE(e.weight, 1.0);
      EXPECT_LE(e.weight, 10.0);
      EXPECT_EQ(e.weight, std::floor(e.weight));
    }
  }
}

TEST(GenerateInstance, TreeSpecIsFixedUnderReduction) {
  GeneratorSpec spec;
  spec.vertices = 5;
  spec.edges = 4;
  spec.seed = 3;
  auto g = generate_instance(spec);
  EXPECT_EQ(component_count(g), 1u);
  for (double t : {0.0, 1.0, 5.0, 10.0, 100.0}) EXPECT_EQ(reduce(g, t).size(), 4u);
}

TEST(GenerateInstance, DeterministicPerSeed) {
  GeneratorSpec spec;
  spec.vertices = 40;
  spec.edges = 200;
  spec.weights = WeightDistribution::parse("real:0.1..3");
  spec.seed = 11;
  EXPECT_EQ(generate_instance(spec), generate_instance(spec));
  auto other = spec;
  other.seed = 12;
  EXPECT_NE(generate_instance(spec), generate_instance(other));
}

TEST(GenerateInstance, CompleteGraphAndSparseFallback) {
  GeneratorSpec full;
  full.vertices = 12;
  full.edges = 66;
  EXPECT_EQ(generate_instance(full).edge_count(), 66u);

  GeneratorSpec big;  // above the explicit-candidate limit
  big.vertices = 3000;
  big.edges = 4000;
  auto g = generate_instance(big);
  EXPECT_EQ(g.edge_count(), 4000u);
  EXPECT_EQ(component_count(g), 1u);
}

TEST(GenerateInstance, InfeasibleSpecs) {
  GeneratorSpec spec;
  spec.vertices = 5;
  spec.edges = 11;
  EXPECT_THROW(generate_instance(spec), std::invalid_argument);
  spec.edges = 3;
  EXPECT_THROW(generate_instance(spec), std::invalid_argument);
  spec.connected = false;
  EXPECT_EQ(generate_instance(spec).edge_count(), 3u);
}

TEST(GenerateInstance, StandinsHaveReferenceShapes) {
  const std::pair<std::size_t, std::size_t> shapes[] = {{15, 55}, {30, 45}, {121, 1980}};
  for (int i = 1; i <= 3; ++i) {
    auto g = generate_instance(standin_spec(i));
    EXPECT_EQ(g.vertex_count(), shapes[i - 1].first);
    EXPECT_EQ(g.edge_count(), shapes[i - 1].second);
    EXPECT_TRUE(g.constraints().max_cluster_size.has_value());
  }
  EXPECT_THROW(standin_spec(4), std::invalid_argument);
}

TEST(DefaultThresholds, ZeroPlusDistinctWeights) {
  auto g = parse_graph("p 4 4\ne 1 2 3\ne 2 3 1\ne 3 4 3\ne 1 4 2.5\n");
  EXPECT_EQ(default_thresholds(g), (std::vector<double>{0, 1, 2.5, 3}));
}

TEST(ThresholdSweep, SingleZeroThreshold) {
  auto g = generate_instance(standin_spec(1));
  const std::vector<double> t{0.0};
  auto rows = threshold_sweep(g, g.constraints(), t, quick_config());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].active_edges, g.edge_count());
  EXPECT_THROW(threshold_sweep(g, g.constraints(), std::vector<double>{}, quick_config()),
               std::invalid_argument);
}

TEST(ThresholdSweep, RowsFollowInputOrderAndReduction) {
  auto g = generate_instance(standin_spec(1));
  const std::vector<double> t{7.0, 0.0, g.max_weight(), 15.0};
  std::stringstream runs;
  auto rows = threshold_sweep(g, g.constraints(), t, quick_config(), &runs);
  ASSERT_EQ(rows.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(rows[i].threshold, t[i]);
    EXPECT_EQ(rows[i].active_edges, reduce(g, t[i]).size());
    EXPECT_GE(rows[i].abf, rows[i].best_overall);
  }
  EXPECT_EQ(rows[2].active_edges, g.vertex_count() - 1);

  // ABF and mean NVS recomputed from the per-run CSV.
  std::string line;
  std::getline(runs, line);
  EXPECT_EQ(line, "threshold,run,seed,best_fitness,nvs,elapsed_ms,feasible");
  std::map<double, std::pair<double, int>> sums;
  while (std::getline(runs, line)) {
    std::stringstream ss(line);
    std::string f;
    std::vector<std::string> fields;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    ASSERT_EQ(fields.size(), 7u);
    auto& s = sums[std::stod(fields[0])];
    s.first += std::stod(fields[3]);
    s.second += 1;
  }
  for (const auto& row : rows) {
    const auto& s = sums.at(row.threshold);
    EXPECT_EQ(s.second, 4);
    EXPECT_NEAR(s.first / s.second, row.abf, 1e-9);
  }
}

TEST(EmitReport, EmptyRowsWriteHeaderOnly) {
  auto dir = scratch_dir("empty");
  auto files = emit_report({}, dir);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(slurp(dir / "sweep.csv"), "threshold,active_edges,abf,mean_nvs,mrt_ms,best_overall,feasible_rate\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "abf.svg"));
}

TEST(EmitReport, SevenRowsAndCharts) {
  std::vector<SweepRow> rows;
  for (int i = 0; i < 7; ++i) {
    rows.push_back({static_cast<double>(i), 100u - 10u * i, 50.0 - i, 300.0 + i, 12.5, 40.0, 1.0});
  }
  auto dir = scratch_dir("seven");
  auto files = emit_report(rows, dir);
  EXPECT_EQ(files.size(), 4u);
  auto csv = slurp(dir / "sweep.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
  EXPECT_EQ(csv.back(), '\n');
  EXPECT_NE(csv.find("\n2,80,48,302,12.5,40,1\n"), std::string::npos);
  for (const char* svg : {"abf.svg", "nvs.svg", "mrt.svg"}) {
    auto text = slurp(dir / svg);
    EXPECT_EQ(text.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0u) << svg;
    EXPECT_NE(text.find("<polyline"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n') > 0, true);
    EXPECT_EQ(text.find("href"), std::string::npos);  // self-contained
  }

  // Same rows, same bytes.
  auto again = scratch_dir("seven_again");
  emit_report(rows, again);
  for (const char* f : {"sweep.csv", "abf.svg", "nvs.svg", "mrt.svg"}) EXPECT_EQ(slurp(dir / f), slurp(again / f));

  // Without timing, mrt is zeroed and its chart skipped.
  auto untimed = scratch_dir("untimed");
  ReportOptions opts;
  opts.timing = false;
  EXPECT_EQ(emit_report(rows, untimed, opts).size(), 3u);
  EXPECT_NE(slurp(untimed / "sweep.csv").find("\n2,80,48,302,0,40,1\n"), std::string::npos);
}

TEST(ThresholdSweep, IdenticalInputsGiveIdenticalCsvWithoutTiming) {
  auto g = generate_instance(standin_spec(2));
  auto t = default_thresholds(g);
  ReportOptions opts;
  opts.timing = false;
  std::stringstream a, b;
  write_sweep_csv(a, threshold_sweep(g, g.constraints(), t, quick_config()), opts);
  write_sweep_csv(b, threshold_sweep(g, g.constraints(), t, quick_config()), opts);
  EXPECT_EQ(a.str(), b.str());
}

TEST(ThresholdSweep, TimedRowsDifferOnlyInMrt) {
  auto g = generate_instance(standin_spec(2));
  auto t = default_thresholds(g);
  auto a = threshold_sweep(g, g.constraints(), t, quick_config());
  auto b = threshold_sweep(g, g.constraints(), t, quick_config());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].threshold, b[i].threshold);
    EXPECT_EQ(a[i].active_edges, b[i].active_edges);
    EXPECT_EQ(a[i].abf, b[i].abf);
    EXPECT_EQ(a[i].mean_nvs, b[i].mean_nvs);
    EXPECT_EQ(a[i].best_overall, b[i].best_overall);
    EXPECT_EQ(a[i].feasible_rate, b[i].feasible_rate);
    EXPECT_GT(a[i].mrt_ms, 0.0);
  }
}

TEST(RenderLineChart, HandlesDegenerateSeries) {
  const std::vector<double> x{3.0}, y{5.0};
  auto svg = render_line_chart("t", "x", "y", x, y);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_EQ(svg.find("nan"), std::string::npos);
  const std::vector<double> two{1.0, 2.0};
  EXPECT_THROW(render_line_chart("t", "x", "y", two, y), std::invalid_argument);
}

}  // namespace
}  // namespace edgepart
