#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jssp/instance.hpp"
#include "jssp/landscape.hpp"
#include "jssp/stats.hpp"

namespace jssp {

struct Combo {
  int n = 0;
  int m = 0;

  std::string id() const { return std::to_string(n) + "x" + std::to_string(m); }
  /// N/M in lowest terms, e.g. "1/3", "1", "3".
  std::string ratio() const;
  friend bool operator==(const Combo&, const Combo&) = default;
};

/// Parses "6x6,9x3". Throws ValidationError on malformed or non-positive entries.
std::vector<Combo> parse_combos(const std::string& text);

struct ExperimentConfig {
  std::vector<Combo> combos;
  int instances = 50;
  /// SA runs per instance (distance) or descents per instance (exactness).
  int k = 4;
  /// Random schedules per instance (quality).
  int samples = 100;
  RhoGrid grid;
  std::uint64_t master_seed = 1;
  std::optional<std::int64_t> node_limit;
  std::optional<double> time_limit_seconds;
  /// Worker threads; 0 means one per hardware thread.
  int threads = 0;
  /// Quality experiment: also solve every instance to optimality.
  bool exact_quality = false;
  /// Exactness experiment: largest normalized radius to descend with.
  std::optional<double> max_norm_radius;
  SaConfig sa;

  /// Throws ValidationError on non-positive counts or an empty combo list.
  void validate() const;
};

/// Reads "key = value" lines (# comments allowed) or a JSON object with the
/// same keys: combos, instances, k, samples, rho_min, rho_max, rho_step,
/// seed, node_limit, time_limit, threads, exact_quality, max_norm_radius.
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Seed of instance `index` for a combo; independent of the other combos.
std::uint64_t instance_seed(std::uint64_t master_seed, const Combo& combo, int index);
Instance experiment_instance(std::uint64_t master_seed, const Combo& combo, int index);

struct Exclusion {
  std::string combo;
  int instance = 0;
  std::string reason;
};

struct ComboRow {
  Combo combo;
  StatRow stat;
};

struct CurveResult {
  std::vector<ComboRow> rows;
  std::vector<Exclusion> excluded;
  /// Mean over instances, per combo (config order) and grid value.
  std::vector<std::vector<double>> mean;
};

/// Backbone fraction per rho. Summaries are across instances.
CurveResult run_backbone_experiment(const ExperimentConfig& config);
/// Normalized distance between SA first hits per rho; each instance
/// contributes the mean over its C(k, 2) pairs.
CurveResult run_distance_experiment(const ExperimentConfig& config);

struct ExactnessRow {
  Combo combo;
  std::int64_t radius = 0;
  double norm_radius = 0;
  double exactness = 0;
  std::int64_t count = 0;
};

struct ExactnessResult {
  std::vector<ExactnessRow> rows;
  std::vector<Exclusion> excluded;

  /// Pooled exactness at the largest radius r with r / edges <= x.
  double at(const Combo& combo, double norm_radius) const;
};

/// Pools (r, reached optimum) over config.k descents per instance.
ExactnessResult run_exactness_experiment(const ExperimentConfig& config);

struct QualityInstance {
  double a = 0;  ///< mean random makespan
  double b = 0;  ///< mean makespan after next descent from the same samples
  std::optional<double> c;  ///< optimum
  double d = 0;  ///< lower bound
};

struct QualityRow {
  Combo combo;
  StatRow a, b, d;
  std::optional<StatRow> c;
};

struct SlopeRow {
  std::string ratio;
  std::string quantity;
  RegressionFit fit;
};

struct QualityResult {
  std::vector<QualityRow> rows;
  std::vector<SlopeRow> slopes;
  std::vector<std::vector<QualityInstance>> instances;
  std::vector<Exclusion> excluded;

  /// Slope for a ratio ("1", "1/3", ...) and quantity ("A", "B", "C").
  std::optional<double> slope(const std::string& ratio, const std::string& quantity) const;
};

QualityResult run_quality_experiment(const ExperimentConfig& config);

struct DifficultyRow {
  Combo combo;
  double log10_size = 0;
  std::int64_t p90_nodes = 0;
  std::int64_t count = 0;
};

struct DifficultyResult {
  std::vector<DifficultyRow> rows;
  std::vector<Exclusion> excluded;
};

DifficultyResult run_difficulty_experiment(const ExperimentConfig& config);

struct LimitPoint {
  int n = 0;
  int m = 0;
  double value = 0;
};

struct LimitReport {
  std::vector<LimitPoint> job_length_certified;  ///< N = 2, growing M
  std::vector<LimitPoint> workload_certified;    ///< M = 2, growing N
  std::vector<LimitPoint> random_ratio_by_m;     ///< N = 2, starts at the 2x2 square
  std::vector<LimitPoint> random_ratio_by_n;     ///< M = 2, starts at the 2x2 square
  std::vector<LimitPoint> job_delay;             ///< N = 2, identity rule
  double workload_threshold = 0.95;

  bool job_length_ok = false;
  bool workload_ok = false;
  bool ratio_ok = false;
  bool delay_ok = false;
  bool all_ok() const { return job_length_ok && workload_ok && ratio_ok && delay_ok; }
};

/// Property checks for the N/M -> 0 and N/M -> infinity limits.
/// Uses config.instances (per point), master_seed, samples, node_limit and threads.
LimitReport run_limit_theorem_tests(const ExperimentConfig& config);

struct OracleConfig {
  int optimal_instances = 200;
  int backbone_instances = 50;
  std::uint64_t master_seed = 1;
  RhoGrid grid = RhoGrid::range(1.0, 1.5, 0.1);
  int threads = 0;
};

struct OracleReport {
  int optimal_checked = 0;
  int optimal_matched = 0;
  int backbone_checked = 0;
  int backbone_matched = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return optimal_matched == optimal_checked && backbone_matched == backbone_checked; }
};

/// Brute-force equivalence sweeps: solve_optimal against enumeration on
/// 2x2, 2x3, 3x2 and 3x3 instances (cycled), and rho_backbone against the
/// enumerated backbone on 3x3 instances.
OracleReport run_oracle_check(const OracleConfig& config);

// CSV rendering; byte-identical for identical inputs.
std::string backbone_csv(const CurveResult& result);
std::string distance_csv(const CurveResult& result);
std::string exactness_csv(const ExactnessResult& result);
std::string quality_csv(const QualityResult& result);
std::string slopes_csv(const QualityResult& result);
std::string difficulty_csv(const DifficultyResult& result);
std::string limits_csv(const LimitReport& report);

}  // namespace jssp
