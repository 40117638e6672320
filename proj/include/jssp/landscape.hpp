#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "jssp/exact.hpp"
#include "jssp/instance.hpp"
#include "jssp/schedule.hpp"

namespace jssp {

/// Strictly increasing list of approximation factors, all >= 1.
class RhoGrid {
 public:
  /// 1.00, 1.01, ..., 1.50.
  RhoGrid();
  explicit RhoGrid(std::vector<double> values);
  /// lo, lo + step, ... up to hi (inclusive, with rounding slack).
  static RhoGrid range(double lo, double hi, double step);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double max() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

/// Largest integer makespan that is within factor rho of `optimum`.
Time rho_threshold(double rho, Time optimum);

/// Marks a constrained optimum that is +infinity (cyclic orientation).
inline constexpr Time kInfiniteMakespan = std::numeric_limits<Time>::max();

/// Constrained optimum for one orientation of an edge. When `exact` is false
/// the solve stopped at a cutoff and `value` is only a lower bound on it.
struct ConstrainedOptimum {
  Time value = 0;
  bool exact = true;
};

struct BackboneResult {
  Time optimum = 0;
  std::vector<double> rho;
  std::vector<std::int64_t> count;  ///< backbone size per rho
  std::vector<double> fraction;     ///< count / edge count per rho
  /// Per edge (EdgeIndex order): lower-indexed job first, and the reverse.
  std::vector<ConstrainedOptimum> lower_first;
  std::vector<ConstrainedOptimum> higher_first;
  std::int64_t solves = 0;
  std::int64_t nodes = 0;

  /// Edge `e` is in the rho-backbone for grid index `i`.
  bool in_backbone(int e, std::size_t i) const;
};

struct BackboneOptions {
  std::optional<std::int64_t> node_limit;
  std::optional<double> time_limit_seconds;
  /// Solve every constrained problem to optimality instead of stopping at
  /// floor(max rho * optimum).
  bool exact_values = false;
};

/// rho-backbone of every grid value from 1 + (edge count) exact solves.
/// Throws PartialResultError naming the edge when a solve is not proven.
BackboneResult rho_backbone(const Instance& instance, const RhoGrid& grid, const BackboneOptions& options = {});

/// The same sets by brute force: enumerate every schedule and intersect the
/// orientations of the rho-optimal ones. Result[i][e] is membership of edge
/// e for grid index i. Throws SizeError past the enumeration cap.
std::vector<std::vector<bool>> brute_force_backbone(const Instance& instance, const RhoGrid& grid);

struct SaConfig {
  double initial_acceptance = 0.95;
  double cooling_factor = 0.95;
  /// Moves per temperature; 16 * edge count when unset.
  std::optional<std::int64_t> plateau_length;
  /// Consecutive plateaus without a new best makespan before a restart.
  int frozen_threshold = 5;
  std::uint64_t seed = 0;
  /// Total move budget across restarts.
  std::int64_t max_moves = 50'000'000;
};

struct SaRun {
  /// Per grid value: first visited schedule within factor rho of the target.
  std::vector<MachineOrders> first_hit;
  std::vector<Time> first_hit_makespan;
  std::vector<std::int64_t> first_hit_move;
  std::int64_t moves = 0;
  int restarts = 0;
};

/// Simulated annealing over critical-arc reversals, restarted from fresh
/// random schedules until every grid value has a first hit. Throws
/// TimeoutError when the move budget runs out.
SaRun sa_run(const Instance& instance, Time target, const RhoGrid& grid, const SaConfig& config);

/// k independent SA runs (seeds derived from config.seed); per grid value,
/// the C(k, 2) pairwise distances between first hits.
std::vector<std::vector<std::int64_t>> sample_rho_distances(const Instance& instance, Time target, int k,
                                                           const RhoGrid& grid, const SaConfig& config);
/// As above with the target found by solve_optimal.
std::vector<std::vector<std::int64_t>> sample_rho_distances(const Instance& instance, int k, const RhoGrid& grid,
                                                           const SaConfig& config);

struct DescentOptions {
  std::optional<std::int64_t> node_limit;
  std::optional<double> time_limit_seconds;
};

/// Repeatedly moves to the best schedule within distance r until none is
/// strictly better. Throws PartialResultError when an inner solve is cut off.
Schedule ball_descent(const Instance& instance, const Schedule& start, std::int64_t r,
                      const DescentOptions& options = {});

/// First-improvement descent over single adjacent swaps, scanned by machine
/// then job pair.
Schedule next_descent_n1(const Instance& instance, const Schedule& start);

struct ExactnessRecord {
  std::vector<std::pair<std::int64_t, bool>> pairs;  ///< (r, reached optimum)
};

struct ExactnessOptions {
  DescentOptions descent;
  /// Stop descending past this radius; records end there if the optimum was
  /// not reached.
  std::optional<std::int64_t> max_radius;
};

/// Ball descents of growing radius from one random schedule.
ExactnessRecord exactness_run(const Instance& instance, Time optimum, std::uint64_t seed,
                              const ExactnessOptions& options = {});

}  // namespace jssp
