#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jssp/instance.hpp"
#include "jssp/schedule.hpp"

namespace jssp {

/// Search limits and warm starts for the branch and bound solvers.
struct BnbConfig {
  std::optional<std::int64_t> node_limit;
  std::optional<double> time_limit_seconds;
  /// Initial upper bound. Ignored when it violates the solve's arc
  /// constraint; the radius-limited solver always starts from its center.
  std::optional<MachineOrders> incumbent;
  /// Only schedules with makespan <= cutoff are of interest. When none
  /// exists the result status is `above_cutoff`.
  std::optional<Time> cutoff;
  /// Called with the orientation (EdgeIndex convention, +1/-1 per edge) and
  /// makespan of every complete schedule the search constructs.
  std::function<void(std::span<const std::int8_t>, Time)> on_schedule;
};

enum class BnbStatus {
  optimal,       ///< proven optimum, witness attached
  infeasible,    ///< arc constraint is cyclic; treat the optimum as +infinity
  above_cutoff,  ///< proven: no schedule with makespan <= cutoff
  aborted,       ///< a limit was hit; witness is the best incumbent, if any
};

std::string to_string(BnbStatus status);

struct BnbResult {
  BnbStatus status = BnbStatus::aborted;
  /// Makespan of the witness; meaningful only when `witness` is set.
  Time optimum = 0;
  std::optional<MachineOrders> witness;
  std::int64_t nodes_expanded = 0;
  bool proven = false;
};

/// A set of disjunctive arcs every explored orientation must contain.
using ArcConstraint = std::vector<DisjunctiveArc>;

/// Minimum makespan over all feasible schedules.
BnbResult solve_optimal(const Instance& instance, const BnbConfig& config = {});

/// Minimum makespan over schedules containing every arc of `constraint`.
BnbResult solve_fixed_arc(const Instance& instance, const ArcConstraint& constraint, const BnbConfig& config = {});

/// Minimum makespan over schedules within disjunctive-graph distance `radius`
/// of `center`. Throws InfeasibleError if the center is cyclic.
BnbResult solve_radius_limited(const Instance& instance, const MachineOrders& center, std::int64_t radius,
                               const BnbConfig& config = {});

/// max(longest job, heaviest machine workload); never above the optimum.
Time lower_bound(const Instance& instance);

/// Preemptive one-machine bound with heads and tails: the largest
/// completion-plus-tail of the preemptive largest-tail-first schedule.
/// All three spans have equal length.
Time one_machine_preemptive_bound(std::span<const Time> heads, std::span<const Time> bodies,
                                  std::span<const Time> tails);

}  // namespace jssp
