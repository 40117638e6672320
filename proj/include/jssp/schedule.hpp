#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jssp/instance.hpp"

namespace jssp {

/// A total order on all N*M operations in which (k, i) precedes (k, i+1).
struct OperationSequence {
  std::vector<OperationId> order;

  friend bool operator==(const OperationSequence&, const OperationSequence&) = default;
};

/// Throws ValidationError if `seq` is not a job-order-respecting permutation
/// of the instance's operations.
void validate_sequence(const Instance& instance, const OperationSequence& seq);

/// `first` is processed before `second` on `machine` (both are job indices).
struct DisjunctiveArc {
  int machine = 0;
  int first = 0;
  int second = 0;

  DisjunctiveArc reversed() const { return {machine, second, first}; }

  friend bool operator==(const DisjunctiveArc&, const DisjunctiveArc&) = default;
  friend auto operator<=>(const DisjunctiveArc&, const DisjunctiveArc&) = default;
};

/// Indexing of the M * C(N, 2) disjunctive edges: machine-major, then job
/// pairs (a < b) in lexicographic order.
class EdgeIndex {
 public:
  EdgeIndex(int n_jobs, int n_machines);

  int n_jobs() const { return n_jobs_; }
  int n_machines() const { return n_machines_; }
  int size() const { return n_machines_ * pairs_; }
  int pairs_per_machine() const { return pairs_; }

  /// Index of the edge joining jobs `a` and `b` (any order) on `machine`.
  int of(int machine, int a, int b) const;
  /// Edge endpoints as (machine, lower job, higher job).
  DisjunctiveArc endpoints(int edge) const { return endpoints_[edge]; }

 private:
  int n_jobs_;
  int n_machines_;
  int pairs_;
  std::vector<int> pair_of_;  // n*n lookup, -1 on the diagonal
  std::vector<DisjunctiveArc> endpoints_;
};

/// Per-machine job permutations: the orientation of every disjunctive edge.
/// Two schedules with equal MachineOrders are the same schedule.
class MachineOrders {
 public:
  MachineOrders() = default;
  /// `order_on[m]` is the processing order of jobs on machine m. Throws
  /// ValidationError unless each row is a permutation of [0, N).
  explicit MachineOrders(std::vector<std::vector<int>> order_on);

  int n_jobs() const { return n_jobs_; }
  int n_machines() const { return static_cast<int>(order_on_.size()); }

  const std::vector<int>& on(int machine) const { return order_on_[machine]; }
  const std::vector<std::vector<int>>& rows() const { return order_on_; }
  int position(int machine, int job) const { return position_[machine * n_jobs_ + job]; }
  bool precedes(int machine, int a, int b) const { return position(machine, a) < position(machine, b); }

  /// Same orders with the jobs at `pos` and `pos + 1` on `machine` swapped.
  MachineOrders with_adjacent_swap(int machine, int pos) const;

  /// +1 when the lower-indexed job of edge `e` goes first, -1 otherwise.
  std::vector<std::int8_t> orientation(const EdgeIndex& edges) const;
  static MachineOrders from_orientation(const EdgeIndex& edges, std::span<const std::int8_t> orientation);

  friend bool operator==(const MachineOrders& a, const MachineOrders& b) { return a.order_on_ == b.order_on_; }
  friend auto operator<=>(const MachineOrders& a, const MachineOrders& b) { return a.order_on_ <=> b.order_on_; }

 private:
  int n_jobs_ = 0;
  std::vector<std::vector<int>> order_on_;
  std::vector<int> position_;
};

/// Start times of every operation plus the derived machine orders.
class Schedule {
 public:
  Schedule() = default;

  /// Wraps raw start times (indexed by Instance::index). Machine orders are
  /// derived by sorting start times per machine, ties broken by job index.
  /// No feasibility check is made; see check_feasible.
  static Schedule from_start_times(const Instance& instance, std::vector<Time> start);

  int n_jobs() const { return n_jobs_; }
  int n_machines() const { return n_machines_; }
  Time start(int job, int step) const { return start_[job * n_machines_ + step]; }
  Time completion(int job, int step) const { return completion_[job * n_machines_ + step]; }
  const std::vector<Time>& starts() const { return start_; }
  Time makespan() const { return makespan_; }
  const MachineOrders& machine_orders() const { return orders_; }

 private:
  friend class ScheduleBuilder;

  int n_jobs_ = 0;
  int n_machines_ = 0;
  std::vector<Time> start_;
  std::vector<Time> completion_;
  Time makespan_ = 0;
  MachineOrders orders_;
};

/// Semi-active schedule obtained by placing operations in sequence order at
/// the earliest time the job is ready and the machine has an idle gap long
/// enough. In the result every start is max(job-predecessor completion,
/// machine-predecessor completion).
Schedule build_schedule(const Instance& instance, const OperationSequence& seq);

/// Semi-active schedule for the given orientation. Throws InfeasibleError if
/// the orders together with the job routings contain a cycle.
Schedule schedule_from_orders(const Instance& instance, const MachineOrders& orders);

/// Length of the longest weighted path through the disjunctive graph.
/// Throws InfeasibleError on a cyclic orientation.
Time makespan_longest_path(const Instance& instance, const MachineOrders& orders);

/// True iff the orientation is acyclic.
bool is_acyclic(const Instance& instance, const MachineOrders& orders);

/// Number of disjunctive edges oriented differently. Throws ValidationError on
/// mismatched dimensions.
std::int64_t distance(const MachineOrders& a, const MachineOrders& b);
std::int64_t distance(const Schedule& a, const Schedule& b);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::string> violations;
};

/// Checks S(o) >= completion of job- and machine-predecessor for every o, and
/// that no two operations on one machine start together.
FeasibilityReport check_feasible(const Instance& instance, const Schedule& schedule);

/// Machine-consecutive arcs lying on a longest path of a feasible schedule,
/// ordered by machine then position.
std::vector<DisjunctiveArc> critical_arcs(const Instance& instance, const Schedule& schedule);

/// Reverses one disjunctive arc between machine-adjacent jobs.
MachineOrders reverse_arc(const MachineOrders& orders, const DisjunctiveArc& arc);

std::string format_machine_orders(const MachineOrders& orders);

}  // namespace jssp
