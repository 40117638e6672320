#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace jssp {

using Time = std::int64_t;

/// Operation `step` (0-based) of job `job` (0-based).
struct OperationId {
  int job = 0;
  int step = 0;

  friend bool operator==(const OperationId&, const OperationId&) = default;
  friend auto operator<=>(const OperationId&, const OperationId&) = default;
};

/// One (machine, duration) pair of a job's routing.
struct Task {
  int machine = 0;
  Time duration = 0;
};

/// An N x M job shop instance. Every job visits every machine exactly once,
/// durations are positive integers.
///
/// Operations are also addressed by a flat index `job * M + step`.
class Instance {
 public:
  Instance() = default;
  /// Throws ValidationError unless every row is a permutation of [0, M) with
  /// positive durations.
  explicit Instance(std::vector<std::vector<Task>> jobs);

  int n_jobs() const { return n_jobs_; }
  int n_machines() const { return n_machines_; }
  int n_operations() const { return n_jobs_ * n_machines_; }

  int machine(int job, int step) const { return machine_[index(job, step)]; }
  Time duration(int job, int step) const { return duration_[index(job, step)]; }
  int machine(OperationId op) const { return machine(op.job, op.step); }
  Time duration(OperationId op) const { return duration(op.job, op.step); }

  /// Step at which `job` visits `machine`.
  int step_on(int job, int machine) const { return step_on_[job * n_machines_ + machine]; }

  int index(int job, int step) const { return job * n_machines_ + step; }
  int index(OperationId op) const { return index(op.job, op.step); }
  OperationId operation(int index) const { return {index / n_machines_, index % n_machines_}; }

  /// Flat per-operation arrays, indexed by `index(job, step)`.
  const std::vector<int>& machines() const { return machine_; }
  const std::vector<Time>& durations() const { return duration_; }

  /// Sum of the durations of one job.
  Time job_length(int job) const;
  /// Sum of the durations of all operations processed on one machine.
  Time machine_workload(int machine) const;
  Time max_duration() const;

  /// Number of disjunctive edges, M * C(N, 2).
  std::int64_t edge_count() const;
  std::vector<std::vector<Task>> jobs() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int n_jobs_ = 0;
  int n_machines_ = 0;
  std::vector<int> machine_;
  std::vector<Time> duration_;
  std::vector<int> step_on_;
};

/// log10 of the number of orientations of the disjunctive edges,
/// M * C(N, 2) * log10(2).
double log10_orientation_count(int n_jobs, int n_machines);

/// log10 of 2^(N * C(M, 2)), the search-space size expression used on the
/// x-axis of the difficulty curves. It differs from the orientation count
/// above; both are reported as-is.
double log10_search_space_size(int n_jobs, int n_machines);

/// Number of distinct job-order-respecting operation sequences,
/// (NM)! / (M!)^N, saturated at `cap + 1` when it exceeds `cap`.
std::uint64_t sequence_count(int n_jobs, int n_machines, std::uint64_t cap);

// ---- text / JSON I/O -------------------------------------------------------

/// Parses the OR-Library style format: "N M" followed by N lines of M
/// "machine duration" pairs, machines 0-indexed.
Instance parse_instance_text(const std::string& text);
/// Parses {"n_jobs":N,"n_machines":M,"jobs":[[[m,d],...],...]}.
Instance parse_instance_json(const std::string& text);
/// Detects JSON by the first non-blank character and dispatches.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

std::string format_instance_text(const Instance& instance);
std::string format_instance_json(const Instance& instance);

}  // namespace jssp
