#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "jssp/instance.hpp"
#include "jssp/schedule.hpp"

namespace jssp {

/// Random N x M instance: each job's routing is an independent uniform
/// permutation of the machines, durations i.i.d. uniform in [low, high].
struct GenConfig {
  int n_jobs = 1;
  int n_machines = 1;
  Time duration_low = 1;
  Time duration_high = 100;
  std::uint64_t seed = 0;
};

Instance random_instance(const GenConfig& config);

/// Uniform draw over the (NM)!/(M!)^N job-order-respecting sequences: shuffle
/// a list holding M copies of each job index and map the i-th occurrence of k
/// to operation (k, i).
OperationSequence random_sequence(const Instance& instance, std::uint64_t seed);

/// Longest job first, then remaining jobs in index order:
/// priority i if k = k*, else M*k + i (1-based i, k).
struct Pi0Rule {};
/// Step-major interleaving: priority i*N + k (1-based i, k).
struct PiInfRule {};
/// Priority = position of the operation in a shuffled job list; see
/// random_sequence.
struct RandomRule {
  std::uint64_t seed = 0;
};
/// Priority i*N + phi(k) (1-based); `phi` is a 0-based permutation of the
/// job indices.
struct PermutedRule {
  std::vector<int> phi;
};

using PriorityRule = std::variant<Pi0Rule, PiInfRule, RandomRule, PermutedRule>;

/// Index of the longest job, lowest index on ties.
int longest_job(const Instance& instance);

double priority_of(const PriorityRule& rule, const Instance& instance, OperationId op);

/// Priorities of every operation, indexed by Instance::index.
std::vector<double> priorities(const PriorityRule& rule, const Instance& instance);

/// Greedy list scheduling: repeatedly start the ready operation (its job
/// predecessor already scheduled) of least priority at its earliest time.
/// Equal priorities are broken by (job, step).
Schedule schedule_by_rule(const Instance& instance, const PriorityRule& rule);

/// Completion of the job's last operation minus the job's total duration.
Time job_delay(const Instance& instance, const Schedule& schedule, int job);

}  // namespace jssp
