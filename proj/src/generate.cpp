#include "jssp/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "jssp/error.hpp"
#include "jssp/random.hpp"

namespace jssp {

Instance random_instance(const GenConfig& config) {
  if (config.n_jobs < 1 || config.n_machines < 1) throw ValidationError("instance dimensions must be positive");
  if (config.duration_low < 1 || config.duration_low > config.duration_high)
    throw ValidationError("duration range must satisfy 1 <= low <= high");
  SplitMix64 rng(config.seed);
  std::vector<std::vector<Task>> jobs(config.n_jobs);
  std::vector<int> perm(config.n_machines);
  for (auto& job : jobs) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<int>(perm));
    job.resize(config.n_machines);
    for (int i = 0; i < config.n_machines; ++i)
      job[i] = {perm[i], rng.between(config.duration_low, config.duration_high)};
  }
  return Instance(std::move(jobs));
}

OperationSequence random_sequence(const Instance& instance, std::uint64_t seed) {
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  std::vector<int> list;
  list.reserve(static_cast<std::size_t>(n) * m);
  for (int k = 0; k < n; ++k) list.insert(list.end(), m, k);
  SplitMix64 rng(seed);
  rng.shuffle(std::span<int>(list));
  OperationSequence seq;
  seq.order.reserve(list.size());
  std::vector<int> seen(n, 0);
  for (int k : list) seq.order.push_back({k, seen[k]++});
  return seq;
}

int longest_job(const Instance& instance) {
  int best = 0;
  for (int k = 1; k < instance.n_jobs(); ++k)
    if (instance.job_length(k) > instance.job_length(best)) best = k;
  return best;
}

namespace {

struct PriorityVisitor {
  const Instance& inst;

  std::vector<double> operator()(const Pi0Rule&) const {
    const int n = inst.n_jobs(), m = inst.n_machines();
    const int star = longest_job(inst);
    std::vector<double> out(static_cast<std::size_t>(n) * m);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < m; ++i)
        out[inst.index(k, i)] = k == star ? i + 1.0 : static_cast<double>(m) * (k + 1) + (i + 1);
    return out;
  }

  std::vector<double> operator()(const PiInfRule&) const {
    const int n = inst.n_jobs(), m = inst.n_machines();
    std::vector<double> out(static_cast<std::size_t>(n) * m);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < m; ++i) out[inst.index(k, i)] = static_cast<double>(i + 1) * n + (k + 1);
    return out;
  }

  std::vector<double> operator()(const RandomRule& rule) const {
    const auto seq = random_sequence(inst, rule.seed);
    std::vector<double> out(seq.order.size());
    for (std::size_t pos = 0; pos < seq.order.size(); ++pos) out[inst.index(seq.order[pos])] = pos + 1.0;
    return out;
  }

  std::vector<double> operator()(const PermutedRule& rule) const {
    const int n = inst.n_jobs(), m = inst.n_machines();
    if (static_cast<int>(rule.phi.size()) != n) throw ValidationError("permuted rule needs one entry per job");
    std::vector<int> check(rule.phi);
    std::sort(check.begin(), check.end());
    for (int k = 0; k < n; ++k)
      if (check[k] != k) throw ValidationError("permuted rule phi is not a permutation");
    std::vector<double> out(static_cast<std::size_t>(n) * m);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < m; ++i) out[inst.index(k, i)] = static_cast<double>(i + 1) * n + (rule.phi[k] + 1);
    return out;
  }
};

}  // namespace

std::vector<double> priorities(const PriorityRule& rule, const Instance& instance) {
  return std::visit(PriorityVisitor{instance}, rule);
}

double priority_of(const PriorityRule& rule, const Instance& instance, OperationId op) {
  return priorities(rule, instance)[instance.index(op)];
}

Schedule schedule_by_rule(const Instance& instance, const PriorityRule& rule) {
  const auto prio = priorities(rule, instance);
  const int n = instance.n_jobs(), m = instance.n_machines();
  std::vector<int> next_step(n, 0);
  OperationSequence seq;
  seq.order.reserve(static_cast<std::size_t>(n) * m);
  for (int placed = 0; placed < n * m; ++placed) {
    int pick = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      if (next_step[k] == m) continue;
      const double p = prio[instance.index(k, next_step[k])];
      if (pick < 0 || p < best) {  // strict: lower job index wins ties
        pick = k;
        best = p;
      }
    }
    seq.order.push_back({pick, next_step[pick]++});
  }
  return build_schedule(instance, seq);
}

Time job_delay(const Instance& instance, const Schedule& schedule, int job) {
  return schedule.completion(job, instance.n_machines() - 1) - instance.job_length(job);
}

}  // namespace jssp
