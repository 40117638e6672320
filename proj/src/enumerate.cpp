#include "jssp/enumerate.hpp"

#include <algorithm>
#include <map>

#include "jssp/error.hpp"

namespace jssp {

namespace {

class SequenceWalker {
 public:
  explicit SequenceWalker(const Instance& instance)
      : inst_(instance),
        n_(instance.n_jobs()),
        m_(instance.n_machines()),
        next_step_(n_, 0),
        job_ready_(n_, 0),
        machine_ready_(m_, 0),
        rows_(m_) {}

  std::map<std::vector<std::vector<int>>, Time> run() {
    walk(0, 0);
    return std::move(found_);
  }

 private:
  void walk(int placed, Time makespan) {
    if (placed == n_ * m_) {
      found_.emplace(rows_, makespan);
      return;
    }
    for (int k = 0; k < n_; ++k) {
      const int step = next_step_[k];
      if (step == m_) continue;
      const int mach = inst_.machine(k, step);
      const Time saved_job = job_ready_[k];
      const Time saved_machine = machine_ready_[mach];
      const Time done = std::max(saved_job, saved_machine) + inst_.duration(k, step);
      job_ready_[k] = machine_ready_[mach] = done;
      ++next_step_[k];
      rows_[mach].push_back(k);
      walk(placed + 1, std::max(makespan, done));
      rows_[mach].pop_back();
      --next_step_[k];
      job_ready_[k] = saved_job;
      machine_ready_[mach] = saved_machine;
    }
  }

  const Instance& inst_;
  int n_;
  int m_;
  std::vector<int> next_step_;
  std::vector<Time> job_ready_;
  std::vector<Time> machine_ready_;
  std::vector<std::vector<int>> rows_;
  std::map<std::vector<std::vector<int>>, Time> found_;
};

}  // namespace

std::vector<EnumeratedSchedule> enumerate_all(const Instance& instance, std::uint64_t cap) {
  const auto count = sequence_count(instance.n_jobs(), instance.n_machines(), cap);
  if (count > cap) {
    throw SizeError("enumeration of a " + std::to_string(instance.n_jobs()) + "x" +
                    std::to_string(instance.n_machines()) + " instance exceeds the cap of " + std::to_string(cap) +
                    " sequences");
  }
  std::vector<EnumeratedSchedule> out;
  for (auto& [rows, makespan] : SequenceWalker(instance).run()) out.push_back({MachineOrders(rows), makespan});
  return out;
}

Time brute_force_optimum(const Instance& instance, std::uint64_t cap) {
  const auto all = enumerate_all(instance, cap);
  return std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
           return a.makespan < b.makespan;
         })->makespan;
}

}  // namespace jssp
