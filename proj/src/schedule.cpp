#include "jssp/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jssp/error.hpp"

namespace jssp {

void validate_sequence(const Instance& instance, const OperationSequence& seq) {
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  if (static_cast<int>(seq.order.size()) != n * m) {
    throw ValidationError("sequence has " + std::to_string(seq.order.size()) + " operations, expected " +
                          std::to_string(n * m));
  }
  std::vector<int> next_step(n, 0);
  for (const auto& op : seq.order) {
    if (op.job < 0 || op.job >= n || op.step < 0 || op.step >= m)
      throw ValidationError("sequence contains an out-of-range operation");
    if (op.step != next_step[op.job]) {
      throw ValidationError("sequence violates job order or repeats an operation at job " + std::to_string(op.job) +
                            " step " + std::to_string(op.step));
    }
    ++next_step[op.job];
  }
}

// ---- EdgeIndex -------------------------------------------------------------

EdgeIndex::EdgeIndex(int n_jobs, int n_machines)
    : n_jobs_(n_jobs), n_machines_(n_machines), pairs_(n_jobs * (n_jobs - 1) / 2), pair_of_(n_jobs * n_jobs, -1) {
  int p = 0;
  std::vector<std::pair<int, int>> pair_jobs;
  for (int a = 0; a < n_jobs; ++a) {
    for (int b = a + 1; b < n_jobs; ++b) {
      pair_of_[a * n_jobs + b] = pair_of_[b * n_jobs + a] = p++;
      pair_jobs.emplace_back(a, b);
    }
  }
  endpoints_.reserve(static_cast<std::size_t>(size()));
  for (int mach = 0; mach < n_machines; ++mach)
    for (auto [a, b] : pair_jobs) endpoints_.push_back({mach, a, b});
}

int EdgeIndex::of(int machine, int a, int b) const { return machine * pairs_ + pair_of_[a * n_jobs_ + b]; }

// ---- MachineOrders ---------------------------------------------------------

MachineOrders::MachineOrders(std::vector<std::vector<int>> order_on) : order_on_(std::move(order_on)) {
  if (order_on_.empty()) throw ValidationError("machine orders need at least one machine");
  n_jobs_ = static_cast<int>(order_on_.front().size());
  position_.assign(order_on_.size() * n_jobs_, -1);
  for (std::size_t mach = 0; mach < order_on_.size(); ++mach) {
    const auto& row = order_on_[mach];
    if (static_cast<int>(row.size()) != n_jobs_) throw ValidationError("machine order rows differ in length");
    for (int pos = 0; pos < n_jobs_; ++pos) {
      const int job = row[pos];
      if (job < 0 || job >= n_jobs_ || position_[mach * n_jobs_ + job] != -1)
        throw ValidationError("machine " + std::to_string(mach) + " order is not a permutation");
      position_[mach * n_jobs_ + job] = pos;
    }
  }
}

MachineOrders MachineOrders::with_adjacent_swap(int machine, int pos) const {
  MachineOrders out = *this;
  auto& row = out.order_on_[machine];
  std::swap(row[pos], row[pos + 1]);
  out.position_[machine * n_jobs_ + row[pos]] = pos;
  out.position_[machine * n_jobs_ + row[pos + 1]] = pos + 1;
  return out;
}

std::vector<std::int8_t> MachineOrders::orientation(const EdgeIndex& edges) const {
  std::vector<std::int8_t> out(edges.size());
  for (int e = 0; e < edges.size(); ++e) {
    const auto arc = edges.endpoints(e);
    out[e] = precedes(arc.machine, arc.first, arc.second) ? 1 : -1;
  }
  return out;
}

MachineOrders MachineOrders::from_orientation(const EdgeIndex& edges, std::span<const std::int8_t> orientation) {
  const int n = edges.n_jobs();
  std::vector<std::vector<int>> rows(edges.n_machines(), std::vector<int>(n, -1));
  std::vector<int> before(static_cast<std::size_t>(edges.n_machines()) * n, 0);
  for (int e = 0; e < edges.size(); ++e) {
    const auto arc = edges.endpoints(e);
    if (orientation[e] == 0) throw ValidationError("orientation has an unfixed edge");
    const int later = orientation[e] > 0 ? arc.second : arc.first;
    ++before[arc.machine * n + later];
  }
  for (int mach = 0; mach < edges.n_machines(); ++mach) {
    for (int job = 0; job < n; ++job) {
      int& slot = rows[mach][before[mach * n + job]];
      if (slot != -1) throw InfeasibleError("orientation is cyclic on machine " + std::to_string(mach));
      slot = job;
    }
  }
  return MachineOrders(std::move(rows));
}

// ---- Schedule --------------------------------------------------------------

namespace {

MachineOrders orders_from_starts(const Instance& instance, const std::vector<Time>& start) {
  const int n = instance.n_jobs();
  std::vector<std::vector<int>> rows(instance.n_machines());
  for (int mach = 0; mach < instance.n_machines(); ++mach) {
    auto& row = rows[mach];
    row.resize(n);
    std::iota(row.begin(), row.end(), 0);
    std::stable_sort(row.begin(), row.end(), [&](int a, int b) {
      return start[instance.index(a, instance.step_on(a, mach))] < start[instance.index(b, instance.step_on(b, mach))];
    });
  }
  return MachineOrders(std::move(rows));
}

void check_dims(const Instance& instance, const MachineOrders& orders) {
  if (orders.n_jobs() != instance.n_jobs() || orders.n_machines() != instance.n_machines())
    throw ValidationError("machine orders do not match instance dimensions");
}

// Heads (earliest starts) by Kahn's algorithm over job arcs plus
// machine-consecutive arcs. Returns false on a cycle.
bool longest_path_heads(const Instance& instance, const MachineOrders& orders, std::vector<Time>& head) {
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  const int ops = n * m;
  std::vector<int> machine_next(ops, -1);
  std::vector<int> indegree(ops, 0);
  for (int mach = 0; mach < m; ++mach) {
    const auto& row = orders.on(mach);
    for (int pos = 0; pos + 1 < n; ++pos) {
      const int a = instance.index(row[pos], instance.step_on(row[pos], mach));
      const int b = instance.index(row[pos + 1], instance.step_on(row[pos + 1], mach));
      machine_next[a] = b;
      ++indegree[b];
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 1; i < m; ++i) ++indegree[instance.index(k, i)];

  head.assign(ops, 0);
  std::vector<int> stack;
  stack.reserve(ops);
  for (int v = 0; v < ops; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  int visited = 0;
  const auto& dur = instance.durations();
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++visited;
    const Time done = head[v] + dur[v];
    auto relax = [&](int w) {
      head[w] = std::max(head[w], done);
      if (--indegree[w] == 0) stack.push_back(w);
    };
    if ((v % m) + 1 < m) relax(v + 1);
    if (machine_next[v] >= 0) relax(machine_next[v]);
  }
  return visited == ops;
}

}  // namespace

class ScheduleBuilder {
 public:
  static Schedule make(int n, int m, std::vector<Time> start, std::vector<Time> completion, MachineOrders orders) {
    Schedule s;
    s.n_jobs_ = n;
    s.n_machines_ = m;
    s.makespan_ = completion.empty() ? 0 : *std::max_element(completion.begin(), completion.end());
    s.start_ = std::move(start);
    s.completion_ = std::move(completion);
    s.orders_ = std::move(orders);
    return s;
  }
};

namespace {
Schedule make_schedule(int n, int m, std::vector<Time> start, std::vector<Time> completion, MachineOrders orders) {
  return ScheduleBuilder::make(n, m, std::move(start), std::move(completion), std::move(orders));
}
}  // namespace

Schedule Schedule::from_start_times(const Instance& instance, std::vector<Time> start) {
  if (static_cast<int>(start.size()) != instance.n_operations())
    throw ValidationError("start-time vector does not match instance size");
  std::vector<Time> completion(start.size());
  for (std::size_t v = 0; v < start.size(); ++v) completion[v] = start[v] + instance.durations()[v];
  auto orders = orders_from_starts(instance, start);
  return make_schedule(instance.n_jobs(), instance.n_machines(), std::move(start), std::move(completion),
                       std::move(orders));
}

Schedule build_schedule(const Instance& instance, const OperationSequence& seq) {
  validate_sequence(instance, seq);
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  struct Slot {
    Time begin;
    Time end;
    int job;
  };
  std::vector<Time> start(n * m), completion(n * m);
  std::vector<Time> job_ready(n, 0);
  std::vector<std::vector<Slot>> busy(m);  // sorted by begin
  for (auto& row : busy) row.reserve(n);
  for (const auto& op : seq.order) {
    const int mach = instance.machine(op);
    const int v = instance.index(op);
    const Time p = instance.duration(op);
    // Earliest idle gap on the machine that fits the operation.
    auto& slots = busy[mach];
    Time t = job_ready[op.job];
    std::size_t pos = 0;
    for (; pos < slots.size(); ++pos) {
      if (t + p <= slots[pos].begin) break;
      t = std::max(t, slots[pos].end);
    }
    slots.insert(slots.begin() + static_cast<std::ptrdiff_t>(pos), {t, t + p, op.job});
    start[v] = t;
    completion[v] = t + p;
    job_ready[op.job] = completion[v];
  }
  std::vector<std::vector<int>> rows(m);
  for (int i = 0; i < m; ++i)
    for (const auto& slot : busy[i]) rows[i].push_back(slot.job);
  return make_schedule(n, m, std::move(start), std::move(completion), MachineOrders(std::move(rows)));
}

Schedule schedule_from_orders(const Instance& instance, const MachineOrders& orders) {
  check_dims(instance, orders);
  std::vector<Time> head;
  if (!longest_path_heads(instance, orders, head)) throw InfeasibleError("machine orders induce a cycle");
  std::vector<Time> completion(head.size());
  for (std::size_t v = 0; v < head.size(); ++v) completion[v] = head[v] + instance.durations()[v];
  return make_schedule(instance.n_jobs(), instance.n_machines(), std::move(head), std::move(completion), orders);
}

Time makespan_longest_path(const Instance& instance, const MachineOrders& orders) {
  check_dims(instance, orders);
  std::vector<Time> head;
  if (!longest_path_heads(instance, orders, head)) throw InfeasibleError("machine orders induce a cycle");
  Time best = 0;
  for (std::size_t v = 0; v < head.size(); ++v) best = std::max(best, head[v] + instance.durations()[v]);
  return best;
}

bool is_acyclic(const Instance& instance, const MachineOrders& orders) {
  check_dims(instance, orders);
  std::vector<Time> head;
  return longest_path_heads(instance, orders, head);
}

std::int64_t distance(const MachineOrders& a, const MachineOrders& b) {
  if (a.n_jobs() != b.n_jobs() || a.n_machines() != b.n_machines())
    throw ValidationError("distance between schedules of different instances");
  std::int64_t d = 0;
  const int n = a.n_jobs();
  for (int mach = 0; mach < a.n_machines(); ++mach) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (a.precedes(mach, x, y) != b.precedes(mach, x, y)) ++d;
  }
  return d;
}

std::int64_t distance(const Schedule& a, const Schedule& b) { return distance(a.machine_orders(), b.machine_orders()); }

FeasibilityReport check_feasible(const Instance& instance, const Schedule& schedule) {
  FeasibilityReport report;
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  if (schedule.n_jobs() != n || schedule.n_machines() != m) {
    report.feasible = false;
    report.violations.push_back("schedule dimensions do not match instance");
    return report;
  }
  auto name = [](int k, int i) { return "J" + std::to_string(k) + "." + std::to_string(i); };
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) {
      if (schedule.start(k, i) < 0) report.violations.push_back(name(k, i) + " starts before time 0");
      if (i > 0 && schedule.start(k, i) < schedule.start(k, i - 1) + instance.duration(k, i - 1)) {
        report.violations.push_back(name(k, i) + " starts before its job predecessor completes");
      }
    }
  }
  for (int mach = 0; mach < m; ++mach) {
    std::vector<OperationId> ops;
    for (int k = 0; k < n; ++k) ops.push_back({k, instance.step_on(k, mach)});
    std::stable_sort(ops.begin(), ops.end(), [&](const OperationId& a, const OperationId& b) {
      return schedule.start(a.job, a.step) < schedule.start(b.job, b.step);
    });
    for (std::size_t p = 0; p + 1 < ops.size(); ++p) {
      const auto& a = ops[p];
      const auto& b = ops[p + 1];
      if (schedule.start(a.job, a.step) + instance.duration(a) > schedule.start(b.job, b.step)) {
        report.violations.push_back(name(b.job, b.step) + " overlaps " + name(a.job, a.step) + " on machine " +
                                    std::to_string(mach));
      }
    }
    std::vector<int> order;
    for (const auto& op : ops) order.push_back(op.job);
    if (order != schedule.machine_orders().on(mach))
      report.violations.push_back("machine " + std::to_string(mach) + " order disagrees with start times");
  }
  report.feasible = report.violations.empty();
  return report;
}

std::vector<DisjunctiveArc> critical_arcs(const Instance& instance, const Schedule& schedule) {
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  const auto& orders = schedule.machine_orders();
  const auto& dur = instance.durations();
  const int ops = n * m;

  // Tails by a sweep in decreasing start time; every arc goes forward in time.
  std::vector<int> by_start(ops);
  std::iota(by_start.begin(), by_start.end(), 0);
  std::sort(by_start.begin(), by_start.end(), [&](int a, int b) {
    const Time sa = schedule.starts()[a];
    const Time sb = schedule.starts()[b];
    return sa != sb ? sa > sb : a > b;
  });
  std::vector<int> machine_next(ops, -1);
  for (int mach = 0; mach < m; ++mach) {
    const auto& row = orders.on(mach);
    for (int pos = 0; pos + 1 < n; ++pos)
      machine_next[instance.index(row[pos], instance.step_on(row[pos], mach))] =
          instance.index(row[pos + 1], instance.step_on(row[pos + 1], mach));
  }
  std::vector<Time> tail(ops, 0);
  for (int v : by_start) {
    Time t = 0;
    if ((v % m) + 1 < m) t = std::max(t, tail[v + 1] + dur[v + 1]);
    if (machine_next[v] >= 0) t = std::max(t, tail[machine_next[v]] + dur[machine_next[v]]);
    tail[v] = t;
  }

  const Time makespan = schedule.makespan();
  std::vector<DisjunctiveArc> arcs;
  for (int mach = 0; mach < m; ++mach) {
    const auto& row = orders.on(mach);
    for (int pos = 0; pos + 1 < n; ++pos) {
      const int a = instance.index(row[pos], instance.step_on(row[pos], mach));
      const int b = instance.index(row[pos + 1], instance.step_on(row[pos + 1], mach));
      const Time sa = schedule.starts()[a];
      if (sa + dur[a] == schedule.starts()[b] && sa + dur[a] + dur[b] + tail[b] == makespan)
        arcs.push_back({mach, row[pos], row[pos + 1]});
    }
  }
  return arcs;
}

MachineOrders reverse_arc(const MachineOrders& orders, const DisjunctiveArc& arc) {
  const int pa = orders.position(arc.machine, arc.first);
  const int pb = orders.position(arc.machine, arc.second);
  if (pb != pa + 1) throw ValidationError("arc to reverse must join machine-adjacent jobs in its stated direction");
  return orders.with_adjacent_swap(arc.machine, pa);
}

std::string format_machine_orders(const MachineOrders& orders) {
  std::ostringstream out;
  for (int mach = 0; mach < orders.n_machines(); ++mach) {
    out << "m" << mach << ':';
    for (int job : orders.on(mach)) out << ' ' << job;
    out << '\n';
  }
  return out.str();
}

}  // namespace jssp
