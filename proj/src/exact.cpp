#include "jssp/exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <queue>

#include "jssp/error.hpp"
#include "jssp/generate.hpp"

namespace jssp {

std::string to_string(BnbStatus status) {
  switch (status) {
    case BnbStatus::optimal:
      return "optimal";
    case BnbStatus::infeasible:
      return "infeasible";
    case BnbStatus::above_cutoff:
      return "above_cutoff";
    case BnbStatus::aborted:
      return "aborted";
  }
  return "unknown";
}

Time lower_bound(const Instance& instance) {
  Time best = 0;
  for (int k = 0; k < instance.n_jobs(); ++k) best = std::max(best, instance.job_length(k));
  for (int mach = 0; mach < instance.n_machines(); ++mach) best = std::max(best, instance.machine_workload(mach));
  return best;
}

Time one_machine_preemptive_bound(std::span<const Time> heads, std::span<const Time> bodies,
                                  std::span<const Time> tails) {
  const std::size_t n = heads.size();
  std::vector<std::size_t> by_head(n);
  std::iota(by_head.begin(), by_head.end(), std::size_t{0});
  std::sort(by_head.begin(), by_head.end(), [&](std::size_t a, std::size_t b) { return heads[a] < heads[b]; });

  // (tail, remaining body); largest tail runs first.
  std::priority_queue<std::pair<Time, Time>> ready;
  Time t = 0;
  Time bound = 0;
  std::size_t next = 0;
  while (next < n || !ready.empty()) {
    if (ready.empty()) t = std::max(t, heads[by_head[next]]);
    while (next < n && heads[by_head[next]] <= t) {
      ready.emplace(tails[by_head[next]], bodies[by_head[next]]);
      ++next;
    }
    auto [tail, remaining] = ready.top();
    ready.pop();
    const Time horizon = next < n ? heads[by_head[next]] : std::numeric_limits<Time>::max();
    const Time run = std::min(remaining, horizon - t);
    t += run;
    remaining -= run;
    if (remaining == 0) {
      bound = std::max(bound, t + tail);
    } else {
      ready.emplace(tail, remaining);
    }
  }
  return bound;
}

namespace {

struct Aborted {};

enum class Mode { plain, radius };

/// Depth-first branch and bound over disjunctive-edge orientations.
///
/// Each node holds a partial orientation. Heads and tails of the graph made
/// of job arcs plus fixed arcs give the node bound (longest path and the
/// preemptive one-machine bound per machine). A list-scheduling heuristic that
/// respects the fixed arcs yields a complete schedule; the node branches on an
/// unfixed machine-adjacent arc of that schedule's critical path, trying the
/// heuristic's orientation first. If the critical path uses fixed arcs only,
/// the heuristic meets the node bound and the node is closed.
///
/// In radius mode every node counts its fixed arcs that oppose the center and
/// is cut once that count passes the radius; a node at exactly the radius is
/// completed with the center's orientation.
class Search {
 public:
  Search(const Instance& instance, const BnbConfig& config, Mode mode)
      : inst_(instance),
        config_(config),
        mode_(mode),
        n_(instance.n_jobs()),
        m_(instance.n_machines()),
        v_(instance.n_operations()),
        edges_(instance.n_jobs(), instance.n_machines()),
        dur_(instance.durations()),
        orient_(edges_.size(), 0),
        started_(std::chrono::steady_clock::now()) {
    op_on_.resize(static_cast<std::size_t>(n_) * m_);
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < m_; ++i) op_on_[instance.machine(k, i) * n_ + k] = instance.index(k, i);
    edge_ops_.resize(edges_.size());
    for (int e = 0; e < edges_.size(); ++e) {
      const auto arc = edges_.endpoints(e);
      edge_ops_[e] = {op_on_[arc.machine * n_ + arc.first], op_on_[arc.machine * n_ + arc.second]};
    }
    machine_ops_.resize(m_);
    for (int mach = 0; mach < m_; ++mach)
      for (int k = 0; k < n_; ++k) machine_ops_[mach].push_back(op_on_[mach * n_ + k]);

    head_.resize(v_);
    tail_.resize(v_);
    indeg_.resize(v_);
    order_.resize(v_);
    out_begin_.resize(v_ + 1);
    out_fill_.resize(v_);
    out_.resize(edges_.size());
    h_start_.resize(v_);
    h_machine_prev_.resize(v_);
    h_rows_.resize(m_);
    h_orient_.resize(edges_.size());
    best_orient_.resize(edges_.size());
    guide_rank_.assign(v_, 0);
    scratch_r_.resize(n_);
    scratch_p_.resize(n_);
    scratch_q_.resize(n_);
    upper_ = std::numeric_limits<Time>::max();
    if (config_.cutoff) upper_ = *config_.cutoff + 1;
  }

  /// Fixes constraint arcs at the root. Returns false on a direct conflict.
  bool fix_constraint(const ArcConstraint& constraint) {
    for (const auto& arc : constraint) {
      if (arc.machine < 0 || arc.machine >= m_ || arc.first < 0 || arc.first >= n_ || arc.second < 0 ||
          arc.second >= n_ || arc.first == arc.second)
        throw ValidationError("arc constraint references an invalid arc");
      const int e = edges_.of(arc.machine, arc.first, arc.second);
      const std::int8_t dir = arc.first < arc.second ? 1 : -1;
      if (orient_[e] == -dir) return false;
      orient_[e] = dir;
    }
    return true;
  }

  void set_center(const MachineOrders& center, std::int64_t radius) {
    center_orient_ = center.orientation(edges_);
    radius_ = radius;
    set_guide(center);
  }

  void set_guide(const MachineOrders& orders) {
    const Schedule s = schedule_from_orders(inst_, orders);
    std::vector<int> ops(v_);
    std::iota(ops.begin(), ops.end(), 0);
    std::sort(ops.begin(), ops.end(), [&](int a, int b) {
      return s.starts()[a] != s.starts()[b] ? s.starts()[a] < s.starts()[b] : a < b;
    });
    for (int pos = 0; pos < v_; ++pos) guide_rank_[ops[pos]] = pos;
    has_guide_ = true;
  }

  /// Offers a complete schedule as incumbent if it respects the root state.
  void offer(const MachineOrders& orders) {
    if (!is_acyclic(inst_, orders)) return;
    const auto o = orders.orientation(edges_);
    int opposite = 0;
    for (int e = 0; e < edges_.size(); ++e) {
      if (orient_[e] != 0 && orient_[e] != o[e]) return;
      if (mode_ == Mode::radius && o[e] != center_orient_[e]) ++opposite;
    }
    if (mode_ == Mode::radius && opposite > radius_) return;
    const Time makespan = makespan_longest_path(inst_, orders);
    if (config_.on_schedule) config_.on_schedule(o, makespan);
    if (makespan < upper_) {
      upper_ = makespan;
      best_orient_ = o;
      have_best_ = true;
    }
  }

  BnbResult run() {
    BnbResult result;
    opposite_ = 0;
    if (mode_ == Mode::radius) {
      for (int e = 0; e < edges_.size(); ++e)
        if (orient_[e] != 0 && orient_[e] != center_orient_[e]) ++opposite_;
    }
    bool complete = true;
    try {
      expand();
    } catch (const Aborted&) {
      complete = false;
    }
    result.nodes_expanded = nodes_;
    result.proven = complete;
    if (have_best_) {
      result.optimum = upper_;
      result.witness = MachineOrders::from_orientation(edges_, best_orient_);
      result.status = complete ? BnbStatus::optimal : BnbStatus::aborted;
    } else if (!complete) {
      result.status = BnbStatus::aborted;
    } else {
      result.status = config_.cutoff ? BnbStatus::above_cutoff : BnbStatus::infeasible;
    }
    return result;
  }

  /// Evaluates the root only; false if the fixed arcs are cyclic.
  bool root_feasible() { return evaluate(); }

 private:
  void check_limits() {
    if (config_.node_limit && nodes_ > *config_.node_limit) throw Aborted{};
    if (config_.time_limit_seconds && (nodes_ & 63) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started_;
      if (elapsed.count() > *config_.time_limit_seconds) throw Aborted{};
    }
  }

  // Builds the fixed-arc adjacency and computes heads, tails and the node
  // bound. Returns false when the fixed arcs close a cycle.
  bool evaluate() {
    std::fill(out_begin_.begin(), out_begin_.end(), 0);
    for (int e = 0; e < edges_.size(); ++e) {
      if (orient_[e] == 0) continue;
      const auto [a, b] = edge_ops_[e];
      ++out_begin_[(orient_[e] > 0 ? a : b) + 1];
    }
    for (int v = 0; v < v_; ++v) out_begin_[v + 1] += out_begin_[v];
    std::copy(out_begin_.begin(), out_begin_.end() - 1, out_fill_.begin());
    for (int v = 0; v < v_; ++v) indeg_[v] = (v % m_) ? 1 : 0;
    for (int e = 0; e < edges_.size(); ++e) {
      if (orient_[e] == 0) continue;
      const auto [a, b] = edge_ops_[e];
      const int from = orient_[e] > 0 ? a : b;
      const int to = orient_[e] > 0 ? b : a;
      out_[out_fill_[from]++] = to;
      ++indeg_[to];
    }

    int filled = 0;
    for (int v = 0; v < v_; ++v) {
      head_[v] = 0;
      if (indeg_[v] == 0) order_[filled++] = v;
    }
    for (int idx = 0; idx < filled; ++idx) {
      const int v = order_[idx];
      const Time done = head_[v] + dur_[v];
      if ((v % m_) + 1 < m_) {
        head_[v + 1] = std::max(head_[v + 1], done);
        if (--indeg_[v + 1] == 0) order_[filled++] = v + 1;
      }
      for (int p = out_begin_[v]; p < out_begin_[v + 1]; ++p) {
        const int w = out_[p];
        head_[w] = std::max(head_[w], done);
        if (--indeg_[w] == 0) order_[filled++] = w;
      }
    }
    if (filled < v_) return false;

    Time bound = 0;
    for (int idx = v_ - 1; idx >= 0; --idx) {
      const int v = order_[idx];
      Time t = 0;
      if ((v % m_) + 1 < m_) t = tail_[v + 1] + dur_[v + 1];
      for (int p = out_begin_[v]; p < out_begin_[v + 1]; ++p) t = std::max(t, tail_[out_[p]] + dur_[out_[p]]);
      tail_[v] = t;
      bound = std::max(bound, head_[v] + dur_[v] + t);
    }
    if (n_ > 1) {
      for (int mach = 0; mach < m_ && bound < upper_; ++mach) {
        const auto& ops = machine_ops_[mach];
        for (int k = 0; k < n_; ++k) {
          scratch_r_[k] = head_[ops[k]];
          scratch_p_[k] = dur_[ops[k]];
          scratch_q_[k] = tail_[ops[k]];
        }
        bound = std::max(bound, one_machine_preemptive_bound(scratch_r_, scratch_p_, scratch_q_));
      }
    }
    node_bound_ = bound;
    return true;
  }

  // List scheduling that honours the fixed arcs. `guided` picks the ready
  // operation of least guide rank; otherwise a Giffler-Thompson step picks,
  // among ready operations on the machine of the earliest completion that
  // could start before it, the one with the longest tail.
  Time build_heuristic(bool guided) {
    // Reuse the CSR built by evaluate(); recompute in-degrees.
    for (int v = 0; v < v_; ++v) indeg_[v] = (v % m_) ? 1 : 0;
    for (int v = 0; v < v_; ++v)
      for (int p = out_begin_[v]; p < out_begin_[v + 1]; ++p) ++indeg_[out_[p]];
    std::vector<Time>& job_ready = job_ready_;
    std::vector<Time>& machine_ready = machine_ready_;
    std::vector<int>& machine_last = machine_last_;
    job_ready.assign(n_, 0);
    machine_ready.assign(m_, 0);
    machine_last.assign(m_, -1);
    for (auto& row : h_rows_) row.clear();
    ready_.clear();
    for (int v = 0; v < v_; ++v)
      if (indeg_[v] == 0) ready_.push_back(v);

    Time makespan = 0;
    for (int placed = 0; placed < v_; ++placed) {
      std::size_t pick = 0;
      if (guided) {
        for (std::size_t r = 1; r < ready_.size(); ++r)
          if (guide_rank_[ready_[r]] < guide_rank_[ready_[pick]]) pick = r;
      } else {
        Time best_completion = std::numeric_limits<Time>::max();
        int target = -1;
        for (std::size_t r = 0; r < ready_.size(); ++r) {
          const int v = ready_[r];
          const Time est = std::max(job_ready[v / m_], machine_ready[inst_.machines()[v]]);
          if (est + dur_[v] < best_completion) {
            best_completion = est + dur_[v];
            target = inst_.machines()[v];
          }
        }
        bool found = false;
        Time best_tail = 0, best_est = 0;
        for (std::size_t r = 0; r < ready_.size(); ++r) {
          const int v = ready_[r];
          if (inst_.machines()[v] != target) continue;
          const Time est = std::max(job_ready[v / m_], machine_ready[target]);
          if (est >= best_completion) continue;
          if (!found || tail_[v] > best_tail || (tail_[v] == best_tail && est < best_est)) {
            found = true;
            pick = r;
            best_tail = tail_[v];
            best_est = est;
          }
        }
      }
      const int v = ready_[pick];
      ready_[pick] = ready_.back();
      ready_.pop_back();
      const int mach = inst_.machines()[v];
      const int job = v / m_;
      const Time start = std::max(job_ready[job], machine_ready[mach]);
      h_start_[v] = start;
      h_machine_prev_[v] = machine_last[mach];
      machine_last[mach] = v;
      job_ready[job] = machine_ready[mach] = start + dur_[v];
      makespan = std::max(makespan, start + dur_[v]);
      h_rows_[mach].push_back(job);
      if ((v % m_) + 1 < m_ && --indeg_[v + 1] == 0) ready_.push_back(v + 1);
      for (int p = out_begin_[v]; p < out_begin_[v + 1]; ++p)
        if (--indeg_[out_[p]] == 0) ready_.push_back(out_[p]);
    }
    for (int mach = 0; mach < m_; ++mach) {
      const auto& row = h_rows_[mach];
      for (int pos = 0; pos < n_; ++pos) position_scratch_[row[pos]] = pos;
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          h_orient_[edges_.of(mach, a, b)] = position_scratch_[a] < position_scratch_[b] ? 1 : -1;
    }
    return makespan;
  }

  int distance_to_center(const std::vector<std::int8_t>& o) const {
    int d = 0;
    for (int e = 0; e < edges_.size(); ++e) d += o[e] != center_orient_[e];
    return d;
  }

  // First unfixed machine arc on the heuristic's critical path, scanning from
  // the source side. -1 if the path uses fixed arcs only.
  int critical_branch_edge(Time makespan) const {
    int end = 0;
    for (int v = 0; v < v_; ++v)
      if (h_start_[v] + dur_[v] == makespan) {
        end = v;
        break;
      }
    int chosen = -1;
    int v = end;
    while (true) {
      if (v % m_ && h_start_[v - 1] + dur_[v - 1] == h_start_[v]) {
        v = v - 1;
        continue;
      }
      const int prev = h_machine_prev_[v];
      if (prev < 0 || h_start_[prev] + dur_[prev] != h_start_[v]) break;
      const int e = edges_.of(inst_.machines()[v], prev / m_, v / m_);
      if (orient_[e] == 0) chosen = e;
      v = prev;
    }
    return chosen;
  }

  void record(Time makespan, const std::vector<std::int8_t>& orientation) {
    if (config_.on_schedule) config_.on_schedule(orientation, makespan);
    if (makespan < upper_) {
      upper_ = makespan;
      best_orient_ = orientation;
      have_best_ = true;
      if (mode_ == Mode::plain) set_guide(MachineOrders::from_orientation(edges_, best_orient_));
    }
  }

  // Fixes every unfixed edge whose other orientation alone would reach the
  // pruning threshold, re-evaluating until nothing changes. Fixed edges are
  // appended to `fixed`. Returns false if the node can be closed.
  bool select_immediately(std::vector<int>& fixed) {
    while (true) {
      if (!evaluate() || node_bound_ >= upper_) return false;
      bool changed = false;
      for (int e = 0; e < edges_.size(); ++e) {
        if (orient_[e] != 0) continue;
        const auto [a, b] = edge_ops_[e];
        const Time pair = dur_[a] + dur_[b];
        const bool ab = head_[a] + pair + tail_[b] < upper_;
        const bool ba = head_[b] + pair + tail_[a] < upper_;
        if (ab && ba) continue;
        if (!ab && !ba) return false;
        orient_[e] = ab ? 1 : -1;
        fixed.push_back(e);
        changed = true;
        if (mode_ == Mode::radius && orient_[e] != center_orient_[e] && ++opposite_ > radius_) return false;
      }
      if (!changed) {
        const int sets = select_by_sets(fixed);
        if (sets < 0) return false;
        if (sets == 0) return true;
      }
    }
  }

  // Orders `from` before `to` on their machine. Returns false on a conflict
  // or when the radius is exceeded.
  bool force(int from, int to, std::vector<int>& fixed) {
    const int mach = inst_.machines()[from];
    const int a = from / m_, b = to / m_;
    const int e = edges_.of(mach, a, b);
    const std::int8_t dir = a < b ? 1 : -1;
    if (orient_[e] == dir) return true;
    if (orient_[e] == -dir) return false;
    orient_[e] = dir;
    fixed.push_back(e);
    return !(mode_ == Mode::radius && dir != center_orient_[e] && ++opposite_ > radius_);
  }

  // Set version of the pair test. For J = {j : head >= r, tail >= q} on a
  // machine and c outside J: if c anywhere but last forces the threshold, c
  // follows all of J; symmetrically for first. Returns the number of arcs
  // fixed, or -1 if the node can be closed.
  int select_by_sets(std::vector<int>& fixed) {
    const std::size_t before = fixed.size();
    for (int mach = 0; mach < m_; ++mach) {
      const auto& ops = machine_ops_[mach];
      for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
          const Time r = head_[ops[x]], q = tail_[ops[y]];
          Time sum = 0, min_r = std::numeric_limits<Time>::max(), min_q = min_r;
          int size = 0;
          for (int k = 0; k < n_; ++k) {
            const int v = ops[k];
            if (head_[v] < r || tail_[v] < q) continue;
            sum += dur_[v];
            min_r = std::min(min_r, head_[v]);
            min_q = std::min(min_q, tail_[v]);
            ++size;
          }
          if (size < 2) continue;
          for (int c = 0; c < n_; ++c) {
            const int vc = ops[c];
            if (head_[vc] >= r && tail_[vc] >= q) continue;
            const Time total = sum + dur_[vc];
            const bool last = std::min(min_r, head_[vc]) + total + min_q >= upper_;
            const bool first = min_r + total + std::min(min_q, tail_[vc]) >= upper_;
            if (last && first) return -1;
            if (!last && !first) continue;
            for (int k = 0; k < n_; ++k) {
              const int v = ops[k];
              if (head_[v] < r || tail_[v] < q) continue;
              if (!(last ? force(v, vc, fixed) : force(vc, v, fixed))) return -1;
            }
          }
        }
      }
    }
    return static_cast<int>(fixed.size() - before);
  }

  void release(const std::vector<int>& fixed) {
    for (int e : fixed) {
      if (mode_ == Mode::radius && orient_[e] != center_orient_[e]) --opposite_;
      orient_[e] = 0;
    }
  }

  void expand() {
    ++nodes_;
    check_limits();
    std::vector<int> fixed;
    if (select_immediately(fixed)) expand_fixed();
    release(fixed);
  }

  void expand_fixed() {
    if (mode_ == Mode::radius && opposite_ >= radius_) {
      complete_with_center();
      return;
    }

    // Heuristic schedules; keep the better admissible one for branching.
    Time h_makespan = std::numeric_limits<Time>::max();
    bool admissible = false;
    std::vector<std::int8_t> chosen_orient;
    std::vector<Time> chosen_start;
    std::vector<int> chosen_prev;
    auto consider = [&](bool guided) {
      const Time mk = build_heuristic(guided);
      const bool in_ball = mode_ != Mode::radius || distance_to_center(h_orient_) <= radius_;
      if (in_ball) record(mk, h_orient_);
      const bool better = chosen_orient.empty() || (in_ball && !admissible) || (in_ball == admissible && mk < h_makespan);
      if (better) {
        h_makespan = mk;
        admissible = in_ball;
        chosen_orient = h_orient_;
        chosen_start = h_start_;
        chosen_prev = h_machine_prev_;
      }
    };
    if (has_guide_) consider(true);
    if (mode_ == Mode::plain || !admissible) consider(false);
    if (node_bound_ >= upper_) return;

    h_orient_ = chosen_orient;
    h_start_ = chosen_start;
    h_machine_prev_ = chosen_prev;

    int edge = -1;
    if (admissible) {
      edge = critical_branch_edge(h_makespan);
    } else {
      for (int e = 0; e < edges_.size() && edge < 0; ++e)
        if (orient_[e] == 0 && h_orient_[e] != center_orient_[e]) edge = e;
    }
    if (edge < 0) {
      // Critical path fully fixed: the heuristic meets the node bound and was
      // recorded above, so this cannot be reached with a live node.
      for (int e = 0; e < edges_.size() && edge < 0; ++e)
        if (orient_[e] == 0) edge = e;
      if (edge < 0) return;
    }
    const Time bound = node_bound_;
    const std::int8_t first = mode_ == Mode::radius && !admissible ? center_orient_[edge] : h_orient_[edge];
    for (const std::int8_t dir : {first, static_cast<std::int8_t>(-first)}) {
      if (bound >= upper_) break;
      const bool against = mode_ == Mode::radius && dir != center_orient_[edge];
      if (against && opposite_ + 1 > radius_) continue;
      orient_[edge] = dir;
      opposite_ += against;
      expand();
      opposite_ -= against;
      orient_[edge] = 0;
    }
  }

  void complete_with_center() {
    std::vector<int> filled;
    for (int e = 0; e < edges_.size(); ++e) {
      if (orient_[e] == 0) {
        orient_[e] = center_orient_[e];
        filled.push_back(e);
      }
    }
    if (evaluate()) {
      // All edges fixed: the longest path is the makespan.
      record(node_bound_, orient_);
    }
    for (int e : filled) orient_[e] = 0;
  }

  const Instance& inst_;
  const BnbConfig& config_;
  Mode mode_;
  int n_, m_, v_;
  EdgeIndex edges_;
  const std::vector<Time>& dur_;
  std::vector<int> op_on_;
  std::vector<std::pair<int, int>> edge_ops_;
  std::vector<std::vector<int>> machine_ops_;

  std::vector<std::int8_t> orient_;
  std::vector<std::int8_t> center_orient_;
  std::int64_t radius_ = 0;
  std::int64_t opposite_ = 0;

  std::vector<Time> head_, tail_;
  std::vector<int> indeg_, order_, out_begin_, out_fill_, out_;
  Time node_bound_ = 0;

  std::vector<Time> h_start_;
  std::vector<int> h_machine_prev_;
  std::vector<std::vector<int>> h_rows_;
  std::vector<std::int8_t> h_orient_;
  std::vector<int> ready_;
  std::vector<Time> job_ready_, machine_ready_;
  std::vector<int> machine_last_;
  std::vector<int> position_scratch_ = std::vector<int>(n_);
  std::vector<int> guide_rank_;
  bool has_guide_ = false;
  std::vector<Time> scratch_r_, scratch_p_, scratch_q_;

  Time upper_;
  std::vector<std::int8_t> best_orient_;
  bool have_best_ = false;
  std::int64_t nodes_ = 0;
  std::chrono::steady_clock::time_point started_;
};

void validate_config(const BnbConfig& config) {
  if (config.node_limit && *config.node_limit <= 0) throw ValidationError("node limit must be positive");
  if (config.time_limit_seconds && *config.time_limit_seconds <= 0) throw ValidationError("time limit must be positive");
}

}  // namespace

BnbResult solve_fixed_arc(const Instance& instance, const ArcConstraint& constraint, const BnbConfig& config) {
  validate_config(config);
  Search search(instance, config, Mode::plain);
  if (!search.fix_constraint(constraint)) {
    BnbResult r;
    r.status = BnbStatus::infeasible;
    r.proven = true;
    r.nodes_expanded = 0;
    return r;
  }
  const MachineOrders seed = config.incumbent ? *config.incumbent : schedule_by_rule(instance, PiInfRule{}).machine_orders();
  if (config.incumbent && (config.incumbent->n_jobs() != instance.n_jobs() ||
                           config.incumbent->n_machines() != instance.n_machines()))
    throw ValidationError("incumbent does not match instance dimensions");
  if (!search.root_feasible()) {
    BnbResult r;
    r.status = BnbStatus::infeasible;
    r.proven = true;
    r.nodes_expanded = 1;
    return r;
  }
  search.set_guide(seed);
  search.offer(seed);
  return search.run();
}

BnbResult solve_optimal(const Instance& instance, const BnbConfig& config) {
  return solve_fixed_arc(instance, {}, config);
}

BnbResult solve_radius_limited(const Instance& instance, const MachineOrders& center, std::int64_t radius,
                               const BnbConfig& config) {
  validate_config(config);
  if (radius < 0) throw ValidationError("radius must be non-negative");
  if (center.n_jobs() != instance.n_jobs() || center.n_machines() != instance.n_machines())
    throw ValidationError("center does not match instance dimensions");
  if (!is_acyclic(instance, center)) throw InfeasibleError("center schedule is cyclic");
  Search search(instance, config, Mode::radius);
  search.set_center(center, radius);
  search.offer(center);
  if (config.incumbent) search.offer(*config.incumbent);
  return search.run();
}

}  // namespace jssp
