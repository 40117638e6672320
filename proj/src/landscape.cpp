#include "jssp/landscape.hpp"

#include <algorithm>
#include <cmath>

#include "jssp/enumerate.hpp"
#include "jssp/error.hpp"
#include "jssp/generate.hpp"
#include "jssp/random.hpp"

namespace jssp {

// ---- RhoGrid ---------------------------------------------------------------

RhoGrid::RhoGrid() : RhoGrid(range(1.0, 1.5, 0.01)) {}

RhoGrid::RhoGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("rho grid is empty");
  if (!(values_.front() >= 1.0)) throw ValidationError("rho values must be at least 1");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (!(values_[i] > values_[i - 1])) throw ValidationError("rho grid must be strictly increasing");
}

RhoGrid RhoGrid::range(double lo, double hi, double step) {
  if (!(step > 0)) throw ValidationError("rho step must be positive");
  if (!(hi >= lo)) throw ValidationError("rho range is empty");
  std::vector<double> values;
  const auto count = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
  if (count > 100000) throw ValidationError("rho grid too fine");
  for (std::int64_t i = 0; i <= count; ++i) {
    // Rounded so 1 + 3 * 0.01 prints and compares as 1.03.
    values.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
  }
  return RhoGrid(std::move(values));
}

Time rho_threshold(double rho, Time optimum) {
  return static_cast<Time>(std::floor(rho * static_cast<double>(optimum) + 1e-9));
}

// ---- rho-backbone ----------------------------------------------------------

bool BackboneResult::in_backbone(int e, std::size_t i) const {
  const Time worse = std::max(lower_first[e].value, higher_first[e].value);
  return worse > rho_threshold(rho[i], optimum);
}

namespace {

// Best complete schedule seen so far containing each edge orientation.
class OrientationTable {
 public:
  explicit OrientationTable(int edges) : best_(2 * edges, kInfiniteMakespan), orient_(2 * edges) {}

  void offer(std::span<const std::int8_t> o, Time makespan) {
    for (std::size_t e = 0; e < o.size(); ++e) {
      const std::size_t slot = 2 * e + (o[e] > 0 ? 0 : 1);
      if (makespan < best_[slot]) {
        best_[slot] = makespan;
        orient_[slot].assign(o.begin(), o.end());
      }
    }
  }

  /// Orientation of the best known schedule with edge e oriented `dir`.
  const std::vector<std::int8_t>* get(int e, std::int8_t dir) const {
    const std::size_t slot = 2 * e + (dir > 0 ? 0 : 1);
    return orient_[slot].empty() ? nullptr : &orient_[slot];
  }

 private:
  std::vector<Time> best_;
  std::vector<std::vector<std::int8_t>> orient_;
};

std::string edge_name(const DisjunctiveArc& arc) {
  return "machine " + std::to_string(arc.machine) + " jobs " + std::to_string(arc.first) + "->" +
         std::to_string(arc.second);
}

}  // namespace

BackboneResult rho_backbone(const Instance& instance, const RhoGrid& grid, const BackboneOptions& options) {
  const EdgeIndex edges(instance.n_jobs(), instance.n_machines());
  OrientationTable table(edges.size());

  BnbConfig base;
  base.node_limit = options.node_limit;
  base.time_limit_seconds = options.time_limit_seconds;
  base.on_schedule = [&](std::span<const std::int8_t> o, Time makespan) { table.offer(o, makespan); };

  BackboneResult out;
  out.rho = grid.values();
  const BnbResult root = solve_optimal(instance, base);
  out.solves = 1;
  out.nodes = root.nodes_expanded;
  if (root.status != BnbStatus::optimal) throw PartialResultError("unconstrained solve did not finish");
  out.optimum = root.optimum;
  const auto witness = root.witness->orientation(edges);

  const Time cutoff = rho_threshold(grid.max(), out.optimum);
  out.lower_first.resize(edges.size());
  out.higher_first.resize(edges.size());
  for (int e = 0; e < edges.size(); ++e) {
    const std::int8_t other = static_cast<std::int8_t>(-witness[e]);
    const DisjunctiveArc ends = edges.endpoints(e);
    const DisjunctiveArc arc = other > 0 ? ends : ends.reversed();

    BnbConfig config = base;
    if (!options.exact_values) config.cutoff = cutoff;
    if (const auto* known = table.get(e, other)) config.incumbent = MachineOrders::from_orientation(edges, *known);
    const BnbResult r = solve_fixed_arc(instance, {arc}, config);
    ++out.solves;
    out.nodes += r.nodes_expanded;

    ConstrainedOptimum value;
    switch (r.status) {
      case BnbStatus::optimal:
        value = {r.optimum, true};
        break;
      case BnbStatus::infeasible:
        value = {kInfiniteMakespan, true};
        break;
      case BnbStatus::above_cutoff:
        value = {cutoff + 1, false};
        break;
      case BnbStatus::aborted:
        throw PartialResultError("constrained solve did not finish for edge " + std::to_string(e) + " (" +
                                 edge_name(arc) + ")");
    }
    const ConstrainedOptimum same{out.optimum, true};
    out.lower_first[e] = witness[e] > 0 ? same : value;
    out.higher_first[e] = witness[e] > 0 ? value : same;
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::int64_t count = 0;
    for (int e = 0; e < edges.size(); ++e) count += out.in_backbone(e, i);
    out.count.push_back(count);
    out.fraction.push_back(edges.size() ? static_cast<double>(count) / edges.size() : 0.0);
  }
  return out;
}

std::vector<std::vector<bool>> brute_force_backbone(const Instance& instance, const RhoGrid& grid) {
  const EdgeIndex edges(instance.n_jobs(), instance.n_machines());
  const auto all = enumerate_all(instance);
  Time best = kInfiniteMakespan;
  for (const auto& s : all) best = std::min(best, s.makespan);

  std::vector<std::vector<bool>> out;
  for (double rho : grid.values()) {
    const Time limit = rho_threshold(rho, best);
    std::vector<std::int8_t> common(edges.size(), 0);  // 0 unseen, +-1 shared, 2 mixed
    for (const auto& s : all) {
      if (s.makespan > limit) continue;
      const auto o = s.orders.orientation(edges);
      for (int e = 0; e < edges.size(); ++e) {
        if (common[e] == 0) common[e] = o[e];
        else if (common[e] != o[e]) common[e] = 2;
      }
    }
    std::vector<bool> row(edges.size());
    for (int e = 0; e < edges.size(); ++e) row[e] = common[e] != 2;
    out.push_back(std::move(row));
  }
  return out;
}

// ---- simulated annealing ---------------------------------------------------

namespace {

Schedule random_schedule(const Instance& instance, SplitMix64& rng) {
  return build_schedule(instance, random_sequence(instance, rng()));
}

class Annealer {
 public:
  Annealer(const Instance& instance, Time target, const RhoGrid& grid, const SaConfig& config)
      : inst_(instance), config_(config), rng_(config.seed) {
    for (double rho : grid.values()) threshold_.push_back(rho_threshold(rho, target));
    run_.first_hit.resize(grid.size());
    run_.first_hit_makespan.assign(grid.size(), 0);
    run_.first_hit_move.assign(grid.size(), -1);
    plateau_ = config.plateau_length ? *config.plateau_length : 16 * std::max<std::int64_t>(1, instance.edge_count());
  }

  SaRun run() {
    while (true) {
      start_fresh();
      if (done()) break;
      anneal();
      if (done()) break;
      if (++run_.restarts >= config_.max_moves) throw TimeoutError("simulated annealing restart budget exhausted");
    }
    run_.moves = moves_;
    return std::move(run_);
  }

 private:
  bool done() const { return run_.first_hit_move.front() >= 0; }

  void visit() {
    const Time makespan = current_.makespan();
    for (std::size_t i = 0; i < threshold_.size(); ++i) {
      if (run_.first_hit_move[i] >= 0 || makespan > threshold_[i]) continue;
      run_.first_hit[i] = current_.machine_orders();
      run_.first_hit_makespan[i] = makespan;
      run_.first_hit_move[i] = moves_;
    }
  }

  void start_fresh() {
    current_ = random_schedule(inst_, rng_);
    visit();
  }

  /// Proposes a critical-arc reversal. False when the schedule has none.
  bool propose(Schedule& out) {
    const auto arcs = critical_arcs(inst_, current_);
    if (arcs.empty()) return false;
    const auto& arc = arcs[rng_.below(arcs.size())];
    out = schedule_from_orders(inst_, reverse_arc(current_.machine_orders(), arc));
    return true;
  }

  // Temperature at which roughly `initial_acceptance` of proposals from a
  // short random walk would be accepted.
  double calibrate() {
    const Schedule saved = current_;
    std::int64_t downhill = 0;
    std::vector<double> uphill;
    Schedule next;
    for (int i = 0; i < 200 && propose(next); ++i) {
      const Time delta = next.makespan() - current_.makespan();
      if (delta > 0) uphill.push_back(static_cast<double>(delta));
      else ++downhill;
      current_ = std::move(next);
    }
    current_ = saved;
    if (uphill.empty()) return 1.0;
    double mean_up = 0;
    for (double d : uphill) mean_up += d;
    mean_up /= static_cast<double>(uphill.size());
    const double chi = config_.initial_acceptance;
    const double m2 = static_cast<double>(uphill.size());
    const double m1 = static_cast<double>(downhill);
    const double denom = m2 * chi - m1 * (1 - chi);
    if (denom <= 0) return mean_up / std::log(1.0 / chi);
    return mean_up / std::log(m2 / denom);
  }

  void anneal() {
    double temperature = calibrate();
    Time run_best = current_.makespan();
    int stale = 0;
    Schedule next;
    while (stale < config_.frozen_threshold) {
      bool improved = false;
      for (std::int64_t i = 0; i < plateau_; ++i) {
        if (moves_ >= config_.max_moves) throw TimeoutError("simulated annealing move budget exhausted");
        if (!propose(next)) return;
        ++moves_;
        const Time delta = next.makespan() - current_.makespan();
        if (delta > 0 && rng_.uniform01() >= std::exp(-static_cast<double>(delta) / temperature)) continue;
        current_ = std::move(next);
        visit();
        if (done()) return;
        if (current_.makespan() < run_best) {
          run_best = current_.makespan();
          improved = true;
        }
      }
      stale = improved ? 0 : stale + 1;
      temperature *= config_.cooling_factor;
    }
  }

  const Instance& inst_;
  SaConfig config_;
  SplitMix64 rng_;
  std::vector<Time> threshold_;
  std::int64_t plateau_ = 0;
  std::int64_t moves_ = 0;
  Schedule current_;
  SaRun run_;
};

void validate_sa(const SaConfig& config) {
  if (!(config.initial_acceptance > 0 && config.initial_acceptance < 1))
    throw ValidationError("initial acceptance must lie in (0, 1)");
  if (!(config.cooling_factor > 0 && config.cooling_factor < 1))
    throw ValidationError("cooling factor must lie in (0, 1)");
  if (config.plateau_length && *config.plateau_length <= 0) throw ValidationError("plateau length must be positive");
  if (config.frozen_threshold <= 0) throw ValidationError("frozen threshold must be positive");
  if (config.max_moves <= 0) throw ValidationError("move budget must be positive");
}

}  // namespace

SaRun sa_run(const Instance& instance, Time target, const RhoGrid& grid, const SaConfig& config) {
  validate_sa(config);
  if (target < lower_bound(instance)) throw ValidationError("target is below the instance lower bound");
  return Annealer(instance, target, grid, config).run();
}

std::vector<std::vector<std::int64_t>> sample_rho_distances(const Instance& instance, Time target, int k,
                                                           const RhoGrid& grid, const SaConfig& config) {
  if (k < 2) throw ValidationError("distance sampling needs at least two runs");
  std::vector<SaRun> runs;
  for (int i = 0; i < k; ++i) {
    SaConfig c = config;
    c.seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    runs.push_back(sa_run(instance, target, grid, c));
  }
  std::vector<std::vector<std::int64_t>> out(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g)
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) out[g].push_back(distance(runs[a].first_hit[g], runs[b].first_hit[g]));
  return out;
}

std::vector<std::vector<std::int64_t>> sample_rho_distances(const Instance& instance, int k, const RhoGrid& grid,
                                                           const SaConfig& config) {
  const BnbResult opt = solve_optimal(instance);
  if (opt.status != BnbStatus::optimal) throw PartialResultError("optimum not proven");
  return sample_rho_distances(instance, opt.optimum, k, grid, config);
}

// ---- descents --------------------------------------------------------------

Schedule ball_descent(const Instance& instance, const Schedule& start, std::int64_t r, const DescentOptions& options) {
  if (r < 1) throw ValidationError("descent radius must be at least 1");
  const Time floor = lower_bound(instance);
  Schedule current = start;
  while (current.makespan() > floor) {
    BnbConfig config;
    config.node_limit = options.node_limit;
    config.time_limit_seconds = options.time_limit_seconds;
    config.cutoff = current.makespan() - 1;
    const BnbResult best = solve_radius_limited(instance, current.machine_orders(), r, config);
    if (best.status == BnbStatus::aborted) throw PartialResultError("radius-limited solve did not finish");
    if (best.status != BnbStatus::optimal) break;
    current = schedule_from_orders(instance, *best.witness);
  }
  return current;
}

Schedule next_descent_n1(const Instance& instance, const Schedule& start) {
  Schedule current = start;
  const int n = instance.n_jobs();
  const int m = instance.n_machines();
  bool improved = true;
  while (improved) {
    improved = false;
    const MachineOrders& orders = current.machine_orders();
    for (int mach = 0; mach < m && !improved; ++mach) {
      for (int a = 0; a < n && !improved; ++a) {
        for (int b = a + 1; b < n && !improved; ++b) {
          const int pa = orders.position(mach, a);
          const int pb = orders.position(mach, b);
          if (std::abs(pa - pb) != 1) continue;  // any other flip breaks the machine order
          const MachineOrders flipped = orders.with_adjacent_swap(mach, std::min(pa, pb));
          if (!is_acyclic(instance, flipped)) continue;
          if (makespan_longest_path(instance, flipped) < current.makespan()) {
            current = schedule_from_orders(instance, flipped);
            improved = true;
          }
        }
      }
    }
  }
  return current;
}

ExactnessRecord exactness_run(const Instance& instance, Time optimum, std::uint64_t seed,
                              const ExactnessOptions& options) {
  const std::int64_t edges = instance.edge_count();
  ExactnessRecord record;
  if (edges == 0) {
    record.pairs.emplace_back(0, true);
    return record;
  }
  const std::int64_t last = options.max_radius ? std::min(*options.max_radius, edges) : edges;
  Schedule s = build_schedule(instance, random_sequence(instance, seed));
  bool opt = false;
  std::int64_t r = 1;
  for (; r <= last && !opt; ++r) {
    s = ball_descent(instance, s, r, options.descent);
    if (s.makespan() < optimum) throw ValidationError("schedule beats the stated optimum");
    opt = s.makespan() == optimum;
    record.pairs.emplace_back(r, opt);
  }
  if (opt)
    for (; r <= edges; ++r) record.pairs.emplace_back(r, true);
  return record;
}

}  // namespace jssp
