#include "jssp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "jssp/enumerate.hpp"
#include "jssp/error.hpp"
#include "jssp/exact.hpp"
#include "jssp/generate.hpp"
#include "jssp/random.hpp"

namespace jssp {

// ---- combos and config -----------------------------------------------------

std::string Combo::ratio() const {
  const int g = std::gcd(n, m);
  const int a = n / g, b = m / g;
  return b == 1 ? std::to_string(a) : std::to_string(a) + "/" + std::to_string(b);
}

std::vector<Combo> parse_combos(const std::string& text) {
  std::vector<Combo> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    const auto x = item.find_first_of("xX");
    Combo c;
    std::size_t used_n = 0, used_m = 0;
    try {
      if (x == std::string::npos) throw std::invalid_argument("no x");
      c.n = std::stoi(item.substr(0, x), &used_n);
      c.m = std::stoi(item.substr(x + 1), &used_m);
    } catch (const std::exception&) {
      throw ValidationError("bad combo '" + item + "', expected NxM");
    }
    if (used_n != x || used_m != item.size() - x - 1) throw ValidationError("bad combo '" + item + "', expected NxM");
    if (c.n <= 0 || c.m <= 0) throw ValidationError("combo '" + item + "' must have positive sizes");
    out.push_back(c);
  }
  if (out.empty()) throw ValidationError("no combos given");
  return out;
}

void ExperimentConfig::validate() const {
  if (combos.empty()) throw ValidationError("no combos configured");
  if (instances <= 0) throw ValidationError("instances must be positive");
  if (k <= 0) throw ValidationError("k must be positive");
  if (samples <= 0) throw ValidationError("samples must be positive");
  if (threads < 0) throw ValidationError("threads must not be negative");
  if (node_limit && *node_limit <= 0) throw ValidationError("node limit must be positive");
  if (time_limit_seconds && *time_limit_seconds <= 0) throw ValidationError("time limit must be positive");
  if (max_norm_radius && !(*max_norm_radius > 0 && *max_norm_radius <= 1))
    throw ValidationError("max_norm_radius must lie in (0, 1]");
}

namespace {

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ValidationError("config key '" + key + "' expects a boolean, got '" + v + "'");
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream in(v);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof())
    throw ValidationError("config key '" + key + "' expects a number, got '" + v + "'");
  return value;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
  std::vector<std::pair<std::string, std::string>> entries;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("bad config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config JSON must be an object");
    for (const auto& [key, value] : doc.items())
      entries.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
  } else {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ValidationError("config line " + std::to_string(number) + " lacks '='");
      entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
  }

  double rho_min = base.grid.values().front(), rho_max = base.grid.max();
  double rho_step = base.grid.size() > 1 ? base.grid[1] - base.grid[0] : 0.01;
  bool grid_changed = false;
  for (const auto& [key, v] : entries) {
    if (key == "combos") base.combos = parse_combos(v);
    else if (key == "instances") base.instances = parse_number<int>(key, v);
    else if (key == "k") base.k = parse_number<int>(key, v);
    else if (key == "samples") base.samples = parse_number<int>(key, v);
    else if (key == "seed") base.master_seed = parse_number<std::uint64_t>(key, v);
    else if (key == "threads") base.threads = parse_number<int>(key, v);
    else if (key == "node_limit") base.node_limit = parse_number<std::int64_t>(key, v);
    else if (key == "time_limit") base.time_limit_seconds = parse_number<double>(key, v);
    else if (key == "exact_quality") base.exact_quality = parse_bool(key, v);
    else if (key == "max_norm_radius") base.max_norm_radius = parse_number<double>(key, v);
    else if (key == "rho_min") rho_min = parse_number<double>(key, v), grid_changed = true;
    else if (key == "rho_max") rho_max = parse_number<double>(key, v), grid_changed = true;
    else if (key == "rho_step") rho_step = parse_number<double>(key, v), grid_changed = true;
    else throw ValidationError("unknown config key '" + key + "'");
  }
  if (grid_changed) base.grid = RhoGrid::range(rho_min, rho_max, rho_step);
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

std::uint64_t instance_seed(std::uint64_t master_seed, const Combo& combo, int index) {
  const auto key = static_cast<std::uint64_t>(combo.n) * 1'000'003ULL + static_cast<std::uint64_t>(combo.m);
  return derive_seed(derive_seed(master_seed, key), static_cast<std::uint64_t>(index));
}

Instance experiment_instance(std::uint64_t master_seed, const Combo& combo, int index) {
  return random_instance({.n_jobs = combo.n, .n_machines = combo.m, .seed = instance_seed(master_seed, combo, index)});
}

// ---- task fan-out ----------------------------------------------------------

namespace {

// Stream tags keep per-instance random draws of different experiments apart.
constexpr std::uint64_t kSaStream = 0x5a;
constexpr std::uint64_t kDescentStream = 0xde;
constexpr std::uint64_t kQualityStream = 0x91;

int worker_count(int requested, std::size_t tasks) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(tasks, 1)));
}

/// Runs fn(i) for i in [0, count) on `threads` workers. fn must not throw.
template <class F>
void parallel_for(std::size_t count, int threads, F&& fn) {
  const int workers = worker_count(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct Task {
  std::size_t combo = 0;
  int instance = 0;
};

std::vector<Task> all_tasks(const ExperimentConfig& config) {
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < config.combos.size(); ++c)
    for (int i = 0; i < config.instances; ++i) tasks.push_back({c, i});
  return tasks;
}

/// Per-task outcome: a value or the reason it was excluded.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;
};

template <class T, class F>
std::vector<Outcome<T>> run_tasks(const ExperimentConfig& config, const std::vector<Task>& tasks, F&& fn) {
  std::vector<Outcome<T>> out(tasks.size());
  parallel_for(tasks.size(), config.threads, [&](std::size_t t) {
    const Combo& combo = config.combos[tasks[t].combo];
    try {
      out[t].value = fn(combo, tasks[t].instance);
    } catch (const Error& e) {
      out[t].error = e.what();
    }
  });
  return out;
}

template <class T>
std::vector<Exclusion> exclusions(const ExperimentConfig& config, const std::vector<Task>& tasks,
                                  const std::vector<Outcome<T>>& outcomes) {
  std::vector<Exclusion> out;
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (!outcomes[t].value) out.push_back({config.combos[tasks[t].combo].id(), tasks[t].instance, outcomes[t].error});
  return out;
}

BnbConfig limits(const ExperimentConfig& config) {
  BnbConfig b;
  b.node_limit = config.node_limit;
  b.time_limit_seconds = config.time_limit_seconds;
  return b;
}

Time proven_optimum(const Instance& instance, const ExperimentConfig& config) {
  const BnbResult r = solve_optimal(instance, limits(config));
  if (r.status != BnbStatus::optimal) throw PartialResultError("optimum not proven within limits");
  return r.optimum;
}

CurveResult summarize_curves(const ExperimentConfig& config, const std::vector<Task>& tasks,
                             const std::vector<Outcome<std::vector<double>>>& outcomes) {
  CurveResult result;
  result.excluded = exclusions(config, tasks, outcomes);
  result.mean.resize(config.combos.size());
  for (std::size_t c = 0; c < config.combos.size(); ++c) {
    for (std::size_t g = 0; g < config.grid.size(); ++g) {
      std::vector<double> samples;
      for (std::size_t t = 0; t < tasks.size(); ++t)
        if (tasks[t].combo == c && outcomes[t].value) samples.push_back((*outcomes[t].value)[g]);
      if (samples.empty()) {
        result.mean[c].push_back(std::nan(""));
        continue;
      }
      result.rows.push_back({config.combos[c], summarize(config.grid[g], samples)});
      result.mean[c].push_back(result.rows.back().stat.mean);
    }
  }
  return result;
}

}  // namespace

// ---- experiments -----------------------------------------------------------

CurveResult run_backbone_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto tasks = all_tasks(config);
  BackboneOptions options;
  options.node_limit = config.node_limit;
  options.time_limit_seconds = config.time_limit_seconds;
  const auto outcomes = run_tasks<std::vector<double>>(config, tasks, [&](const Combo& combo, int i) {
    return rho_backbone(experiment_instance(config.master_seed, combo, i), config.grid, options).fraction;
  });
  return summarize_curves(config, tasks, outcomes);
}

CurveResult run_distance_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.k < 2) throw ValidationError("distance experiment needs k >= 2");
  const auto tasks = all_tasks(config);
  const auto outcomes = run_tasks<std::vector<double>>(config, tasks, [&](const Combo& combo, int i) {
    const Instance inst = experiment_instance(config.master_seed, combo, i);
    SaConfig sa = config.sa;
    sa.seed = derive_seed(instance_seed(config.master_seed, combo, i), kSaStream);
    const auto d = sample_rho_distances(inst, proven_optimum(inst, config), config.k, config.grid, sa);
    const double edges = static_cast<double>(std::max<std::int64_t>(1, inst.edge_count()));
    std::vector<double> per_rho;
    for (const auto& row : d) {
      double total = 0;
      for (auto x : row) total += static_cast<double>(x);
      per_rho.push_back(total / static_cast<double>(row.size()) / edges);
    }
    return per_rho;
  });
  return summarize_curves(config, tasks, outcomes);
}

double ExactnessResult::at(const Combo& combo, double norm_radius) const {
  const ExactnessRow* best = nullptr;
  for (const auto& row : rows)
    if (row.combo == combo && row.norm_radius <= norm_radius + 1e-12) best = &row;
  if (!best) throw ValidationError("no exactness row for " + combo.id() + " at or below that radius");
  return best->exactness;
}

ExactnessResult run_exactness_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto tasks = all_tasks(config);
  using Records = std::vector<ExactnessRecord>;
  const auto outcomes = run_tasks<Records>(config, tasks, [&](const Combo& combo, int i) {
    const Instance inst = experiment_instance(config.master_seed, combo, i);
    const Time optimum = proven_optimum(inst, config);
    ExactnessOptions options;
    options.descent.node_limit = config.node_limit;
    options.descent.time_limit_seconds = config.time_limit_seconds;
    if (config.max_norm_radius) {
      options.max_radius = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(std::floor(*config.max_norm_radius * inst.edge_count() + 1e-9)));
    }
    Records records;
    const std::uint64_t base = derive_seed(instance_seed(config.master_seed, combo, i), kDescentStream);
    for (int j = 0; j < config.k; ++j)
      records.push_back(exactness_run(inst, optimum, derive_seed(base, static_cast<std::uint64_t>(j)), options));
    return records;
  });

  ExactnessResult result;
  result.excluded = exclusions(config, tasks, outcomes);
  for (std::size_t c = 0; c < config.combos.size(); ++c) {
    const Combo& combo = config.combos[c];
    const std::int64_t edges = combo.m * static_cast<std::int64_t>(combo.n) * (combo.n - 1) / 2;
    std::int64_t last = edges;
    if (config.max_norm_radius)
      last = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(*config.max_norm_radius * edges + 1e-9)));
    std::vector<std::int64_t> hits(last + 1, 0), counts(last + 1, 0);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (tasks[t].combo != c || !outcomes[t].value) continue;
      for (const auto& rec : *outcomes[t].value) {
        for (const auto& [r, opt] : rec.pairs) {
          if (r < 1 || r > last) continue;
          ++counts[r];
          hits[r] += opt;
        }
      }
    }
    for (std::int64_t r = 1; r <= last; ++r) {
      if (counts[r] == 0) continue;
      result.rows.push_back({combo, r, static_cast<double>(r) / static_cast<double>(edges),
                             static_cast<double>(hits[r]) / static_cast<double>(counts[r]), counts[r]});
    }
  }
  return result;
}

std::optional<double> QualityResult::slope(const std::string& ratio, const std::string& quantity) const {
  for (const auto& s : slopes)
    if (s.ratio == ratio && s.quantity == quantity) return s.fit.slope;
  return std::nullopt;
}

QualityResult run_quality_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto tasks = all_tasks(config);
  const auto outcomes = run_tasks<QualityInstance>(config, tasks, [&](const Combo& combo, int i) {
    const Instance inst = experiment_instance(config.master_seed, combo, i);
    const std::uint64_t base = derive_seed(instance_seed(config.master_seed, combo, i), kQualityStream);
    QualityInstance q;
    for (int s = 0; s < config.samples; ++s) {
      const Schedule start = build_schedule(inst, random_sequence(inst, derive_seed(base, static_cast<std::uint64_t>(s))));
      q.a += static_cast<double>(start.makespan());
      q.b += static_cast<double>(next_descent_n1(inst, start).makespan());
    }
    q.a /= config.samples;
    q.b /= config.samples;
    q.d = static_cast<double>(lower_bound(inst));
    if (config.exact_quality) {
      const BnbResult r = solve_optimal(inst, limits(config));
      if (r.status == BnbStatus::optimal) q.c = static_cast<double>(r.optimum);
    }
    return q;
  });

  QualityResult result;
  result.excluded = exclusions(config, tasks, outcomes);
  result.instances.resize(config.combos.size());
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (outcomes[t].value) result.instances[tasks[t].combo].push_back(*outcomes[t].value);

  for (std::size_t c = 0; c < config.combos.size(); ++c) {
    const auto& items = result.instances[c];
    if (items.empty()) continue;
    std::vector<double> a, b, cc, d;
    for (const auto& q : items) {
      a.push_back(q.a);
      b.push_back(q.b);
      d.push_back(q.d);
      if (q.c) cc.push_back(*q.c);
    }
    QualityRow row;
    row.combo = config.combos[c];
    row.a = summarize(0, a);
    row.b = summarize(0, b);
    row.d = summarize(0, d);
    if (!cc.empty()) row.c = summarize(0, cc);
    result.rows.push_back(row);
  }

  // One fit per ratio, over the combos sharing it, in first-seen order.
  std::vector<std::string> ratios;
  for (const auto& row : result.rows)
    if (std::find(ratios.begin(), ratios.end(), row.combo.ratio()) == ratios.end()) ratios.push_back(row.combo.ratio());
  for (const auto& ratio : ratios) {
    for (const char* quantity : {"A", "B", "C"}) {
      std::vector<std::pair<double, double>> points;
      bool complete = true;
      for (const auto& row : result.rows) {
        if (row.combo.ratio() != ratio) continue;
        const StatRow* y = quantity[0] == 'A' ? &row.a : quantity[0] == 'B' ? &row.b : row.c ? &*row.c : nullptr;
        if (!y) {
          complete = false;
          break;
        }
        points.emplace_back(row.d.mean, y->mean);
      }
      if (!complete || points.size() < 2) continue;
      try {
        result.slopes.push_back({ratio, quantity, least_squares(points)});
      } catch (const ValidationError&) {
        // All combos share one lower bound mean; nothing to fit.
      }
    }
  }
  return result;
}

DifficultyResult run_difficulty_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto tasks = all_tasks(config);
  const auto outcomes = run_tasks<std::int64_t>(config, tasks, [&](const Combo& combo, int i) {
    const BnbResult r = solve_optimal(experiment_instance(config.master_seed, combo, i), limits(config));
    if (r.status != BnbStatus::optimal) throw PartialResultError("optimum not proven within limits");
    return r.nodes_expanded;
  });
  DifficultyResult result;
  result.excluded = exclusions(config, tasks, outcomes);
  for (std::size_t c = 0; c < config.combos.size(); ++c) {
    std::vector<double> nodes;
    for (std::size_t t = 0; t < tasks.size(); ++t)
      if (tasks[t].combo == c && outcomes[t].value) nodes.push_back(static_cast<double>(*outcomes[t].value));
    if (nodes.empty()) continue;
    const Combo& combo = config.combos[c];
    result.rows.push_back({combo, log10_search_space_size(combo.n, combo.m),
                           static_cast<std::int64_t>(quantile(nodes, 0.9)), static_cast<std::int64_t>(nodes.size())});
  }
  return result;
}

// ---- limit theorems --------------------------------------------------------

namespace {

/// Mean over instances of fn(instance) for one combo.
template <class F>
double mean_over(const ExperimentConfig& config, const Combo& combo, F&& fn) {
  std::vector<double> values(config.instances);
  parallel_for(values.size(), config.threads, [&](std::size_t i) {
    values[i] = fn(experiment_instance(config.master_seed, combo, static_cast<int>(i)), static_cast<int>(i));
  });
  return mean(values);
}

bool non_decreasing(const std::vector<LimitPoint>& points) {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].value < points[i - 1].value) return false;
  return true;
}

}  // namespace

LimitReport run_limit_theorem_tests(const ExperimentConfig& config) {
  if (config.instances <= 0 || config.samples <= 0) throw ValidationError("counts must be positive");
  LimitReport report;

  for (int m : {5, 10, 20, 40}) {
    const double f = mean_over(config, {2, m}, [](const Instance& inst, int) {
      const Time longest = std::max(inst.job_length(0), inst.job_length(1));
      return schedule_by_rule(inst, Pi0Rule{}).makespan() == longest ? 1.0 : 0.0;
    });
    report.job_length_certified.push_back({2, m, f});
  }
  for (int n : {10, 20, 40, 60}) {
    const double f = mean_over(config, {n, 2}, [](const Instance& inst, int) {
      return schedule_by_rule(inst, PiInfRule{}).makespan() == lower_bound(inst) ? 1.0 : 0.0;
    });
    report.workload_certified.push_back({n, 2, f});
  }

  // Optimum when the solver proves it, else the lower bound; the ratio then
  // overstates the gap, never understates it.
  const auto random_ratio = [&](const Instance& inst, int i) {
    const BnbResult r = solve_optimal(inst, limits(config));
    const Time denom = r.status == BnbStatus::optimal ? r.optimum : lower_bound(inst);
    const std::uint64_t base = derive_seed(instance_seed(config.master_seed, {inst.n_jobs(), inst.n_machines()}, i),
                                           kQualityStream);
    double total = 0;
    for (int s = 0; s < config.samples; ++s)
      total += static_cast<double>(
          schedule_by_rule(inst, RandomRule{derive_seed(base, static_cast<std::uint64_t>(s))}).makespan());
    return total / config.samples / static_cast<double>(denom);
  };
  for (int m : {2, 5, 10, 20, 40}) report.random_ratio_by_m.push_back({2, m, mean_over(config, {2, m}, random_ratio)});
  for (int n : {2, 10, 20, 40, 60}) report.random_ratio_by_n.push_back({n, 2, mean_over(config, {n, 2}, random_ratio)});

  for (int m : {10, 20, 40, 80}) {
    const double d = mean_over(config, {2, m}, [](const Instance& inst, int) {
      const Schedule s = schedule_by_rule(inst, PermutedRule{{0, 1}});
      return (static_cast<double>(job_delay(inst, s, 0)) + static_cast<double>(job_delay(inst, s, 1))) / 2.0;
    });
    report.job_delay.push_back({2, m, d});
  }

  report.job_length_ok = non_decreasing(report.job_length_certified);
  report.workload_ok =
      non_decreasing(report.workload_certified) && report.workload_certified.back().value >= report.workload_threshold;
  report.ratio_ok = report.random_ratio_by_m.back().value < report.random_ratio_by_m.front().value &&
                    report.random_ratio_by_n.back().value < report.random_ratio_by_n.front().value;
  // 4 * tau_max * (N - 1) with tau_max = 100 and N = 2.
  const double bound = 4.0 * 100.0;
  report.delay_ok = report.job_delay.back().value <= 1.5 * report.job_delay.front().value;
  for (const auto& p : report.job_delay) report.delay_ok = report.delay_ok && p.value <= bound;
  return report;
}

// ---- oracle sweeps ---------------------------------------------------------

OracleReport run_oracle_check(const OracleConfig& config) {
  if (config.optimal_instances < 0 || config.backbone_instances < 0)
    throw ValidationError("instance counts must not be negative");
  const Combo sizes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  OracleReport report;

  std::vector<std::string> optimal(config.optimal_instances);
  parallel_for(optimal.size(), config.threads, [&](std::size_t i) {
    const Combo& combo = sizes[i % 4];
    const Instance inst = experiment_instance(config.master_seed, combo, static_cast<int>(i));
    const Time expect = brute_force_optimum(inst);
    const BnbResult got = solve_optimal(inst);
    if (got.status != BnbStatus::optimal || got.optimum != expect ||
        makespan_longest_path(inst, *got.witness) != expect) {
      optimal[i] = "optimum " + combo.id() + " #" + std::to_string(i) + ": solver " + std::to_string(got.optimum) +
                   ", enumeration " + std::to_string(expect);
    }
  });
  std::vector<std::string> backbone(config.backbone_instances);
  parallel_for(backbone.size(), config.threads, [&](std::size_t i) {
    const Combo combo{3, 3};
    const Instance inst = experiment_instance(config.master_seed, combo, static_cast<int>(i));
    const auto expect = brute_force_backbone(inst, config.grid);
    const auto got = rho_backbone(inst, config.grid);
    for (std::size_t g = 0; g < config.grid.size(); ++g) {
      for (int e = 0; e < static_cast<int>(inst.edge_count()); ++e) {
        if (got.in_backbone(e, g) != expect[g][e]) {
          backbone[i] = "backbone 3x3 #" + std::to_string(i) + ": edge " + std::to_string(e) + " at rho " +
                        std::to_string(config.grid[g]);
          return;
        }
      }
    }
  });

  report.optimal_checked = config.optimal_instances;
  report.backbone_checked = config.backbone_instances;
  for (const auto& m : optimal) {
    if (m.empty()) ++report.optimal_matched;
    else report.mismatches.push_back(m);
  }
  for (const auto& m : backbone) {
    if (m.empty()) ++report.backbone_matched;
    else report.mismatches.push_back(m);
  }
  return report;
}

// ---- CSV -------------------------------------------------------------------

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string curve_csv(const CurveResult& result, const char* value_name) {
  std::string out = std::string("combo,n,m,rho,") + value_name + ",q25,q75,count\n";
  for (const auto& [combo, s] : result.rows) {
    out += combo.id() + "," + std::to_string(combo.n) + "," + std::to_string(combo.m) + "," + num(s.key) + "," +
           num(s.mean) + "," + num(s.q25) + "," + num(s.q75) + "," + std::to_string(s.count) + "\n";
  }
  return out;
}

}  // namespace

std::string backbone_csv(const CurveResult& result) { return curve_csv(result, "mean_fraction"); }
std::string distance_csv(const CurveResult& result) { return curve_csv(result, "mean_norm_distance"); }

std::string exactness_csv(const ExactnessResult& result) {
  std::string out = "combo,n,m,norm_radius,exactness,count\n";
  for (const auto& r : result.rows) {
    out += r.combo.id() + "," + std::to_string(r.combo.n) + "," + std::to_string(r.combo.m) + "," +
           num(r.norm_radius) + "," + num(r.exactness) + "," + std::to_string(r.count) + "\n";
  }
  return out;
}

std::string quality_csv(const QualityResult& result) {
  std::string out =
      "combo,n,m,ratio,mean_A,mean_B,mean_C,mean_D,q25_A,q75_A,q25_B,q75_B,q25_C,q75_C,q25_D,q75_D,count\n";
  for (const auto& r : result.rows) {
    const std::string c_mean = r.c ? num(r.c->mean) : "";
    const std::string c_q25 = r.c ? num(r.c->q25) : "";
    const std::string c_q75 = r.c ? num(r.c->q75) : "";
    out += r.combo.id() + "," + std::to_string(r.combo.n) + "," + std::to_string(r.combo.m) + "," + r.combo.ratio() +
           "," + num(r.a.mean) + "," + num(r.b.mean) + "," + c_mean + "," + num(r.d.mean) + "," + num(r.a.q25) + "," +
           num(r.a.q75) + "," + num(r.b.q25) + "," + num(r.b.q75) + "," + c_q25 + "," + c_q75 + "," + num(r.d.q25) +
           "," + num(r.d.q75) + "," + std::to_string(r.a.count) + "\n";
  }
  return out;
}

std::string slopes_csv(const QualityResult& result) {
  std::string out = "ratio,quantity,slope,intercept,r_squared\n";
  for (const auto& s : result.slopes)
    out += s.ratio + "," + s.quantity + "," + num(s.fit.slope) + "," + num(s.fit.intercept) + "," +
           num(s.fit.r_squared) + "\n";
  return out;
}

std::string difficulty_csv(const DifficultyResult& result) {
  std::string out = "combo,n,m,log10_size,p90_nodes,count\n";
  for (const auto& r : result.rows) {
    out += r.combo.id() + "," + std::to_string(r.combo.n) + "," + std::to_string(r.combo.m) + "," +
           num(r.log10_size) + "," + std::to_string(r.p90_nodes) + "," + std::to_string(r.count) + "\n";
  }
  return out;
}

std::string limits_csv(const LimitReport& report) {
  std::string out = "series,n,m,value\n";
  const auto emit = [&](const char* name, const std::vector<LimitPoint>& points) {
    for (const auto& p : points)
      out += std::string(name) + "," + std::to_string(p.n) + "," + std::to_string(p.m) + "," + num(p.value) + "\n";
  };
  emit("job_length_certified", report.job_length_certified);
  emit("workload_certified", report.workload_certified);
  emit("random_ratio_by_m", report.random_ratio_by_m);
  emit("random_ratio_by_n", report.random_ratio_by_n);
  emit("job_delay", report.job_delay);
  return out;
}

}  // namespace jssp
