// Command-line front end: instance generation, solving and the experiment
// drivers. All computation lives in the library.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jssp/error.hpp"
#include "jssp/exact.hpp"
#include "jssp/experiments.hpp"
#include "jssp/generate.hpp"
#include "jssp/instance.hpp"
#include "jssp/landscape.hpp"
#include "jssp/random.hpp"
#include "jssp/stats.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Shared {
  std::optional<std::uint64_t> seed;
  std::string out;
  bool json = false;
  std::optional<std::int64_t> limit_nodes;
  std::optional<double> limit_seconds;
  std::optional<int> threads;
};

struct Sizes {
  std::optional<int> n, m, instances, k, samples;
  std::optional<double> rho_min, rho_max, rho_step, max_norm_radius;
  std::string combos;
  std::string config;
  bool exact_quality = false;
  std::vector<std::string> files;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--seed", s.seed, "Master seed (falls back to JSSP_SEED, then 1)");
  cmd->add_option("--out", s.out, "Output directory (stdout when omitted)");
  cmd->add_flag("--json", s.json, "Machine-readable output on stdout");
  cmd->add_option("--limit-nodes", s.limit_nodes, "Branch and bound node limit per solve")->check(CLI::PositiveNumber);
  cmd->add_option("--limit-seconds", s.limit_seconds, "Time limit per solve")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", s.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

void add_experiment(CLI::App* cmd, Sizes& z, bool with_files) {
  cmd->add_option("--combos", z.combos, "Instance sizes, e.g. 6x6,9x3");
  cmd->add_option("--instances", z.instances, "Instances per combo")->check(CLI::PositiveNumber);
  cmd->add_option("--config", z.config, "key=value or JSON config file")->check(CLI::ExistingFile);
  if (with_files) cmd->add_option("files", z.files, "Instance files; run on these instead of random combos");
}

void add_grid(CLI::App* cmd, Sizes& z) {
  cmd->add_option("--rho-min", z.rho_min, "Smallest rho")->check(CLI::Range(1.0, 1e6));
  cmd->add_option("--rho-max", z.rho_max, "Largest rho")->check(CLI::Range(1.0, 1e6));
  cmd->add_option("--rho-step", z.rho_step, "rho increment")->check(CLI::PositiveNumber);
}

std::uint64_t master_seed(const Shared& s) {
  if (s.seed) return *s.seed;
  if (const char* env = std::getenv("JSSP_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw jssp::ValidationError(std::string("JSSP_SEED is not an unsigned integer: '") + env + "'");
  }
  return 1;
}

jssp::ExperimentConfig experiment_config(const Shared& s, const Sizes& z, jssp::ExperimentConfig defaults) {
  jssp::ExperimentConfig c = z.config.empty() ? std::move(defaults) : jssp::load_config(z.config, std::move(defaults));
  if (s.seed || std::getenv("JSSP_SEED")) c.master_seed = master_seed(s);
  if (!z.combos.empty()) c.combos = jssp::parse_combos(z.combos);
  if (z.instances) c.instances = *z.instances;
  if (z.k) c.k = *z.k;
  if (z.samples) c.samples = *z.samples;
  if (z.max_norm_radius) c.max_norm_radius = *z.max_norm_radius;
  if (z.exact_quality) c.exact_quality = true;
  if (s.limit_nodes) c.node_limit = *s.limit_nodes;
  if (s.limit_seconds) c.time_limit_seconds = *s.limit_seconds;
  if (s.threads) c.threads = *s.threads;
  if (z.rho_min || z.rho_max || z.rho_step) {
    const auto& g = c.grid;
    c.grid = jssp::RhoGrid::range(z.rho_min.value_or(g.values().front()), z.rho_max.value_or(g.max()),
                                  z.rho_step.value_or(g.size() > 1 ? g[1] - g[0] : 0.01));
  }
  c.validate();
  return c;
}

jssp::BnbConfig solver_limits(const Shared& s) {
  jssp::BnbConfig b;
  b.node_limit = s.limit_nodes;
  b.time_limit_seconds = s.limit_seconds;
  return b;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw jssp::ValidationError("cannot write '" + path.string() + "'");
  out << text;
}

/// CSV text as a JSON array of objects; numeric cells become numbers.
json csv_to_json(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> header;
  json rows = json::array();
  const auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!l.empty() && l.back() == ',') cells.emplace_back();
    return cells;
  };
  while (std::getline(in, line)) {
    if (header.empty()) {
      header = split(line);
      continue;
    }
    const auto cells = split(line);
    json row = json::object();
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      const std::string& v = cells[i];
      char* end = nullptr;
      const double x = std::strtod(v.c_str(), &end);
      if (v.empty()) row[header[i]] = nullptr;
      else if (end && *end == '\0' && v.find('/') == std::string::npos && header[i] != "combo" && header[i] != "ratio")
        row[header[i]] = x;
      else row[header[i]] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json exclusions_json(const std::vector<jssp::Exclusion>& excluded) {
  json out = json::array();
  for (const auto& e : excluded) out.push_back({{"combo", e.combo}, {"instance", e.instance}, {"reason", e.reason}});
  return out;
}

void report_exclusions(const std::vector<jssp::Exclusion>& excluded) {
  for (const auto& e : excluded)
    std::cerr << "excluded " << e.combo << " instance " << e.instance << ": " << e.reason << "\n";
}

/// Writes named CSV tables to --out, or prints them (as CSV or JSON).
void emit(const Shared& s, const std::vector<std::pair<std::string, std::string>>& tables,
          const std::vector<jssp::Exclusion>& excluded, json extra = json::object()) {
  report_exclusions(excluded);
  if (!s.out.empty()) {
    fs::create_directories(s.out);
    for (const auto& [name, csv] : tables) write_file(fs::path(s.out) / name, csv);
  }
  if (s.json) {
    json doc = std::move(extra);
    for (const auto& [name, csv] : tables) doc[name.substr(0, name.find('.'))] = csv_to_json(csv);
    doc["excluded"] = exclusions_json(excluded);
    std::cout << doc.dump(2) << "\n";
  } else if (s.out.empty()) {
    bool first = true;
    for (const auto& [name, csv] : tables) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << csv;
    }
  }
}

// ---- subcommands -----------------------------------------------------------

int cmd_gen(const Shared& s, const Sizes& z) {
  if (!z.n || !z.m) throw jssp::ValidationError("gen needs --n and --m");
  const int count = z.instances.value_or(1);
  const std::uint64_t seed = master_seed(s);
  const fs::path dir = s.out.empty() ? fs::path(".") : fs::path(s.out);
  fs::create_directories(dir);
  json written = json::array();
  for (int i = 0; i < count; ++i) {
    const auto inst = jssp::random_instance(
        {.n_jobs = *z.n, .n_machines = *z.m, .seed = jssp::derive_seed(seed, static_cast<std::uint64_t>(i))});
    char name[96];
    std::snprintf(name, sizeof name, "jsp_%dx%d_s%llu_%03d.jsp", *z.n, *z.m, static_cast<unsigned long long>(seed), i);
    write_file(dir / name, jssp::format_instance_text(inst));
    written.push_back((dir / name).string());
    if (!s.json) std::cout << (dir / name).string() << "\n";
  }
  if (s.json) std::cout << json{{"files", written}}.dump(2) << "\n";
  return 0;
}

int cmd_solve(const Shared& s, const Sizes& z) {
  if (z.files.empty()) throw jssp::ValidationError("solve needs an instance file");
  json all = json::array();
  int status = 0;
  for (const auto& file : z.files) {
    const auto inst = jssp::load_instance(file);
    const auto r = jssp::solve_optimal(inst, solver_limits(s));
    if (r.status != jssp::BnbStatus::optimal) status = 1;
    if (s.json) {
      json doc = {{"file", file},
                  {"status", jssp::to_string(r.status)},
                  {"proven", r.proven},
                  {"nodes", r.nodes_expanded},
                  {"lower_bound", jssp::lower_bound(inst)}};
      if (r.witness) {
        doc["optimum"] = r.optimum;
        doc["witness"] = r.witness->rows();
      }
      all.push_back(std::move(doc));
    } else {
      if (z.files.size() > 1) std::cout << "file " << file << "\n";
      std::cout << "status " << jssp::to_string(r.status) << "\n";
      if (r.witness) std::cout << (r.proven ? "optimum " : "best ") << r.optimum << "\n";
      std::cout << "lower_bound " << jssp::lower_bound(inst) << "\n";
      std::cout << "nodes " << r.nodes_expanded << "\n";
      if (r.witness) std::cout << jssp::format_machine_orders(*r.witness);
    }
  }
  if (s.json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  if (status) std::cerr << "error: search stopped at a limit before proving optimality\n";
  return status;
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int cmd_backbone(const Shared& s, const Sizes& z) {
  auto config = experiment_config(s, z, {.combos = jssp::parse_combos("3x15,6x6,8x4,9x3"), .instances = 50});
  if (!z.files.empty()) {
    jssp::BackboneOptions options{.node_limit = s.limit_nodes, .time_limit_seconds = s.limit_seconds};
    std::string csv = "instance,rho,backbone_size,fraction\n";
    for (const auto& file : z.files) {
      const auto b = jssp::rho_backbone(jssp::load_instance(file), config.grid, options);
      for (std::size_t i = 0; i < b.rho.size(); ++i)
        csv += file + "," + num(b.rho[i]) + "," + std::to_string(b.count[i]) + "," + num(b.fraction[i]) + "\n";
    }
    emit(s, {{"backbone.csv", csv}}, {});
    return 0;
  }
  const auto r = jssp::run_backbone_experiment(config);
  emit(s, {{"backbone.csv", jssp::backbone_csv(r)}}, r.excluded);
  return 0;
}

int cmd_distance(const Shared& s, const Sizes& z) {
  auto config = experiment_config(s, z, {.combos = jssp::parse_combos("6x6,9x3"), .instances = 30, .k = 4});
  if (config.k < 2) throw jssp::ValidationError("distance needs --k of at least 2");
  if (!z.files.empty()) {
    std::string csv = "instance,rho,mean_norm_distance,q25,q75,pairs\n";
    for (const auto& file : z.files) {
      const auto inst = jssp::load_instance(file);
      jssp::SaConfig sa = config.sa;
      sa.seed = config.master_seed;
      const auto d = jssp::sample_rho_distances(inst, config.k, config.grid, sa);
      const double edges = static_cast<double>(std::max<std::int64_t>(1, inst.edge_count()));
      for (std::size_t g = 0; g < d.size(); ++g) {
        std::vector<double> norm;
        for (auto x : d[g]) norm.push_back(static_cast<double>(x) / edges);
        const auto row = jssp::summarize(config.grid[g], norm);
        csv += file + "," + num(row.key) + "," + num(row.mean) + "," + num(row.q25) + "," + num(row.q75) + "," +
               std::to_string(row.count) + "\n";
      }
    }
    emit(s, {{"distance.csv", csv}}, {});
    return 0;
  }
  const auto r = jssp::run_distance_experiment(config);
  emit(s, {{"distance.csv", jssp::distance_csv(r)}}, r.excluded);
  return 0;
}

int cmd_exactness(const Shared& s, const Sizes& z) {
  auto config = experiment_config(s, z, {.combos = jssp::parse_combos("3x15,6x6,9x3"), .instances = 30, .k = 1});
  if (!z.files.empty()) {
    std::string csv = "instance,r,norm_radius,exactness,count\n";
    for (const auto& file : z.files) {
      const auto inst = jssp::load_instance(file);
      const auto opt = jssp::solve_optimal(inst, solver_limits(s));
      if (opt.status != jssp::BnbStatus::optimal) throw jssp::PartialResultError("optimum of '" + file + "' not proven");
      jssp::ExactnessOptions options;
      options.descent = {.node_limit = s.limit_nodes, .time_limit_seconds = s.limit_seconds};
      const std::int64_t edges = std::max<std::int64_t>(1, inst.edge_count());
      if (config.max_norm_radius)
        options.max_radius = std::max<std::int64_t>(1, static_cast<std::int64_t>(*config.max_norm_radius * edges + 1e-9));
      std::vector<std::int64_t> hits(edges + 1, 0), counts(edges + 1, 0);
      for (int j = 0; j < config.k; ++j) {
        const auto rec = jssp::exactness_run(inst, opt.optimum,
                                             jssp::derive_seed(config.master_seed, static_cast<std::uint64_t>(j)), options);
        for (const auto& [r, ok] : rec.pairs) {
          if (r < 1 || r > edges) continue;
          ++counts[r];
          hits[r] += ok;
        }
      }
      for (std::int64_t r = 1; r <= edges; ++r) {
        if (!counts[r]) continue;
        csv += file + "," + std::to_string(r) + "," + num(static_cast<double>(r) / edges) + "," +
               num(static_cast<double>(hits[r]) / counts[r]) + "," + std::to_string(counts[r]) + "\n";
      }
    }
    emit(s, {{"exactness.csv", csv}}, {});
    return 0;
  }
  const auto r = jssp::run_exactness_experiment(config);
  emit(s, {{"exactness.csv", jssp::exactness_csv(r)}}, r.excluded);
  return 0;
}

int cmd_quality(const Shared& s, const Sizes& z) {
  auto config = experiment_config(
      s, z, {.combos = jssp::parse_combos("2x6,3x9,4x12,4x4,6x6,8x8,6x2,9x3,12x4"), .instances = 30, .samples = 100});
  const auto r = jssp::run_quality_experiment(config);
  emit(s, {{"quality.csv", jssp::quality_csv(r)}, {"slopes.csv", jssp::slopes_csv(r)}}, r.excluded);
  return 0;
}

int cmd_difficulty(const Shared& s, const Sizes& z) {
  auto config = experiment_config(
      s, z, {.combos = jssp::parse_combos("2x6,3x9,3x3,4x4,5x5,6x6,6x2,9x3,12x4"), .instances = 50});
  const auto r = jssp::run_difficulty_experiment(config);
  emit(s, {{"difficulty.csv", jssp::difficulty_csv(r)}}, r.excluded);
  return 0;
}

int cmd_limits(const Shared& s, const Sizes& z) {
  jssp::ExperimentConfig defaults{.combos = {{2, 2}}, .instances = 200, .samples = 20};
  auto config = experiment_config(s, z, defaults);
  const auto report = jssp::run_limit_theorem_tests(config);
  const json checks = {{"job_length_certified_non_decreasing", report.job_length_ok},
                       {"workload_certified", report.workload_ok},
                       {"random_ratio_falls_toward_one", report.ratio_ok},
                       {"job_delay_bounded", report.delay_ok}};
  emit(s, {{"limits.csv", jssp::limits_csv(report)}}, {}, json{{"checks", checks}});
  if (!s.json)
    for (const auto& [name, ok] : checks.items()) std::cerr << (ok.get<bool>() ? "pass " : "FAIL ") << name << "\n";
  return 0;
}

int cmd_oracle(const Shared& s, const Sizes& z) {
  jssp::OracleConfig config;
  config.master_seed = master_seed(s);
  if (z.instances) config.optimal_instances = *z.instances;
  if (z.k) config.backbone_instances = *z.k;
  if (s.threads) config.threads = *s.threads;
  const auto report = jssp::run_oracle_check(config);
  if (s.json) {
    std::cout << json{{"optimal_checked", report.optimal_checked},
                      {"optimal_matched", report.optimal_matched},
                      {"backbone_checked", report.backbone_checked},
                      {"backbone_matched", report.backbone_matched},
                      {"mismatches", report.mismatches},
                      {"ok", report.ok()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "optimum " << report.optimal_matched << "/" << report.optimal_checked << "\n";
    std::cout << "backbone " << report.backbone_matched << "/" << report.backbone_checked << "\n";
    for (const auto& m : report.mismatches) std::cout << "mismatch " << m << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Job shop landscape toolkit"};
  app.require_subcommand(1);
  Shared shared;
  Sizes sizes;

  auto* gen = app.add_subcommand("gen", "Write random instances");
  gen->add_option("--n", sizes.n, "Jobs")->check(CLI::PositiveNumber);
  gen->add_option("--m", sizes.m, "Machines")->check(CLI::PositiveNumber);
  gen->add_option("--instances", sizes.instances, "How many")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Solve instance files to optimality");
  solve->add_option("files", sizes.files, "Instance files")->required();

  auto* backbone = app.add_subcommand("backbone", "rho-backbone fractions");
  add_experiment(backbone, sizes, true);
  add_grid(backbone, sizes);

  auto* dist = app.add_subcommand("distance", "Distances between near-optimal SA schedules");
  add_experiment(dist, sizes, true);
  add_grid(dist, sizes);
  dist->add_option("--k", sizes.k, "SA runs per instance")->check(CLI::PositiveNumber);

  auto* exact = app.add_subcommand("exactness", "Neighbourhood exactness of ball descent");
  add_experiment(exact, sizes, true);
  exact->add_option("--k", sizes.k, "Descents per instance")->check(CLI::PositiveNumber);
  exact->add_option("--max-norm-radius", sizes.max_norm_radius, "Largest radius / edge count")
      ->check(CLI::Range(0.0, 1.0));

  auto* quality = app.add_subcommand("quality", "Random and locally optimal makespans against bounds");
  add_experiment(quality, sizes, false);
  quality->add_option("--samples", sizes.samples, "Random schedules per instance")->check(CLI::PositiveNumber);
  quality->add_flag("--exact", sizes.exact_quality, "Also solve each instance to optimality");

  auto* difficulty = app.add_subcommand("difficulty", "Search tree sizes");
  add_experiment(difficulty, sizes, false);

  auto* limits = app.add_subcommand("limits", "Limit-ratio property checks");
  limits->add_option("--instances", sizes.instances, "Instances per point")->check(CLI::PositiveNumber);
  limits->add_option("--samples", sizes.samples, "Random schedules per instance")->check(CLI::PositiveNumber);
  limits->add_option("--config", sizes.config, "key=value or JSON config file")->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle-check", "Compare solvers with brute-force enumeration");
  oracle->add_option("--instances", sizes.instances, "Instances for the optimum sweep")->check(CLI::NonNegativeNumber);
  oracle->add_option("--k", sizes.k, "3x3 instances for the backbone sweep")->check(CLI::NonNegativeNumber);

  for (auto* cmd : {gen, solve, backbone, dist, exact, quality, difficulty, limits, oracle}) add_shared(cmd, shared);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << sub->help();
    return 2;
  }

  try {
    const auto* cmd = app.get_subcommands().front();
    if (cmd == gen) return cmd_gen(shared, sizes);
    if (cmd == solve) return cmd_solve(shared, sizes);
    if (cmd == backbone) return cmd_backbone(shared, sizes);
    if (cmd == dist) return cmd_distance(shared, sizes);
    if (cmd == exact) return cmd_exactness(shared, sizes);
    if (cmd == quality) return cmd_quality(shared, sizes);
    if (cmd == difficulty) return cmd_difficulty(shared, sizes);
    if (cmd == limits) return cmd_limits(shared, sizes);
    if (cmd == oracle) return cmd_oracle(shared, sizes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
