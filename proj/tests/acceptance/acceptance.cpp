// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Stretch checks run only with --stretch.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jssp/error.hpp"
#include "jssp/exact.hpp"
#include "jssp/experiments.hpp"
#include "jssp/instance.hpp"
#include "jssp/landscape.hpp"

using namespace jssp;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

int threads = 0;
std::uint64_t seed = 1;

ExperimentConfig base(const std::string& combos, int instances) {
  ExperimentConfig c;
  c.combos = parse_combos(combos);
  c.instances = instances;
  c.master_seed = seed;
  c.threads = threads;
  return c;
}

std::string fixture(const std::string& name) { return std::string(JSSP_FIXTURE_DIR) + "/" + name; }

std::string excluded_note(const std::vector<Exclusion>& excluded) {
  return excluded.empty() ? "" : ", " + std::to_string(excluded.size()) + " excluded";
}

// CSVs of the main runs, rerun at the end for the determinism check.
std::vector<std::pair<std::string, std::function<std::string()>>> reruns;
std::vector<std::string> first_csv;

void remember(const std::string& name, std::function<std::string()> run) {
  first_csv.push_back(run());
  reruns.emplace_back(name, std::move(run));
}

const RhoGrid kRhoOne(std::vector<double>{1.0});

Outcome oracle_optimum() {
  const auto r = run_oracle_check({.optimal_instances = 200, .backbone_instances = 0, .master_seed = seed, .threads = threads});
  return {r.ok() && r.optimal_checked == 200,
          std::to_string(r.optimal_matched) + "/" + std::to_string(r.optimal_checked) + " optima match enumeration"};
}

Outcome oracle_backbone() {
  const auto r = run_oracle_check({.optimal_instances = 0, .backbone_instances = 50, .master_seed = seed, .threads = threads});
  return {r.ok() && r.backbone_checked == 50,
          std::to_string(r.backbone_matched) + "/" + std::to_string(r.backbone_checked) +
              " 3x3 backbones match enumeration on rho 1.0..1.5"};
}

Outcome worked_instance() {
  const auto inst = load_instance(fixture("i22.jsp"));
  const auto opt = solve_optimal(inst);
  const auto b = rho_backbone(inst, RhoGrid(std::vector<double>{1.0, 1.6}));
  const MachineOrders schedule_b({{0, 1}, {0, 1}});
  const auto descended = ball_descent(inst, schedule_from_orders(inst, schedule_b), 1);
  const bool ok = opt.status == BnbStatus::optimal && opt.optimum == 7 && lower_bound(inst) == 7 &&
                  b.fraction[0] == 1.0 && b.fraction[1] == 0.0 && descended.makespan() == 7;
  return {ok, fmt("optimum %.0f, lower bound %.0f, backbone %.2f at 1.0 and %.2f at 1.6", static_cast<double>(opt.optimum),
                  static_cast<double>(lower_bound(inst)), b.fraction[0], b.fraction[1]) +
                  fmt(", descent from B reaches %.0f", static_cast<double>(descended.makespan()))};
}

Outcome backbone_anchor() {
  auto c = base("3x15", 100);
  c.grid = kRhoOne;
  const auto r = run_backbone_experiment(c);
  remember("backbone 3x15", [c] { return backbone_csv(run_backbone_experiment(c)); });
  const double mean = r.mean.at(0).at(0);
  const auto n = r.rows.empty() ? 0 : r.rows[0].stat.count;
  return {std::abs(mean - 0.94) <= 0.03 && n >= 100,
          fmt("mean 1-backbone fraction %.4f over %.0f instances (target 0.94 +/- 0.03)", mean, static_cast<double>(n)) +
              excluded_note(r.excluded)};
}

Outcome backbone_ordering() {
  auto c = base("6x6,8x4,9x3", 50);
  c.grid = kRhoOne;
  const auto r = run_backbone_experiment(c);
  remember("backbone 6x6,8x4,9x3", [c] { return backbone_csv(run_backbone_experiment(c)); });
  const double a = r.mean[0][0], b = r.mean[1][0], d = r.mean[2][0];
  return {r.excluded.empty() && a > b && b > d,
          fmt("6x6 %.4f > 8x4 %.4f > 9x3 %.4f", a, b, d) + excluded_note(r.excluded)};
}

Outcome distance_ordering() {
  auto c = base("6x6,9x3", 30);
  c.k = 4;
  c.grid = kRhoOne;
  const auto r = run_distance_experiment(c);
  remember("distance 6x6,9x3", [c] { return distance_csv(run_distance_experiment(c)); });
  const double square = r.mean[0][0], wide = r.mean[1][0];
  return {r.excluded.empty() && wide > square,
          fmt("normalized distance 9x3 %.4f > 6x6 %.4f", wide, square) + excluded_note(r.excluded)};
}

Outcome distance_stretch() {
  auto c = base("15x3", 30);
  c.k = 4;
  c.grid = kRhoOne;
  const auto r = run_distance_experiment(c);
  const double d = r.mean[0][0];
  return {r.excluded.empty() && std::abs(d - 0.33) <= 0.05,
          fmt("15x3 normalized distance %.4f (target 0.33 +/- 0.05)", d) + excluded_note(r.excluded)};
}

Outcome exactness_ordering() {
  auto c = base("3x15,6x6,9x3", 30);
  c.k = 4;
  c.max_norm_radius = 0.1;
  const auto r = run_exactness_experiment(c);
  remember("exactness 3x15,6x6,9x3", [c] { return exactness_csv(run_exactness_experiment(c)); });
  const double tall = r.at({3, 15}, 0.1), square = r.at({6, 6}, 0.1), wide = r.at({9, 3}, 0.1);
  return {r.excluded.empty() && square < tall && square < wide,
          fmt("exactness at radius 0.1: 6x6 %.4f below 3x15 %.4f and 9x3 %.4f", square, tall, wide) +
              excluded_note(r.excluded)};
}

Outcome quality_slopes() {
  auto c = base("2x6,3x9,4x12,4x4,6x6,8x8,6x2,9x3,12x4", 30);
  c.samples = 100;
  const auto r = run_quality_experiment(c);
  remember("quality", [c] {
    const auto q = run_quality_experiment(c);
    return quality_csv(q) + slopes_csv(q);
  });
  const auto third = r.slope("1/3", "A"), one = r.slope("1", "A"), three = r.slope("3", "A");
  if (!third || !one || !three) return {false, "a slope is missing"};
  return {*one > *third && *one > *three,
          fmt("random-makespan slope: ratio 1 %.4f, ratio 1/3 %.4f, ratio 3 %.4f", *one, *third, *three) +
              excluded_note(r.excluded)};
}

Outcome limits() {
  auto c = base("2x2", 200);
  c.samples = 20;
  const auto r = run_limit_theorem_tests(c);
  remember("limits", [c] { return limits_csv(run_limit_theorem_tests(c)); });
  auto series = [](const std::vector<LimitPoint>& points) {
    std::string s;
    for (const auto& p : points) s += (s.empty() ? "" : " ") + fmt("%.3f", p.value);
    return s;
  };
  return {r.job_length_ok && r.workload_ok && r.ratio_ok,
          "certified N=2 [" + series(r.job_length_certified) + "], M=2 [" + series(r.workload_certified) +
              "], random/optimal by M [" + series(r.random_ratio_by_m) + "], by N [" + series(r.random_ratio_by_n) + "]"};
}

Outcome determinism() {
  std::string differing;
  const int saved = threads;
  for (std::size_t i = 0; i < reruns.size(); ++i) {
    // The rerun also varies the worker count.
    threads = saved == 1 ? 2 : 1;
    if (reruns[i].second() != first_csv[i]) differing += (differing.empty() ? "" : ", ") + reruns[i].first;
  }
  threads = saved;
  if (reruns.empty()) return {false, "nothing to compare"};
  return {differing.empty(), differing.empty() ? std::to_string(reruns.size()) + " experiment CSVs byte-identical on rerun"
                                               : "differ: " + differing};
}

Outcome ft10_backbone(double seconds) {
  const auto inst = load_instance(fixture("ft10.jsp"));
  try {
    const auto b = rho_backbone(inst, RhoGrid(std::vector<double>{1.005}), {.time_limit_seconds = seconds});
    return {std::abs(b.fraction[0] - 0.80) <= 0.05, fmt("ft10 1.005-backbone fraction %.4f, optimum %.0f", b.fraction[0],
                                                         static_cast<double>(b.optimum))};
  } catch (const PartialResultError& e) {
    return {false, std::string("not solved within the per-solve limit: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool stretch = false;
  double stretch_seconds = 600;
  app.add_flag("--stretch", stretch, "Also run the optional stretch checks");
  app.add_option("--stretch-seconds", stretch_seconds, "Time limit per exact solve in stretch checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Master seed");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    std::string id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"1", "exact optimum agrees with enumeration", oracle_optimum},
      {"2", "rho-backbone agrees with enumeration", oracle_backbone},
      {"3", "worked 2x2 instance", worked_instance},
      {"4", "3x15 1-backbone fraction", backbone_anchor},
      {"5", "1-backbone ordering 6x6 > 8x4 > 9x3", backbone_ordering},
      {"6", "near-optimal distance 9x3 > 6x6", distance_ordering},
      {"7", "exactness lowest at N/M = 1", exactness_ordering},
      {"8", "random-makespan slope largest at N/M = 1", quality_slopes},
      {"9", "limit-ratio properties", limits},
      {"10", "deterministic CSVs", determinism},
  };
  if (stretch) {
    criteria.push_back({"6s", "15x3 normalized distance", distance_stretch});
    criteria.push_back({"11", "ft10 1.005-backbone fraction", [&] { return ft10_backbone(stretch_seconds); }});
  }

  int failed = 0;
  for (const auto& c : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
    std::printf("%s criterion %s: %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(),
                o.detail.c_str(), took.count());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
