#include <algorithm>
#include <map>
#include <numeric>

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"
#include "jssp/random.hpp"

using namespace jssp;
using jssp::testing::i22;

TEST_CASE("random_instance", "[generate]") {
  SECTION("rows are machine permutations") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = random_instance({.n_jobs = 4, .n_machines = 7, .seed = seed});
      for (int k = 0; k < 4; ++k) {
        std::vector<int> row;
        for (int i = 0; i < 7; ++i) row.push_back(inst.machine(k, i));
        std::sort(row.begin(), row.end());
        std::vector<int> expect(7);
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(row == expect);
        for (int i = 0; i < 7; ++i) CHECK((inst.duration(k, i) >= 1 && inst.duration(k, i) <= 100));
      }
    }
  }
  SECTION("degenerate duration range") {
    const auto inst = random_instance({.n_jobs = 5, .n_machines = 5, .duration_low = 7, .duration_high = 7, .seed = 9});
    for (Time d : inst.durations()) CHECK(d == 7);
  }
  SECTION("2x2 routing combinations are uniform") {
    std::map<std::pair<int, int>, int> counts;
    const int samples = 10'000;
    for (int s = 0; s < samples; ++s) {
      const auto inst = random_instance({.n_jobs = 2, .n_machines = 2, .seed = derive_seed(42, s)});
      ++counts[{inst.machine(0, 0), inst.machine(1, 0)}];
    }
    REQUIRE(counts.size() == 4);
    for (const auto& [key, c] : counts) CHECK(std::abs(c / double(samples) - 0.25) <= 0.02);
  }
  SECTION("bad configs") {
    CHECK_THROWS(random_instance({.n_jobs = 0, .n_machines = 2}));
    CHECK_THROWS(random_instance({.n_jobs = 2, .n_machines = 2, .duration_low = 5, .duration_high = 4}));
  }
  SECTION("deterministic per seed") {
    CHECK(random_instance({.n_jobs = 6, .n_machines = 6, .seed = 3}) ==
          random_instance({.n_jobs = 6, .n_machines = 6, .seed = 3}));
    CHECK_FALSE(random_instance({.n_jobs = 6, .n_machines = 6, .seed = 3}) ==
                random_instance({.n_jobs = 6, .n_machines = 6, .seed = 4}));
  }
}

TEST_CASE("random_sequence", "[generate]") {
  SECTION("single job") {
    const Instance one({{{0, 1}, {2, 1}, {1, 1}}});
    const auto s = random_sequence(one, 99);
    CHECK(s.order == std::vector<OperationId>{{0, 0}, {0, 1}, {0, 2}});
  }
  SECTION("N=2, M=1 is a fair coin") {
    const Instance inst({{{0, 1}}, {{0, 1}}});
    int first_zero = 0;
    const int samples = 10'000;
    for (int s = 0; s < samples; ++s) first_zero += random_sequence(inst, derive_seed(1, s)).order[0].job == 0;
    CHECK(std::abs(first_zero / double(samples) - 0.5) <= 0.02);
  }
  SECTION("N=2, M=2 covers the six sequences uniformly") {
    const auto inst = i22();
    std::map<std::vector<int>, int> counts;
    const int samples = 100'000;
    for (int s = 0; s < samples; ++s) {
      std::vector<int> jobs;
      for (const auto& op : random_sequence(inst, derive_seed(2, s)).order) jobs.push_back(op.job);
      ++counts[jobs];
    }
    REQUIRE(counts.size() == 6);
    for (const auto& [key, c] : counts) CHECK(std::abs(c / double(samples) - 1.0 / 6.0) <= 0.02);
  }
  SECTION("always valid") {
    SplitMix64 rng(8);
    for (int t = 0; t < 100; ++t) {
      const auto inst = jssp::testing::random_small(1 + rng.below(7), 1 + rng.below(7), rng());
      CHECK_NOTHROW(validate_sequence(inst, random_sequence(inst, rng())));
    }
  }
}

TEST_CASE("priority rules on the worked instance", "[generate]") {
  const auto inst = i22();
  CHECK(priority_of(PiInfRule{}, inst, {0, 0}) == 3);
  CHECK(priority_of(PiInfRule{}, inst, {1, 0}) == 4);
  CHECK(priority_of(PiInfRule{}, inst, {0, 1}) == 5);
  CHECK(priority_of(PiInfRule{}, inst, {1, 1}) == 6);

  CHECK(longest_job(inst) == 1);
  CHECK(priority_of(Pi0Rule{}, inst, {1, 0}) == 1);
  CHECK(priority_of(Pi0Rule{}, inst, {1, 1}) == 2);
  CHECK(priority_of(Pi0Rule{}, inst, {0, 0}) == 3);
  CHECK(priority_of(Pi0Rule{}, inst, {0, 1}) == 4);

  const auto pi_inf = schedule_by_rule(inst, PiInfRule{});
  CHECK(pi_inf.makespan() == 7);
  CHECK(pi_inf.machine_orders() == jssp::testing::i22_a());
  CHECK(schedule_by_rule(inst, Pi0Rule{}).makespan() == 11);

  // Identity permutation reproduces the step-major rule.
  CHECK(schedule_by_rule(inst, PermutedRule{{0, 1}}).machine_orders() == pi_inf.machine_orders());
  CHECK(schedule_by_rule(inst, PermutedRule{{1, 0}}).makespan() == 7);
  CHECK_THROWS(schedule_by_rule(inst, PermutedRule{{0, 0}}));
}

TEST_CASE("pi0 tie-break picks the lowest job", "[generate]") {
  const Instance flat({{{0, 5}, {1, 5}}, {{1, 5}, {0, 5}}, {{0, 5}, {1, 5}}});
  CHECK(longest_job(flat) == 0);
  const auto s = schedule_by_rule(flat, Pi0Rule{});
  CHECK(s.start(0, 0) == 0);
  CHECK(s.completion(0, 1) == 10);
}

TEST_CASE("single-job instance under every rule", "[generate]") {
  const Instance one({{{1, 4}, {0, 6}, {2, 1}}});
  for (const PriorityRule& rule : {PriorityRule{Pi0Rule{}}, PriorityRule{PiInfRule{}}, PriorityRule{RandomRule{5}},
                                   PriorityRule{PermutedRule{{0}}}})
    CHECK(schedule_by_rule(one, rule).makespan() == 11);
}

TEST_CASE("random rule equals building the random sequence", "[generate][property]") {
  SplitMix64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const auto inst = jssp::testing::random_small(1 + rng.below(8), 1 + rng.below(8), rng());
    const std::uint64_t seed = rng();
    const auto via_rule = schedule_by_rule(inst, RandomRule{seed});
    const auto via_seq = build_schedule(inst, random_sequence(inst, seed));
    CHECK(via_rule.starts() == via_seq.starts());
    CHECK(via_rule.machine_orders() == via_seq.machine_orders());
    for (const PriorityRule& rule : {PriorityRule{Pi0Rule{}}, PriorityRule{PiInfRule{}}})
      CHECK(check_feasible(inst, schedule_by_rule(inst, rule)).feasible);
  }
}

TEST_CASE("pi0 certifies optimality more often as M grows (N=2)", "[generate][statistical]") {
  double previous = -1.0;
  for (int m : {5, 10, 20, 40}) {
    int hits = 0;
    const int count = 400;
    for (int s = 0; s < count; ++s) {
      const auto inst = random_instance({.n_jobs = 2, .n_machines = m, .seed = derive_seed(1000 + m, s)});
      const Time longest = std::max(inst.job_length(0), inst.job_length(1));
      hits += schedule_by_rule(inst, Pi0Rule{}).makespan() == longest;
    }
    const double fraction = hits / double(count);
    INFO("M=" << m << " fraction=" << fraction);
    CHECK(fraction >= previous);
    previous = fraction;
  }
  CHECK(previous > 0.6);
}

TEST_CASE("job delay under an instance-independent rule stays bounded in M", "[generate][statistical]") {
  // N = 2, identity permutation; mean of S+(last op) - job length over both jobs.
  std::vector<double> means;
  for (int m : {10, 20, 40, 80}) {
    double total = 0;
    const int count = 400;
    for (int s = 0; s < count; ++s) {
      const auto inst = random_instance({.n_jobs = 2, .n_machines = m, .seed = derive_seed(2000 + m, s)});
      const auto sched = schedule_by_rule(inst, PermutedRule{{0, 1}});
      total += job_delay(inst, sched, 0) + job_delay(inst, sched, 1);
    }
    means.push_back(total / (2.0 * count));
  }
  INFO("means " << means[0] << " " << means[1] << " " << means[2] << " " << means[3]);
  // Bounded by 4 * tau_max * (N - 1) at every M, and flat in M.
  for (double mean : means) CHECK(mean <= 4.0 * 100 * (2 - 1));
  CHECK(means[3] <= 1.5 * means[0]);
  CHECK(means[3] <= 1.5 * means[1]);
}
