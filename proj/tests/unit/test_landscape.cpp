#include <algorithm>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "helpers.hpp"
#include "jssp/enumerate.hpp"
#include "jssp/error.hpp"
#include "jssp/landscape.hpp"
#include "jssp/random.hpp"

using namespace jssp;
using jssp::testing::i22;
using jssp::testing::i22_a;
using jssp::testing::i22_b;
using jssp::testing::random_small;

TEST_CASE("rho grids", "[landscape]") {
  const RhoGrid def;
  REQUIRE(def.size() == 51);
  CHECK(def[0] == 1.0);
  CHECK(def[3] == 1.03);
  CHECK(def.max() == 1.5);
  CHECK(RhoGrid::range(1.0, 1.6, 0.1).size() == 7);
  CHECK_THROWS_AS(RhoGrid(std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(RhoGrid(std::vector<double>{0.9, 1.0}), ValidationError);
  CHECK_THROWS_AS(RhoGrid(std::vector<double>{1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(RhoGrid::range(1.0, 1.5, 0.0), ValidationError);
  CHECK(rho_threshold(1.1, 100) == 110);
  CHECK(rho_threshold(1.07, 100) == 107);
  CHECK(rho_threshold(1.6, 7) == 11);
}

TEST_CASE("rho-backbone of the worked instance", "[landscape]") {
  const RhoGrid grid(std::vector<double>{1.0, 1.6});
  for (bool exact : {false, true}) {
    const auto b = rho_backbone(i22(), grid, {.exact_values = exact});
    CHECK(b.optimum == 7);
    CHECK(b.fraction[0] == 1.0);
    CHECK(b.fraction[1] == 0.0);
    CHECK(b.solves == 3);
  }
  const auto b = rho_backbone(i22(), grid, {.exact_values = true});
  for (int e = 0; e < 2; ++e) {
    const Time lo = b.lower_first[e].value, hi = b.higher_first[e].value;
    CHECK(std::min(lo, hi) == 7);
    CHECK(std::max(lo, hi) == 11);
  }
}

TEST_CASE("a single symmetric edge is never in the backbone", "[landscape]") {
  const Instance one({{{0, 4}}, {{0, 6}}});
  const auto b = rho_backbone(one, RhoGrid());
  for (double f : b.fraction) CHECK(f == 0.0);
}

TEST_CASE("rho-backbone matches the brute-force backbone", "[landscape][oracle]") {
  SplitMix64 rng(21);
  const RhoGrid grid = RhoGrid::range(1.0, 1.5, 0.05);
  const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  for (int trial = 0; trial < 40; ++trial) {
    const auto [n, m] = sizes[trial % 5];
    const auto inst = random_small(n, m, rng());
    const auto expect = brute_force_backbone(inst, grid);
    const auto got = rho_backbone(inst, grid, {.exact_values = trial % 2 == 1});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (int e = 0; e < static_cast<int>(inst.edge_count()); ++e) CHECK(got.in_backbone(e, i) == expect[i][e]);
      if (i) CHECK(got.fraction[i] <= got.fraction[i - 1]);
    }
  }
}

TEST_CASE("exact constrained optima match enumeration", "[landscape][oracle]") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_small(3, 3, rng());
    const EdgeIndex edges(3, 3);
    const auto all = enumerate_all(inst);
    const auto b = rho_backbone(inst, RhoGrid(), {.exact_values = true});
    for (int e = 0; e < edges.size(); ++e) {
      Time lo = kInfiniteMakespan, hi = kInfiniteMakespan;
      for (const auto& s : all) {
        const auto o = s.orders.orientation(edges);
        (o[e] > 0 ? lo : hi) = std::min(o[e] > 0 ? lo : hi, s.makespan);
      }
      CHECK(b.lower_first[e].value == lo);
      CHECK(b.higher_first[e].value == hi);
    }
  }
}

TEST_CASE("simulated annealing first hits", "[landscape]") {
  const RhoGrid grid(std::vector<double>{1.0, 1.2, 100.0});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto run = sa_run(i22(), 7, grid, {.seed = seed});
    CHECK(run.first_hit[0] == i22_a());
    CHECK(run.first_hit_move[2] == 0);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(run.first_hit_move[i] <= run.first_hit_move[i - 1]);
  }
  SplitMix64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = random_small(3, 4, rng());
    const Time opt = brute_force_optimum(inst);
    const RhoGrid g = RhoGrid::range(1.0, 1.3, 0.1);
    const auto run = sa_run(inst, opt, g, {.seed = rng()});
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(run.first_hit_makespan[i] <= rho_threshold(g[i], opt));
      CHECK(makespan_longest_path(inst, run.first_hit[i]) == run.first_hit_makespan[i]);
    }
  }
  CHECK_THROWS_AS(sa_run(i22(), 7, grid, {.cooling_factor = 1.0}), ValidationError);
  CHECK_THROWS_AS(sa_run(i22(), 6, grid, {}), ValidationError);
}

TEST_CASE("simulated annealing honours its move budget", "[landscape]") {
  // An unreachable target: the only way out is the budget.
  const auto inst = random_small(4, 4, 99);
  const Time lb = lower_bound(inst);
  if (solve_optimal(inst).optimum > lb) {
    CHECK_THROWS_AS(sa_run(inst, lb, RhoGrid(std::vector<double>{1.0}), {.max_moves = 2000}), TimeoutError);
  }
}

TEST_CASE("distance samples", "[landscape]") {
  const RhoGrid grid(std::vector<double>{1.0, 1.5});
  const auto d = sample_rho_distances(i22(), 4, grid, {.seed = 3});
  REQUIRE(d.size() == 2);
  CHECK(d[0].size() == 6);
  for (auto x : d[0]) CHECK(x == 0);
  CHECK(sample_rho_distances(i22(), 7, 2, grid, {.seed = 4})[1].size() == 1);
  CHECK_THROWS_AS(sample_rho_distances(i22(), 7, 1, grid, {}), ValidationError);

  const auto inst = random_small(3, 3, 5);
  const auto far = sample_rho_distances(inst, 3, grid, {.seed = 5});
  for (const auto& row : far)
    for (auto x : row) CHECK((x >= 0 && x <= inst.edge_count()));
}

namespace {

// No enumerated schedule within distance r is strictly better.
bool locally_optimal(const std::vector<EnumeratedSchedule>& all, const Schedule& s, std::int64_t r) {
  for (const auto& other : all)
    if (distance(other.orders, s.machine_orders()) <= r && other.makespan < s.makespan()) return false;
  return true;
}

}  // namespace

TEST_CASE("ball descent", "[landscape]") {
  const auto inst = i22();
  const auto a = schedule_from_orders(inst, i22_a());
  const auto b = schedule_from_orders(inst, i22_b());
  CHECK(ball_descent(inst, a, 1).machine_orders() == i22_a());
  CHECK(ball_descent(inst, b, 1).makespan() == 7);
  CHECK_THROWS_AS(ball_descent(inst, b, 0), ValidationError);

  SplitMix64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const auto small = random_small(2 + trial % 2, 3, rng());
    const auto all = enumerate_all(small);
    const Time opt = brute_force_optimum(small);
    const auto start = build_schedule(small, random_sequence(small, rng()));
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng.below(3));
    const auto end = ball_descent(small, start, r);
    CHECK(end.makespan() <= start.makespan());
    CHECK(locally_optimal(all, end, r));
    const auto again = solve_radius_limited(small, end.machine_orders(), r);
    CHECK(again.optimum == end.makespan());
    CHECK(ball_descent(small, start, small.edge_count()).makespan() == opt);
  }
}

TEST_CASE("next descent over adjacent swaps", "[landscape]") {
  const auto inst = i22();
  CHECK(next_descent_n1(inst, schedule_from_orders(inst, i22_b())).makespan() == 7);
  CHECK(next_descent_n1(inst, schedule_from_orders(inst, i22_a())).machine_orders() == i22_a());

  SplitMix64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const auto small = random_small(n, n == 4 ? 2 : 3, rng());
    const auto all = enumerate_all(small);
    const auto start = build_schedule(small, random_sequence(small, rng()));
    const auto end = next_descent_n1(small, start);
    CHECK(end.makespan() <= start.makespan());
    CHECK(locally_optimal(all, end, 1));
  }
}

TEST_CASE("exactness records", "[landscape]") {
  const auto inst = i22();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rec = exactness_run(inst, 7, seed);
    REQUIRE(rec.pairs.size() == 2);
    CHECK(rec.pairs[0] == std::pair<std::int64_t, bool>{1, true});
    CHECK(rec.pairs[1] == std::pair<std::int64_t, bool>{2, true});
  }
  SplitMix64 rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const auto small = random_small(3, 3, rng());
    const Time opt = brute_force_optimum(small);
    const auto rec = exactness_run(small, opt, rng());
    REQUIRE(static_cast<std::int64_t>(rec.pairs.size()) == small.edge_count());
    CHECK(rec.pairs.back().second);
    for (std::size_t i = 0; i < rec.pairs.size(); ++i) {
      CHECK(rec.pairs[i].first == static_cast<std::int64_t>(i) + 1);
      if (i && rec.pairs[i - 1].second) CHECK(rec.pairs[i].second);
    }
    const auto capped = exactness_run(small, opt, 7, {.max_radius = 2});
    CHECK(capped.pairs.size() <= rec.pairs.size());
    if (!capped.pairs.back().second) CHECK(capped.pairs.size() == 2);
  }
}
