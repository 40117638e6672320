#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "jssp/error.hpp"
#include "jssp/random.hpp"
#include "jssp/stats.hpp"

using namespace jssp;
using Catch::Approx;

TEST_CASE("nearest-rank quantile", "[stats]") {
  const std::vector<double> v{4, 1, 3, 2};
  CHECK(quantile(v, 0.25) == 1);
  CHECK(quantile(v, 0.5) == 2);
  CHECK(quantile(v, 0.75) == 3);
  CHECK(quantile(v, 1.0) == 4);
  CHECK(quantile(v, 0.0) == 1);
  const std::vector<double> same(7, 2.5);
  for (double q : {0.0, 0.1, 0.5, 0.9, 1.0}) CHECK(quantile(same, q) == 2.5);
  CHECK_THROWS_AS(quantile(std::vector<double>{}, 0.5), ValidationError);
  CHECK_THROWS_AS(quantile(v, 1.5), ValidationError);
}

TEST_CASE("quantile agrees with the counting definition", "[stats][property]") {
  // Smallest sample x with #{s <= x} >= q * n.
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + rng.below(40));
    for (auto& x : v) x = static_cast<double>(rng.below(20));
    for (double q : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      double expect = 1e300;
      for (double x : v) {
        int at_most = 0;
        for (double y : v) at_most += y <= x;
        if (at_most >= q * static_cast<double>(v.size()) - 1e-9 && x < expect) expect = x;
      }
      CHECK(quantile(v, q) == expect);
    }
  }
}

TEST_CASE("least squares", "[stats]") {
  const std::vector<std::pair<double, double>> two{{0, 0}, {1, 2}};
  const auto fit = least_squares(two);
  CHECK(fit.slope == Approx(2));
  CHECK(fit.intercept == Approx(0));
  CHECK(fit.r_squared == Approx(1));

  const std::vector<std::pair<double, double>> noisy{{0, 1}, {1, 2}, {2, 2}, {3, 4}};
  const auto f = least_squares(noisy);
  // Normal equations by hand: sxx = 5, sxy = 4.5, mean (1.5, 2.25).
  CHECK(f.slope == Approx(0.9));
  CHECK(f.intercept == Approx(0.9));
  CHECK(f.r_squared == Approx(4.5 * 4.5 / (5 * 4.75)));

  CHECK_THROWS_AS(least_squares(std::vector<std::pair<double, double>>{{1, 1}}), ValidationError);
  CHECK_THROWS_AS(least_squares(std::vector<std::pair<double, double>>{{1, 1}, {1, 2}}), ValidationError);
}

TEST_CASE("summaries keep quantiles ordered", "[stats]") {
  const std::vector<double> v{5, 1, 9, 3};
  const auto row = summarize(1.25, v);
  CHECK(row.key == 1.25);
  CHECK(row.mean == Approx(4.5));
  CHECK(row.q25 <= row.q75);
  CHECK(row.count == 4);
  CHECK_THROWS_AS(mean(std::vector<double>{}), ValidationError);
}
