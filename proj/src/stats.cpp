#include "jssp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "jssp/error.hpp"

namespace jssp {

double quantile(std::span<const double> samples, double q) {
  if (samples.empty()) throw ValidationError("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("quantile level must lie in [0, 1]");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  // The small slack keeps q * n = 25.000000000000004 at rank 25.
  auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

double mean(std::span<const double> samples) {
  if (samples.empty()) throw ValidationError("mean of an empty sample");
  return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

RegressionFit least_squares(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw ValidationError("regression needs at least two points");
  const auto n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0) throw ValidationError("regression needs at least two distinct x values");
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

StatRow summarize(double key, std::span<const double> samples) {
  return {key, mean(samples), quantile(samples, 0.25), quantile(samples, 0.75),
          static_cast<std::int64_t>(samples.size())};
}

}  // namespace jssp
