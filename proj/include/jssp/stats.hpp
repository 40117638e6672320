#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace jssp {

/// Nearest-rank quantile: the sample at 1-based rank ceil(q * n), clamped to
/// [1, n]. Throws ValidationError on empty input or q outside [0, 1].
double quantile(std::span<const double> samples, double q);

/// Arithmetic mean. Throws ValidationError on empty input.
double mean(std::span<const double> samples);

struct RegressionFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

/// Ordinary least squares y = slope * x + intercept. Needs at least two
/// points with distinct x.
RegressionFit least_squares(std::span<const std::pair<double, double>> points);

/// Summary of one sample set under some key (rho, normalized radius, ...).
struct StatRow {
  double key = 0;
  double mean = 0;
  double q25 = 0;
  double q75 = 0;
  std::int64_t count = 0;
};

StatRow summarize(double key, std::span<const double> samples);

}  // namespace jssp
