#include "divdmt/stats.hpp"

#include "divdmt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace divdmt {

void slope_weights(std::span<const double> x, std::span<double> w) {
  if (x.size() != w.size() || x.size() < 2) throw UsageError("slope fit needs at least two points");
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / double(x.size());
  double sxx = 0.0;
  for (double xi : x) sxx += (xi - mean) * (xi - mean);
  if (sxx <= 0.0) throw UsageError("slope fit needs two distinct abscissae");
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = (x[i] - mean) / sxx;
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UsageError("least squares: size mismatch");
  std::vector<double> w(x.size());
  slope_weights(x, w);
  LinearFit fit;
  for (std::size_t i = 0; i < x.size(); ++i) fit.slope += w[i] * y[i];
  const double n = double(x.size());
  fit.intercept = (std::accumulate(y.begin(), y.end(), 0.0) -
                   fit.slope * std::accumulate(x.begin(), x.end(), 0.0)) /
                  n;
  return fit;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = double(trials);
  const double p = double(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // Clamp so that low <= p <= high holds exactly at the boundaries.
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

}  // namespace divdmt
