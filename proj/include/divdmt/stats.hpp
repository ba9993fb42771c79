#ifndef DIVDMT_STATS_HPP
#define DIVDMT_STATS_HPP

#include <cstdint>
#include <span>

namespace divdmt {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x. Needs two distinct x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// Weights w_i with slope = sum_i w_i y_i for the OLS fit on abscissae x.
/// Used to propagate per-point variances into the slope.
void slope_weights(std::span<const double> x, std::span<double> w);

struct Interval {
  double low = 0.0;
  double high = 0.0;
  double half_width() const { return 0.5 * (high - low); }
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

}  // namespace divdmt

#endif  // DIVDMT_STATS_HPP
