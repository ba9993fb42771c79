#ifndef DIVDMT_SIM_HPP
#define DIVDMT_SIM_HPP

// Rayleigh-fading Monte Carlo for the model Y = sqrt(rho/n) H X + W with
// T = n, exhaustive ML decoding, and the pairwise/union bounds on the error
// probability.

#include "divdmt/algebra.hpp"
#include "divdmt/codebook.hpp"
#include "divdmt/stats.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace divdmt {

using Rng = std::mt19937_64;

inline constexpr std::size_t kDefaultDecoderCap = 100'000;

/// Independent stream for (seed, stream, index); used per trial so results do
/// not depend on how trials are scheduled.
Rng derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// m x n matrix of i.i.d. CN(0, 1) entries (real and imaginary parts N(0, 1/2)).
Eigen::MatrixXcd sample_channel(int m, int n, Rng& rng);

/// Exhaustive ML decoder over a fixed codebook.
class MlDecoder {
 public:
  explicit MlDecoder(const Codebook& codebook, std::size_t cap = kDefaultDecoderCap);

  std::size_t size() const { return codewords_.size(); }
  const Eigen::MatrixXcd& codeword(std::size_t i) const { return codewords_[i]; }

  /// argmin_i ||Y - sqrt(rho/n) H X_i||^2, ties to the lowest index.
  std::size_t decode(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& h, double rho) const;

 private:
  std::vector<Eigen::MatrixXcd> codewords_;
  int n_ = 0;
};

struct Transmission {
  std::size_t sent = 0;
  std::size_t decoded = 0;
};

/// Draws a uniform codeword index and the noise from rng, then decodes.
Transmission transmit_and_decode(const MlDecoder& decoder, const Eigen::MatrixXcd& h, double rho,
                                 Rng& rng);

/// Same with the noise given explicitly.
Transmission transmit_and_decode(const MlDecoder& decoder, const Eigen::MatrixXcd& h, double rho,
                                 std::size_t sent, const Eigen::MatrixXcd& noise);

/// exp(-(rho / 8n) ||H delta||^2)
double pairwise_chernoff(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& delta, double rho,
                         int n);

/// Q(x) = P(N(0,1) > x).
double q_function(double x);

/// Conditional union bound sum over the nonzero differences in
/// M^{-1} psi(Lambda(2M)) of pairwise_chernoff. The 2M ball is enumerated
/// once; each evaluation reduces to quadratic forms in the lattice
/// coordinates.
class UnionBound {
 public:
  explicit UnionBound(const Codebook& codebook, std::size_t cap = kDefaultEnumerationCap);

  double operator()(const Eigen::MatrixXcd& h, double rho) const;
  std::size_t difference_count() const { return std::size_t(differences_.cols()); }

 private:
  std::vector<Eigen::MatrixXcd> basis_matrices_;  // psi(b_i) / M
  Eigen::MatrixXd differences_;                    // lattice coordinates, one per column
  int n_ = 0;
  bool trivial_ = false;
};

double union_bound_conditional(const Codebook& codebook, const Eigen::MatrixXcd& h, double rho);

/// det(I + c X X^*)^{-m}
double pep_average_closed(const Eigen::MatrixXcd& x, double c, int m);

struct MonteCarloMean {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Monte Carlo estimate of E_H[exp(-c ||H X||^2)] with H m x n i.i.d. CN(0, 1).
MonteCarloMean pep_average_monte_carlo(const Eigen::MatrixXcd& x, double c, int m,
                                       std::size_t draws, Rng& rng);

struct SimConfig {
  std::string preset = "LIPSCHITZ_RAMIFIED";
  int n = 2;
  int m = 2;
  double r = 0.0;
  std::vector<double> rho_list;  // linear, ascending
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  /// Fixed Frobenius radius M for every SNR instead of M = rho^{rn/k}.
  std::optional<double> radius;
  /// Number of trials (from the first) whose channel also feeds the union
  /// bound; 0 means all.
  std::uint64_t union_bound_draws = 0;
  std::size_t decoder_cap = kDefaultDecoderCap;
};

struct SimPoint {
  double rho = 0.0;
  std::size_t codebook_size = 0;
  std::uint64_t errors = 0;
  std::uint64_t trials = 0;
  double pe_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double union_bound_mean = 0.0;
  /// Too few errors (< kMinSlopeErrors) to enter the slope fit.
  bool excluded_from_slope = false;
};

inline constexpr std::uint64_t kMinSlopeErrors = 20;

struct SlopeFit {
  double value = 0.0;
  double standard_error = 0.0;
  std::size_t points = 0;
  bool measurable = false;
  Interval ci95() const {
    return {value - kZ95 * standard_error, value + kZ95 * standard_error};
  }
};

struct SimResult {
  std::vector<SimPoint> points;
  SlopeFit slope;
};

void validate(const SimConfig& config);

SimResult estimate_pe(const SimConfig& config);

/// Least-squares slope of log10 pe_hat vs log10 rho over points with at least
/// kMinSlopeErrors errors; the standard error uses the delta-method variance
/// (1 - p)/(N p ln^2 10) of each log10 pe_hat.
SlopeFit fit_error_slope(std::vector<SimPoint>& points);

}  // namespace divdmt

#endif  // DIVDMT_SIM_HPP
