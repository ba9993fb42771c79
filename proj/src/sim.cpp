#include "divdmt/sim.hpp"

#include "divdmt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace divdmt {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = {re, im};
    }
  }
  return out;
}

}  // namespace

Rng derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = splitmix64(seed);
  z = splitmix64(z ^ stream);
  z = splitmix64(z ^ index);
  return Rng(z);
}

Eigen::MatrixXcd sample_channel(int m, int n, Rng& rng) {
  if (m < 1 || n < 1) throw UsageError("channel dimensions must be positive");
  return complex_gaussian(m, n, rng);
}

MlDecoder::MlDecoder(const Codebook& codebook, std::size_t cap) : n_(codebook.degree()) {
  if (codebook.size() == 0) throw UsageError("decoder needs a nonempty codebook");
  if (codebook.size() > cap) {
    throw CapacityError("codebook has " + std::to_string(codebook.size()) +
                        " codewords, decoder cap is " + std::to_string(cap));
  }
  codewords_.reserve(codebook.size());
  for (const CodeMatrix& x : codebook.matrices) codewords_.push_back(x.entries);
}

std::size_t MlDecoder::decode(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& h,
                              double rho) const {
  const Eigen::MatrixXcd gain = std::sqrt(rho / n_) * h;
  std::size_t best = 0;
  double best_metric = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    const double metric = (y - gain * codewords_[i]).squaredNorm();
    if (metric < best_metric) {
      best_metric = metric;
      best = i;
    }
  }
  return best;
}

Transmission transmit_and_decode(const MlDecoder& decoder, const Eigen::MatrixXcd& h, double rho,
                                 std::size_t sent, const Eigen::MatrixXcd& noise) {
  const int n = static_cast<int>(decoder.codeword(sent).rows());
  const Eigen::MatrixXcd y = std::sqrt(rho / n) * h * decoder.codeword(sent) + noise;
  return {sent, decoder.decode(y, h, rho)};
}

Transmission transmit_and_decode(const MlDecoder& decoder, const Eigen::MatrixXcd& h, double rho,
                                 Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, decoder.size() - 1);
  const std::size_t sent = pick(rng);
  const Eigen::MatrixXcd noise = complex_gaussian(static_cast<int>(h.rows()),
                                                  static_cast<int>(decoder.codeword(0).cols()), rng);
  return transmit_and_decode(decoder, h, rho, sent, noise);
}

double pairwise_chernoff(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& delta, double rho,
                         int n) {
  return std::exp(-rho / (8.0 * n) * (h * delta).squaredNorm());
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

UnionBound::UnionBound(const Codebook& codebook, std::size_t cap) : n_(codebook.degree()) {
  trivial_ = codebook.size() <= 1;
  if (trivial_) return;
  const auto& basis = codebook.algebra.basis;
  for (const auto& b : basis.embed_basis) basis_matrices_.push_back(b / codebook.radius);
  const auto diffs = enumerate_ball(codebook.algebra, 2.0 * codebook.radius, cap);
  differences_.resize(basis.basis_size, static_cast<Eigen::Index>(diffs.size()));
  for (std::size_t c = 0; c < diffs.size(); ++c) {
    differences_.col(static_cast<Eigen::Index>(c)) = diffs[c].coords.cast<double>();
  }
}

double UnionBound::operator()(const Eigen::MatrixXcd& h, double rho) const {
  if (trivial_) return 0.0;
  const Eigen::Index k = static_cast<Eigen::Index>(basis_matrices_.size());
  std::vector<Eigen::MatrixXcd> images;
  images.reserve(basis_matrices_.size());
  for (const auto& b : basis_matrices_) images.push_back(h * b);
  // ||H delta||^2 = c^T G_H c with G_H(i, j) = Re <H b_i, H b_j>
  Eigen::MatrixXd gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      gram(i, j) = gram(j, i) = (images[i].array().conjugate() * images[j].array()).sum().real();
    }
  }
  const Eigen::VectorXd energy = (differences_.array() * (gram * differences_).array()).colwise().sum();
  const double scale = -rho / (8.0 * n_);
  return (scale * energy.array()).exp().sum();
}

double union_bound_conditional(const Codebook& codebook, const Eigen::MatrixXcd& h, double rho) {
  return UnionBound(codebook)(h, rho);
}

double pep_average_closed(const Eigen::MatrixXcd& x, double c, int m) {
  const Eigen::Index n = x.rows();
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) + c * x * x.adjoint();
  return std::pow(a.determinant().real(), -m);
}

MonteCarloMean pep_average_monte_carlo(const Eigen::MatrixXcd& x, double c, int m,
                                       std::size_t draws, Rng& rng) {
  if (draws < 2) throw UsageError("Monte Carlo average needs at least 2 draws");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    const Eigen::MatrixXcd h = sample_channel(m, static_cast<int>(x.rows()), rng);
    const double v = std::exp(-c * (h * x).squaredNorm());
    sum += v;
    sum_sq += v * v;
  }
  const double n = double(draws);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1));
  return {mean, std::sqrt(variance / n)};
}

void validate(const SimConfig& config) {
  const Algebra algebra = build_preset(config.preset);
  if (config.n != algebra.preset.degree_n) {
    throw UsageError("preset " + config.preset + " has n = " +
                     std::to_string(algebra.preset.degree_n));
  }
  if (config.m < 1) throw UsageError("m must be positive");
  if (!(config.r >= 0.0)) throw UsageError("r must be nonnegative");
  if (config.trials < 100) throw UsageError("trials must be at least 100");
  if (config.rho_list.empty()) throw UsageError("rho list is empty");
  for (std::size_t i = 0; i < config.rho_list.size(); ++i) {
    if (!(config.rho_list[i] > 0.0)) throw UsageError("SNR values must be positive");
    if (i > 0 && !(config.rho_list[i] > config.rho_list[i - 1])) {
      throw UsageError("SNR values must be strictly ascending");
    }
  }
  if (config.radius && !(*config.radius > 0.0)) throw UsageError("radius must be positive");
}

SlopeFit fit_error_slope(std::vector<SimPoint>& points) {
  std::vector<double> x, y, var;
  for (SimPoint& pt : points) {
    pt.excluded_from_slope = pt.errors < kMinSlopeErrors || pt.errors == pt.trials;
    if (pt.excluded_from_slope) continue;
    x.push_back(std::log10(pt.rho));
    y.push_back(std::log10(pt.pe_hat));
    const double ln10 = std::log(10.0);
    var.push_back((1.0 - pt.pe_hat) / (double(pt.trials) * pt.pe_hat * ln10 * ln10));
  }
  SlopeFit fit;
  fit.points = x.size();
  if (x.size() < 2) return fit;
  fit.value = least_squares(x, y).slope;
  std::vector<double> w(x.size());
  slope_weights(x, w);
  double se2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) se2 += w[i] * w[i] * var[i];
  fit.standard_error = std::sqrt(se2);
  fit.measurable = true;
  return fit;
}

SimResult estimate_pe(const SimConfig& config) {
  validate(config);
  const Algebra algebra = build_preset(config.preset);
  SimResult result;
  std::optional<Codebook> fixed;
  if (config.radius) fixed = build_code_with_radius(algebra, *config.radius);

  for (std::size_t ri = 0; ri < config.rho_list.size(); ++ri) {
    const double rho = config.rho_list[ri];
    const Codebook book = fixed ? *fixed : build_code(algebra, rho, config.r);
    const MlDecoder decoder(book, config.decoder_cap);
    const UnionBound bound(book);
    const std::uint64_t ub_draws =
        config.union_bound_draws == 0 ? config.trials
                                      : std::min(config.union_bound_draws, config.trials);

    SimPoint pt;
    pt.rho = rho;
    pt.codebook_size = book.size();
    pt.trials = config.trials;
    double ub_sum = 0.0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      Rng rng = derived_rng(config.seed, ri, t);
      const Eigen::MatrixXcd h = sample_channel(config.m, config.n, rng);
      const Transmission tx = transmit_and_decode(decoder, h, rho, rng);
      if (tx.sent != tx.decoded) ++pt.errors;
      if (t < ub_draws) ub_sum += std::min(1.0, bound(h, rho));
    }
    pt.pe_hat = double(pt.errors) / double(pt.trials);
    const Interval ci = wilson_interval(pt.errors, pt.trials);
    pt.ci_low = ci.low;
    pt.ci_high = ci.high;
    pt.union_bound_mean = ub_sum / double(ub_draws);
    result.points.push_back(pt);
  }
  result.slope = fit_error_slope(result.points);
  return result;
}

}  // namespace divdmt
