#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divdmt/errors.hpp"
#include "divdmt/sim.hpp"

#include <cmath>

using namespace divdmt;

namespace {

const Algebra& lipschitz() {
  static const Algebra a = build_preset(PresetId::LipschitzRamified);
  return a;
}

SimConfig small_config() {
  SimConfig c;
  c.radius = std::sqrt(2.0);
  c.rho_list = {std::pow(10.0, 0.5), 10.0, std::pow(10.0, 1.5)};
  c.trials = 400;
  c.seed = 99;
  return c;
}

}  // namespace

TEST_CASE("channel statistics") {
  Rng rng(1);
  const int draws = 100000;
  double sum = 0.0, sum_sq = 0.0;
  std::complex<double> entry_sum = 0.0;
  double entry_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const Eigen::MatrixXcd h = sample_channel(2, 2, rng);
    const double e = h.squaredNorm();
    sum += e;
    sum_sq += e * e;
    entry_sum += h(0, 1);
    entry_sq += std::norm(h(0, 1));
  }
  const double mean = sum / draws;
  const double sd = std::sqrt(sum_sq / draws - mean * mean);
  CHECK(std::abs(mean - 4.0) <= 3.0 * sd / std::sqrt(double(draws)));
  const double entry_sd = std::sqrt(entry_sq / draws / 2.0);
  CHECK(std::abs(entry_sum.real() / draws) <= 3.0 * entry_sd / std::sqrt(double(draws)));
  CHECK(std::abs(entry_sum.imag() / draws) <= 3.0 * entry_sd / std::sqrt(double(draws)));

  Rng a = derived_rng(5, 1, 2), b = derived_rng(5, 1, 2), c = derived_rng(5, 1, 3);
  const Eigen::MatrixXcd ha = sample_channel(2, 2, a);
  CHECK(ha == sample_channel(2, 2, b));
  CHECK(ha != sample_channel(2, 2, c));
}

TEST_CASE("noiseless decoding recovers the codeword") {
  const Codebook book = build_code_with_radius(lipschitz(), 3.0);
  const MlDecoder decoder(book);
  const Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  for (std::size_t i = 0; i < decoder.size(); ++i) {
    CHECK(transmit_and_decode(decoder, h, 10.0, i, zero).decoded == i);
  }
  CHECK_THROWS_AS(MlDecoder(book, 10), CapacityError);
}

TEST_CASE("single-codeword code never errs") {
  SimConfig c = small_config();
  c.radius = 0.5;
  const SimResult r = estimate_pe(c);
  for (const auto& p : r.points) {
    CHECK(p.codebook_size == 1);
    CHECK(p.errors == 0);
    CHECK(p.union_bound_mean == 0.0);
  }
  const Codebook one = build_code_with_radius(lipschitz(), 0.5);
  CHECK(union_bound_conditional(one, Eigen::MatrixXcd::Zero(2, 2), 10.0) == 0.0);
}

TEST_CASE("pairwise Chernoff bound") {
  const Eigen::MatrixXcd h = Eigen::MatrixXcd::Random(2, 2);
  CHECK(pairwise_chernoff(h, Eigen::MatrixXcd::Zero(2, 2), 10.0, 2) == 1.0);
  CHECK(pairwise_chernoff(Eigen::MatrixXcd::Zero(2, 2), h, 10.0, 2) == 1.0);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  CHECK(pairwise_chernoff(Eigen::MatrixXcd::Identity(2, 2), d, 16.0, 2) ==
        doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("Q function") {
  CHECK(q_function(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(q_function(1.0) == doctest::Approx(0.158655253931457).epsilon(1e-10));
  CHECK(q_function(3.0) == doctest::Approx(0.00134989803163009).epsilon(1e-10));
  CHECK(q_function(-1.0) == doctest::Approx(1.0 - 0.158655253931457).epsilon(1e-10));
}

TEST_CASE("exact pairwise error is below the Chernoff bound") {
  Rng rng(8);
  std::uniform_real_distribution<double> db(-10.0, 40.0);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::MatrixXcd h = sample_channel(2, 2, rng);
    const Eigen::MatrixXcd delta = sample_channel(2, 2, rng);
    const double rho = std::pow(10.0, db(rng) / 10.0);
    const double exact = q_function(std::sqrt(rho / 4.0) * (h * delta).norm());
    CHECK(exact <= pairwise_chernoff(h, delta, rho, 2));
  }
}

TEST_CASE("union bound") {
  const Codebook book = build_code_with_radius(lipschitz(), 2.0);
  const UnionBound ub(book);
  CHECK(ub.difference_count() == count_ball(lipschitz(), 4.0));
  CHECK(ub(Eigen::MatrixXcd::Zero(2, 2), 10.0) == doctest::Approx(double(ub.difference_count())));

  // quadratic-form evaluation equals the direct sum over difference matrices
  Rng rng(4);
  const auto diffs = enumerate_ball(lipschitz(), 4.0);
  for (int t = 0; t < 5; ++t) {
    const Eigen::MatrixXcd h = sample_channel(2, 2, rng);
    double direct = 0.0;
    for (const auto& x : diffs) {
      direct += pairwise_chernoff(h, embed(x, lipschitz()).entries / 2.0, 10.0, 2);
    }
    CHECK(ub(h, 10.0) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("union bound dominates the conditional error frequency") {
  const Codebook book = build_code_with_radius(lipschitz(), 2.0);
  const MlDecoder decoder(book);
  const UnionBound ub(book);
  const double rho = 100.0;
  for (int t = 0; t < 20; ++t) {
    Rng hr = derived_rng(31, 0, t);
    const Eigen::MatrixXcd h = sample_channel(2, 2, hr);
    int errors = 0;
    const int draws = 1000;
    for (int i = 0; i < draws; ++i) {
      Rng rng = derived_rng(31, 1 + t, i);
      const Transmission tx = transmit_and_decode(decoder, h, rho, rng);
      errors += tx.sent != tx.decoded;
    }
    const double f = double(errors) / draws;
    const double sigma = std::sqrt(std::max(f * (1 - f), 1.0 / draws) / draws);
    CHECK(f <= ub(h, rho) + 2.0 * sigma);
  }
}

TEST_CASE("Gaussian determinant identity") {
  CHECK(pep_average_closed(Eigen::MatrixXcd::Zero(2, 2), 1.0, 2) == 1.0);
  CHECK(pep_average_closed(Eigen::MatrixXcd::Identity(2, 2), 1.0, 2) == doctest::Approx(1.0 / 16));
  for (int i = 0; i < 5; ++i) {
    Rng xr = derived_rng(77, 0, i);
    const Eigen::MatrixXcd x = sample_channel(2, 2, xr);
    for (const auto& [c, m] : {std::pair{1.0, 1}, std::pair{1.0, 2}, std::pair{5.0, 2}}) {
      Rng rng = derived_rng(77, 1, i);
      const MonteCarloMean mc = pep_average_monte_carlo(x, c, m, 100000, rng);
      CHECK(std::abs(mc.mean - pep_average_closed(x, c, m)) <= 3.0 * mc.standard_error);
    }
  }
}

TEST_CASE("estimate_pe is reproducible and seed dependent") {
  const SimConfig c = small_config();
  const SimResult a = estimate_pe(c);
  const SimResult b = estimate_pe(c);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].errors == b.points[i].errors);
    CHECK(a.points[i].union_bound_mean == b.points[i].union_bound_mean);
  }
  SimConfig other = c;
  other.seed = 100;
  const SimResult d = estimate_pe(other);
  bool differs = false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    differs = differs || a.points[i].errors != d.points[i].errors;
  }
  CHECK(differs);
}

TEST_CASE("result invariants") {
  SimConfig c = small_config();
  c.rho_list = {1.0, 10.0, 100.0, 1000.0, 10000.0};
  c.trials = 2000;
  const SimResult r = estimate_pe(c);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const SimPoint& p = r.points[i];
    CHECK(0.0 <= p.ci_low);
    CHECK(p.ci_low <= p.pe_hat);
    CHECK(p.pe_hat <= p.ci_high);
    CHECK(p.ci_high <= 1.0);
    CHECK(p.pe_hat <= p.union_bound_mean + (p.ci_high - p.ci_low) / 2);
    if (i > 0) CHECK(p.ci_low <= r.points[i - 1].ci_high);
  }
}

TEST_CASE("no signal: error rate is 1 - 1/|C|") {
  SimConfig c = small_config();
  c.rho_list = {1e-9};
  c.trials = 2000;
  const SimPoint p = estimate_pe(c).points.front();
  CHECK(p.codebook_size == 9);
  const double expected = 1.0 - 1.0 / 9.0;
  CHECK(p.ci_low <= expected);
  CHECK(expected <= p.ci_high);
}

TEST_CASE("interval width scales as 1/sqrt(trials)") {
  SimConfig c = small_config();
  c.rho_list = {10.0};
  c.trials = 4000;
  const SimPoint a = estimate_pe(c).points.front();
  c.trials = 8000;
  const SimPoint b = estimate_pe(c).points.front();
  const double ratio = (b.ci_high - b.ci_low) / (a.ci_high - a.ci_low);
  CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("config validation") {
  SimConfig c = small_config();
  c.trials = 99;
  CHECK_THROWS_AS(estimate_pe(c), UsageError);
  c = small_config();
  c.rho_list = {10.0, 5.0};
  CHECK_THROWS_AS(estimate_pe(c), UsageError);
  c = small_config();
  c.n = 3;
  CHECK_THROWS_AS(estimate_pe(c), UsageError);
  c = small_config();
  c.preset = "SPLIT";
  CHECK_THROWS_AS(estimate_pe(c), UsageError);
  c = small_config();
  c.radius.reset();
  c.r = 1.0;
  c.rho_list = {0.5, 10.0};
  CHECK_THROWS_AS(estimate_pe(c), DomainError);
}

TEST_CASE("error slope fit") {
  std::vector<SimPoint> pts;
  for (int i = 0; i < 4; ++i) {
    SimPoint p;
    p.rho = std::pow(10.0, 1.0 + 0.5 * i);
    p.trials = 1000000;
    p.pe_hat = 0.1 * std::pow(10.0, -1.5 * i);
    p.errors = static_cast<std::uint64_t>(std::llround(p.pe_hat * p.trials));
    pts.push_back(p);
  }
  const SlopeFit f = fit_error_slope(pts);
  CHECK(f.measurable);
  CHECK(f.points == 3);  // the last point has 3 errors
  CHECK(pts.back().excluded_from_slope);
  CHECK(f.value == doctest::Approx(-3.0).epsilon(1e-3));
  CHECK(f.standard_error > 0.0);
  CHECK(f.ci95().high < 0.0);
}
