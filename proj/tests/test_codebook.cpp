#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divdmt/codebook.hpp"
#include "divdmt/errors.hpp"
#include "divdmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

using namespace divdmt;

namespace {

using CoordList = std::vector<std::vector<std::int64_t>>;

std::vector<std::int64_t> to_vec(const Coords& c) { return {c.begin(), c.end()}; }

// Exhaustive box search: |v_i| <= M sqrt((G^-1)_ii) bounds every point of the ball.
CoordList box_oracle(const Algebra& a, double radius) {
  const Eigen::MatrixXd g = gram_matrix(a.basis);
  const Eigen::MatrixXd inv = g.inverse();
  const int k = a.basis.basis_size;
  std::vector<int> bound(k);
  for (int i = 0; i < k; ++i) bound[i] = int(std::floor(radius * std::sqrt(inv(i, i)) + 1e-9));
  CoordList out;
  Eigen::VectorXd v(k);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = -bound[i];
  for (;;) {
    for (int i = 0; i < k; ++i) v[i] = idx[i];
    const double q = v.dot(g * v);
    if (!v.isZero() && q <= radius * radius + 1e-9) {
      out.emplace_back(idx.begin(), idx.end());
    }
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == bound[pos]) {
      idx[pos] = -bound[pos];
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoordList as_list(const std::vector<AlgebraElement>& xs) {
  CoordList out;
  for (const auto& x : xs) out.push_back(to_vec(x.coords));
  return out;
}

}  // namespace

TEST_CASE("small Lipschitz balls") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  CHECK(enumerate_ball(lip, std::sqrt(2.0)).size() == 8);
  const auto ball2 = enumerate_ball(lip, 2.0);
  CHECK(ball2.size() == 32);
  int unit_norm = 0;
  for (const auto& x : ball2) unit_norm += reduced_norm(x, lip).re == 1;
  CHECK(unit_norm == 8);
  CHECK(enumerate_ball(lip, 0.5).empty());
  CHECK(count_ball(lip, 2.0) == 32);
}

TEST_CASE("enumeration matches exhaustive box search") {
  const std::pair<PresetId, double> cases[] = {{PresetId::LipschitzRamified, 3.3},
                                               {PresetId::QuaternionUnramified, 4.1},
                                               {PresetId::GoldenGaussian, 2.6}};
  for (const auto& [id, radius] : cases) {
    CAPTURE(to_string(id));
    const Algebra a = build_preset(id);
    const auto found = enumerate_ball(a, radius);
    CHECK(as_list(found) == box_oracle(a, radius));
    CHECK(count_ball(a, radius) == found.size());
    CHECK(std::is_sorted(found.begin(), found.end(), lex_less));
  }
}

TEST_CASE("ball invariants") {
  for (PresetId id : all_presets()) {
    CAPTURE(to_string(id));
    const Algebra a = build_preset(id);
    const auto small = enumerate_ball(a, 2.5);
    const auto large = enumerate_ball(a, 3.5);
    std::set<std::vector<std::int64_t>> big;
    for (const auto& x : large) big.insert(to_vec(x.coords));
    for (const auto& x : small) {
      CHECK(big.count(to_vec(x.coords)) == 1);
      CHECK(big.count(to_vec((-x).coords)) == 1);
    }
    for (const auto& x : large) {
      CHECK(big.count(to_vec((-x).coords)) == 1);
      const CodeMatrix c = embed(x, a);
      CHECK(c.fro_norm <= 3.5 + 1e-9);
      CHECK(std::sqrt(c.abs_det) <= c.fro_norm + 1e-9);
    }
  }
}

TEST_CASE("enumeration cap") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  CHECK_THROWS_AS(enumerate_ball(lip, 10.0, 100), CapacityError);
  CHECK_THROWS_AS(enumerate_ball(lip, -1.0), DomainError);
}

TEST_CASE("normalized codes") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  const Codebook zero = build_code(lip, 100.0, 0.0);
  CHECK(zero.radius == doctest::Approx(1.0));
  CHECK(zero.size() == 1);
  CHECK(zero.raw_elements[0].is_zero());

  const Codebook book = build_code(lip, 100.0, 1.0);
  CHECK(book.radius == doctest::Approx(10.0));
  CHECK(book.size() == count_ball(lip, 10.0) + 1);
  CHECK(book.average_power() <= 1.0 + 1e-9);
  for (const auto& x : book.raw_elements) CHECK(embed(x, lip).fro_norm <= book.radius + 1e-9);
  for (const auto& m : book.matrices) CHECK(m.fro_norm <= 1.0 + 1e-9);

  for (PresetId id : all_presets()) {
    const Algebra a = build_preset(id);
    CHECK(build_code(a, 100.0, 1.0).average_power() <= 1.0 + 1e-9);
  }
  CHECK_THROWS_AS(build_code(lip, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(build_code(lip, 10.0, -1.0), DomainError);
}

TEST_CASE("multiplexing slope") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  const std::vector<double> rhos{1e2, 1e3, 1e4};
  const SlopeEstimate one = multiplexing_slope(lip, rhos, 1.0);
  CHECK(one.measurable);
  CHECK(std::abs(one.value - 1.0) <= 0.25);

  const SlopeEstimate flat = multiplexing_slope(lip, rhos, 0.0);
  CHECK_FALSE(flat.measurable);
  CHECK(flat.value == 0.0);

  CHECK_THROWS_AS(multiplexing_slope(lip, std::vector<double>{10.0, 100.0}, 1.0), UsageError);

  // rescaling every rho shifts log rho by a constant
  const std::vector<double> x{1.0, 2.0, 3.5}, y{0.3, 1.1, 2.9};
  std::vector<double> shifted = x;
  for (double& v : shifted) v += std::log(7.0);
  CHECK(least_squares(x, y).slope == doctest::Approx(least_squares(shifted, y).slope));
}

TEST_CASE("determinant counting") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  const std::vector<double> a{1.0, 2.0};
  const CountTable t = count_dets(lip, a, true);
  CHECK(t.element_counts == std::vector<std::uint64_t>{8, 32});
  CHECK(*t.ideal_counts == std::vector<std::uint64_t>{1, 4});

  const CountTable big = count_dets(lip, integer_thresholds(20.0), true);
  for (std::size_t i = 0; i < big.thresholds.size(); ++i) {
    CHECK((*big.ideal_counts)[i] <= big.element_counts[i]);
    if (i > 0) {
      CHECK(big.element_counts[i] >= big.element_counts[i - 1]);
      CHECK((*big.ideal_counts)[i] >= (*big.ideal_counts)[i - 1]);
    }
  }
  // The unit group acts freely: every orbit has 8 elements.
  CHECK(big.element_counts.back() == 8 * big.ideal_counts->back());

  const Algebra unr = build_preset(PresetId::QuaternionUnramified);
  CHECK_THROWS_AS(count_dets(unr, a, true, 6.0), UnsupportedError);
  CHECK_THROWS_AS(count_dets(unr, a, false), UsageError);
  const CountTable capped = count_dets(unr, integer_thresholds(10.0), false, 6.0);
  CHECK(std::is_sorted(capped.element_counts.begin(), capped.element_counts.end()));
  CHECK(capped.element_counts.front() > 0);
}

TEST_CASE("orbit representatives do not depend on enumeration order") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  const auto units = unit_group(lip);
  CHECK(units.size() == 8);
  auto elements = enumerate_ball(lip, 4.0);
  auto reps = [&](const std::vector<AlgebraElement>& xs) {
    std::vector<std::vector<std::int64_t>> seen;
    for (const auto& x : xs) {
      auto r = to_vec(orbit_representative(x, units, lip.basis).coords);
      if (std::find(seen.begin(), seen.end(), r) == seen.end()) seen.push_back(r);
    }
    std::sort(seen.begin(), seen.end());
    return seen;
  };
  const auto reference = reps(elements);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(elements.begin(), elements.end(), rng);
    CHECK(reps(elements) == reference);
  }
  CHECK(elements.size() == 8 * reference.size());
}

TEST_CASE("growth exponent") {
  CountTable constant;
  constant.thresholds = {1, 2, 5, 10, 20};
  constant.element_counts = {7, 7, 7, 7, 7};
  const SlopeEstimate flat = growth_exponent(constant, CountSeries::Elements);
  CHECK(flat.measurable);
  CHECK(flat.value == doctest::Approx(0.0));

  CountTable sparse = constant;
  sparse.element_counts = {0, 0, 0, 3, 9};
  CHECK_FALSE(growth_exponent(sparse, CountSeries::Elements).measurable);

  CountTable short_table = constant;
  short_table.thresholds = {1, 2, 3, 4, 5};
  CHECK_THROWS_AS(growth_exponent(short_table, CountSeries::Elements), UsageError);
  CHECK_THROWS_AS(growth_exponent(constant, CountSeries::Ideals), UsageError);

  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  const std::vector<double> a{2, 5, 10, 20, 50};
  const SlopeEstimate ideals = growth_exponent(count_dets(lip, a, true));
  CHECK(ideals.measurable);
  CHECK(std::abs(ideals.value - 2.0) <= 0.2);
}

TEST_CASE("csv output") {
  const Algebra lip = build_preset(PresetId::LipschitzRamified);
  std::ostringstream os;
  write_csv(os, count_dets(lip, std::vector<double>{1.0, 2.0}, true));
  CHECK(os.str() == "A,element_count,ideal_count\n1,8,1\n2,32,4\n");

  std::ostringstream cb;
  write_csv(cb, build_code_with_radius(lip, std::sqrt(2.0)));
  const std::string text = cb.str();
  CHECK(text.rfind("index,coords,fro_norm,abs_det\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  CHECK(text.find("\n0,-1 0 0 0,1,0.5\n") != std::string::npos);
}
