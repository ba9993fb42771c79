#include "divdmt/codebook.hpp"

#include "divdmt/errors.hpp"
#include "divdmt/format.hpp"
#include "divdmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace divdmt {

namespace {

// Squared-radius slack so that points on the sphere are kept and every kept
// point has ||psi(x)|| <= M + 1e-9.
double radius_sq_with_slack(double radius) { return radius * radius + 1e-9 * radius + 1e-15; }

class FinckePohst {
 public:
  FinckePohst(const Eigen::MatrixXd& gram, double radius)
      : k_(static_cast<int>(gram.rows())), v_(Coords::Zero(k_)) {
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) throw std::logic_error("Gram matrix is not positive definite");
    r_ = llt.matrixU();
    bound_ = radius_sq_with_slack(radius);
  }

  void visit_all(const std::function<void(const Coords&)>& visit) {
    visit_ = &visit;
    recurse(k_ - 1, bound_, false);
  }

  std::uint64_t count_all() {
    count_ = 0;
    visit_ = nullptr;
    recurse(k_ - 1, bound_, true);
    return count_;
  }

 private:
  // Level i chooses v_i given v_{i+1..k-1} and the remaining budget.
  void recurse(int i, double budget, bool count_only) {
    double tail = 0.0;
    for (int j = i + 1; j < k_; ++j) tail += r_(i, j) * double(v_[j]);
    const double rii = r_(i, i);
    const double center = -tail / rii;
    const double half = std::sqrt(std::max(budget, 0.0)) / rii + 1e-12;
    const auto lo = static_cast<std::int64_t>(std::ceil(center - half));
    const auto hi = static_cast<std::int64_t>(std::floor(center + half));
    if (lo > hi) return;

    if (i == 0 && count_only) {
      std::uint64_t n = static_cast<std::uint64_t>(hi - lo + 1);
      if (lo <= 0 && hi >= 0 && v_.tail(k_ - 1).isZero()) --n;  // exclude v = 0
      count_ += n;
      return;
    }
    for (std::int64_t x = lo; x <= hi; ++x) {
      v_[i] = x;
      const double d = rii * (double(x) - center);
      const double rest = budget - d * d;
      if (rest < -1e-12 * (1.0 + bound_)) continue;
      if (i == 0) {
        if (!v_.isZero()) (*visit_)(v_);
      } else {
        recurse(i - 1, rest, count_only);
      }
    }
    v_[i] = 0;
  }

  int k_;
  Eigen::MatrixXd r_;
  Coords v_;
  double bound_ = 0.0;
  const std::function<void(const Coords&)>* visit_ = nullptr;
  std::uint64_t count_ = 0;
};

void check_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("ball radius must be positive and finite");
  }
}

}  // namespace

double estimate_ball_count(const Algebra& algebra, double radius) {
  const Eigen::MatrixXd g = gram_matrix(algebra.basis);
  const double k = double(g.rows());
  const double log_vol = 0.5 * k * std::log(std::numbers::pi) - std::lgamma(0.5 * k + 1.0) +
                         k * std::log(radius);
  return std::exp(log_vol - 0.5 * std::log(g.determinant()));
}

void for_each_lattice_point(const Eigen::MatrixXd& gram, double radius,
                            const std::function<void(const Coords&)>& visit) {
  check_radius(radius);
  FinckePohst(gram, radius).visit_all(visit);
}

std::uint64_t count_lattice_points(const Eigen::MatrixXd& gram, double radius) {
  check_radius(radius);
  return FinckePohst(gram, radius).count_all();
}

std::vector<AlgebraElement> enumerate_ball(const Algebra& algebra, double radius,
                                           std::size_t cap) {
  check_radius(radius);
  const double predicted = estimate_ball_count(algebra, radius);
  if (predicted > double(cap)) {
    std::ostringstream msg;
    msg << "Frobenius ball of radius " << radius << " holds about " << std::llround(predicted)
        << " lattice points, above the enumeration cap of " << cap;
    throw CapacityError(msg.str());
  }
  const Eigen::MatrixXd g = gram_matrix(algebra.basis);
  const double limit = radius_sq_with_slack(radius);
  std::vector<AlgebraElement> out;
  for_each_lattice_point(g, radius, [&](const Coords& v) {
    const Eigen::VectorXd vd = v.cast<double>();
    if (vd.dot(g * vd) > limit) return;
    if (out.size() >= cap) {
      throw CapacityError("enumeration exceeded the cap of " + std::to_string(cap) + " points");
    }
    out.emplace_back(v);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::uint64_t count_ball(const Algebra& algebra, double radius) {
  return count_lattice_points(gram_matrix(algebra.basis), radius);
}

double Codebook::average_power() const {
  if (matrices.empty()) return 0.0;
  const double n = double(degree());
  double total = 0.0;
  for (const CodeMatrix& x : matrices) total += x.fro_norm * x.fro_norm;
  return total / (double(matrices.size()) * n * n);
}

Codebook build_code_with_radius(const Algebra& algebra, double radius, std::size_t cap) {
  Codebook book;
  book.algebra = algebra;
  book.radius = radius;
  book.raw_elements = enumerate_ball(algebra, radius, cap);
  book.raw_elements.emplace_back(Coords::Zero(algebra.basis.basis_size));
  std::sort(book.raw_elements.begin(), book.raw_elements.end(), lex_less);
  book.matrices.reserve(book.raw_elements.size());
  for (const AlgebraElement& x : book.raw_elements) {
    book.matrices.emplace_back(embed_matrix(x.coords, algebra.basis) / radius);
  }
  return book;
}

Codebook build_code(const Algebra& algebra, double rho, double r, std::size_t cap) {
  if (!(rho > 1.0)) throw DomainError("build_code requires rho > 1");
  if (!(r >= 0.0)) throw DomainError("multiplexing gain must be nonnegative");
  const double exponent = r * algebra.preset.degree_n / algebra.preset.dim_k;
  Codebook book = build_code_with_radius(algebra, std::pow(rho, exponent), cap);
  book.rho = rho;
  book.r = r;
  return book;
}

SlopeEstimate multiplexing_slope(const Algebra& algebra, std::span<const double> rho_list,
                                 double r) {
  if (rho_list.size() < 3) throw UsageError("multiplexing slope needs at least 3 SNR points");
  const double exponent = r * algebra.preset.degree_n / algebra.preset.dim_k;
  std::vector<double> x, y;
  bool any_growth = false;
  for (double rho : rho_list) {
    if (!(rho > 1.0)) throw DomainError("SNR values must exceed 1 (linear scale)");
    const double size = double(count_ball(algebra, std::pow(rho, exponent)) + 1);
    any_growth = any_growth || size > 1.0;
    x.push_back(std::log(rho));
    y.push_back(std::log(size));
  }
  if (!any_growth) return {0.0, false};
  return {least_squares(x, y).slope / algebra.preset.degree_n, true};
}

std::vector<AlgebraElement> unit_group(const Algebra& algebra) {
  if (!algebra.preset.has_definite_norm()) {
    throw UnsupportedError(std::string(to_string(algebra.preset.id)) +
                           " has an infinite unit group");
  }
  // |det| = 1 and psi(x) a scaled unitary give ||psi(x)||^2 = n.
  std::vector<AlgebraElement> units;
  for (AlgebraElement& x : enumerate_ball(algebra, std::sqrt(double(algebra.preset.degree_n)))) {
    if (reduced_norm(x, algebra).abs() == 1.0) units.push_back(std::move(x));
  }
  return units;
}

AlgebraElement orbit_representative(const AlgebraElement& x, std::span<const AlgebraElement> units,
                                    const OrderBasis& basis) {
  AlgebraElement best = x;
  for (const AlgebraElement& u : units) {
    AlgebraElement y = multiply(x, u, basis);
    if (lex_less(y, best)) best = std::move(y);
  }
  return best;
}

std::vector<double> integer_thresholds(double a_max) {
  if (!(a_max >= 1.0)) throw DomainError("A_max must be at least 1");
  std::vector<double> t;
  for (int a = 1; a <= int(std::floor(a_max)); ++a) t.push_back(a);
  if (t.back() != a_max) t.push_back(a_max);
  return t;
}

CountTable count_dets(const Algebra& algebra, std::span<const double> thresholds, bool with_ideals,
                      std::optional<double> frobenius_cap) {
  if (thresholds.empty()) throw UsageError("count_dets needs at least one threshold");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0) || (i > 0 && !(thresholds[i] > thresholds[i - 1]))) {
      throw UsageError("thresholds must be positive and strictly ascending");
    }
  }
  if (with_ideals && !algebra.preset.has_definite_norm()) {
    throw UnsupportedError("ideal counting needs a finite unit group; " +
                           std::string(to_string(algebra.preset.id)) + " has infinitely many units");
  }
  const double a_max = thresholds.back();
  const double n = double(algebra.preset.degree_n);
  double radius = 0.0;
  if (frobenius_cap) {
    radius = *frobenius_cap;
  } else if (algebra.preset.has_definite_norm()) {
    radius = std::sqrt(n) * std::pow(a_max, 1.0 / n) * (1.0 + 1e-12);
  } else {
    throw UsageError("counting determinants for " + std::string(to_string(algebra.preset.id)) +
                     " needs an explicit Frobenius cap");
  }

  const std::vector<AlgebraElement> elements = enumerate_ball(algebra, radius);
  std::vector<double> dets;
  dets.reserve(elements.size());
  for (const AlgebraElement& x : elements) dets.push_back(reduced_norm(x, algebra).abs());

  auto count_upto = [&](const std::vector<double>& sorted_dets, double a) {
    return static_cast<std::uint64_t>(
        std::upper_bound(sorted_dets.begin(), sorted_dets.end(), a + 1e-9) - sorted_dets.begin());
  };

  CountTable table;
  table.thresholds.assign(thresholds.begin(), thresholds.end());
  std::vector<double> sorted = dets;
  std::sort(sorted.begin(), sorted.end());
  for (double a : thresholds) table.element_counts.push_back(count_upto(sorted, a));

  if (with_ideals) {
    const std::vector<AlgebraElement> units = unit_group(algebra);
    auto coords_less = [](const Coords& a, const Coords& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::set<Coords, decltype(coords_less)> seen(coords_less);
    std::vector<double> ideal_dets;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (dets[i] > a_max + 1e-9) continue;
      if (seen.insert(orbit_representative(elements[i], units, algebra.basis).coords).second) {
        ideal_dets.push_back(dets[i]);
      }
    }
    std::sort(ideal_dets.begin(), ideal_dets.end());
    std::vector<std::uint64_t> ideals;
    for (double a : thresholds) ideals.push_back(count_upto(ideal_dets, a));
    table.ideal_counts = std::move(ideals);
  }
  return table;
}

CountTable count_ball_table(const Algebra& algebra, std::span<const double> radii) {
  CountTable table;
  for (double m : radii) {
    table.thresholds.push_back(m);
    table.element_counts.push_back(count_ball(algebra, m));
  }
  return table;
}

SlopeEstimate growth_exponent(const CountTable& table, CountSeries series) {
  const auto& t = table.thresholds;
  if (t.size() < 5) throw UsageError("growth exponent needs at least 5 thresholds");
  if (!(t.front() > 0.0) || t.back() < 10.0 * t.front()) {
    throw UsageError("growth exponent thresholds must span at least one decade");
  }
  if (series == CountSeries::Ideals && !table.ideal_counts) {
    throw UsageError("count table has no ideal counts");
  }
  const std::vector<std::uint64_t>& counts =
      series == CountSeries::Ideals ? *table.ideal_counts : table.element_counts;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (counts[i] == 0) continue;
    x.push_back(std::log(t[i]));
    y.push_back(std::log(double(counts[i])));
  }
  if (x.size() < 3) return {0.0, false};
  return {least_squares(x, y).slope, true};
}

void write_csv(std::ostream& os, const CountTable& table, std::string_view threshold_column) {
  os << threshold_column << ",element_count,ideal_count\n";
  for (std::size_t i = 0; i < table.thresholds.size(); ++i) {
    os << format_number(table.thresholds[i]) << ',' << table.element_counts[i] << ',';
    if (table.ideal_counts) os << (*table.ideal_counts)[i];
    os << '\n';
  }
}

void write_csv(std::ostream& os, const Codebook& codebook) {
  os << "index,coords,fro_norm,abs_det\n";
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    os << i << ',';
    const Coords& c = codebook.raw_elements[i].coords;
    for (Eigen::Index j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j];
    os << ',' << format_number(codebook.matrices[i].fro_norm) << ','
       << format_number(codebook.matrices[i].abs_det) << '\n';
  }
}

}  // namespace divdmt
