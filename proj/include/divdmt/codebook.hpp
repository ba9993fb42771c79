#ifndef DIVDMT_CODEBOOK_HPP
#define DIVDMT_CODEBOOK_HPP

// Lattice codebooks Lambda(M) = { x in order : ||psi(x)||_F <= M }, the
// normalized codes C(rho) = M^{-1} psi(Lambda(M)) with M = rho^{rn/k}, and the
// determinant counting used to check growth exponents.

#include "divdmt/algebra.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace divdmt {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Expected number of lattice points in the Frobenius ball of radius M
/// (ball volume over covolume).
double estimate_ball_count(const Algebra& algebra, double radius);

/// Fincke-Pohst enumeration of integer vectors v != 0 with v^T G v <= M^2,
/// calling visit(v) for each. G must be symmetric positive definite.
void for_each_lattice_point(const Eigen::MatrixXd& gram, double radius,
                            const std::function<void(const Coords&)>& visit);

/// Number of nonzero points with v^T G v <= M^2, without materializing them.
std::uint64_t count_lattice_points(const Eigen::MatrixXd& gram, double radius);

/// All nonzero x with ||psi(x)|| <= M, sorted lexicographically by coordinates.
/// Throws CapacityError if the predicted or actual count exceeds cap.
std::vector<AlgebraElement> enumerate_ball(const Algebra& algebra, double radius,
                                           std::size_t cap = kDefaultEnumerationCap);

std::uint64_t count_ball(const Algebra& algebra, double radius);

struct Codebook {
  Algebra algebra;
  double radius = 0.0;  // M
  double rho = 0.0;     // 0 when built from a fixed radius
  double r = 0.0;
  std::vector<AlgebraElement> raw_elements;  // includes 0, lexicographic order
  std::vector<CodeMatrix> matrices;          // M^{-1} psi(x)

  std::size_t size() const { return raw_elements.size(); }
  int degree() const { return algebra.preset.degree_n; }

  /// (1/|C|) (1/n^2) sum ||X||^2
  double average_power() const;
};

/// C(rho) with M = rho^{rn/k}; requires rho > 1 and r >= 0.
Codebook build_code(const Algebra& algebra, double rho, double r,
                    std::size_t cap = kDefaultEnumerationCap);

/// M^{-1} psi(Lambda(M) u {0}) for a fixed M.
Codebook build_code_with_radius(const Algebra& algebra, double radius,
                                std::size_t cap = kDefaultEnumerationCap);

struct SlopeEstimate {
  double value = 0.0;
  bool measurable = false;
};

/// Least-squares slope of log|C(rho)| against log rho, divided by n.
SlopeEstimate multiplexing_slope(const Algebra& algebra, std::span<const double> rho_list,
                                 double r);

struct CountTable {
  std::vector<double> thresholds;
  std::vector<std::uint64_t> element_counts;
  std::optional<std::vector<std::uint64_t>> ideal_counts;
};

/// Counts of nonzero x with |det psi(x)| <= A for each threshold A.
///
/// For definite presets the search region is derived from A (|det| fixes
/// ||psi(x)||); for the others an explicit Frobenius cap must be given and
/// only elements inside it are counted. Ideal counts (unit orbits under right
/// multiplication) need a finite unit group and throw UnsupportedError
/// otherwise.
CountTable count_dets(const Algebra& algebra, std::span<const double> thresholds,
                      bool with_ideals, std::optional<double> frobenius_cap = std::nullopt);

/// Thresholds 1, 2, ..., floor(A_max), plus A_max itself if not an integer.
std::vector<double> integer_thresholds(double a_max);

/// Element counts of Lambda(M) for each radius M (thresholds = radii).
CountTable count_ball_table(const Algebra& algebra, std::span<const double> radii);

/// The units of the order (|det| = 1); only for definite presets.
std::vector<AlgebraElement> unit_group(const Algebra& algebra);

/// Lexicographically smallest element of the right orbit x * units.
AlgebraElement orbit_representative(const AlgebraElement& x, std::span<const AlgebraElement> units,
                                    const OrderBasis& basis);

enum class CountSeries { Elements, Ideals };

/// Least-squares slope of log count vs log threshold. Needs >= 5 thresholds
/// spanning a decade; zero counts are dropped and fewer than 3 surviving
/// points give a non-measurable estimate.
SlopeEstimate growth_exponent(const CountTable& table, CountSeries series = CountSeries::Ideals);

/// Columns: threshold, element_count, ideal_count (empty when not counted).
void write_csv(std::ostream& os, const CountTable& table, std::string_view threshold_column = "A");
void write_csv(std::ostream& os, const Codebook& codebook);

}  // namespace divdmt

#endif  // DIVDMT_CODEBOOK_HPP
