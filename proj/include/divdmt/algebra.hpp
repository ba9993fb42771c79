#ifndef DIVDMT_ALGEBRA_HPP
#define DIVDMT_ALGEBRA_HPP

// Concrete division algebras, integral orders in them, and their matrix
// embeddings. Element arithmetic is exact (integer coordinates over a Z-basis
// of the order); complex floating point appears only when an element is
// embedded as a code matrix.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divdmt {

enum class PresetId {
  LipschitzRamified,     // (-1,-1)_Q, order Z<1,i,j,ij>
  QuaternionUnramified,  // (-1,3)_Q,  order Z<1,i,j,ij>
  GoldenGaussian,        // cyclic, Q(i,sqrt5)/Q(i), non-norm element i
};

enum class Center { Rational, GaussianImaginary };

PresetId parse_preset(std::string_view name);
std::string_view to_string(PresetId id);
std::vector<PresetId> all_presets();

/// Quaternion algebra (a, b): i^2 = a, j^2 = b, ij = -ji.
struct QuaternionSymbol {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// Degree-2 cyclic algebra L + eL over a center F, e^2 = gamma and
/// e c = sigma(c) e. Only the shipped instance is described here:
/// L = F(theta), theta = (1 + sqrt5)/2, F = Q(i), gamma = i.
struct CyclicData {
  std::string relative_extension;
  std::complex<double> theta;
  std::complex<double> sigma_theta;
  std::complex<double> gamma;
};

struct AlgebraPreset {
  PresetId id = PresetId::LipschitzRamified;
  Center center = Center::Rational;
  int degree_n = 0;
  int dim_k = 0;
  std::optional<QuaternionSymbol> quaternion;
  std::optional<CyclicData> cyclic;
  bool ramified_at_infinity = false;

  /// Definite rational quaternion algebra: the reduced norm is a positive
  /// definite form and the unit group of an order is finite.
  bool has_definite_norm() const {
    return center == Center::Rational && ramified_at_infinity;
  }
};

using Coords = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Element of the order, written in the coordinates of its Z-basis.
struct AlgebraElement {
  Coords coords;

  AlgebraElement() = default;
  explicit AlgebraElement(Coords c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const { return coords.isZero(); }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.coords.size() == y.coords.size() && x.coords == y.coords;
  }
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x);

/// Strict lexicographic order on coordinates.
bool lex_less(const AlgebraElement& x, const AlgebraElement& y);

/// Z-basis b_0..b_{k-1} of an order with integer structure constants
/// b_i b_j = sum_t c(i, j, t) b_t and the embedded basis matrices psi(b_i).
struct OrderBasis {
  int basis_size = 0;
  int degree_n = 0;
  std::vector<std::int64_t> mul_table;  // flattened [i][j][t]
  std::vector<Eigen::MatrixXcd> embed_basis;
  Coords identity;

  std::int64_t structure_constant(int i, int j, int t) const {
    return mul_table[(static_cast<std::size_t>(i) * basis_size + j) * basis_size + t];
  }
};

struct Algebra {
  AlgebraPreset preset;
  OrderBasis basis;
};

/// Embedded element together with the two quantities the error analysis uses.
struct CodeMatrix {
  Eigen::MatrixXcd entries;
  double fro_norm = 0.0;
  double abs_det = 0.0;

  CodeMatrix() = default;
  explicit CodeMatrix(Eigen::MatrixXcd m);
};

/// Gaussian integer; reduced norms of the rational presets have im == 0.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  double abs() const { return std::hypot(double(re), double(im)); }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

Algebra build_preset(PresetId id);
Algebra build_preset(std::string_view name);

AlgebraElement basis_element(const OrderBasis& basis, int i);
AlgebraElement one(const OrderBasis& basis);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                        const OrderBasis& basis);

/// psi(x) = sum_i x_i psi(b_i).
Eigen::MatrixXcd embed_matrix(const Coords& x, const OrderBasis& basis);
CodeMatrix embed(const AlgebraElement& x, const Algebra& algebra);

/// Exact reduced norm from the norm form; equals det(psi(x)).
GaussianInt reduced_norm(const AlgebraElement& x, const Algebra& algebra);

/// G(i, j) = Re <psi(b_i), psi(b_j)>_F. Throws std::logic_error if G is not
/// positive definite (a broken preset).
Eigen::MatrixXd gram_matrix(const OrderBasis& basis);

}  // namespace divdmt

#endif  // DIVDMT_ALGEBRA_HPP
