#include "divdmt/algebra.hpp"

#include "divdmt/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace divdmt {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

std::string normalize_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char ch : name) {
    out.push_back(ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quaternion orders Z<1, i, j, ij> in (a, b)_Q.

std::vector<std::int64_t> quaternion_table(std::int64_t a, std::int64_t b) {
  // Row = left factor, column = right factor, entry = (coefficient, basis index).
  struct Term {
    std::int64_t coeff;
    int index;
  };
  const std::array<std::array<Term, 4>, 4> products{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {a, 0}, {1, 3}, {a, 2}}},
      {{{1, 2}, {-1, 3}, {b, 0}, {-b, 1}}},
      {{{1, 3}, {-a, 2}, {b, 1}, {-a * b, 0}}},
  }};
  std::vector<std::int64_t> table(64, 0);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Term& t = products[i][j];
      table[(i * 4 + j) * 4 + t.index] = t.coeff;
    }
  }
  return table;
}

// Direct matrix models. Ramified (a, b < 0): quaternionic block shape
// [[alpha, beta], [-conj(beta), conj(alpha)]]. Split at infinity (a < 0 < b):
// real 2x2 matrices.
std::vector<Eigen::MatrixXcd> quaternion_embedding(std::int64_t a, std::int64_t b) {
  if (a >= 0) {
    throw std::logic_error("quaternion presets require a < 0");
  }
  const double sa = std::sqrt(double(-a));
  const double sb = std::sqrt(std::abs(double(b)));
  Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd ei(2, 2), ej(2, 2);
  if (b < 0) {
    ei << kI * sa, 0.0, 0.0, -kI * sa;
    ej << 0.0, sb, -sb, 0.0;
  } else {
    ei << 0.0, -sa, sa, 0.0;
    ej << sb, 0.0, 0.0, -sb;
  }
  Eigen::MatrixXcd eij = ei * ej;
  return {one, ei, ej, eij};
}

// ---------------------------------------------------------------------------
// Golden order O + eO, O = Z[i][theta], theta^2 = theta + 1.
//
// An element of O is stored as four integers (c0re, c0im, c1re, c1im) for
// c0 + c1 theta with c0, c1 in Z[i]. A full element c + e d uses coordinates
// (c, d), i.e. basis 1, i, theta, i theta, e, e i, e theta, e i theta.

struct Gauss {
  std::int64_t re = 0, im = 0;
  Gauss operator+(Gauss o) const { return {re + o.re, im + o.im}; }
  Gauss operator-(Gauss o) const { return {re - o.re, im - o.im}; }
  Gauss operator*(Gauss o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

struct GoldenInt {
  Gauss c0, c1;
  GoldenInt operator+(const GoldenInt& o) const { return {c0 + o.c0, c1 + o.c1}; }
  GoldenInt operator*(const GoldenInt& o) const {
    // (a0 + a1 t)(b0 + b1 t) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0 + a1 b1) t
    return {c0 * o.c0 + c1 * o.c1, c0 * o.c1 + c1 * o.c0 + c1 * o.c1};
  }
  // sigma(theta) = 1 - theta
  GoldenInt sigma() const { return {c0 + c1, Gauss{} - c1}; }
  // c * sigma(c) = c0^2 + c0 c1 - c1^2
  Gauss norm() const { return c0 * c0 + c0 * c1 - c1 * c1; }
};

GoldenInt golden_part(const Coords& x, int offset) {
  return {{x[offset], x[offset + 1]}, {x[offset + 2], x[offset + 3]}};
}

Coords golden_coords(const GoldenInt& c, const GoldenInt& d) {
  Coords out(8);
  out << c.c0.re, c.c0.im, c.c1.re, c.c1.im, d.c0.re, d.c0.im, d.c1.re, d.c1.im;
  return out;
}

// (c1 + e d1)(c2 + e d2) = (c1 c2 + gamma sigma(d1) d2) + e (sigma(c1) d2 + d1 c2)
Coords golden_product(const Coords& x, const Coords& y) {
  const GoldenInt c1 = golden_part(x, 0), d1 = golden_part(x, 4);
  const GoldenInt c2 = golden_part(y, 0), d2 = golden_part(y, 4);
  const GoldenInt gamma{{0, 1}, {0, 0}};
  return golden_coords(c1 * c2 + gamma * d1.sigma() * d2, c1.sigma() * d2 + d1 * c2);
}

std::vector<std::int64_t> golden_table() {
  std::vector<std::int64_t> table(8 * 8 * 8, 0);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Coords p = golden_product(Coords::Unit(8, i), Coords::Unit(8, j));
      for (int t = 0; t < 8; ++t) table[(i * 8 + j) * 8 + t] = p[t];
    }
  }
  return table;
}

std::vector<Eigen::MatrixXcd> golden_embedding(cd theta, cd sigma_theta, cd gamma) {
  // c + e d  ->  [[c(theta), gamma d(sigma theta)], [d(theta), c(sigma theta)]]
  const std::array<cd, 4> at_theta{1.0, kI, theta, kI * theta};
  const std::array<cd, 4> at_sigma{1.0, kI, sigma_theta, kI * sigma_theta};
  std::vector<Eigen::MatrixXcd> out;
  for (int q = 0; q < 4; ++q) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = at_theta[q];
    m(1, 1) = at_sigma[q];
    out.push_back(m);
  }
  for (int q = 0; q < 4; ++q) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = gamma * at_sigma[q];
    m(1, 0) = at_theta[q];
    out.push_back(m);
  }
  return out;
}

void check_dim(const Coords& x, const OrderBasis& basis) {
  if (x.size() != basis.basis_size) {
    throw UsageError("element has " + std::to_string(x.size()) + " coordinates, order rank is " +
                     std::to_string(basis.basis_size));
  }
}

}  // namespace

PresetId parse_preset(std::string_view name) {
  const std::string key = normalize_name(name);
  for (PresetId id : all_presets()) {
    if (key == to_string(id)) return id;
  }
  if (key == "LIPSCHITZ") return PresetId::LipschitzRamified;
  if (key == "UNRAMIFIED") return PresetId::QuaternionUnramified;
  if (key == "GOLDEN") return PresetId::GoldenGaussian;
  throw UsageError("unknown preset '" + std::string(name) +
                   "' (expected LIPSCHITZ_RAMIFIED, QUATERNION_UNRAMIFIED or GOLDEN_GAUSSIAN)");
}

std::string_view to_string(PresetId id) {
  switch (id) {
    case PresetId::LipschitzRamified: return "LIPSCHITZ_RAMIFIED";
    case PresetId::QuaternionUnramified: return "QUATERNION_UNRAMIFIED";
    case PresetId::GoldenGaussian: return "GOLDEN_GAUSSIAN";
  }
  return "?";
}

std::vector<PresetId> all_presets() {
  return {PresetId::LipschitzRamified, PresetId::QuaternionUnramified, PresetId::GoldenGaussian};
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dim() != y.dim()) throw UsageError("dimension mismatch in element sum");
  return AlgebraElement(x.coords + y.coords);
}

AlgebraElement operator-(const AlgebraElement& x) { return AlgebraElement(-x.coords); }

bool lex_less(const AlgebraElement& x, const AlgebraElement& y) {
  return std::lexicographical_compare(x.coords.begin(), x.coords.end(), y.coords.begin(),
                                      y.coords.end());
}

CodeMatrix::CodeMatrix(Eigen::MatrixXcd m)
    : entries(std::move(m)), fro_norm(entries.norm()), abs_det(std::abs(entries.determinant())) {}

Algebra build_preset(PresetId id) {
  Algebra alg;
  AlgebraPreset& p = alg.preset;
  OrderBasis& ob = alg.basis;
  p.id = id;
  p.degree_n = 2;
  switch (id) {
    case PresetId::LipschitzRamified:
    case PresetId::QuaternionUnramified: {
      const QuaternionSymbol sym = id == PresetId::LipschitzRamified ? QuaternionSymbol{-1, -1}
                                                                     : QuaternionSymbol{-1, 3};
      p.center = Center::Rational;
      p.dim_k = 4;
      p.quaternion = sym;
      // Hasse invariant at the real place: (a, b)_R = -1 iff a < 0 and b < 0.
      p.ramified_at_infinity = sym.a < 0 && sym.b < 0;
      ob.mul_table = quaternion_table(sym.a, sym.b);
      ob.embed_basis = quaternion_embedding(sym.a, sym.b);
      break;
    }
    case PresetId::GoldenGaussian: {
      const double sqrt5 = std::sqrt(5.0);
      CyclicData cyc{"Q(i, sqrt5) / Q(i)", cd{(1.0 + sqrt5) / 2.0, 0.0},
                     cd{(1.0 - sqrt5) / 2.0, 0.0}, kI};
      p.center = Center::GaussianImaginary;
      p.dim_k = 8;
      p.ramified_at_infinity = false;
      ob.mul_table = golden_table();
      ob.embed_basis = golden_embedding(cyc.theta, cyc.sigma_theta, cyc.gamma);
      p.cyclic = std::move(cyc);
      break;
    }
  }
  ob.basis_size = p.dim_k;
  ob.degree_n = p.degree_n;
  ob.identity = Coords::Unit(p.dim_k, 0);
  return alg;
}

Algebra build_preset(std::string_view name) { return build_preset(parse_preset(name)); }

AlgebraElement basis_element(const OrderBasis& basis, int i) {
  return AlgebraElement(Coords::Unit(basis.basis_size, i));
}

AlgebraElement one(const OrderBasis& basis) { return AlgebraElement(basis.identity); }

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                        const OrderBasis& basis) {
  check_dim(x.coords, basis);
  check_dim(y.coords, basis);
  const int k = basis.basis_size;
  Coords out = Coords::Zero(k);
  for (int i = 0; i < k; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      if (y.coords[j] == 0) continue;
      const std::int64_t xy = x.coords[i] * y.coords[j];
      for (int t = 0; t < k; ++t) out[t] += xy * basis.structure_constant(i, j, t);
    }
  }
  return AlgebraElement(std::move(out));
}

Eigen::MatrixXcd embed_matrix(const Coords& x, const OrderBasis& basis) {
  check_dim(x, basis);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.degree_n, basis.degree_n);
  for (int i = 0; i < basis.basis_size; ++i) {
    if (x[i] != 0) m += double(x[i]) * basis.embed_basis[i];
  }
  return m;
}

CodeMatrix embed(const AlgebraElement& x, const Algebra& algebra) {
  return CodeMatrix(embed_matrix(x.coords, algebra.basis));
}

GaussianInt reduced_norm(const AlgebraElement& x, const Algebra& algebra) {
  check_dim(x.coords, algebra.basis);
  const Coords& c = x.coords;
  if (const auto& q = algebra.preset.quaternion) {
    // w^2 - a x^2 - b y^2 + ab z^2
    const std::int64_t v = c[0] * c[0] - q->a * c[1] * c[1] - q->b * c[2] * c[2] +
                           q->a * q->b * c[3] * c[3];
    return {v, 0};
  }
  // det [[c, gamma sigma(d)], [d, sigma(c)]] = N(c) - gamma N(d), gamma = i
  const Gauss nc = golden_part(c, 0).norm();
  const Gauss nd = golden_part(c, 4).norm();
  const Gauss det = nc - Gauss{0, 1} * nd;
  return {det.re, det.im};
}

Eigen::MatrixXd gram_matrix(const OrderBasis& basis) {
  const int k = basis.basis_size;
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      // Frobenius inner product <A, B> = tr(A B^*)
      g(i, j) = g(j, i) = (basis.embed_basis[i].array() * basis.embed_basis[j].conjugate().array())
                              .sum()
                              .real();
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) {
    throw std::logic_error("Gram matrix of the order basis is not positive definite");
  }
  return g;
}

}  // namespace divdmt
