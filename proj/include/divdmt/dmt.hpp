#ifndef DIVDMT_DMT_HPP
#define DIVDMT_DMT_HPP

// Closed-form diversity-multiplexing tradeoff lower bounds for the three code
// families and the auxiliary functions used to assemble them:
//
//   d_star  imaginary quadratic center (SL_n(C)), breakpoints (r, (n-r)(m-r)), r in Z
//   d1      center Q, split at infinity (SL_n(R)), breakpoints (r, (m-r)(n-2r)), 2r in Z
//   d2      center Q, ramified at infinity (SL_{n/2}(H)), breakpoints (r, (n-2r)(m-r)), r in Z
//
// All functions are templated on the scalar type so that the same code can be
// run in double and long double.

#include "divdmt/errors.hpp"
#include "divdmt/groups.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace divdmt {

namespace detail {

template <typename Scalar>
Scalar fuzzy_ceil(Scalar x) {
  using std::abs;
  using std::ceil;
  return ceil(x - Scalar(1e-12) * std::max(Scalar(1), abs(x)));
}

template <typename Scalar>
void check_range(Scalar r, Scalar r_max, const char* name) {
  const Scalar eps = Scalar(1e-12);
  if (!(r >= -eps) || r > r_max + eps) {
    throw DomainError(std::string(name) + ": r = " + std::to_string(double(r)) +
                      " outside [0, " + std::to_string(double(r_max)) + "]");
  }
}

inline void check_antennas(int n, int m) {
  if (n < 1 || m < 1) throw UsageError("antenna counts n and m must be positive");
}

template <typename Scalar>
Scalar d_star_formula(Scalar r, int n, int m) {
  using std::floor;
  const Scalar f = floor(r);
  const Scalar v = -(Scalar(m + n) - 2 * f - 1) * r + Scalar(m * n) - f * (f + 1);
  return std::max(v, Scalar(0));
}

template <typename Scalar>
Scalar d1_formula(Scalar r, int n, int m) {
  using std::floor;
  const Scalar f = floor(2 * r);
  const Scalar v = (-Scalar(n) - 2 * Scalar(m) + 2 * f + 1) * r + Scalar(m * n) - f / 2 * (f + 1);
  return std::max(v, Scalar(0));
}

template <typename Scalar>
Scalar d2_breakpoint(Scalar q, int n, int m) {
  return std::max((Scalar(n) - 2 * q) * (Scalar(m) - q), Scalar(0));
}

template <typename Scalar>
Scalar d2_interpolated(Scalar r, int n, int m) {
  using std::floor;
  const Scalar q = floor(r);
  const Scalar t = r - q;
  return (1 - t) * d2_breakpoint(q, n, m) + t * d2_breakpoint(q + 1, n, m);
}

}  // namespace detail

/// Right end of the curve's support: min(m, n) for SL_n(C), min(m, n/2) otherwise.
template <typename Scalar = double>
Scalar support_end(Group g, int n, int m) {
  return g == Group::SLnC ? Scalar(std::min(m, n)) : std::min(Scalar(m), Scalar(n) / 2);
}

/// d*(r) = -(m + n - 2 floor(r) - 1) r + mn - floor(r)(floor(r) + 1), clamped at 0.
template <typename Scalar>
Scalar d_star(Scalar r, int n, int m) {
  detail::check_antennas(n, m);
  detail::check_range(r, support_end<Scalar>(Group::SLnC, n, m), "d_star");
  return detail::d_star_formula(std::max(r, Scalar(0)), n, m);
}

/// d1(r) = (-n - 2m + 2 floor(2r) + 1) r + mn - floor(2r)(floor(2r) + 1)/2, clamped at 0.
template <typename Scalar>
Scalar d1(Scalar r, int n, int m) {
  detail::check_antennas(n, m);
  detail::check_range(r, support_end<Scalar>(Group::SLnR, n, m), "d1");
  return detail::d1_formula(std::max(r, Scalar(0)), n, m);
}

/// Piecewise-linear interpolation of (q, [(n - 2q)(m - q)]^+) over integers q.
template <typename Scalar>
Scalar d2(Scalar r, int n, int m) {
  detail::check_antennas(n, m);
  if (n % 2 != 0) throw UnsupportedError("d2 is defined for even n only");
  detail::check_range(r, support_end<Scalar>(Group::SLnH, n, m), "d2");
  return detail::d2_interpolated(std::max(r, Scalar(0)), n, m);
}

/// A DMT curve stored as its breakpoints; evaluation interpolates linearly.
template <typename Scalar = double>
struct DmtCurve {
  std::vector<std::pair<Scalar, Scalar>> breakpoints;

  Scalar r_max() const { return breakpoints.back().first; }

  Scalar operator()(Scalar r) const {
    detail::check_range(r, r_max(), "DmtCurve");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), r,
                               [](Scalar x, const auto& bp) { return x < bp.first; });
    if (it == breakpoints.end()) return breakpoints.back().second;
    if (it == breakpoints.begin()) return breakpoints.front().second;
    const auto& [r1, d1v] = *it;
    const auto& [r0, d0v] = *std::prev(it);
    const Scalar t = (r - r0) / (r1 - r0);
    return (1 - t) * d0v + t * d1v;
  }
};

/// Breakpoint representation of d_star / d1 / d2 for the given group.
template <typename Scalar = double>
DmtCurve<Scalar> dmt_curve(Group g, int n, int m) {
  detail::check_antennas(n, m);
  if (g == Group::SLnH && n % 2 != 0) throw UnsupportedError("d2 is defined for even n only");
  const Scalar end = support_end<Scalar>(g, n, m);
  const Scalar spacing = g == Group::SLnR ? Scalar(0.5) : Scalar(1);
  DmtCurve<Scalar> curve;
  for (int i = 0;; ++i) {
    const Scalar r = spacing * i;
    if (r > end + Scalar(1e-12)) break;
    Scalar d = 0;
    switch (g) {
      case Group::SLnC: d = (Scalar(n) - r) * (Scalar(m) - r); break;
      case Group::SLnR: d = (Scalar(m) - r) * (Scalar(n) - 2 * r); break;
      case Group::SLnH: d = (Scalar(n) - 2 * r) * (Scalar(m) - r); break;
    }
    curve.breakpoints.emplace_back(r, std::max(d, Scalar(0)));
  }
  return curve;
}

/// Minimal integer m >= 1 meeting the proposition's receive-antenna condition
/// for multiplexing gain r: m >= 2 ceil(r) - 1 (SL_n(C), SL_{n/2}(H)) or
/// m >= ceil(2r) - 1/2 (SL_n(R)).
template <typename Scalar>
int antenna_threshold(Group g, Scalar r) {
  if (!(r >= Scalar(0))) throw DomainError("multiplexing gain must be nonnegative");
  int m = 0;
  if (g == Group::SLnR) {
    m = static_cast<int>(detail::fuzzy_ceil(2 * r));  // ceil(ceil(2r) - 1/2)
  } else {
    m = 2 * static_cast<int>(detail::fuzzy_ceil(r)) - 1;
  }
  return std::max(m, 1);
}

/// Condition under which the chamber minimum equals the closed form:
/// m >= 2(ceil(s) - 1) for SL_n(C) and SL_{n/2}(H), m >= ceil(2s) - 1 for SL_n(R).
template <typename Scalar>
bool minimum_condition(Group g, int m, Scalar s) {
  if (g == Group::SLnR) return Scalar(m) >= detail::fuzzy_ceil(2 * s) - 1;
  return Scalar(m) >= 2 * (detail::fuzzy_ceil(s) - 1);
}

template <typename Scalar>
struct DbarValue {
  Scalar value{};
  bool condition_violated = false;
};

/// The chamber minimum in closed form. Valid only when minimum_condition
/// holds; the flag records when it does not. The curve is extended by zero
/// past its support.
template <typename Scalar>
DbarValue<Scalar> d_bar(Scalar s, Group g, int n, int m) {
  detail::check_antennas(n, m);
  if (!(s >= Scalar(-1e-12))) throw DomainError("d_bar: s must be nonnegative");
  s = std::max(s, Scalar(0));
  DbarValue<Scalar> out;
  out.condition_violated = !minimum_condition(g, m, s);
  if (s >= support_end<Scalar>(g, n, m)) return out;
  switch (g) {
    case Group::SLnC: out.value = detail::d_star_formula(s, n, m); break;
    case Group::SLnR: out.value = detail::d1_formula(s, n, m); break;
    case Group::SLnH:
      if (n % 2 != 0) throw UnsupportedError("d2 is defined for even n only");
      out.value = detail::d2_interpolated(s, n, m);
      break;
  }
  return out;
}

/// d**(v) = n v + d_bar(v).
template <typename Scalar>
Scalar d_double_star(Scalar v, Group g, int n, int m) {
  return Scalar(n) * v + d_bar(v, g, n, m).value;
}

/// Whether d** is nonincreasing on [0, r]: its last segment before r must not
/// rise, i.e. ceil(r) - 1/2 <= m/2 (SL_n(C), SL_{n/2}(H)) or
/// ceil(2r)/2 - 1/4 <= m/2 (SL_n(R)).
template <typename Scalar>
bool dds_monotone(Group g, int n, int m, Scalar r) {
  detail::check_antennas(n, m);
  if (!(r >= Scalar(0))) throw DomainError("dds_monotone: r must be nonnegative");
  if (r == Scalar(0)) return true;
  if (g == Group::SLnR) return detail::fuzzy_ceil(2 * r) / 2 - Scalar(0.25) <= Scalar(m) / 2;
  return detail::fuzzy_ceil(r) - Scalar(0.5) <= Scalar(m) / 2;
}

}  // namespace divdmt

#endif  // DIVDMT_DMT_HPP
