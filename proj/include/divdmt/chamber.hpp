#ifndef DIVDMT_CHAMBER_HPP
#define DIVDMT_CHAMBER_HPP

// Minimization of the piecewise-linear convex objective
//
//   g(alpha) = -beta(alpha)/2 + m * sum over the full diagonal of (alpha_i + 1 - u)^+
//
// over the polytope P = { u >= alpha_1 >= ... >= alpha_p, sum alpha_i = 0 }.
// P is the simplex spanned by V_0 = 0 and V_1..V_{p-1}. The hinge hyperplanes
// alpha_i = u - 1 cut it into pieces on which g is linear, so the minimum sits
// at a vertex V_k or at the crossing of a simplex edge V_a V_b with a hinge
// hyperplane. On that edge coordinates 1..a stay at u, a+1..b move from
// -au/(p-a) up to u and b+1..p move down; the middle group crossing gives
// R_{ab}, the bottom group crossing gives Q_{ba}.

#include "divdmt/dmt.hpp"
#include "divdmt/errors.hpp"
#include "divdmt/groups.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace divdmt {

template <typename Scalar>
using ChamberVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar = double>
struct ChamberProblem {
  GroupKind group;
  int m = 1;
  Scalar s = 0;

  ChamberProblem(GroupKind g, int receive, Scalar s_value) : group(g), m(receive), s(s_value) {
    if (m < 1) throw UsageError("receive antennas m must be positive");
    if (!(s >= Scalar(0))) throw DomainError("s must be nonnegative");
  }

  int p() const { return group.p(); }

  /// Chamber bound 2sn/k: s/n, 2s/n, s/p.
  Scalar u() const {
    switch (group.tag) {
      case Group::SLnC: return s / Scalar(group.n);
      case Group::SLnR: return 2 * s / Scalar(group.n);
      case Group::SLnH: return s / Scalar(p());
    }
    return 0;
  }

  Scalar hinge_point() const { return u() - 1; }

  /// w = p(1 - u): n - s, n - 2s, p - s.
  Scalar w() const { return Scalar(p()) * (1 - u()); }

  /// Coefficient of alpha_i (1-based) in -beta/2.
  Scalar linear_coefficient(int i) const {
    return Scalar(lie_data(group.tag).beta_coefficient) / 2 * Scalar(i);
  }

  Scalar hinge_weight() const { return Scalar(m * lie_data(group.tag).diagonal_repeat); }

  /// Sum of the absolute values of all coefficients of g.
  Scalar lipschitz() const {
    Scalar total = 0;
    for (int i = 1; i <= p(); ++i) total += linear_coefficient(i) + hinge_weight();
    return total;
  }
};

enum class VertexLabel { V, Q, R };

template <typename Scalar = double>
struct CandidateVertex {
  VertexLabel label = VertexLabel::V;
  int j = 0;   // k for V
  int l = -1;  // unused for V
  ChamberVector<Scalar> coords;
  Scalar g_value = 0;

  std::string name() const {
    switch (label) {
      case VertexLabel::V: return "V" + std::to_string(j);
      case VertexLabel::Q: return "Q" + std::to_string(j) + "_" + std::to_string(l);
      case VertexLabel::R: return "R" + std::to_string(j) + "_" + std::to_string(l);
    }
    return "?";
  }
};

template <typename Scalar>
Scalar g_eval(const ChamberVector<Scalar>& alpha, const ChamberProblem<Scalar>& problem) {
  if (alpha.size() != problem.p()) throw UsageError("g_eval: alpha has the wrong length");
  const Scalar tau = problem.hinge_point();
  const Scalar weight = problem.hinge_weight();
  Scalar total = 0;
  for (int i = 0; i < problem.p(); ++i) {
    total += problem.linear_coefficient(i + 1) * alpha[i];
    total += weight * std::max(alpha[i] - tau, Scalar(0));
  }
  return total;
}

/// Sum of m_alpha * (alpha_i - alpha_k) over the positive restricted roots.
template <typename Scalar>
Scalar beta_roots(const ChamberVector<Scalar>& alpha, Group g) {
  const Scalar mult = Scalar(lie_data(g).root_multiplicity);
  Scalar total = 0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    for (Eigen::Index k = i + 1; k < alpha.size(); ++k) total += mult * (alpha[i] - alpha[k]);
  }
  return total;
}

/// beta = -c sum_i i alpha_i.
template <typename Scalar>
Scalar beta_chamber(const ChamberVector<Scalar>& alpha, Group g) {
  const Scalar c = Scalar(lie_data(g).beta_coefficient);
  Scalar total = 0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) total -= c * Scalar(i + 1) * alpha[i];
  return total;
}

/// beta = c sum_{i<p} (p - i) alpha_i; equal to beta_chamber on sum alpha_i = 0.
template <typename Scalar>
Scalar beta_trace_free(const ChamberVector<Scalar>& alpha, Group g) {
  const Scalar c = Scalar(lie_data(g).beta_coefficient);
  const Eigen::Index p = alpha.size();
  Scalar total = 0;
  for (Eigen::Index i = 0; i + 1 < p; ++i) total += c * Scalar(p - (i + 1)) * alpha[i];
  return total;
}

/// g in the form -beta/2 + m sum_{full diagonal} (alpha_i + 1 - u)^+, with
/// beta taken from the root list.
template <typename Scalar>
Scalar g_eval_roots(const ChamberVector<Scalar>& alpha, const ChamberProblem<Scalar>& problem) {
  const Scalar tau = problem.hinge_point();
  const int repeat = lie_data(problem.group.tag).diagonal_repeat;
  Scalar hinge = 0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    hinge += Scalar(repeat) * std::max(alpha[i] - tau, Scalar(0));
  }
  return -beta_roots(alpha, problem.group.tag) / 2 + Scalar(problem.m) * hinge;
}

template <typename Scalar>
bool in_chamber(const ChamberVector<Scalar>& alpha, const ChamberProblem<Scalar>& problem,
                Scalar tol = Scalar(1e-9)) {
  if (alpha.size() != problem.p()) return false;
  if (alpha[0] > problem.u() + tol) return false;
  for (Eigen::Index i = 0; i + 1 < alpha.size(); ++i) {
    if (alpha[i] < alpha[i + 1] - tol) return false;
  }
  using std::abs;
  return abs(alpha.sum()) <= tol;
}

/// V_k: first k coordinates u, the rest -ku/(p-k). V_0 = 0.
template <typename Scalar>
ChamberVector<Scalar> simplex_vertex(const ChamberProblem<Scalar>& problem, int k) {
  const int p = problem.p();
  if (k < 0 || k >= p) throw UsageError("simplex_vertex: k out of range");
  const Scalar u = problem.u();
  ChamberVector<Scalar> v(p);
  for (int i = 0; i < p; ++i) v[i] = i < k ? u : -Scalar(k) * u / Scalar(p - k);
  return v;
}

template <typename Scalar>
std::vector<CandidateVertex<Scalar>> simplex_vertices(const ChamberProblem<Scalar>& problem) {
  std::vector<CandidateVertex<Scalar>> out;
  const int count = problem.u() == Scalar(0) ? 1 : problem.p();
  for (int k = 0; k < count; ++k) {
    CandidateVertex<Scalar> c;
    c.label = VertexLabel::V;
    c.j = k;
    c.coords = simplex_vertex(problem, k);
    c.g_value = g_eval(c.coords, problem);
    out.push_back(std::move(c));
  }
  return out;
}

/// Q and R points: crossings of the simplex edges with the hinge hyperplanes.
/// Points coinciding with a V_k or an earlier crossing (within 1e-12) are dropped.
template <typename Scalar>
std::vector<CandidateVertex<Scalar>> subdivision_vertices(const ChamberProblem<Scalar>& problem) {
  std::vector<CandidateVertex<Scalar>> out;
  const int p = problem.p();
  if (problem.u() == Scalar(0) || p < 2) return out;

  std::vector<ChamberVector<Scalar>> corners;
  for (int k = 0; k < p; ++k) corners.push_back(simplex_vertex(problem, k));

  const Scalar tau = problem.hinge_point();
  const Scalar eps = Scalar(1e-12);
  auto seen = [&](const ChamberVector<Scalar>& x) {
    for (const auto& c : corners) {
      if ((c - x).cwiseAbs().maxCoeff() <= eps) return true;
    }
    for (const auto& c : out) {
      if ((c.coords - x).cwiseAbs().maxCoeff() <= eps) return true;
    }
    return false;
  };

  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      const auto& va = corners[a];
      const auto& vb = corners[b];
      for (VertexLabel label : {VertexLabel::R, VertexLabel::Q}) {
        const int idx = label == VertexLabel::R ? a : b;
        const Scalar x0 = va[idx];
        const Scalar x1 = vb[idx];
        using std::abs;
        if (abs(x1 - x0) <= eps) continue;
        Scalar lambda = (tau - x0) / (x1 - x0);
        if (lambda < -eps || lambda > 1 + eps) continue;
        lambda = std::clamp(lambda, Scalar(0), Scalar(1));
        ChamberVector<Scalar> x = (1 - lambda) * va + lambda * vb;
        if (seen(x)) continue;
        if (!in_chamber(x, problem)) {
          throw std::logic_error("subdivision_vertices: infeasible crossing point");
        }
        CandidateVertex<Scalar> c;
        c.label = label;
        c.j = label == VertexLabel::R ? a : b;
        c.l = label == VertexLabel::R ? b : a;
        c.coords = std::move(x);
        c.g_value = g_eval(c.coords, problem);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

template <typename Scalar>
std::vector<CandidateVertex<Scalar>> all_candidates(const ChamberProblem<Scalar>& problem) {
  auto out = simplex_vertices(problem);
  auto extra = subdivision_vertices(problem);
  out.insert(out.end(), std::make_move_iterator(extra.begin()),
             std::make_move_iterator(extra.end()));
  return out;
}

template <typename Scalar = double>
struct ChamberMinimum {
  Scalar value = 0;
  CandidateVertex<Scalar> argmin;
};

/// Exact minimum over all candidates. Ties within 1e-12 go to V before Q
/// before R, then to the lowest (j, l).
template <typename Scalar>
ChamberMinimum<Scalar> min_g_exact(const ChamberProblem<Scalar>& problem) {
  const auto candidates = all_candidates(problem);
  const CandidateVertex<Scalar>* best = &candidates.front();
  auto key = [](const CandidateVertex<Scalar>& c) {
    return std::tuple(static_cast<int>(c.label), c.j, c.l);
  };
  for (const auto& c : candidates) {
    if (c.g_value < best->g_value - Scalar(1e-12)) {
      best = &c;
    } else if (c.g_value <= best->g_value + Scalar(1e-12) && key(c) < key(*best)) {
      best = &c;
    }
  }
  return {best->g_value, *best};
}

template <typename Scalar = double>
struct GridMinimum {
  Scalar value = 0;
  Scalar step = 0;
  Scalar lipschitz = 0;
  /// L * step * sqrt(p): the grid minimum exceeds the exact one by at most this.
  Scalar tolerance = 0;
  /// step > u/4
  bool coarse = false;
};

inline constexpr int kGridMaxDimension = 6;

/// Brute-force minimum of g over the grid alpha_i = u - t_i * step with
/// t_1 <= ... <= t_{p-1} integers and alpha_p = -sum. The enumeration is done
/// exactly by dynamic programming over (i, t_i, sum t) since g is separable.
template <typename Scalar>
GridMinimum<Scalar> min_g_grid(const ChamberProblem<Scalar>& problem, Scalar step) {
  const int p = problem.p();
  const Scalar u = problem.u();
  GridMinimum<Scalar> out;
  out.step = step;
  out.lipschitz = problem.lipschitz();
  if (u == Scalar(0) || p == 1) {
    out.value = g_eval(ChamberVector<Scalar>(ChamberVector<Scalar>::Zero(p)), problem);
    return out;
  }
  if (!(step > Scalar(0))) throw UsageError("grid step must be positive");
  if (p > kGridMaxDimension) {
    throw UsageError("grid oracle limited to p <= " + std::to_string(kGridMaxDimension));
  }
  using std::sqrt;
  out.tolerance = out.lipschitz * step * sqrt(Scalar(p));
  out.coarse = step > u / 4;

  const Scalar tau = problem.hinge_point();
  const Scalar weight = problem.hinge_weight();
  auto term = [&](int i, Scalar x) {
    return problem.linear_coefficient(i) * x + weight * std::max(x - tau, Scalar(0));
  };

  // alpha_i >= -(i-1)u/(p-i+1) on P, i.e. t_i <= (u/step) p/(p-i+1).
  const Scalar ratio = u / step;
  std::vector<int> tmax(p);
  for (int i = 1; i < p; ++i) {
    using std::floor;
    tmax[i] = static_cast<int>(floor(ratio * Scalar(p) / Scalar(p - i + 1) + Scalar(1e-9)));
  }

  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  int width = tmax[1] + 1;  // sum of t over the layer, 0..total
  std::vector<Scalar> layer(static_cast<std::size_t>(tmax[1] + 1) * width, inf);
  for (int t = 0; t <= tmax[1]; ++t) layer[t * width + t] = term(1, u - Scalar(t) * step);

  for (int i = 2; i < p; ++i) {
    const int prev_rows = tmax[i - 1] + 1;
    // prefix minimum over t_{i-1} <= t
    for (int t = 1; t < prev_rows; ++t) {
      for (int T = 0; T < width; ++T) {
        layer[t * width + T] = std::min(layer[t * width + T], layer[(t - 1) * width + T]);
      }
    }
    const int next_width = width + tmax[i];
    std::vector<Scalar> next(static_cast<std::size_t>(tmax[i] + 1) * next_width, inf);
    for (int t = 0; t <= tmax[i]; ++t) {
      const Scalar f = term(i, u - Scalar(t) * step);
      const int row = std::min(t, prev_rows - 1);
      for (int T = 0; T < width; ++T) {
        const Scalar base = layer[row * width + T];
        if (base == inf) continue;
        next[t * next_width + T + t] = base + f;
      }
    }
    layer = std::move(next);
    width = next_width;
  }

  Scalar best = inf;
  const int rows = tmax[p - 1] + 1;
  for (int t = 0; t < rows; ++t) {
    const Scalar last_free = u - Scalar(t) * step;
    for (int T = 0; T < width; ++T) {
      const Scalar base = layer[t * width + T];
      if (base == inf) continue;
      const Scalar alpha_p = Scalar(T) * step - Scalar(p - 1) * u;
      if (alpha_p > last_free + Scalar(1e-12)) continue;
      best = std::min(best, base + term(p, alpha_p));
    }
  }
  out.value = best;
  return out;
}

enum class ClosedFormRelation { Equal, Below, Above };

inline std::string_view to_string(ClosedFormRelation r) {
  switch (r) {
    case ClosedFormRelation::Equal: return "equal";
    case ClosedFormRelation::Below: return "below";
    case ClosedFormRelation::Above: return "above";
  }
  return "?";
}

template <typename Scalar = double>
struct ClosedFormReport {
  Scalar exact = 0;
  Scalar closed_form = 0;
  ClosedFormRelation relation = ClosedFormRelation::Equal;
  bool condition_held = false;
  CandidateVertex<Scalar> argmin;
};

/// Compares min_g_exact with d_bar(s). relation is the position of the
/// exact minimum relative to the closed form (tolerance 1e-9).
template <typename Scalar>
ClosedFormReport<Scalar> verify_closed_form(Group g, int n, int m, Scalar s) {
  const ChamberProblem<Scalar> problem(GroupKind(g, n), m, s);
  const auto minimum = min_g_exact(problem);
  const auto closed = d_bar(s, g, n, m);
  ClosedFormReport<Scalar> report;
  report.exact = minimum.value;
  report.closed_form = closed.value;
  report.condition_held = !closed.condition_violated;
  report.argmin = minimum.argmin;
  using std::abs;
  if (abs(minimum.value - closed.value) <= Scalar(1e-9)) {
    report.relation = ClosedFormRelation::Equal;
  } else {
    report.relation = minimum.value < closed.value ? ClosedFormRelation::Below
                                                   : ClosedFormRelation::Above;
  }
  return report;
}

}  // namespace divdmt

#endif  // DIVDMT_CHAMBER_HPP
