#include "saddlecalc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "saddlecalc/errors.hpp"

namespace saddlecalc {
namespace {

// Clamp roundoff-negative weights and renormalize to sum 1.
std::vector<double> clean_weights(const std::vector<double>& raw) {
  std::vector<double> w(raw);
  double sum = 0.0;
  for (double& v : w) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum > 0.0) {
    for (double& v : w) v /= sum;
  }
  return w;
}

Vector combine(const PointSet& P, const std::vector<double>& w) {
  Vector acc = Vector::zero(P.dim());
  for (int k = 0; k < P.size(); ++k) {
    for (int d = 0; d < P.dim(); ++d) acc[d] += w[static_cast<size_t>(k)] * P[k][d];
  }
  return acc;
}

// Solve the symmetric KKT system of the corral subproblem
//   minimize |sum_i alpha_i s_i|^2  s.t.  sum_i alpha_i = 1
// by Gaussian elimination with partial pivoting; on a near-singular
// pivot, retry once with a small ridge on the Gram block.
std::vector<double> solve_corral(const std::vector<Vector>& pts,
                                 double ridge) {
  const int k = static_cast<int>(pts.size());
  const int n = k + 1;
  std::vector<double> m(static_cast<size_t>(n) * (n + 1), 0.0);
  auto at = [&](int i, int j) -> double& {
    return m[static_cast<size_t>(i) * (n + 1) + j];
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) at(i, j) = dot(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
    at(i, i) += ridge;
    at(i, k) = 1.0;
    at(k, i) = 1.0;
  }
  at(k, n) = 1.0;  // rhs: [0,...,0, 1]

  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(at(r, c)) > std::abs(at(piv, c))) piv = r;
    }
    if (std::abs(at(piv, c)) < 1e-13) {
      if (ridge == 0.0) return {};  // signal singular, caller retries
      throw NumericalFailure("corral system singular even with ridge");
    }
    if (piv != c) {
      for (int j = 0; j <= n; ++j) std::swap(at(piv, j), at(c, j));
    }
    const double inv = 1.0 / at(c, c);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = at(r, c) * inv;
      if (f == 0.0) continue;
      for (int j = c; j <= n; ++j) at(r, j) -= f * at(c, j);
    }
    const double d = at(c, c);
    for (int j = c; j <= n; ++j) at(c, j) /= d;
  }
  std::vector<double> alpha(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) alpha[static_cast<size_t>(i)] = at(i, n);
  return alpha;
}

}  // namespace

HullDecision in_convex_hull(const Vector& q, const PointSet& P,
                            const Tolerances& tol) {
  if (q.dim() != P.dim()) {
    throw DimensionMismatch("query point dimension " + std::to_string(q.dim()) +
                            " vs point set dimension " + std::to_string(P.dim()));
  }
  const int n = P.dim();
  const int k = P.size();

  // Feasibility in convex weights: sum_j w_j p_j = q, sum_j w_j = 1, w >= 0.
  LPProblem lp;
  lp.objective = Vector::zero(k);
  lp.lower_bounds.assign(static_cast<size_t>(k), 0.0);
  for (int d = 0; d < n; ++d) {
    std::vector<double> row(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) row[static_cast<size_t>(j)] = P[j][d];
    lp.equalities.emplace_back(Vector(row), q[d]);
  }
  lp.equalities.emplace_back(Vector(std::vector<double>(static_cast<size_t>(k), 1.0)), 1.0);

  const LPSolution sol = lp_solve(lp, tol);
  HullDecision out;
  if (sol.status == LPStatus::kOptimal) {
    out.inside = true;
    out.certificate.kind = Certificate::Kind::kMembershipWeights;
    out.certificate.weights = clean_weights(sol.point.coords());
    const Vector rebuilt = combine(P, out.certificate.weights);
    double err = 0.0;
    for (int d = 0; d < n; ++d) err = std::max(err, std::abs(rebuilt[d] - q[d]));
    if (err > 10.0 * tol.lp * std::max(1.0, norm(q))) {
      throw NumericalFailure("membership weights fail to reproduce the query");
    }
    return out;
  }
  if (sol.status != LPStatus::kInfeasible) {
    throw NumericalFailure("hull membership LP neither optimal nor infeasible");
  }

  // Farkas values over [coordinate rows..., sum row] give the direction.
  std::vector<double> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = sol.farkas[static_cast<size_t>(i)];
  Vector dir(d);
  dir = normalized(dir);
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < k; ++j) best = std::max(best, dot(dir, P[j]));
  out.inside = false;
  out.certificate.kind = Certificate::Kind::kSeparatingDirection;
  out.certificate.direction = dir;
  out.certificate.margin = dot(dir, q) - best;
  if (out.certificate.margin <= 0.0) {
    throw NumericalFailure("separating direction has nonpositive margin");
  }
  return out;
}

IntersectionPoint polytope_intersection_point(const PointSet& P,
                                              const PointSet& Q,
                                              const Tolerances& tol) {
  if (P.dim() != Q.dim()) {
    throw DimensionMismatch("intersecting point sets of dimensions " +
                            std::to_string(P.dim()) + " and " +
                            std::to_string(Q.dim()));
  }
  const int n = P.dim();
  const int kp = P.size();
  const int kq = Q.size();
  const int vars = kp + kq;

  // sum_j l_j p_j - sum_i m_i q_i = 0, sum l = 1, sum m = 1, l, m >= 0.
  LPProblem lp;
  lp.objective = Vector::zero(vars);
  lp.lower_bounds.assign(static_cast<size_t>(vars), 0.0);
  for (int d = 0; d < n; ++d) {
    std::vector<double> row(static_cast<size_t>(vars), 0.0);
    for (int j = 0; j < kp; ++j) row[static_cast<size_t>(j)] = P[j][d];
    for (int i = 0; i < kq; ++i) row[static_cast<size_t>(kp + i)] = -Q[i][d];
    lp.equalities.emplace_back(Vector(row), 0.0);
  }
  {
    std::vector<double> row(static_cast<size_t>(vars), 0.0);
    for (int j = 0; j < kp; ++j) row[static_cast<size_t>(j)] = 1.0;
    lp.equalities.emplace_back(Vector(row), 1.0);
  }
  {
    std::vector<double> row(static_cast<size_t>(vars), 0.0);
    for (int i = 0; i < kq; ++i) row[static_cast<size_t>(kp + i)] = 1.0;
    lp.equalities.emplace_back(Vector(row), 1.0);
  }

  const LPSolution sol = lp_solve(lp, tol);
  IntersectionPoint out;
  if (sol.status == LPStatus::kOptimal) {
    std::vector<double> wp(sol.point.coords().begin(),
                           sol.point.coords().begin() + kp);
    std::vector<double> wq(sol.point.coords().begin() + kp,
                           sol.point.coords().end());
    out.nonempty = true;
    out.weights_p = clean_weights(wp);
    out.weights_q = clean_weights(wq);
    out.point = combine(P, out.weights_p);
    return out;
  }
  if (sol.status != LPStatus::kInfeasible) {
    throw NumericalFailure("intersection LP neither optimal nor infeasible");
  }

  // Farkas y = (e, alpha, beta) satisfies <e, p> <= -alpha < beta <= <e, q>;
  // flip so the P side is the strictly greater one.
  std::vector<double> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = -sol.farkas[static_cast<size_t>(i)];
  Vector dir = normalized(Vector(d));
  double min_p = std::numeric_limits<double>::infinity();
  double max_q = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < kp; ++j) min_p = std::min(min_p, dot(dir, P[j]));
  for (int i = 0; i < kq; ++i) max_q = std::max(max_q, dot(dir, Q[i]));
  out.nonempty = false;
  out.certificate.kind = Certificate::Kind::kSeparatingDirection;
  out.certificate.direction = dir;
  out.certificate.margin = min_p - max_q;
  if (out.certificate.margin <= 0.0) {
    throw NumericalFailure("intersection certificate has nonpositive margin");
  }
  return out;
}

NearestPoint nearest_point_origin(const PointSet& P, const Tolerances& tol) {
  const int n = P.dim();
  const int total = P.size();

  // Work on exact-duplicate representatives; weights map back to the
  // first occurrence.
  std::vector<int> rep;
  std::vector<Vector> pts;
  for (int i = 0; i < total; ++i) {
    bool seen = false;
    for (const Vector& p : pts) {
      if (p == P[i]) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      rep.push_back(i);
      pts.push_back(P[i]);
    }
  }
  const int k = static_cast<int>(pts.size());

  int start = 0;
  double best_norm = dot(pts[0], pts[0]);
  for (int i = 1; i < k; ++i) {
    const double ni = dot(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(i)]);
    if (ni < best_norm - 1e-15) {
      best_norm = ni;
      start = i;
    }
  }

  std::vector<int> corral{start};
  std::vector<double> weights{1.0};
  Vector x = pts[static_cast<size_t>(start)];

  const int max_major = 8 * k + 64;
  double prev_sq = std::numeric_limits<double>::infinity();
  for (int major = 0; major < max_major; ++major) {
    const double xsq = dot(x, x);
    // Wolfe optimality: every generator satisfies <x, p> >= |x|^2 - eps.
    int q = 0;
    double min_dot = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
      const double di = dot(x, pts[static_cast<size_t>(i)]);
      if (di < min_dot - 1e-15) {
        min_dot = di;
        q = i;
      }
    }
    if (min_dot >= xsq - tol.nearest) break;
    if (xsq >= prev_sq + 1e-15) break;  // no progress, accept current point
    prev_sq = xsq;
    if (std::find(corral.begin(), corral.end(), q) != corral.end()) break;
    corral.push_back(q);
    weights.push_back(0.0);

    const int max_minor = 2 * k + 16;
    for (int minor = 0; minor < max_minor; ++minor) {
      std::vector<Vector> cpts;
      cpts.reserve(corral.size());
      for (int idx : corral) cpts.push_back(pts[static_cast<size_t>(idx)]);
      std::vector<double> alpha = solve_corral(cpts, 0.0);
      if (alpha.empty()) alpha = solve_corral(cpts, 1e-12);

      const double eta = 1e-12;
      bool interior = true;
      for (double a : alpha) {
        if (a < eta) {
          interior = false;
          break;
        }
      }
      if (interior) {
        weights = alpha;
        break;
      }
      // Line search from `weights` toward `alpha`, stopping at the first
      // coordinate that would go nonpositive; drop those points.
      double theta = 1.0;
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < eta) {
          const double denom = weights[i] - alpha[i];
          if (denom > 1e-18) theta = std::min(theta, weights[i] / denom);
        }
      }
      std::vector<int> next_corral;
      std::vector<double> next_weights;
      double wsum = 0.0;
      for (size_t i = 0; i < alpha.size(); ++i) {
        const double w = (1.0 - theta) * weights[i] + theta * alpha[i];
        if (w > eta) {
          next_corral.push_back(corral[i]);
          next_weights.push_back(w);
          wsum += w;
        }
      }
      if (next_corral.empty()) {
        // Numerical collapse: keep the best single point of the corral.
        next_corral.push_back(corral[0]);
        next_weights.push_back(1.0);
        wsum = 1.0;
      }
      for (double& w : next_weights) w /= wsum;
      corral = std::move(next_corral);
      weights = std::move(next_weights);
      if (corral.size() == 1) {
        weights[0] = 1.0;
        break;
      }
    }

    x = Vector::zero(n);
    for (size_t i = 0; i < corral.size(); ++i) {
      for (int d = 0; d < n; ++d) {
        x[d] += weights[i] * pts[static_cast<size_t>(corral[i])][d];
      }
    }
  }

  NearestPoint out;
  out.point = x;
  out.distance = norm(x);
  out.weights.assign(static_cast<size_t>(total), 0.0);
  for (size_t i = 0; i < corral.size(); ++i) {
    out.weights[static_cast<size_t>(rep[static_cast<size_t>(corral[i])])] +=
        weights[i];
  }
  return out;
}

PointSet minimal_generators(const PointSet& P, const Tolerances& tol) {
  // Duplicate removal: exact equality first, then tol.duplicate-close
  // merging, keeping the earliest representative.
  std::vector<Vector> kept;
  for (int i = 0; i < P.size(); ++i) {
    bool dup = false;
    for (const Vector& p : kept) {
      if (p == P[i]) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(P[i]);
  }
  std::vector<Vector> merged_pts;
  for (const Vector& p : kept) {
    bool close = false;
    for (const Vector& q : merged_pts) {
      if (norm(p - q) <= tol.duplicate) {
        close = true;
        break;
      }
    }
    if (!close) merged_pts.push_back(p);
  }

  // Vertex filter: a point inside the hull of the current others is
  // redundant. Vertices of conv(P) can never be removed, so the result
  // is exactly the vertex set whatever the scan order.
  std::vector<Vector> result = std::move(merged_pts);
  size_t i = 0;
  while (i < result.size()) {
    if (result.size() == 1) break;
    std::vector<Vector> others;
    others.reserve(result.size() - 1);
    for (size_t j = 0; j < result.size(); ++j) {
      if (j != i) others.push_back(result[j]);
    }
    const HullDecision hd = in_convex_hull(result[i], PointSet(others), tol);
    if (hd.inside) {
      result.erase(result.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return PointSet(std::move(result));
}

}  // namespace saddlecalc
