#include "saddlecalc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "saddlecalc/errors.hpp"
#include "saddlecalc/sampling.hpp"

namespace saddlecalc {

SignDecision check_nonnegative(const SaddleFamily& F, const Tolerances& tol) {
  const Vector origin = Vector::zero(F.dim());
  SignDecision out;
  for (int i = 0; i < F.rows(); ++i) {
    HullDecision hd = in_convex_hull(origin, F.row_points(i), tol);
    if (!hd.inside) {
      out.holds = false;
      out.failing_index = i;
      out.witness = hd.certificate.direction;
      out.certificates.clear();
      // The certificate direction d has 0 > max_s <a_is, d> + margin, so
      // the row max and with it the inf-sup reading is negative at d.
      if (eval_infsup(F, out.witness) >= 0.0) {
        throw NumericalFailure("nonnegativity witness fails to expose a negative value");
      }
      return out;
    }
    out.certificates.push_back(std::move(hd.certificate));
  }
  out.holds = true;
  return out;
}

SignDecision check_nonpositive(const SaddleFamily& F, const Tolerances& tol) {
  const Vector origin = Vector::zero(F.dim());
  SignDecision out;
  for (int s = 0; s < F.cols(); ++s) {
    HullDecision hd = in_convex_hull(origin, F.col_points(s), tol);
    if (!hd.inside) {
      out.holds = false;
      out.failing_index = s;
      // d gives max_i <a_is, d> < 0; at -d the column min is positive,
      // so the sup-inf reading is positive there.
      out.witness = -hd.certificate.direction;
      out.certificates.clear();
      if (eval_supinf(F, out.witness) <= 0.0) {
        throw NumericalFailure("nonpositivity witness fails to expose a positive value");
      }
      return out;
    }
    out.certificates.push_back(std::move(hd.certificate));
  }
  out.holds = true;
  return out;
}

LipschitzBound lipschitz_constant(const SaddleFamily& F) {
  double m = 0.0;
  for (const Vector& a : F.entries()) m = std::max(m, norm(a));
  return LipschitzBound{m};
}

namespace {

// Scaling can leave IEEE negative zeros in a direction; print them as 0.
Vector without_negative_zero(Vector v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] == 0.0) v[i] = 0.0;
  }
  return v;
}

DirectionReport sampled_extremum(const SaddleFamily& F, DirectionMode mode) {
  const std::vector<Vector> pts = sample_sphere(default_sphere_cover(F.dim()));
  DirectionReport out;
  out.mode = mode;
  out.approximate = true;
  bool first = true;
  for (const Vector& x : pts) {
    const double v = mode == DirectionMode::kDescent ? eval_infsup(F, x)
                                                     : eval_supinf(F, x);
    const bool better = mode == DirectionMode::kDescent ? v < out.value
                                                        : v > out.value;
    if (first || better) {
      out.value = v;
      out.direction = x;
      first = false;
    }
  }
  return out;
}

}  // namespace

DirectionReport steepest_descent(const SaddleFamily& F, const Tolerances& tol) {
  int best_row = -1;
  NearestPoint best;
  for (int i = 0; i < F.rows(); ++i) {
    NearestPoint np = nearest_point_origin(F.row_points(i), tol);
    if (np.distance > tol.nearest &&
        (best_row < 0 || np.distance > best.distance)) {
      best_row = i;
      best = std::move(np);
    }
  }
  if (best_row < 0) return sampled_extremum(F, DirectionMode::kDescent);

  DirectionReport out;
  out.mode = DirectionMode::kDescent;
  out.direction = without_negative_zero((-1.0 / best.distance) * best.point);
  out.value = -best.distance;
  Certificate cert;
  cert.kind = Certificate::Kind::kMembershipWeights;
  cert.weights = std::move(best.weights);
  out.certificate = std::move(cert);
  return out;
}

DirectionReport steepest_ascent(const SaddleFamily& F, const Tolerances& tol) {
  int best_col = -1;
  NearestPoint best;
  for (int s = 0; s < F.cols(); ++s) {
    NearestPoint np = nearest_point_origin(F.col_points(s), tol);
    if (np.distance > tol.nearest &&
        (best_col < 0 || np.distance > best.distance)) {
      best_col = s;
      best = std::move(np);
    }
  }
  if (best_col < 0) return sampled_extremum(F, DirectionMode::kAscent);

  DirectionReport out;
  out.mode = DirectionMode::kAscent;
  out.direction = without_negative_zero((1.0 / best.distance) * best.point);
  out.value = best.distance;
  Certificate cert;
  cert.kind = Certificate::Kind::kMembershipWeights;
  cert.weights = std::move(best.weights);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace saddlecalc
