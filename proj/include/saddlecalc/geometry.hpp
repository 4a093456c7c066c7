#ifndef SADDLECALC_GEOMETRY_HPP
#define SADDLECALC_GEOMETRY_HPP

#include <vector>

#include "saddlecalc/linprog.hpp"
#include "saddlecalc/tolerances.hpp"
#include "saddlecalc/vector.hpp"

namespace saddlecalc {

// Machine-checkable witness attached to a decision: either convex
// weights reproducing a claimed member, or a direction strictly
// separating the query from the hull.
struct Certificate {
  enum class Kind { kMembershipWeights, kSeparatingDirection };
  Kind kind = Kind::kMembershipWeights;
  // Membership: weights over the generator list, >= 0 and summing to 1.
  std::vector<double> weights;
  // Separation: unit direction with the strict margin recorded below.
  Vector direction;
  double margin = 0.0;
};

struct HullDecision {
  bool inside = false;
  Certificate certificate;
};

// Does q lie in the convex hull of P? `inside` comes with reproducing
// weights; refusal comes with a unit direction d such that
// <d, q> >= max_p <d, p> + margin.
HullDecision in_convex_hull(const Vector& q, const PointSet& P,
                            const Tolerances& tol = default_tolerances());

struct IntersectionPoint {
  bool nonempty = false;
  Vector point;                   // a point of conv(P) ∩ conv(Q)
  std::vector<double> weights_p;  // convex weights over P reproducing it
  std::vector<double> weights_q;  // convex weights over Q reproducing it
  // When empty: unit direction d with min_p <d, p> >= max_q <d, q> + margin.
  Certificate certificate;
};

// A point of conv(P) ∩ conv(Q), or a separating certificate when the
// hulls are disjoint. The point is the first feasible basic solution of
// the weight LP, so ties are pivot-rule-determined but deterministic.
IntersectionPoint polytope_intersection_point(
    const PointSet& P, const PointSet& Q,
    const Tolerances& tol = default_tolerances());

struct NearestPoint {
  Vector point;           // Euclidean projection of the origin onto conv(P)
  double distance = 0.0;  // |point|
  std::vector<double> weights;  // convex weights over P reproducing it
};

// Minimum-norm point of conv(P) by Wolfe's method: a finite sequence of
// corral subproblems, each solved by a dense KKT system. The result
// satisfies <point, p - point> >= -tol.nearest for every p in P.
NearestPoint nearest_point_origin(const PointSet& P,
                                  const Tolerances& tol = default_tolerances());

// The subset of P whose points are vertices of conv(P), in input order.
// Exact duplicates and tol.duplicate-close points are merged first; then
// every point lying in the hull of the surviving others is dropped.
// Idempotent, and conv(result) = conv(P).
PointSet minimal_generators(const PointSet& P,
                            const Tolerances& tol = default_tolerances());

}  // namespace saddlecalc

#endif  // SADDLECALC_GEOMETRY_HPP
