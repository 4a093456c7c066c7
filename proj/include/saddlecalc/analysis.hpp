#ifndef SADDLECALC_ANALYSIS_HPP
#define SADDLECALC_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "saddlecalc/geometry.hpp"
#include "saddlecalc/phfunc.hpp"
#include "saddlecalc/tolerances.hpp"

namespace saddlecalc {

// Outcome of a dual sign test. When the property holds, one membership
// certificate per row (nonnegativity) or per column (nonpositivity)
// shows the origin inside the respective hull. When it fails, `witness`
// is a direction on which the function provably takes the wrong sign,
// and failing_index names the offending row/column.
struct SignDecision {
  bool holds = false;
  std::vector<Certificate> certificates;
  int failing_index = -1;
  Vector witness;
};

// min_i max_s <a_is, x> >= 0 for all x iff the origin lies in the hull
// of every row. On failure the witness d satisfies eval_infsup(F, d) < 0.
SignDecision check_nonnegative(const SaddleFamily& F,
                               const Tolerances& tol = default_tolerances());

// Dual test on the sup-inf reading: max_s min_i <a_is, x> <= 0 for all
// x iff the origin lies in the hull of every column. On failure the
// witness d satisfies eval_supinf(F, d) > 0. For non-saddle families
// this certifies the sup-inf reading only.
SignDecision check_nonpositive(const SaddleFamily& F,
                               const Tolerances& tol = default_tolerances());

struct LipschitzBound {
  double value = 0.0;  // M with |eval_infsup(F, x)| <= M |x| everywhere
};

// The maximum entry norm: by Cauchy-Schwarz every <a_is, x> lies in
// [-M|x|, M|x|], hence so do both envelope readings. Not the minimal
// constant.
LipschitzBound lipschitz_constant(const SaddleFamily& F);

enum class DirectionMode { kDescent, kAscent };

struct DirectionReport {
  Vector direction;  // unit norm
  double value = 0.0;  // function value at `direction`
  DirectionMode mode = DirectionMode::kDescent;
  // Set when the value came from sampled search instead of the
  // nearest-point construction (the function has no strictly better
  // direction certified by a row/column hull).
  bool approximate = false;
  std::optional<Certificate> certificate;  // nearest-point weights
};

// Minimum of the inf-sup reading over the unit sphere. The minimum over
// the ball of a row function g_i equals -dist(0, conv(row_i)); the
// best row gives the value and the (negated, normalized) nearest point
// gives the direction. When every row hull contains the origin the
// function is nonnegative and a sampled search is reported instead,
// flagged approximate.
DirectionReport steepest_descent(const SaddleFamily& F,
                                 const Tolerances& tol = default_tolerances());

// Dual construction on columns via the sup-inf reading.
DirectionReport steepest_ascent(const SaddleFamily& F,
                                const Tolerances& tol = default_tolerances());

}  // namespace saddlecalc

#endif  // SADDLECALC_ANALYSIS_HPP
