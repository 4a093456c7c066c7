#ifndef SADDLECALC_LINPROG_HPP
#define SADDLECALC_LINPROG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "saddlecalc/tolerances.hpp"
#include "saddlecalc/vector.hpp"

namespace saddlecalc {

// minimize <objective, x>
// subject to  <a, x>  = b   for (a, b) in equalities
//             <a, x> <= b   for (a, b) in inequalities
//             x[j] >= lower_bounds[j]   where a bound is present
//
// An empty lower_bounds list leaves every variable free.
struct LPProblem {
  Vector objective;
  std::vector<std::pair<Vector, double>> equalities;
  std::vector<std::pair<Vector, double>> inequalities;
  std::vector<std::optional<double>> lower_bounds;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  Vector point;       // set when optimal
  double value = 0.0; // objective at `point`
  // Farkas certificate of infeasibility, one multiplier per row in the
  // order [equalities..., inequalities...]. Writing the rows as
  // <a_r, x> (=|<=) b_r, the vector y satisfies
  //   sum_r y_r <a_r, x> <= 0 over the feasible sign cone of x while
  //   sum_r y_r b_r > 0,
  // i.e. it exhibits an inconsistent aggregated constraint. Derived from
  // the phase-1 dual values at termination.
  std::vector<double> farkas;
};

// Dense two-phase simplex. The pivot rule is a fixed most-negative-cost
// rule that falls back to Bland's rule once a pivot budget is spent, so
// results are deterministic for a fixed input and termination is
// guaranteed. Throws DimensionMismatch for malformed input and
// NumericalFailure when the overall cycling guard is exceeded or the
// computed optimum fails its own feasibility check.
LPSolution lp_solve(const LPProblem& problem,
                    const Tolerances& tol = default_tolerances());

}  // namespace saddlecalc

#endif  // SADDLECALC_LINPROG_HPP
