#ifndef SADDLECALC_SADDLE_HPP
#define SADDLECALC_SADDLE_HPP

#include <stdexcept>
#include <string>

#include "saddlecalc/geometry.hpp"
#include "saddlecalc/phfunc.hpp"
#include "saddlecalc/sampling.hpp"
#include "saddlecalc/tolerances.hpp"

namespace saddlecalc {

// A pair (row, col) of approximants whose generator hulls do not
// intersect: the families cannot sandwich a common function. Carries
// the separating certificate for the offending pair.
class SandwichFailure : public std::runtime_error {
 public:
  SandwichFailure(int row, int col, Certificate certificate);
  int row() const { return row_; }
  int col() const { return col_; }
  const Certificate& certificate() const { return certificate_; }

 private:
  int row_;
  int col_;
  Certificate certificate_;
};

// The difference construction: with the exposed points b_s of the plus
// part (columns) and c_i of the minus part (rows), the grid b_s - c_i
// represents eval_dc(p, .) in both evaluation orders, exactly. Both
// generator lists are reduced to their hull vertices first.
SaddleFamily from_dc(const DCPair& p,
                     const Tolerances& tol = default_tolerances());

// The separation construction: entry (i, s) is a point of
// conv(gens(upper_i)) ∩ conv(gens(lower_s)), chosen as the first
// feasible basic solution of the weight LP. Throws SandwichFailure for
// a non-intersecting pair.
SaddleFamily build_from_approximations(const ApproximationFamilies& fams,
                                       const Tolerances& tol = default_tolerances());

// The leave-one-out difference decomposition of the inf-sup reading:
// with g_i the row-i max-of-linear functions,
//   min_i g_i = sum_i g_i - max_j sum_{i != j} g_i,
// so eval_dc(result, x) = eval_infsup(F, x) for every x, whether or not
// F is a saddle family. Generator lists are reduced along the way.
DCPair saddle_to_dc(const SaddleFamily& F,
                    const Tolerances& tol = default_tolerances());

struct SaddleReport {
  double max_gap = 0.0;  // max over tested points of infsup - supinf
  Vector witness;        // a point attaining max_gap
  bool is_saddle = false;
  bool exact = false;    // tested candidate set was complete (dim <= 2)
};

// Samples the duality gap over the sphere. With exact_low_dim and
// dim <= 2 the candidate set additionally contains, for every pair of
// distinct entries, the directions parallel and orthogonal to their
// difference, which makes the maximum exact for these families.
SaddleReport verify_saddle(const SaddleFamily& F, const SphereSampler& sampler,
                           bool exact_low_dim = true,
                           const Tolerances& tol = default_tolerances());

// Hull-membership form of the sandwich: entry (i, s) lies in the
// generator hull of upper_i and of lower_s. Throws DimensionMismatch
// when the grid and the families are not index-aligned.
bool validate_sandwich(const SaddleFamily& F, const ApproximationFamilies& fams,
                       const Tolerances& tol = default_tolerances());

// Drops duplicate rows/columns and rows (columns) strictly dominated on
// the sampled sphere: a row everywhere >= another row by more than
// tol.verify never attains the min, dually for columns. Evaluations at
// the sample points are preserved.
SaddleFamily reduce(const SaddleFamily& F, const SphereSampler& sampler,
                    const Tolerances& tol = default_tolerances());
SaddleFamily reduce(const SaddleFamily& F,
                    const Tolerances& tol = default_tolerances());

}  // namespace saddlecalc

#endif  // SADDLECALC_SADDLE_HPP
