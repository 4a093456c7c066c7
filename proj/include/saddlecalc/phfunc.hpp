#ifndef SADDLECALC_PHFUNC_HPP
#define SADDLECALC_PHFUNC_HPP

#include <vector>

#include "saddlecalc/vector.hpp"

namespace saddlecalc {

// Polyhedral sublinear function x -> max over generators b of <b, x>.
// The hull of the generators is the subdifferential at the origin; the
// list itself may be redundant (reduction is explicit, never automatic).
class MaxOfLinear {
 public:
  explicit MaxOfLinear(PointSet generators) : generators_(std::move(generators)) {}
  int dim() const { return generators_.dim(); }
  const PointSet& generators() const { return generators_; }
  friend bool operator==(const MaxOfLinear&, const MaxOfLinear&) = default;

 private:
  PointSet generators_;
};

// Polyhedral superlinear function x -> min over generators c of <c, x>;
// the hull of the generators is the upper subdifferential.
class MinOfLinear {
 public:
  explicit MinOfLinear(PointSet generators) : generators_(std::move(generators)) {}
  int dim() const { return generators_.dim(); }
  const PointSet& generators() const { return generators_; }
  friend bool operator==(const MinOfLinear&, const MinOfLinear&) = default;

 private:
  PointSet generators_;
};

// p = plus - minus, a difference of two polyhedral sublinear functions.
class DCPair {
 public:
  DCPair(MaxOfLinear plus, MaxOfLinear minus);
  int dim() const { return plus_.dim(); }
  const MaxOfLinear& plus() const { return plus_; }
  const MaxOfLinear& minus() const { return minus_; }
  friend bool operator==(const DCPair&, const DCPair&) = default;

 private:
  MaxOfLinear plus_;
  MaxOfLinear minus_;
};

// A complete rows x cols grid of vectors, the two-index family behind
// inf-sup / sup-inf readings. Entries are stored row-major.
class SaddleFamily {
 public:
  SaddleFamily(int dim, int rows, int cols, std::vector<Vector> entries);
  static SaddleFamily from_rows(const std::vector<std::vector<Vector>>& rows);

  int dim() const { return dim_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Vector& entry(int i, int s) const {
    return entries_[static_cast<size_t>(i) * cols_ + s];
  }
  const std::vector<Vector>& entries() const { return entries_; }

  PointSet row_points(int i) const;
  PointSet col_points(int s) const;

  friend bool operator==(const SaddleFamily&, const SaddleFamily&) = default;

 private:
  int dim_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Vector> entries_;
};

// The families Phi (upper, sublinear approximants) and Psi (lower,
// superlinear approximants) sandwiching a common function.
class ApproximationFamilies {
 public:
  ApproximationFamilies(std::vector<MaxOfLinear> upper,
                        std::vector<MinOfLinear> lower);
  int dim() const { return upper_.front().dim(); }
  const std::vector<MaxOfLinear>& upper() const { return upper_; }
  const std::vector<MinOfLinear>& lower() const { return lower_; }
  friend bool operator==(const ApproximationFamilies&,
                         const ApproximationFamilies&) = default;

 private:
  std::vector<MaxOfLinear> upper_;
  std::vector<MinOfLinear> lower_;
};

double eval_sublinear(const MaxOfLinear& f, const Vector& x);
double eval_superlinear(const MinOfLinear& f, const Vector& x);
double eval_dc(const DCPair& p, const Vector& x);

// min over rows of (max over columns of <a_is, x>).
double eval_infsup(const SaddleFamily& F, const Vector& x);
// max over columns of (min over rows of <a_is, x>); never exceeds
// eval_infsup on the same family.
double eval_supinf(const SaddleFamily& F, const Vector& x);

// Vector-lattice arithmetic on DC pairs. Results satisfy the pointwise
// semantics exactly: eval_dc(dc_add(p, q), x) = eval_dc(p, x) + eval_dc(q, x)
// and so on. Sublinear parts combine by Minkowski sums and generator
// unions; the generator blowup is accepted and may be reduced afterwards
// with minimal_generators.
DCPair dc_add(const DCPair& p, const DCPair& q);
DCPair dc_scale(const DCPair& p, double lambda);
DCPair dc_max(const DCPair& p, const DCPair& q);
DCPair dc_min(const DCPair& p, const DCPair& q);

// Grid utilities.
SaddleFamily transpose(const SaddleFamily& F);
SaddleFamily negate(const SaddleFamily& F);
SaddleFamily scale_entries(const SaddleFamily& F, double s);

}  // namespace saddlecalc

#endif  // SADDLECALC_PHFUNC_HPP
