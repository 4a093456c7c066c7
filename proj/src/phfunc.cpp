#include "saddlecalc/phfunc.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "saddlecalc/errors.hpp"

namespace saddlecalc {

DCPair::DCPair(MaxOfLinear plus, MaxOfLinear minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.dim() != minus_.dim()) {
    throw DimensionMismatch("DC parts of dimensions " +
                            std::to_string(plus_.dim()) + " and " +
                            std::to_string(minus_.dim()));
  }
}

SaddleFamily::SaddleFamily(int dim, int rows, int cols,
                           std::vector<Vector> entries)
    : dim_(dim), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (dim_ < 1) throw DimensionMismatch("family dimension must be >= 1");
  if (rows_ < 1 || cols_ < 1) {
    throw DimensionMismatch("family must have at least one row and column");
  }
  if (entries_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_)) {
    throw DimensionMismatch("family grid is incomplete: " +
                            std::to_string(entries_.size()) + " entries for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (const Vector& a : entries_) {
    if (a.dim() != dim_) {
      throw DimensionMismatch("family entry of dimension " +
                              std::to_string(a.dim()) + " in a " +
                              std::to_string(dim_) + "-dimensional family");
    }
  }
}

SaddleFamily SaddleFamily::from_rows(const std::vector<std::vector<Vector>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DimensionMismatch("family must have at least one row and column");
  }
  const int cols = static_cast<int>(rows.front().size());
  std::vector<Vector> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw DimensionMismatch("ragged family row");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return SaddleFamily(rows.front().front().dim(), static_cast<int>(rows.size()),
                      cols, std::move(entries));
}

PointSet SaddleFamily::row_points(int i) const {
  std::vector<Vector> pts;
  pts.reserve(static_cast<size_t>(cols_));
  for (int s = 0; s < cols_; ++s) pts.push_back(entry(i, s));
  return PointSet(std::move(pts));
}

PointSet SaddleFamily::col_points(int s) const {
  std::vector<Vector> pts;
  pts.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) pts.push_back(entry(i, s));
  return PointSet(std::move(pts));
}

ApproximationFamilies::ApproximationFamilies(std::vector<MaxOfLinear> upper,
                                             std::vector<MinOfLinear> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.empty() || lower_.empty()) {
    throw DimensionMismatch("approximation families must be nonempty");
  }
  const int n = upper_.front().dim();
  for (const MaxOfLinear& f : upper_) {
    if (f.dim() != n) throw DimensionMismatch("upper family mixes dimensions");
  }
  for (const MinOfLinear& f : lower_) {
    if (f.dim() != n) throw DimensionMismatch("lower family mixes dimensions");
  }
}

double eval_sublinear(const MaxOfLinear& f, const Vector& x) {
  if (f.dim() != x.dim()) {
    throw DimensionMismatch("evaluating a " + std::to_string(f.dim()) +
                            "-dimensional function at a " +
                            std::to_string(x.dim()) + "-dimensional point");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.generators().size(); ++i) {
    best = std::max(best, dot(f.generators()[i], x));
  }
  return best;
}

double eval_superlinear(const MinOfLinear& f, const Vector& x) {
  if (f.dim() != x.dim()) {
    throw DimensionMismatch("evaluating a " + std::to_string(f.dim()) +
                            "-dimensional function at a " +
                            std::to_string(x.dim()) + "-dimensional point");
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.generators().size(); ++i) {
    best = std::min(best, dot(f.generators()[i], x));
  }
  return best;
}

double eval_dc(const DCPair& p, const Vector& x) {
  return eval_sublinear(p.plus(), x) - eval_sublinear(p.minus(), x);
}

double eval_infsup(const SaddleFamily& F, const Vector& x) {
  if (F.dim() != x.dim()) {
    throw DimensionMismatch("evaluating a " + std::to_string(F.dim()) +
                            "-dimensional family at a " +
                            std::to_string(x.dim()) + "-dimensional point");
  }
  double outer = std::numeric_limits<double>::infinity();
  for (int i = 0; i < F.rows(); ++i) {
    double inner = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < F.cols(); ++s) {
      inner = std::max(inner, dot(F.entry(i, s), x));
    }
    outer = std::min(outer, inner);
  }
  return outer;
}

double eval_supinf(const SaddleFamily& F, const Vector& x) {
  if (F.dim() != x.dim()) {
    throw DimensionMismatch("evaluating a " + std::to_string(F.dim()) +
                            "-dimensional family at a " +
                            std::to_string(x.dim()) + "-dimensional point");
  }
  double outer = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < F.cols(); ++s) {
    double inner = std::numeric_limits<double>::infinity();
    for (int i = 0; i < F.rows(); ++i) {
      inner = std::min(inner, dot(F.entry(i, s), x));
    }
    outer = std::max(outer, inner);
  }
  return outer;
}

DCPair dc_add(const DCPair& p, const DCPair& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("adding DC pairs of different dimensions");
  return DCPair(
      MaxOfLinear(minkowski_sum(p.plus().generators(), q.plus().generators())),
      MaxOfLinear(minkowski_sum(p.minus().generators(), q.minus().generators())));
}

DCPair dc_scale(const DCPair& p, double lambda) {
  if (lambda >= 0.0) {
    return DCPair(MaxOfLinear(scaled(p.plus().generators(), lambda)),
                  MaxOfLinear(scaled(p.minus().generators(), lambda)));
  }
  // lambda (f - g) = (-lambda) g - (-lambda) f for lambda < 0.
  return DCPair(MaxOfLinear(scaled(p.minus().generators(), -lambda)),
                MaxOfLinear(scaled(p.plus().generators(), -lambda)));
}

DCPair dc_max(const DCPair& p, const DCPair& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("max of DC pairs of different dimensions");
  // max(p1-p2, q1-q2) = max(p1+q2, q1+p2) - (p2+q2); the max of two
  // sublinear functions is the union of their generator lists.
  const PointSet left = minkowski_sum(p.plus().generators(), q.minus().generators());
  const PointSet right = minkowski_sum(q.plus().generators(), p.minus().generators());
  return DCPair(
      MaxOfLinear(merged(left, right)),
      MaxOfLinear(minkowski_sum(p.minus().generators(), q.minus().generators())));
}

DCPair dc_min(const DCPair& p, const DCPair& q) {
  return dc_scale(dc_max(dc_scale(p, -1.0), dc_scale(q, -1.0)), -1.0);
}

SaddleFamily transpose(const SaddleFamily& F) {
  std::vector<Vector> entries;
  entries.reserve(F.entries().size());
  for (int s = 0; s < F.cols(); ++s) {
    for (int i = 0; i < F.rows(); ++i) entries.push_back(F.entry(i, s));
  }
  return SaddleFamily(F.dim(), F.cols(), F.rows(), std::move(entries));
}

SaddleFamily negate(const SaddleFamily& F) {
  std::vector<Vector> entries;
  entries.reserve(F.entries().size());
  for (const Vector& a : F.entries()) entries.push_back(-a);
  return SaddleFamily(F.dim(), F.rows(), F.cols(), std::move(entries));
}

SaddleFamily scale_entries(const SaddleFamily& F, double s) {
  std::vector<Vector> entries;
  entries.reserve(F.entries().size());
  for (const Vector& a : F.entries()) entries.push_back(s * a);
  return SaddleFamily(F.dim(), F.rows(), F.cols(), std::move(entries));
}

}  // namespace saddlecalc
