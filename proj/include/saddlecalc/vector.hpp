#ifndef SADDLECALC_VECTOR_HPP
#define SADDLECALC_VECTOR_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "saddlecalc/errors.hpp"

namespace saddlecalc {

// A point a of n-dimensional space acting as the linear function
// x -> <a, x>. Coordinates are always finite; the dimension is >= 1.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> coords);

  static Vector zero(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);
Vector operator-(const Vector& a);

// Unit vector a / |a|; throws NumericalFailure when |a| is too small to
// normalize reliably.
Vector normalized(const Vector& a);

std::string to_string(const Vector& a);

// A nonempty finite list of points of common dimension. The convex hull
// of the points is the set the geometry kernel works with; the list
// itself may be redundant.
class PointSet {
 public:
  explicit PointSet(std::vector<Vector> points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Vector& operator[](int i) const {
    return points_[static_cast<size_t>(i)];
  }
  const std::vector<Vector>& points() const { return points_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Vector> points_;
  int dim_ = 0;
};

// Pairwise sums {p + q : p in a, q in b}; generators of the support
// function sum.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

// Concatenation of the two generator lists (hull of the union).
PointSet merged(const PointSet& a, const PointSet& b);

PointSet scaled(const PointSet& a, double s);
PointSet translated(const PointSet& a, const Vector& offset);

}  // namespace saddlecalc

#endif  // SADDLECALC_VECTOR_HPP
