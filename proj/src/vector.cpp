#include "saddlecalc/vector.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace saddlecalc {

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw DimensionMismatch("vector must have at least one coordinate");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw DimensionMismatch("vector coordinate is not finite");
    }
  }
}

Vector Vector::zero(int dim) {
  return Vector(std::vector<double>(static_cast<size_t>(dim), 0.0));
}

double dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dot product of vectors of dimension " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector operator+(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector sum dimensions");
  std::vector<double> c(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
  return Vector(std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector difference dimensions");
  std::vector<double> c(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
  return Vector(std::move(c));
}

Vector operator*(double s, const Vector& a) {
  std::vector<double> c(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] = s * a[i];
  return Vector(std::move(c));
}

Vector operator-(const Vector& a) { return -1.0 * a; }

Vector normalized(const Vector& a) {
  const double n = norm(a);
  if (n < 1e-300) {
    throw NumericalFailure("cannot normalize a (near-)zero vector");
  }
  return (1.0 / n) * a;
}

std::string to_string(const Vector& a) {
  std::string out = "(";
  char buf[64];
  for (int i = 0; i < a.dim(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g", a[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  out += ")";
  return out;
}

PointSet::PointSet(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw DimensionMismatch("point set must be nonempty");
  }
  dim_ = points_.front().dim();
  for (const Vector& p : points_) {
    if (p.dim() != dim_) {
      throw DimensionMismatch("point set mixes dimensions " +
                              std::to_string(dim_) + " and " +
                              std::to_string(p.dim()));
    }
  }
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("minkowski sum dimensions");
  std::vector<Vector> sums;
  sums.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      sums.push_back(a[i] + b[j]);
    }
  }
  return PointSet(std::move(sums));
}

PointSet merged(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("merged point set dimensions");
  std::vector<Vector> pts = a.points();
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return PointSet(std::move(pts));
}

PointSet scaled(const PointSet& a, double s) {
  std::vector<Vector> pts;
  pts.reserve(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) pts.push_back(s * a[i]);
  return PointSet(std::move(pts));
}

PointSet translated(const PointSet& a, const Vector& offset) {
  if (a.dim() != offset.dim()) {
    throw DimensionMismatch("translation offset dimension");
  }
  std::vector<Vector> pts;
  pts.reserve(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) pts.push_back(a[i] + offset);
  return PointSet(std::move(pts));
}

}  // namespace saddlecalc
