#pragma once

#include "hadamard/space.hpp"

namespace hadamard {

namespace vec {

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);
std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> scale(double s, const std::vector<double>& a);

}  // namespace vec

// R^n with the Euclidean metric; geodesics are affine segments.
class EuclideanSpace final : public Space {
 public:
  explicit EuclideanSpace(int dimension);

  int dimension() const { return dim_; }

  std::string name() const override { return "euclidean"; }
  double eps_geom() const override { return 1e-9; }

  double distance(const Point& x, const Point& y) const override;
  Point geodesic_point(const Point& x, const Point& y, double s) const override;

  bool has_exact_angle() const override { return true; }
  double exact_angle(const Point& p, const Point& x, const Point& y) const override;

  Point project(const ConvexSet& set, const Point& x) const override;
  std::optional<Point> opposite_point(const Point& x, const Point& toward,
                                      double dist) const override;

  Point point(std::vector<double> coords) const;
  const std::vector<double>& coords(const Point& p) const;

 private:
  int dim_;
};

}  // namespace hadamard
