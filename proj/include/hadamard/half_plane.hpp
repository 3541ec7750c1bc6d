#pragma once

#include "hadamard/space.hpp"

namespace hadamard {

// Hyperbolic distance on the upper half-plane,
//   d(z1, z2) = arcosh(1 + ((a1-a2)^2 + (b1-b2)^2) / (2 b1 b2)).
double hp_distance(const HalfPlanePoint& z1, const HalfPlanePoint& z2);

// The upper half-plane {(a, b) : b > 0} with curvature -1. Geodesics are
// vertical rays and semicircles centered on the real axis; both carry a
// closed-form arclength coordinate, so no ODE integration is needed.
class HalfPlaneSpace final : public Space {
 public:
  std::string name() const override { return "half_plane"; }
  double eps_geom() const override { return 1e-7; }

  double distance(const Point& x, const Point& y) const override;
  Point geodesic_point(const Point& x, const Point& y, double s) const override;

  bool has_exact_angle() const override { return true; }
  // Riemannian angle between the initial tangents of the two geodesics; the
  // conformal metric makes it the Euclidean angle between tangent directions.
  double exact_angle(const Point& p, const Point& x, const Point& y) const override;

  Point project(const ConvexSet& set, const Point& x) const override;
  std::optional<Point> opposite_point(const Point& x, const Point& toward,
                                      double dist) const override;

  Point point(double a, double b) const;
  const HalfPlanePoint& coords(const Point& p) const;
};

}  // namespace hadamard
