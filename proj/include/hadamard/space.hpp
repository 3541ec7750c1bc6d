#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hadamard {

// Space-specific point representations. A Point is only meaningful together
// with the space that produced it.
struct EuclideanPoint {
  std::vector<double> x;
};

struct HalfPlanePoint {
  double a = 0.0;
  double b = 1.0;  // must stay positive
};

struct TreePoint {
  int edge = 0;
  double offset = 0.0;  // arclength from edge.u, in [0, edge length]
};

using Point = std::variant<EuclideanPoint, HalfPlanePoint, TreePoint>;

std::string describe(const Point& p);

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Iterative procedure failed to converge; carries the last scalar estimate.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& message, double last_estimate);
  double last_estimate() const { return last_estimate_; }

 private:
  double last_estimate_;
};

// A point solver gave up; carries the best iterate found.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& message, Point best, double residual);
  const Point& best() const { return best_; }
  double residual() const { return residual_; }

 private:
  Point best_;
  double residual_;
};

// Descriptors of the closed convex sets the model spaces can project onto.
struct Halfspace {
  std::vector<double> normal;  // nonzero
  double offset = 0.0;         // {y : <normal, y> <= offset}
};

struct Ball {
  std::vector<double> center;
  double radius = 1.0;
};

struct AffineSubspace {
  std::vector<double> base;
  std::vector<std::vector<double>> directions;  // span, need not be orthonormal
};

struct TreeSubtree {
  std::vector<std::string> vertices;  // labels of a connected vertex set
};

struct GeodesicSegment {
  Point a;
  Point b;
};

struct Singleton {
  Point p;
};

using ConvexSet = std::variant<Halfspace, Ball, AffineSubspace, TreeSubtree,
                               GeodesicSegment, Singleton>;

// Contract implemented by every model space: a complete CAT(0) metric with
// computable geodesics, plus exact angles and metric projections where the
// space has closed forms for them.
class Space {
 public:
  virtual ~Space() = default;

  virtual std::string name() const = 0;

  // Baseline tolerance for degeneracy decisions in this space.
  virtual double eps_geom() const = 0;

  virtual double distance(const Point& x, const Point& y) const = 0;

  // Point at arclength s along the geodesic from x to y. s must lie in
  // [0, distance(x, y)]; Euclidean and half-plane geodesics are complete
  // lines and accept any real s.
  virtual Point geodesic_point(const Point& x, const Point& y, double s) const = 0;

  virtual bool has_exact_angle() const { return false; }
  virtual double exact_angle(const Point& p, const Point& x, const Point& y) const;

  // Metric projection onto a supported descriptor; DomainError otherwise.
  virtual Point project(const ConvexSet& set, const Point& x) const;

  // A point w whose geodesic from x makes angle pi with the geodesic from x
  // to `toward`, at distance up to `dist`, when the space admits one.
  virtual std::optional<Point> opposite_point(const Point& x, const Point& toward,
                                              double dist) const;

  bool points_equal(const Point& x, const Point& y, double tol) const;
  bool points_equal(const Point& x, const Point& y) const;

 protected:
  // Projection onto a geodesic segment by golden-section search on arclength;
  // valid in any CAT(0) space because t -> d(gamma(t), x) is convex.
  Point project_onto_segment(const Point& a, const Point& b, const Point& x) const;
};

}  // namespace hadamard
