#include "hadamard/geometry.hpp"

#include <cmath>

#include "hadamard/numeric.hpp"

namespace hadamard {

double quasilinearize(const Space& s, const Point& x, const Point& y, const Point& z,
                      const Point& w) {
  return 0.5 * (sq(s.distance(x, w)) + sq(s.distance(y, z)) - sq(s.distance(x, z)) -
                sq(s.distance(y, w)));
}

Point convex_combination(const Space& s, const Point& x, const Point& y, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("convex combination weight outside [0, 1]");
  if (alpha == 0.0) return x;
  if (alpha == 1.0) return y;
  const double d = s.distance(x, y);
  return s.geodesic_point(x, y, alpha * d);
}

double comparison_angle(const Space& s, const Point& p, const Point& x, const Point& y) {
  const double dx = s.distance(p, x);
  const double dy = s.distance(p, y);
  const double eps = s.eps_geom();
  if (dx <= eps && dy <= eps) return 0.0;
  if (dx <= eps || dy <= eps) return M_PI / 2.0;
  const double dxy = s.distance(x, y);
  return safe_acos((sq(dx) + sq(dy) - sq(dxy)) / (2.0 * dx * dy));
}

double alexandrov_angle(const Space& s, const Point& p, const Point& x, const Point& y) {
  if (s.has_exact_angle()) return s.exact_angle(p, x, y);
  const double dx = s.distance(p, x);
  const double dy = s.distance(p, y);
  const double eps = s.eps_geom();
  if (dx <= eps && dy <= eps) return 0.0;
  if (dx <= eps || dy <= eps) return M_PI / 2.0;
  // Comparison angles shrink monotonically along the germs, so halving t
  // gives a nonincreasing sequence of upper bounds.
  double t = std::min(dx, dy) / 2.0;
  double prev = comparison_angle(s, p, s.geodesic_point(p, x, t), s.geodesic_point(p, y, t));
  for (int k = 0; k < kAngleRefineMax; ++k) {
    t /= 2.0;
    const double cur =
        comparison_angle(s, p, s.geodesic_point(p, x, t), s.geodesic_point(p, y, t));
    if (std::abs(cur - prev) < kEpsAngle) return cur;
    prev = cur;
  }
  throw NumericError("alexandrov angle estimate did not settle", prev);
}

double cn_gap(const Space& s, const Point& x, const Point& y, const Point& z,
              double alpha) {
  const Point m = convex_combination(s, x, y, alpha);
  return (1.0 - alpha) * sq(s.distance(x, z)) + alpha * sq(s.distance(y, z)) -
         alpha * (1.0 - alpha) * sq(s.distance(x, y)) - sq(s.distance(m, z));
}

double convexity_gap(const Space& s, const Point& x, const Point& y, const Point& z,
                     double alpha) {
  const Point m = convex_combination(s, x, y, alpha);
  return (1.0 - alpha) * s.distance(x, z) + alpha * s.distance(y, z) - s.distance(m, z);
}

double cauchy_schwarz_slack(const Space& s, const Point& x, const Point& y,
                            const Point& z, const Point& w) {
  return s.distance(x, y) * s.distance(z, w) - std::abs(quasilinearize(s, x, y, z, w));
}

ComparisonTriangle ComparisonTriangle::from_sides(double dxy, double dyz, double dzx) {
  if (dxy < 0.0 || dyz < 0.0 || dzx < 0.0)
    throw DomainError("comparison triangle sides must be nonnegative");
  const double scale = dxy + dyz + dzx;
  const double slack = 1e-12 * (1.0 + scale);
  if (dxy > dyz + dzx + slack || dyz > dzx + dxy + slack || dzx > dxy + dyz + slack)
    throw DomainError("side lengths violate the triangle inequality");
  ComparisonTriangle t;
  t.x = {0.0, 0.0};
  t.y = {dxy, 0.0};
  if (dxy == 0.0) {
    t.z = {dzx, 0.0};
    return t;
  }
  const double cx = (sq(dxy) + sq(dzx) - sq(dyz)) / (2.0 * dxy);
  const double cy = std::sqrt(std::max(0.0, sq(dzx) - sq(cx)));
  t.z = {cx, cy};
  return t;
}

double alexandrov_lemma_gap(const std::array<double, 2>& x,
                            const std::array<double, 2>& y,
                            const std::array<double, 2>& z) {
  auto norm2 = [](const std::array<double, 2>& v) { return std::hypot(v[0], v[1]); };
  auto dot2 = [](const std::array<double, 2>& u, const std::array<double, 2>& v) {
    return u[0] * v[0] + u[1] * v[1];
  };
  const double nx = norm2(x), ny = norm2(y), nz = norm2(z);
  if (nx == 0.0 || ny == 0.0 || nz == 0.0)
    throw DomainError("alexandrov lemma requires nonzero vectors");
  const double theta = safe_acos(dot2(x, y) / (nx * ny));
  const double theta_prime = safe_acos(dot2(z, y) / (nz * ny));
  if (theta + theta_prime < M_PI - 1e-12)
    throw DomainError("alexandrov lemma requires theta + theta' >= pi");
  const std::array<double, 2> xy{x[0] - y[0], x[1] - y[1]};
  const std::array<double, 2> yz{y[0] - z[0], y[1] - z[1]};
  return norm2(xy) + norm2(yz) - nx - nz;
}

}  // namespace hadamard
