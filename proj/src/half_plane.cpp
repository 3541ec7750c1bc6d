#include "hadamard/half_plane.hpp"

#include <array>
#include <cmath>

#include "hadamard/numeric.hpp"

namespace hadamard {

double hp_distance(const HalfPlanePoint& z1, const HalfPlanePoint& z2) {
  if (!(z1.b > 0.0) || !(z2.b > 0.0))
    throw DomainError("half-plane points need positive imaginary part");
  const double t = (sq(z1.a - z2.a) + sq(z1.b - z2.b)) / (2.0 * z1.b * z2.b);
  return acosh1p(t);
}

const HalfPlanePoint& HalfPlaneSpace::coords(const Point& p) const {
  const auto* h = std::get_if<HalfPlanePoint>(&p);
  if (!h) throw DomainError("point does not belong to the half-plane");
  if (!(h->b > 0.0)) throw DomainError("half-plane point needs positive imaginary part");
  return *h;
}

Point HalfPlaneSpace::point(double a, double b) const {
  if (!(b > 0.0)) throw DomainError("half-plane point needs positive imaginary part");
  return HalfPlanePoint{a, b};
}

double HalfPlaneSpace::distance(const Point& x, const Point& y) const {
  return hp_distance(coords(x), coords(y));
}

namespace {

// A geodesic through two points, in its natural arclength coordinate u:
// vertical rays use u = log b; semicircles (center c, radius r) use
// u = log tan(theta/2) with theta the polar angle about (c, 0).
struct HpGeodesic {
  bool vertical = false;
  double a = 0.0;  // vertical case
  double c = 0.0, r = 1.0;
  double u1 = 0.0, u2 = 0.0;  // parameters of the defining points
};

double u_vertical(const HalfPlanePoint& z) { return std::log(z.b); }

double u_circle(double c, const HalfPlanePoint& z) {
  const double theta = std::atan2(z.b, z.a - c);
  return std::log(std::tan(theta / 2.0));
}

HpGeodesic make_geodesic(const HalfPlanePoint& z1, const HalfPlanePoint& z2, double eps) {
  HpGeodesic g;
  if (std::abs(z1.a - z2.a) < eps) {
    g.vertical = true;
    g.a = z1.a;
    g.u1 = u_vertical(z1);
    g.u2 = u_vertical(z2);
    return g;
  }
  g.vertical = false;
  g.c = 0.5 * (z1.a + z2.a) + (sq(z1.b) - sq(z2.b)) / (2.0 * (z1.a - z2.a));
  g.r = std::hypot(z1.a - g.c, z1.b);
  g.u1 = u_circle(g.c, z1);
  g.u2 = u_circle(g.c, z2);
  return g;
}

HalfPlanePoint eval_at_u(const HpGeodesic& g, double u) {
  if (g.vertical) return HalfPlanePoint{g.a, std::exp(u)};
  // theta = 2 atan(e^u); evaluate sin/cos through t = e^u for stability.
  const double t = std::exp(u);
  const double denom = 1.0 + t * t;
  const double sin_theta = 2.0 * t / denom;
  const double cos_theta = (1.0 - t * t) / denom;
  return HalfPlanePoint{g.c + g.r * cos_theta, g.r * sin_theta};
}

// Unit Euclidean direction of the geodesic leaving z1 toward z2.
std::array<double, 2> initial_tangent(const HalfPlanePoint& z1, const HalfPlanePoint& z2,
                                      double eps) {
  const HpGeodesic g = make_geodesic(z1, z2, eps);
  const double sigma = (g.u2 >= g.u1) ? 1.0 : -1.0;
  if (g.vertical) return {0.0, sigma};
  const double theta = std::atan2(z1.b, z1.a - g.c);
  return {-sigma * std::sin(theta), sigma * std::cos(theta)};
}

}  // namespace

Point HalfPlaneSpace::geodesic_point(const Point& x, const Point& y, double s) const {
  const auto& z1 = coords(x);
  const auto& z2 = coords(y);
  const double d = hp_distance(z1, z2);
  if (s == 0.0 || d == 0.0) return x;
  if (s == d) return y;
  const HpGeodesic g = make_geodesic(z1, z2, eps_geom());
  const double sigma = (g.u2 >= g.u1) ? 1.0 : -1.0;
  return eval_at_u(g, g.u1 + sigma * s);
}

double HalfPlaneSpace::exact_angle(const Point& p, const Point& x, const Point& y) const {
  const auto& zp = coords(p);
  const auto& zx = coords(x);
  const auto& zy = coords(y);
  const double eps = eps_geom();
  const bool px = hp_distance(zp, zx) <= eps;
  const bool py = hp_distance(zp, zy) <= eps;
  if (px && py) return 0.0;
  if (px || py) return M_PI / 2.0;
  const auto tx = initial_tangent(zp, zx, eps);
  const auto ty = initial_tangent(zp, zy, eps);
  return safe_acos(tx[0] * ty[0] + tx[1] * ty[1]);
}

std::optional<Point> HalfPlaneSpace::opposite_point(const Point& x, const Point& toward,
                                                    double dist) const {
  if (distance(x, toward) <= eps_geom() || dist <= 0.0) return std::nullopt;
  return geodesic_point(x, toward, -dist);
}

Point HalfPlaneSpace::project(const ConvexSet& set, const Point& x) const {
  return Space::project(set, x);  // segments and singletons
}

}  // namespace hadamard
