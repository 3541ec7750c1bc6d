#include "hadamard/euclidean.hpp"

#include <cmath>

#include "hadamard/numeric.hpp"

namespace hadamard {

namespace vec {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<double> scale(double s, const std::vector<double>& a) {
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

}  // namespace vec

EuclideanSpace::EuclideanSpace(int dimension) : dim_(dimension) {
  if (dimension < 1) throw DomainError("euclidean dimension must be >= 1");
}

const std::vector<double>& EuclideanSpace::coords(const Point& p) const {
  const auto* e = std::get_if<EuclideanPoint>(&p);
  if (!e) throw DomainError("point does not belong to a euclidean space");
  if (static_cast<int>(e->x.size()) != dim_)
    throw DomainError("euclidean point has wrong dimension");
  return e->x;
}

Point EuclideanSpace::point(std::vector<double> c) const {
  if (static_cast<int>(c.size()) != dim_)
    throw DomainError("euclidean point has wrong dimension");
  return EuclideanPoint{std::move(c)};
}

double EuclideanSpace::distance(const Point& x, const Point& y) const {
  return vec::norm(vec::sub(coords(x), coords(y)));
}

Point EuclideanSpace::geodesic_point(const Point& x, const Point& y, double s) const {
  const auto& a = coords(x);
  const auto& b = coords(y);
  const double d = vec::norm(vec::sub(a, b));
  if (s == 0.0 || d == 0.0) return x;
  if (s == d) return y;
  const double t = s / d;
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return EuclideanPoint{std::move(r)};
}

double EuclideanSpace::exact_angle(const Point& p, const Point& x, const Point& y) const {
  const auto& cp = coords(p);
  const auto u = vec::sub(coords(x), cp);
  const auto v = vec::sub(coords(y), cp);
  const double nu = vec::norm(u);
  const double nv = vec::norm(v);
  const double eps = eps_geom();
  if (nu <= eps && nv <= eps) return 0.0;
  if (nu <= eps || nv <= eps) return M_PI / 2.0;
  return safe_acos(vec::dot(u, v) / (nu * nv));
}

std::optional<Point> EuclideanSpace::opposite_point(const Point& x, const Point& toward,
                                                    double dist) const {
  const double d = distance(x, toward);
  if (d <= eps_geom() || dist <= 0.0) return std::nullopt;
  return geodesic_point(x, toward, -dist);
}

namespace {

Point project_halfspace(const EuclideanSpace& sp, const Halfspace& h, const Point& x) {
  if (h.normal.size() != sp.coords(x).size())
    throw DomainError("halfspace normal has wrong dimension");
  const double nn = vec::dot(h.normal, h.normal);
  if (nn == 0.0) throw DomainError("halfspace normal must be nonzero");
  const auto& c = sp.coords(x);
  const double excess = vec::dot(h.normal, c) - h.offset;
  if (excess <= 0.0) return x;
  return sp.point(vec::sub(c, vec::scale(excess / nn, h.normal)));
}

Point project_ball(const EuclideanSpace& sp, const Ball& b, const Point& x) {
  if (b.radius < 0.0) throw DomainError("ball radius must be nonnegative");
  const auto& c = sp.coords(x);
  if (b.center.size() != c.size()) throw DomainError("ball center has wrong dimension");
  const auto diff = vec::sub(c, b.center);
  const double d = vec::norm(diff);
  if (d <= b.radius) return x;
  return sp.point(vec::add(b.center, vec::scale(b.radius / d, diff)));
}

Point project_affine(const EuclideanSpace& sp, const AffineSubspace& a, const Point& x) {
  const auto& c = sp.coords(x);
  if (a.base.size() != c.size()) throw DomainError("affine base has wrong dimension");
  // Gram-Schmidt on the spanning directions, then orthogonal projection.
  std::vector<std::vector<double>> basis;
  for (const auto& dir : a.directions) {
    if (dir.size() != c.size()) throw DomainError("affine direction has wrong dimension");
    std::vector<double> v = dir;
    for (const auto& b : basis) v = vec::sub(v, vec::scale(vec::dot(v, b), b));
    const double n = vec::norm(v);
    if (n > 1e-12) basis.push_back(vec::scale(1.0 / n, v));
  }
  const auto rel = vec::sub(c, a.base);
  std::vector<double> r = a.base;
  for (const auto& b : basis) r = vec::add(r, vec::scale(vec::dot(rel, b), b));
  return sp.point(std::move(r));
}

Point project_segment(const EuclideanSpace& sp, const GeodesicSegment& g, const Point& x) {
  const auto& a = sp.coords(g.a);
  const auto& b = sp.coords(g.b);
  const auto ab = vec::sub(b, a);
  const double nn = vec::dot(ab, ab);
  if (nn == 0.0) return g.a;
  const double t = std::clamp(vec::dot(vec::sub(sp.coords(x), a), ab) / nn, 0.0, 1.0);
  if (t == 0.0) return g.a;
  if (t == 1.0) return g.b;
  return sp.point(vec::add(a, vec::scale(t, ab)));
}

}  // namespace

Point EuclideanSpace::project(const ConvexSet& set, const Point& x) const {
  if (const auto* h = std::get_if<Halfspace>(&set)) return project_halfspace(*this, *h, x);
  if (const auto* b = std::get_if<Ball>(&set)) return project_ball(*this, *b, x);
  if (const auto* a = std::get_if<AffineSubspace>(&set)) return project_affine(*this, *a, x);
  if (const auto* g = std::get_if<GeodesicSegment>(&set)) return project_segment(*this, *g, x);
  return Space::project(set, x);
}

}  // namespace hadamard
