#include "hadamard/tangent.hpp"

#include <cmath>

#include "hadamard/euclidean.hpp"
#include "hadamard/geometry.hpp"
#include "hadamard/numeric.hpp"

namespace hadamard {

TangentVector make_tangent(const Space& s, Point base, double scale, Point anchor) {
  if (scale < 0.0) throw DomainError("tangent scale must be nonnegative");
  TangentVector u;
  u.space = &s;
  u.length = scale * s.distance(base, anchor);
  u.base = std::move(base);
  u.scale = scale;
  u.anchor = std::move(anchor);
  return u;
}

TangentVector zero_tangent(const Space& s, Point base) {
  Point anchor = base;
  return make_tangent(s, std::move(base), 0.0, std::move(anchor));
}

namespace {

const Space& common_space(const TangentVector& u, const TangentVector& v) {
  if (u.space == nullptr || u.space != v.space)
    throw DomainError("tangent vectors live in different spaces");
  if (!u.space->points_equal(u.base, v.base))
    throw DomainError("tangent vectors have different base points");
  return *u.space;
}

}  // namespace

double tangent_angle(const TangentVector& u, const TangentVector& v) {
  const Space& s = common_space(u, v);
  return alexandrov_angle(s, u.base, u.anchor, v.anchor);
}

double tangent_metric(const TangentVector& u, const TangentVector& v) {
  common_space(u, v);
  if (u.length == 0.0) return v.length;
  if (v.length == 0.0) return u.length;
  const double c = std::cos(tangent_angle(u, v));
  const double inner = sq(u.length) + sq(v.length) - 2.0 * u.length * v.length * c;
  return std::sqrt(std::max(0.0, inner));
}

double tangent_pairing(const TangentVector& u, const TangentVector& v) {
  common_space(u, v);
  if (u.length == 0.0 || v.length == 0.0) return 0.0;
  return u.length * v.length * std::cos(tangent_angle(u, v));
}

bool tangent_equiv(const TangentVector& u, const TangentVector& v, double tol) {
  common_space(u, v);
  if (u.length < tol && v.length < tol) return true;
  if (std::abs(u.length - v.length) >= tol) return false;
  return tangent_angle(u, v) < kEpsAngle;
}

double default_equiv_tol(const TangentVector& u, const TangentVector& v) {
  return 1e-8 * (1.0 + u.length + v.length);
}

double pairing_limit_estimate(const Space& s, const Point& p, const Point& x,
                              const Point& y, double eps) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw DomainError("shrinkage parameter must lie in (0, 1]");
  const Point shrunk = convex_combination(s, p, y, eps);
  return quasilinearize(s, p, x, p, shrunk) / eps;
}

std::vector<double> euclid_embed(const TangentVector& u) {
  const auto* e = dynamic_cast<const EuclideanSpace*>(u.space);
  if (!e) throw DomainError("euclidean embedding requires a euclidean base space");
  return vec::scale(u.scale, vec::sub(e->coords(u.anchor), e->coords(u.base)));
}

}  // namespace hadamard
