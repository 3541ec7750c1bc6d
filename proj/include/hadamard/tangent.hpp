#pragma once

#include "hadamard/space.hpp"

namespace hadamard {

// A tangent vector at `base`: the class of the scaled geodesic germ
// (scale, gamma_{base,anchor}), stored through one representative. All
// operations factor through the length and the angle between germs, so the
// choice of representative does not matter.
struct TangentVector {
  const Space* space = nullptr;
  Point base;
  double scale = 0.0;
  Point anchor;
  double length = 0.0;  // scale * d(base, anchor)
};

TangentVector make_tangent(const Space& s, Point base, double scale, Point anchor);
TangentVector zero_tangent(const Space& s, Point base);

// Alexandrov angle between the underlying geodesic germs of u and v.
double tangent_angle(const TangentVector& u, const TangentVector& v);

// d_p(u, v) = sqrt(l_u^2 + l_v^2 - 2 l_u l_v cos(angle)); a pseudometric on
// germs, a metric on their classes.
double tangent_metric(const TangentVector& u, const TangentVector& v);

// g_p(u, v) = l_u l_v cos(angle): the cosine-law pairing standing in for an
// inner product on the tangent space.
double tangent_pairing(const TangentVector& u, const TangentVector& v);

// Same class test: either both lengths vanish, or the lengths agree and the
// germs make angle zero.
bool tangent_equiv(const TangentVector& u, const TangentVector& v, double tol);
double default_equiv_tol(const TangentVector& u, const TangentVector& v);

// Finite-shrinkage approximation of g_p(gamma_{p,x}, gamma_{p,y}):
// (1/eps) <px, p((1-eps)p (+) eps y)>; converges as eps -> 0.
double pairing_limit_estimate(const Space& s, const Point& p, const Point& x,
                              const Point& y, double eps);

// In a Euclidean space the map u -> scale (anchor - base) is an isometry of
// the tangent space onto R^n carrying g_p to the inner product.
std::vector<double> euclid_embed(const TangentVector& u);

}  // namespace hadamard
