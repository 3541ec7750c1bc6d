#pragma once

#include <array>

#include "hadamard/space.hpp"

namespace hadamard {

// Convergence tolerance for angle estimates and the cap on refinement steps
// of the shrinking-germ angle procedure.
inline constexpr double kEpsAngle = 1e-5;
inline constexpr int kAngleRefineMax = 40;

// <xy, zw> = (d(x,w)^2 + d(y,z)^2 - d(x,z)^2 - d(y,w)^2) / 2, the metric
// stand-in for the inner product of difference vectors.
double quasilinearize(const Space& s, const Point& x, const Point& y, const Point& z,
                      const Point& w);

// (1 - alpha) x (+) alpha y: the point at arclength alpha * d(x, y) along the
// geodesic from x to y. Endpoints are returned bitwise-exactly.
Point convex_combination(const Space& s, const Point& x, const Point& y, double alpha);

// Euclidean angle at the matching vertex of a comparison triangle; pi/2 when
// exactly one leg degenerates, 0 when both do.
double comparison_angle(const Space& s, const Point& p, const Point& x, const Point& y);

// Limit of comparison angles along shrinking geodesic germs. Uses the
// space's exact angle when available, otherwise refines t_k = t_0 2^{-k}
// until successive estimates agree to kEpsAngle.
double alexandrov_angle(const Space& s, const Point& p, const Point& x, const Point& y);

// (1-a) d(x,z)^2 + a d(y,z)^2 - a(1-a) d(x,y)^2 - d((1-a)x (+) a y, z)^2;
// nonnegative in any CAT(0) space.
double cn_gap(const Space& s, const Point& x, const Point& y, const Point& z,
              double alpha);

// (1-a) d(x,z) + a d(y,z) - d((1-a)x (+) a y, z); nonnegative by convexity
// of the distance.
double convexity_gap(const Space& s, const Point& x, const Point& y, const Point& z,
                     double alpha);

// d(x,y) d(z,w) - |<xy, zw>|; nonnegative by the Cauchy-Schwarz inequality.
double cauchy_schwarz_slack(const Space& s, const Point& x, const Point& y,
                            const Point& z, const Point& w);

// Planar triangle with prescribed side lengths, constructed (not searched).
struct ComparisonTriangle {
  std::array<double, 2> x{}, y{}, z{};
  static ComparisonTriangle from_sides(double dxy, double dyz, double dzx);
};

// |x-y| + |y-z| - |x| - |z| for nonzero planar vectors whose angles at the
// origin satisfy theta + theta' >= pi; nonnegative.
double alexandrov_lemma_gap(const std::array<double, 2>& x,
                            const std::array<double, 2>& y,
                            const std::array<double, 2>& z);

}  // namespace hadamard
