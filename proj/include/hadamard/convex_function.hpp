#pragma once

#include <cstdint>
#include <functional>

#include "hadamard/space.hpp"

namespace hadamard {

inline constexpr double kEpsProx = 1e-8;  // objective stationarity target

// Building blocks for proper lower semicontinuous convex functions. Each
// atomic kind carries a closed-form proximal mapping; weighted sums fall
// back to the generic geodesic solver.
struct DistanceTo {
  Point q;
};
struct HalfSquaredDistanceTo {
  Point q;
};
struct IndicatorOf {
  ConvexSet set;
};

using AtomicKind = std::variant<DistanceTo, HalfSquaredDistanceTo, IndicatorOf>;

struct WeightedTerm {
  double weight = 1.0;  // nonnegative
  AtomicKind kind;
};

struct WeightedSum {
  std::vector<WeightedTerm> terms;
};

using FunctionKind = std::variant<DistanceTo, HalfSquaredDistanceTo, IndicatorOf, WeightedSum>;

class ConvexFunction {
 public:
  static ConvexFunction distance_to(Point q);
  static ConvexFunction half_squared_distance_to(Point q);
  static ConvexFunction indicator(ConvexSet set);
  static ConvexFunction weighted_sum(std::vector<WeightedTerm> terms);

  // Extended-real evaluation; +infinity outside the domain of indicators.
  double evaluate(const Space& s, const Point& x) const;

  bool has_closed_form_prox() const;
  const FunctionKind& kind() const { return kind_; }

  // Anchor points referenced by the function (targets, singleton/segment
  // endpoints); used to size solver search radii.
  std::vector<Point> anchors() const;

 private:
  explicit ConvexFunction(FunctionKind kind) : kind_(std::move(kind)) {}
  FunctionKind kind_;
};

// f(y) + (1 / 2 lambda) d(y, x)^2, the objective whose unique minimizer is
// the proximal point.
double moreau_objective(const Space& s, const ConvexFunction& f, double lambda,
                        const Point& x, const Point& y);

struct GenericProxOptions {
  double eps_obj = kEpsProx;
  int max_rounds = 400;
  int directions_per_round = 24;
  std::uint64_t seed = 0x5eedf00dULL;
  double initial_radius = 1.0;
  std::vector<Point> hints;  // promising anchors to aim line searches at
};

// Derivative-free minimization of a geodesically convex objective: exact
// edge-by-edge golden section on metric trees, otherwise line searches along
// geodesics through the incumbent with a shrinking radius.
Point generic_prox_solve(const Space& s, const std::function<double(const Point&)>& objective,
                         const Point& start, const GenericProxOptions& opts = {});

// The proximal point Prox_{lambda f}(x): closed forms for atomic kinds,
// generic solver otherwise.
Point prox(const Space& s, const ConvexFunction& f, double lambda, const Point& x,
           const GenericProxOptions* opts = nullptr);

}  // namespace hadamard
