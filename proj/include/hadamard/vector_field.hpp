#pragma once

#include <functional>
#include <utility>

#include "hadamard/convex_function.hpp"
#include "hadamard/tangent.hpp"

namespace hadamard {

// Monotone vector field backed by a subdifferential: the resolvent is the
// proximal mapping, and a subgradient selection is exposed where one can be
// constructed from geodesic data.
struct SubdifferentialField {
  ConvexFunction function;
};

// Single-valued monotone map on the coordinates of a euclidean space; the
// resolvent solves x = z + lambda * map(z).
struct EuclideanMapField {
  std::function<std::vector<double>(const std::vector<double>&)> map;
  std::string description;
};

class VectorField {
 public:
  static VectorField subdifferential(ConvexFunction f);
  static VectorField euclidean_map(
      std::function<std::vector<double>(const std::vector<double>&)> map,
      std::string description = "map");
  // map(z) = matrix z + offset
  static VectorField linear_map(std::vector<std::vector<double>> matrix,
                                std::vector<double> offset);

  bool is_subdifferential() const;
  const ConvexFunction* function() const;  // null unless subdifferential
  const std::string& description() const { return description_; }

  // The stored selection A x as a tangent vector at x, when the field has
  // one there; x outside the domain yields nullopt.
  std::optional<TangentVector> try_value_at(const Space& s, const Point& x) const;
  TangentVector value_at(const Space& s, const Point& x) const;

  Point resolvent(const Space& s, double lambda, const Point& x,
                  const GenericProxOptions* opts = nullptr) const;

 private:
  using Impl = std::variant<SubdifferentialField, EuclideanMapField>;
  explicit VectorField(Impl impl, std::string description)
      : impl_(std::move(impl)), description_(std::move(description)) {}
  Impl impl_;
  std::string description_;
};

Point resolvent(const Space& s, const VectorField& field, double lambda, const Point& x,
                const GenericProxOptions* opts = nullptr);

// g_x(Ax, gamma_{x,y}) + g_y(Ay, gamma_{y,x}); nonpositive for monotone
// fields. DomainError when either point lies outside the field's domain.
double monotonicity_gap(const Space& s, const VectorField& field, const Point& x,
                        const Point& y);

// d(J_mu((1 - mu/lambda) J_lambda x (+) (mu/lambda) x), J_lambda x) for
// 0 < mu <= lambda; identically zero in exact arithmetic.
double resolvent_identity_residual(const Space& s, const VectorField& field, double lambda,
                                   double mu, const Point& x);

// <(Jx)(Jy), xy> - d(Jx, Jy)^2; nonnegative when J is firmly metrically
// nonspreading.
double firm_nonspread_gap(const Space& s, const VectorField& field, double lambda,
                          const Point& x, const Point& y);

// d((1-a) Jx (+) a x, (1-a) Jy (+) a y) - d(Jx, Jy); nonnegative when J is
// firmly nonexpansive.
double firm_nonexpansive_slack(const Space& s, const VectorField& field, double lambda,
                               double alpha, const Point& x, const Point& y);

// lambda d(Jlx, y)^2 + mu d(Jmy, x)^2 - mu d(Jlx, x)^2 - lambda d(Jmy, y)^2
// - (lambda + mu) d(Jlx, Jmy)^2; nonnegative for monotone fields.
double resolvent_comparison_gap(const Space& s, const VectorField& field, double lambda,
                                double mu, const Point& x, const Point& y);

// ((1/mu) d(Jm Jl x, Jl x), (1/lambda) d(Jl x, x)); the first component
// never exceeds the second.
std::pair<double, double> local_residual_ratio(const Space& s, const VectorField& field,
                                               double lambda, double mu, const Point& x);

}  // namespace hadamard
