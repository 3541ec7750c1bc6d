#include "hadamard/vector_field.hpp"

#include <cmath>

#include "hadamard/euclidean.hpp"
#include "hadamard/geometry.hpp"
#include "hadamard/numeric.hpp"

namespace hadamard {

VectorField VectorField::subdifferential(ConvexFunction f) {
  return VectorField(SubdifferentialField{std::move(f)}, "subdifferential");
}

VectorField VectorField::euclidean_map(
    std::function<std::vector<double>(const std::vector<double>&)> map,
    std::string description) {
  return VectorField(EuclideanMapField{std::move(map), description},
                     "euclidean_map:" + description);
}

VectorField VectorField::linear_map(std::vector<std::vector<double>> matrix,
                                    std::vector<double> offset) {
  auto map = [matrix = std::move(matrix),
              offset = std::move(offset)](const std::vector<double>& z) {
    std::vector<double> r = offset;
    for (size_t i = 0; i < matrix.size(); ++i) {
      if (matrix[i].size() != z.size()) throw DomainError("linear map dimension mismatch");
      for (size_t j = 0; j < z.size(); ++j) r[i] += matrix[i][j] * z[j];
    }
    return r;
  };
  return VectorField(EuclideanMapField{std::move(map), "linear"}, "euclidean_map:linear");
}

bool VectorField::is_subdifferential() const {
  return std::holds_alternative<SubdifferentialField>(impl_);
}

const ConvexFunction* VectorField::function() const {
  if (const auto* f = std::get_if<SubdifferentialField>(&impl_)) return &f->function;
  return nullptr;
}

namespace {

// Subgradient selection for d(., q) and (1/2) d(., q)^2 at x != q: scale the
// geodesic germ pointing away from q. Valid in any CAT(0) space where that
// direction exists; at x = q the zero vector works.
std::optional<TangentVector> away_from(const Space& s, const Point& x, const Point& q,
                                       double target_length) {
  const double d = s.distance(x, q);
  if (d <= s.eps_geom()) return zero_tangent(s, x);
  const auto w = s.opposite_point(x, q, d);
  if (!w) return std::nullopt;
  const double dw = s.distance(x, *w);
  if (dw <= 0.0) return std::nullopt;
  return make_tangent(s, x, target_length / dw, *w);
}

std::optional<TangentVector> subgradient_selection(const Space& s, const ConvexFunction& f,
                                                   const Point& x) {
  const FunctionKind& kind = f.kind();
  if (const auto* d = std::get_if<DistanceTo>(&kind))
    return away_from(s, x, d->q, 1.0);
  if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&kind))
    return away_from(s, x, h->q, s.distance(x, h->q));
  if (const auto* ind = std::get_if<IndicatorOf>(&kind)) {
    // The zero vector lies in the normal cone at every point of the set.
    if (std::isfinite(f.evaluate(s, x))) return zero_tangent(s, x);
    return std::nullopt;
  }
  // Weighted sums only combine through the linear tangent structure of a
  // euclidean space.
  const auto* eu = dynamic_cast<const EuclideanSpace*>(&s);
  if (!eu) return std::nullopt;
  const auto& sum = std::get<WeightedSum>(kind);
  const auto& cx = eu->coords(x);
  std::vector<double> grad(cx.size(), 0.0);
  for (const auto& term : sum.terms) {
    if (const auto* d = std::get_if<DistanceTo>(&term.kind)) {
      const auto diff = vec::sub(cx, eu->coords(d->q));
      const double n = vec::norm(diff);
      if (n > eu->eps_geom())
        for (size_t i = 0; i < grad.size(); ++i) grad[i] += term.weight * diff[i] / n;
    } else if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&term.kind)) {
      const auto diff = vec::sub(cx, eu->coords(h->q));
      for (size_t i = 0; i < grad.size(); ++i) grad[i] += term.weight * diff[i];
    } else {
      const auto& ind = std::get<IndicatorOf>(term.kind);
      const Point nearest = s.project(ind.set, x);
      if (s.distance(nearest, x) > s.eps_geom()) return std::nullopt;
      // contributes the zero normal-cone element
    }
  }
  return make_tangent(s, x, 1.0, eu->point(vec::add(cx, grad)));
}

}  // namespace

std::optional<TangentVector> VectorField::try_value_at(const Space& s, const Point& x) const {
  if (const auto* f = std::get_if<SubdifferentialField>(&impl_))
    return subgradient_selection(s, f->function, x);
  const auto& field = std::get<EuclideanMapField>(impl_);
  const auto* eu = dynamic_cast<const EuclideanSpace*>(&s);
  if (!eu) throw DomainError("euclidean map fields require a euclidean space");
  const auto& cx = eu->coords(x);
  return make_tangent(s, x, 1.0, eu->point(vec::add(cx, field.map(cx))));
}

TangentVector VectorField::value_at(const Space& s, const Point& x) const {
  auto v = try_value_at(s, x);
  if (!v) throw DomainError("point lies outside the domain of the vector field");
  return *v;
}

namespace {

// Solves z + lambda map(z) = x by damped fixed-point iteration with
// backtracking on the residual norm. F = I + lambda map is strongly
// monotone, so the residual controls the distance to the solution.
Point euclidean_resolvent(const EuclideanSpace& eu, const EuclideanMapField& field,
                          double lambda, const Point& x) {
  const auto& cx = eu.coords(x);
  std::vector<double> z = cx;
  auto residual_vec = [&](const std::vector<double>& p) {
    auto r = vec::add(p, vec::scale(lambda, field.map(p)));
    return vec::sub(r, cx);
  };
  const double target = 1e-13 * (1.0 + vec::norm(cx));
  double eta = 1.0;
  std::vector<double> r = residual_vec(z);
  double rnorm = vec::norm(r);
  for (int it = 0; it < 200000 && rnorm > target; ++it) {
    const auto candidate = vec::sub(z, vec::scale(eta, r));
    const auto rc = residual_vec(candidate);
    const double rcnorm = vec::norm(rc);
    if (rcnorm < rnorm) {
      z = candidate;
      r = rc;
      rnorm = rcnorm;
      eta = std::min(eta * 1.2, 1.0);
    } else {
      eta *= 0.5;
      if (eta < 1e-18)
        throw SolverError("euclidean resolvent stalled", eu.point(z), rnorm);
    }
  }
  if (rnorm > std::max(target, kEpsProx))
    throw SolverError("euclidean resolvent did not converge", eu.point(z), rnorm);
  return eu.point(std::move(z));
}

}  // namespace

Point VectorField::resolvent(const Space& s, double lambda, const Point& x,
                             const GenericProxOptions* opts) const {
  if (!(lambda > 0.0)) throw DomainError("resolvent parameter lambda must be positive");
  if (const auto* f = std::get_if<SubdifferentialField>(&impl_))
    return prox(s, f->function, lambda, x, opts);
  const auto& field = std::get<EuclideanMapField>(impl_);
  const auto* eu = dynamic_cast<const EuclideanSpace*>(&s);
  if (!eu) throw DomainError("euclidean map fields require a euclidean space");
  return euclidean_resolvent(*eu, field, lambda, x);
}

Point resolvent(const Space& s, const VectorField& field, double lambda, const Point& x,
                const GenericProxOptions* opts) {
  return field.resolvent(s, lambda, x, opts);
}

double monotonicity_gap(const Space& s, const VectorField& field, const Point& x,
                        const Point& y) {
  const TangentVector ax = field.value_at(s, x);
  const TangentVector ay = field.value_at(s, y);
  const TangentVector to_y = make_tangent(s, x, 1.0, y);
  const TangentVector to_x = make_tangent(s, y, 1.0, x);
  return tangent_pairing(ax, to_y) + tangent_pairing(ay, to_x);
}

double resolvent_identity_residual(const Space& s, const VectorField& field, double lambda,
                                   double mu, const Point& x) {
  if (!(mu > 0.0) || mu > lambda)
    throw DomainError("resolvent identity requires 0 < mu <= lambda");
  const Point jl = resolvent(s, field, lambda, x);
  const Point inner = convex_combination(s, jl, x, mu / lambda);
  const Point jm = resolvent(s, field, mu, inner);
  return s.distance(jm, jl);
}

double firm_nonspread_gap(const Space& s, const VectorField& field, double lambda,
                          const Point& x, const Point& y) {
  const Point jx = resolvent(s, field, lambda, x);
  const Point jy = resolvent(s, field, lambda, y);
  return quasilinearize(s, jx, jy, x, y) - sq(s.distance(jx, jy));
}

double firm_nonexpansive_slack(const Space& s, const VectorField& field, double lambda,
                               double alpha, const Point& x, const Point& y) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha outside [0, 1]");
  const Point jx = resolvent(s, field, lambda, x);
  const Point jy = resolvent(s, field, lambda, y);
  const Point mx = convex_combination(s, jx, x, alpha);
  const Point my = convex_combination(s, jy, y, alpha);
  return s.distance(mx, my) - s.distance(jx, jy);
}

double resolvent_comparison_gap(const Space& s, const VectorField& field, double lambda,
                                double mu, const Point& x, const Point& y) {
  if (!(lambda > 0.0 && mu > 0.0)) throw DomainError("lambda and mu must be positive");
  const Point jl = resolvent(s, field, lambda, x);
  const Point jm = resolvent(s, field, mu, y);
  return lambda * sq(s.distance(jl, y)) + mu * sq(s.distance(jm, x)) -
         mu * sq(s.distance(jl, x)) - lambda * sq(s.distance(jm, y)) -
         (lambda + mu) * sq(s.distance(jl, jm));
}

std::pair<double, double> local_residual_ratio(const Space& s, const VectorField& field,
                                               double lambda, double mu, const Point& x) {
  if (!(lambda > 0.0 && mu > 0.0)) throw DomainError("lambda and mu must be positive");
  const Point jl = resolvent(s, field, lambda, x);
  const Point jml = resolvent(s, field, mu, jl);
  return {s.distance(jml, jl) / mu, s.distance(jl, x) / lambda};
}

}  // namespace hadamard
