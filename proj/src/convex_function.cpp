#include "hadamard/convex_function.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "hadamard/geometry.hpp"
#include "hadamard/metric_tree.hpp"
#include "hadamard/numeric.hpp"
#include "hadamard/sampling.hpp"

namespace hadamard {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double evaluate_atomic(const AtomicKind& kind, const Space& s, const Point& x) {
  if (const auto* d = std::get_if<DistanceTo>(&kind)) return s.distance(x, d->q);
  if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&kind))
    return 0.5 * sq(s.distance(x, h->q));
  const auto& ind = std::get<IndicatorOf>(kind);
  const Point nearest = s.project(ind.set, x);
  return (s.distance(nearest, x) <= s.eps_geom()) ? 0.0 : kInf;
}

void collect_anchors(const AtomicKind& kind, std::vector<Point>* out) {
  if (const auto* d = std::get_if<DistanceTo>(&kind)) {
    out->push_back(d->q);
  } else if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&kind)) {
    out->push_back(h->q);
  } else {
    const auto& set = std::get<IndicatorOf>(kind).set;
    if (const auto* g = std::get_if<GeodesicSegment>(&set)) {
      out->push_back(g->a);
      out->push_back(g->b);
    } else if (const auto* p = std::get_if<Singleton>(&set)) {
      out->push_back(p->p);
    }
  }
}

}  // namespace

ConvexFunction ConvexFunction::distance_to(Point q) {
  return ConvexFunction(DistanceTo{std::move(q)});
}

ConvexFunction ConvexFunction::half_squared_distance_to(Point q) {
  return ConvexFunction(HalfSquaredDistanceTo{std::move(q)});
}

ConvexFunction ConvexFunction::indicator(ConvexSet set) {
  return ConvexFunction(IndicatorOf{std::move(set)});
}

ConvexFunction ConvexFunction::weighted_sum(std::vector<WeightedTerm> terms) {
  for (const auto& t : terms)
    if (t.weight < 0.0) throw DomainError("weighted sum requires nonnegative weights");
  return ConvexFunction(WeightedSum{std::move(terms)});
}

double ConvexFunction::evaluate(const Space& s, const Point& x) const {
  if (const auto* sum = std::get_if<WeightedSum>(&kind_)) {
    double total = 0.0;
    for (const auto& t : sum->terms) total += t.weight * evaluate_atomic(t.kind, s, x);
    return total;
  }
  if (const auto* d = std::get_if<DistanceTo>(&kind_)) return evaluate_atomic(*d, s, x);
  if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&kind_))
    return evaluate_atomic(*h, s, x);
  return evaluate_atomic(std::get<IndicatorOf>(kind_), s, x);
}

bool ConvexFunction::has_closed_form_prox() const {
  return !std::holds_alternative<WeightedSum>(kind_);
}

std::vector<Point> ConvexFunction::anchors() const {
  std::vector<Point> out;
  if (const auto* sum = std::get_if<WeightedSum>(&kind_)) {
    for (const auto& t : sum->terms) collect_anchors(t.kind, &out);
  } else if (const auto* d = std::get_if<DistanceTo>(&kind_)) {
    collect_anchors(*d, &out);
  } else if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&kind_)) {
    collect_anchors(*h, &out);
  } else {
    collect_anchors(std::get<IndicatorOf>(kind_), &out);
  }
  return out;
}

double moreau_objective(const Space& s, const ConvexFunction& f, double lambda,
                        const Point& x, const Point& y) {
  if (!(lambda > 0.0)) throw DomainError("prox parameter lambda must be positive");
  return f.evaluate(s, y) + sq(s.distance(y, x)) / (2.0 * lambda);
}

namespace {

// Exact minimization on a metric tree: the objective is convex along every
// edge, so golden section per edge plus the endpoints finds the global prox.
Point tree_prox_solve(const MetricTree& tree,
                      const std::function<double(const Point&)>& objective) {
  Point best = tree.vertex_point(0);
  double best_f = objective(best);
  for (int e = 0; e < tree.edge_count(); ++e) {
    const double len = tree.edge(e).length;
    auto along = [&](double t) { return objective(tree.point_on(e, t)); };
    for (double t : {0.0, len}) {
      const double ft = along(t);
      if (ft < best_f) {
        best_f = ft;
        best = tree.point_on(e, t);
      }
    }
    const double t_star = golden_section_minimize(along, 0.0, len, 1e-13 * (1.0 + len));
    const double f_star = along(t_star);
    if (f_star < best_f) {
      best_f = f_star;
      best = tree.point_on(e, t_star);
    }
  }
  if (!std::isfinite(best_f))
    throw SolverError("objective is infinite on the whole tree", best, kInf);
  return best;
}

}  // namespace

Point generic_prox_solve(const Space& s, const std::function<double(const Point&)>& objective,
                         const Point& start, const GenericProxOptions& opts) {
  if (const auto* tree = dynamic_cast<const MetricTree*>(&s))
    return tree_prox_solve(*tree, objective);

  std::mt19937_64 rng(opts.seed);
  const auto sampler = make_sampler(s);
  Point z = start;
  double fz = objective(z);
  if (!std::isfinite(fz)) {
    // Pull the incumbent into the domain through a hint if possible.
    for (const auto& h : opts.hints) {
      const double fh = objective(h);
      if (fh < fz) {
        z = h;
        fz = fh;
      }
    }
    if (!std::isfinite(fz))
      throw SolverError("could not find a finite starting value", z, kInf);
  }

  double radius = std::max(opts.initial_radius, 1e-6);
  double last_improvement = kInf;
  for (int round = 0; round < opts.max_rounds; ++round) {
    const double f_before = fz;
    std::vector<Point> targets = opts.hints;
    for (int k = 0; k < opts.directions_per_round; ++k) targets.push_back(sampler->sample(rng));
    for (const Point& w : targets) {
      if (s.distance(z, w) <= 1e-15) continue;
      // Golden section along the geodesic through z aimed at w, on both
      // sides of z; euclidean and half-plane geodesics extend past w.
      const double hi = radius;
      double lo = 0.0;
      if (auto back = s.opposite_point(z, w, radius)) lo = -s.distance(z, *back);
      auto eval = [&](double t) { return objective(s.geodesic_point(z, w, t)); };
      const double t_star = golden_section_minimize(eval, lo, hi, 1e-12 * (1.0 + radius));
      const double f_star = eval(t_star);
      if (f_star < fz) {
        z = s.geodesic_point(z, w, t_star);
        fz = f_star;
      }
    }
    last_improvement = f_before - fz;
    if (last_improvement < std::max(opts.eps_obj, 1e-15 * (1.0 + std::abs(fz)))) {
      radius *= 0.5;
      if (radius < 1e-10 * (1.0 + opts.initial_radius)) return z;
    }
  }
  if (last_improvement < opts.eps_obj) return z;
  throw SolverError("prox solver did not reach objective stationarity", z, last_improvement);
}

Point prox(const Space& s, const ConvexFunction& f, double lambda, const Point& x,
           const GenericProxOptions* opts) {
  if (!(lambda > 0.0)) throw DomainError("prox parameter lambda must be positive");

  const FunctionKind& kind = f.kind();
  if (const auto* d = std::get_if<DistanceTo>(&kind)) {
    const double dist = s.distance(x, d->q);
    if (dist <= 0.0) return x;
    return s.geodesic_point(x, d->q, std::min(lambda, dist));  // soft threshold
  }
  if (const auto* h = std::get_if<HalfSquaredDistanceTo>(&kind)) {
    const double dist = s.distance(x, h->q);
    if (dist <= 0.0) return x;
    return s.geodesic_point(x, h->q, dist * (lambda / (1.0 + lambda)));
  }
  if (const auto* ind = std::get_if<IndicatorOf>(&kind)) return s.project(ind->set, x);

  GenericProxOptions options = opts ? *opts : GenericProxOptions{};
  auto objective = [&](const Point& y) { return moreau_objective(s, f, lambda, x, y); };
  options.hints.push_back(x);
  double radius = 1.0;
  for (const Point& a : f.anchors()) {
    options.hints.push_back(a);
    radius = std::max(radius, s.distance(x, a));
  }
  options.initial_radius = std::max(options.initial_radius, radius);
  return generic_prox_solve(s, objective, x, options);
}

}  // namespace hadamard
