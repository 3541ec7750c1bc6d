#include "hadamard/space.hpp"

#include <sstream>

#include "hadamard/numeric.hpp"

namespace hadamard {

std::string describe(const Point& p) {
  std::ostringstream os;
  if (const auto* e = std::get_if<EuclideanPoint>(&p)) {
    os << "(";
    for (size_t i = 0; i < e->x.size(); ++i) os << (i ? ", " : "") << e->x[i];
    os << ")";
  } else if (const auto* h = std::get_if<HalfPlanePoint>(&p)) {
    os << "(" << h->a << " + " << h->b << "i)";
  } else if (const auto* t = std::get_if<TreePoint>(&p)) {
    os << "(edge " << t->edge << ", offset " << t->offset << ")";
  }
  return os.str();
}

ConfigError::ConfigError(const std::string& field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(field) {}

NumericError::NumericError(const std::string& message, double last_estimate)
    : std::runtime_error(message), last_estimate_(last_estimate) {}

SolverError::SolverError(const std::string& message, Point best, double residual)
    : std::runtime_error(message), best_(std::move(best)), residual_(residual) {}

double Space::exact_angle(const Point&, const Point&, const Point&) const {
  throw DomainError(name() + " does not provide exact angles");
}

Point Space::project(const ConvexSet& set, const Point& x) const {
  if (const auto* s = std::get_if<Singleton>(&set)) {
    distance(s->p, x);  // validates the point belongs to this space
    return s->p;
  }
  if (const auto* g = std::get_if<GeodesicSegment>(&set)) {
    return project_onto_segment(g->a, g->b, x);
  }
  throw DomainError("unsupported convex-set descriptor for space " + name());
}

std::optional<Point> Space::opposite_point(const Point&, const Point&, double) const {
  return std::nullopt;
}

bool Space::points_equal(const Point& x, const Point& y, double tol) const {
  return distance(x, y) <= tol;
}

bool Space::points_equal(const Point& x, const Point& y) const {
  return points_equal(x, y, eps_geom());
}

Point Space::project_onto_segment(const Point& a, const Point& b, const Point& x) const {
  const double len = distance(a, b);
  if (len <= eps_geom()) return a;
  auto obj = [&](double t) { return distance(geodesic_point(a, b, t), x); };
  const double t = golden_section_minimize(obj, 0.0, len, 1e-13 * (1.0 + len));
  if (t <= 0.0) return a;
  if (t >= len) return b;
  return geodesic_point(a, b, t);
}

}  // namespace hadamard
