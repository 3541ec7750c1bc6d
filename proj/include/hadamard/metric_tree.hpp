#pragma once

#include <iosfwd>
#include <unordered_map>

#include "hadamard/space.hpp"

namespace hadamard {

// A finite metric tree: weighted edges between labeled vertices, points are
// (edge, offset) pairs with vertex identification at the endpoints. The
// unique-path metric makes every geodesic triangle degenerate (0-hyperbolic).
class MetricTree final : public Space {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    double length = 0.0;
  };

  // Description of the unique path between two points: total length, the
  // canonicalized endpoints, and the vertices crossed in order.
  struct PathInfo {
    double length = 0.0;
    TreePoint from;
    TreePoint to;
    std::vector<int> vertices;
  };

  // Parses lines of the form `u v length` (labels are arbitrary strings).
  static MetricTree from_edge_list(std::istream& in);
  static MetricTree from_text(const std::string& text);
  static MetricTree from_file(const std::string& path);

  std::string name() const override { return "tree"; }
  double eps_geom() const override { return 1e-9; }

  double distance(const Point& x, const Point& y) const override;
  Point geodesic_point(const Point& x, const Point& y, double s) const override;

  bool has_exact_angle() const override { return true; }
  // Geodesics from p either share their initial segment (angle 0) or split
  // immediately (angle pi); branch vertices are where pi shows up.
  double exact_angle(const Point& p, const Point& x, const Point& y) const override;

  Point project(const ConvexSet& set, const Point& x) const override;
  std::optional<Point> opposite_point(const Point& x, const Point& toward,
                                      double dist) const override;

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const;
  const std::string& vertex_label(int v) const { return labels_[v]; }
  int vertex_id(const std::string& label) const;

  Point vertex_point(int v) const;
  Point vertex_point(const std::string& label) const;
  Point point_on(int edge, double offset) const;

  // Snaps offsets at the edge rim to the endpoint vertex and gives vertex
  // points a unique representative (their lowest incident edge).
  TreePoint canonical(const TreePoint& p) const;
  const TreePoint& coords(const Point& p) const;

  PathInfo locate(const Point& x, const Point& y) const;
  double vertex_distance(int u, int v) const;

 private:
  MetricTree() = default;
  void finalize();  // adjacency, all-pairs distances, path tables
  bool vertex_of(const TreePoint& p, int* id) const;
  // First geodesic step out of p toward target: (edge, +1/-1 along offset).
  std::pair<int, int> first_direction(const TreePoint& p, const TreePoint& target) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<double>> dist_;
  std::vector<std::vector<int>> next_vertex_;  // next vertex on the path u -> v
  std::vector<std::vector<int>> next_edge_;    // edge used for that step
};

}  // namespace hadamard
