#include "hadamard/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include "hadamard/numeric.hpp"

namespace hadamard {

MetricTree MetricTree::from_edge_list(std::istream& in) {
  MetricTree tree;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string u, v;
    double length;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v >> length))
      throw DomainError("edge list line " + std::to_string(line_no) +
                        ": expected `u v length`");
    if (!(length > 0.0))
      throw DomainError("edge list line " + std::to_string(line_no) +
                        ": edge length must be positive");
    auto intern = [&tree](const std::string& label) {
      auto it = tree.ids_.find(label);
      if (it != tree.ids_.end()) return it->second;
      const int id = static_cast<int>(tree.labels_.size());
      tree.labels_.push_back(label);
      tree.ids_.emplace(label, id);
      return id;
    };
    const int iu = intern(u);
    const int iv = intern(v);
    if (iu == iv)
      throw DomainError("edge list line " + std::to_string(line_no) + ": self loop");
    tree.edges_.push_back(Edge{iu, iv, length});
  }
  tree.finalize();
  return tree;
}

MetricTree MetricTree::from_text(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

MetricTree MetricTree::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open edge list file: " + path);
  return from_edge_list(in);
}

void MetricTree::finalize() {
  const int n = vertex_count();
  if (n == 0) throw DomainError("tree has no edges");
  if (edge_count() != n - 1)
    throw DomainError("edge list does not describe a tree (|E| != |V| - 1)");
  incident_.assign(n, {});
  for (int e = 0; e < edge_count(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
  for (auto& edges : incident_) std::sort(edges.begin(), edges.end());

  dist_.assign(n, std::vector<double>(n, 0.0));
  next_vertex_.assign(n, std::vector<int>(n, -1));
  next_edge_.assign(n, std::vector<int>(n, -1));
  for (int root = 0; root < n; ++root) {
    std::vector<int> parent(n, -1), parent_edge(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      for (int e : incident_[w]) {
        const int other = (edges_[e].u == w) ? edges_[e].v : edges_[e].u;
        if (seen[other]) continue;
        seen[other] = 1;
        parent[other] = w;
        parent_edge[other] = e;
        dist_[root][other] = dist_[root][w] + edges_[e].length;
        queue.push_back(other);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!seen[v]) throw DomainError("edge list does not describe a connected tree");
      // Walk v -> root to find the first step out of root toward v.
      int w = v;
      while (w != root && parent[w] != root) w = parent[w];
      if (w != root) {
        next_vertex_[root][v] = w;
        next_edge_[root][v] = parent_edge[w];
      }
    }
  }
}

const MetricTree::Edge& MetricTree::edge(int e) const {
  if (e < 0 || e >= edge_count()) throw DomainError("invalid edge id");
  return edges_[e];
}

int MetricTree::vertex_id(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) throw DomainError("unknown tree vertex: " + label);
  return it->second;
}

double MetricTree::vertex_distance(int u, int v) const { return dist_[u][v]; }

TreePoint MetricTree::canonical(const TreePoint& p) const {
  const Edge& e = edge(p.edge);
  if (p.offset < 0.0 || p.offset > e.length)
    throw DomainError("tree point offset outside [0, edge length]");
  const double snap = 1e-12 * (1.0 + e.length);
  double off = p.offset;
  if (off <= snap) off = 0.0;
  if (e.length - off <= snap) off = e.length;
  if (off == 0.0 || off == e.length) {
    const int v = (off == 0.0) ? e.u : e.v;
    const int home = incident_[v].front();
    return TreePoint{home, (edges_[home].u == v) ? 0.0 : edges_[home].length};
  }
  return TreePoint{p.edge, off};
}

const TreePoint& MetricTree::coords(const Point& p) const {
  const auto* t = std::get_if<TreePoint>(&p);
  if (!t) throw DomainError("point does not belong to a tree");
  if (t->edge < 0 || t->edge >= edge_count()) throw DomainError("invalid edge id");
  if (t->offset < 0.0 || t->offset > edges_[t->edge].length)
    throw DomainError("tree point offset outside [0, edge length]");
  return *t;
}

Point MetricTree::vertex_point(int v) const {
  if (v < 0 || v >= vertex_count()) throw DomainError("invalid vertex id");
  const int home = incident_[v].front();
  return TreePoint{home, (edges_[home].u == v) ? 0.0 : edges_[home].length};
}

Point MetricTree::vertex_point(const std::string& label) const {
  return vertex_point(vertex_id(label));
}

Point MetricTree::point_on(int e, double offset) const {
  return canonical(coords(TreePoint{e, offset}));
}

bool MetricTree::vertex_of(const TreePoint& p, int* id) const {
  if (p.offset == 0.0) {
    *id = edges_[p.edge].u;
    return true;
  }
  if (p.offset == edges_[p.edge].length) {
    *id = edges_[p.edge].v;
    return true;
  }
  return false;
}

MetricTree::PathInfo MetricTree::locate(const Point& x, const Point& y) const {
  PathInfo info;
  info.from = canonical(coords(x));
  info.to = canonical(coords(y));
  int vx = -1, vy = -1;
  const bool x_is_vertex = vertex_of(info.from, &vx);
  const bool y_is_vertex = vertex_of(info.to, &vy);

  if (x_is_vertex && y_is_vertex) {
    info.length = dist_[vx][vy];
    for (int w = vx; w != vy; w = next_vertex_[w][vy]) info.vertices.push_back(w);
    info.vertices.push_back(vy);
    if (vx == vy) info.vertices = {vx};
    return info;
  }

  auto interior_ends = [this](const TreePoint& p) {
    const Edge& e = edges_[p.edge];
    return std::array<std::pair<int, double>, 2>{
        std::make_pair(e.u, p.offset), std::make_pair(e.v, e.length - p.offset)};
  };

  if (!x_is_vertex && !y_is_vertex && info.from.edge == info.to.edge) {
    info.length = std::abs(info.from.offset - info.to.offset);
    return info;
  }

  // Pick the endpoint combination realizing the unique path.
  double best = std::numeric_limits<double>::infinity();
  int best_a = -1, best_b = -1;
  const auto ex = x_is_vertex
                      ? std::array<std::pair<int, double>, 2>{std::make_pair(vx, 0.0),
                                                              std::make_pair(vx, 0.0)}
                      : interior_ends(info.from);
  const auto ey = y_is_vertex
                      ? std::array<std::pair<int, double>, 2>{std::make_pair(vy, 0.0),
                                                              std::make_pair(vy, 0.0)}
                      : interior_ends(info.to);
  for (const auto& [a, ta] : ex) {
    for (const auto& [b, tb] : ey) {
      const double total = ta + dist_[a][b] + tb;
      if (total < best) {
        best = total;
        best_a = a;
        best_b = b;
      }
    }
  }
  info.length = best;
  for (int w = best_a; w != best_b; w = next_vertex_[w][best_b]) info.vertices.push_back(w);
  info.vertices.push_back(best_b);
  return info;
}

double MetricTree::distance(const Point& x, const Point& y) const {
  return locate(x, y).length;
}

Point MetricTree::geodesic_point(const Point& x, const Point& y, double s) const {
  const PathInfo info = locate(x, y);
  const double slack = 1e-9 * (1.0 + info.length);
  if (s < -slack || s > info.length + slack)
    throw DomainError("tree geodesic parameter outside [0, distance]");
  if (s <= slack) return Point{info.from};
  if (s >= info.length - slack) return Point{info.to};

  // Segment list: exit x's edge, cross whole edges, enter y's edge.
  struct Seg {
    int edge;
    double t0, t1;
  };
  std::vector<Seg> segs;
  int vx = -1, vy = -1;
  const bool x_is_vertex = vertex_of(info.from, &vx);
  const bool y_is_vertex = vertex_of(info.to, &vy);
  if (!x_is_vertex && !y_is_vertex && info.from.edge == info.to.edge) {
    segs.push_back({info.from.edge, info.from.offset, info.to.offset});
  } else {
    const int first_vertex = info.vertices.front();
    const int last_vertex = info.vertices.back();
    if (!x_is_vertex) {
      const Edge& e = edges_[info.from.edge];
      segs.push_back({info.from.edge, info.from.offset,
                      (first_vertex == e.u) ? 0.0 : e.length});
    }
    for (size_t i = 0; i + 1 < info.vertices.size(); ++i) {
      const int a = info.vertices[i];
      const int b = info.vertices[i + 1];
      const int e = next_edge_[a][b];
      segs.push_back({e, (edges_[e].u == a) ? 0.0 : edges_[e].length,
                      (edges_[e].u == a) ? edges_[e].length : 0.0});
    }
    if (!y_is_vertex) {
      const Edge& e = edges_[info.to.edge];
      segs.push_back({info.to.edge, (last_vertex == e.u) ? 0.0 : e.length,
                      info.to.offset});
    }
  }

  double remaining = s;
  for (const Seg& seg : segs) {
    const double len = std::abs(seg.t1 - seg.t0);
    if (remaining <= len) {
      const double dir = (seg.t1 >= seg.t0) ? 1.0 : -1.0;
      return Point{canonical(TreePoint{seg.edge, seg.t0 + dir * remaining})};
    }
    remaining -= len;
  }
  return Point{info.to};
}

std::pair<int, int> MetricTree::first_direction(const TreePoint& p,
                                                const TreePoint& target) const {
  int vp = -1, vt = -1;
  const bool p_is_vertex = vertex_of(p, &vp);
  const bool t_is_vertex = vertex_of(target, &vt);
  if (!p_is_vertex) {
    if (!t_is_vertex && target.edge == p.edge)
      return {p.edge, (target.offset >= p.offset) ? 1 : -1};
    // Leave through whichever endpoint lies on the path.
    const Edge& e = edges_[p.edge];
    const PathInfo info = locate(Point{p}, Point{target});
    return {p.edge, (info.vertices.front() == e.v) ? 1 : -1};
  }
  int e;
  if (t_is_vertex) {
    e = next_edge_[vp][vt];
  } else if (edges_[target.edge].u == vp || edges_[target.edge].v == vp) {
    e = target.edge;  // target interior to an incident edge
  } else {
    const PathInfo info = locate(Point{p}, Point{target});
    e = next_edge_[vp][info.vertices.back()];
  }
  return {e, (edges_[e].u == vp) ? 1 : -1};
}

double MetricTree::exact_angle(const Point& p, const Point& x, const Point& y) const {
  const TreePoint cp = canonical(coords(p));
  const TreePoint cx = canonical(coords(x));
  const TreePoint cy = canonical(coords(y));
  const double eps = eps_geom();
  const bool px = distance(Point{cp}, Point{cx}) <= eps;
  const bool py = distance(Point{cp}, Point{cy}) <= eps;
  if (px && py) return 0.0;
  if (px || py) return M_PI / 2.0;
  return (first_direction(cp, cx) == first_direction(cp, cy)) ? 0.0 : M_PI;
}

std::optional<Point> MetricTree::opposite_point(const Point& x, const Point& toward,
                                                double) const {
  const TreePoint cx = canonical(coords(x));
  const TreePoint ct = canonical(coords(toward));
  if (distance(Point{cx}, Point{ct}) <= eps_geom()) return std::nullopt;
  const auto [e, dir] = first_direction(cx, ct);
  int vx = -1;
  if (!vertex_of(cx, &vx)) {
    // Interior point: the far end of its own edge is the opposite direction.
    const Edge& ed = edges_[cx.edge];
    return Point{canonical(TreePoint{cx.edge, (dir > 0) ? 0.0 : ed.length})};
  }
  for (int cand : incident_[vx]) {
    const int cand_dir = (edges_[cand].u == vx) ? 1 : -1;
    if (cand == e && cand_dir == dir) continue;
    const int far = (edges_[cand].u == vx) ? edges_[cand].v : edges_[cand].u;
    return vertex_point(far);
  }
  return std::nullopt;  // leaf: every geodesic shares the single direction
}

namespace {

Point project_subtree(const MetricTree& tree, const TreeSubtree& set, const Point& x) {
  if (set.vertices.empty()) throw DomainError("subtree descriptor has no vertices");
  std::vector<char> member(tree.vertex_count(), 0);
  for (const auto& label : set.vertices) member[tree.vertex_id(label)] = 1;
  // Connectivity of the induced subgraph.
  std::vector<int> stack{tree.vertex_id(set.vertices.front())};
  std::vector<char> seen(tree.vertex_count(), 0);
  seen[stack.front()] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int w = stack.back();
    stack.pop_back();
    ++reached;
    for (int e = 0; e < tree.edge_count(); ++e) {
      const auto& ed = tree.edge(e);
      if (!member[ed.u] || !member[ed.v]) continue;
      const int other = (ed.u == w) ? ed.v : (ed.v == w ? ed.u : -1);
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  int total = 0;
  for (char m : member) total += m;
  if (reached != total) throw DomainError("subtree vertex set is not connected");

  const TreePoint cx = tree.canonical(tree.coords(x));
  const auto& home = tree.edge(cx.edge);
  int vx = -1;
  if (cx.offset == 0.0) vx = home.u;
  if (cx.offset == home.length) vx = home.v;
  if (vx >= 0 && member[vx]) return Point{cx};
  if (vx < 0 && member[home.u] && member[home.v])
    return Point{cx};  // interior of an induced edge
  // Outside the subtree the nearest point is its boundary vertex.
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (!member[v]) continue;
    const double d = tree.distance(Point{cx}, tree.vertex_point(v));
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return tree.vertex_point(best);
}

}  // namespace

Point MetricTree::project(const ConvexSet& set, const Point& x) const {
  if (const auto* s = std::get_if<TreeSubtree>(&set)) return project_subtree(*this, *s, x);
  return Space::project(set, x);
}

}  // namespace hadamard
