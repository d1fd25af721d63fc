#include "formation/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

#include <boost/polygon/voronoi.hpp>

#include "formation/error.hpp"

namespace formation {

namespace {

struct IntPoint {
  std::int32_t x;
  std::int32_t y;
};

struct Sample {
  Point2D point;
  // Boundary edges this sample lies on; equal unless the sample is a polygon vertex.
  int segment_a;
  int segment_b;
};

bool share_segment(const Sample& a, const Sample& b) {
  return a.segment_a == b.segment_a || a.segment_a == b.segment_b || a.segment_b == b.segment_a ||
         a.segment_b == b.segment_b;
}

std::vector<Sample> sample_boundaries(const EnvironmentMap& map, double step) {
  std::vector<Sample> samples;
  int segment_base = 0;
  auto sample_polygon = [&](const Polygon& poly) {
    const int n = static_cast<int>(poly.size());
    for (int k = 0; k < n; ++k) {
      const Point2D a = poly.vertex(k);
      const Point2D b = poly.vertex(k + 1);
      const int pieces = std::max(1, static_cast<int>(std::ceil(distance(a, b) / step)));
      const int here = segment_base + k;
      const int previous = segment_base + (k + n - 1) % n;
      samples.push_back({a, here, previous});
      for (int i = 1; i < pieces; ++i) {
        const double t = static_cast<double>(i) / pieces;
        samples.push_back({a + t * (b - a), here, here});
      }
    }
    segment_base += n;
  };
  sample_polygon(map.border);
  for (const auto& o : map.obstacles) sample_polygon(o);
  return samples;
}

// Union-find over Voronoi vertex indices, used to fuse zero-length edges.
struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

}  // namespace formation

namespace boost::polygon {

template <>
struct geometry_concept<formation::IntPoint> {
  using type = point_concept;
};

template <>
struct point_traits<formation::IntPoint> {
  using coordinate_type = std::int32_t;
  static coordinate_type get(const formation::IntPoint& p, orientation_2d o) {
    return o == HORIZONTAL ? p.x : p.y;
  }
};

}  // namespace boost::polygon

namespace formation {

RoadmapGraph build_roadmap(const EnvironmentMap& map, const RoadmapParams& params) {
  if (!(params.sampling_step > 0.0)) throw InputError("sampling step must be positive");
  if (!(params.min_clearance >= 0.0)) throw InputError("minimum clearance must be non-negative");
  if (map.free_area() <= 1e-12 * map.border.area()) throw InputError("free space empty");

  std::vector<Sample> raw = sample_boundaries(map, params.sampling_step);

  // Boost.Polygon works on 32-bit integer sites; map the border's bounding box
  // onto a 2^28 grid.
  double min_x = raw.front().point.x, min_y = raw.front().point.y;
  double max_x = min_x, max_y = min_y;
  for (const auto& s : raw) {
    min_x = std::min(min_x, s.point.x);
    min_y = std::min(min_y, s.point.y);
    max_x = std::max(max_x, s.point.x);
    max_y = std::max(max_y, s.point.y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = static_cast<double>(1 << 28) / extent;
  auto to_map = [&](double x, double y) { return Point2D{x / scale + min_x, y / scale + min_y}; };

  std::vector<IntPoint> sites;
  std::vector<Sample> samples;
  std::map<std::pair<std::int32_t, std::int32_t>, std::size_t> seen;
  for (const auto& s : raw) {
    const IntPoint ip{static_cast<std::int32_t>(std::llround((s.point.x - min_x) * scale)),
                      static_cast<std::int32_t>(std::llround((s.point.y - min_y) * scale))};
    if (seen.emplace(std::make_pair(ip.x, ip.y), sites.size()).second) {
      sites.push_back(ip);
      samples.push_back(s);
    }
  }

  boost::polygon::voronoi_diagram<double> diagram;
  boost::polygon::construct_voronoi(sites.begin(), sites.end(), &diagram);

  const auto& vverts = diagram.vertices();
  auto vindex = [&](const auto* v) { return static_cast<std::size_t>(v - &vverts.front()); };
  auto vpoint = [&](const auto* v) { return to_map(v->x(), v->y()); };

  struct Candidate {
    std::size_t a, b;
    double clearance;
  };
  std::vector<Candidate> kept;
  for (const auto& e : diagram.edges()) {
    if (!e.is_primary() || !e.is_finite()) continue;
    if (&e > e.twin()) continue;  // each undirected edge once
    const Sample& s1 = samples[e.cell()->source_index()];
    const Sample& s2 = samples[e.twin()->cell()->source_index()];
    if (share_segment(s1, s2)) continue;
    const Point2D p0 = vpoint(e.vertex0());
    const Point2D p1 = vpoint(e.vertex1());
    if (!map.segment_free(p0, p1)) continue;
    const double clearance = map.clearance(p0, p1);
    if (clearance < params.min_clearance) continue;
    kept.push_back({vindex(e.vertex0()), vindex(e.vertex1()), clearance});
  }

  DisjointSets sets(vverts.size());
  for (const auto& c : kept) {
    if (distance(vpoint(&vverts[c.a]), vpoint(&vverts[c.b])) <= 1e-12 * extent) sets.unite(c.a, c.b);
  }

  RoadmapGraph full;
  std::unordered_map<std::size_t, VertexId> ids;
  std::map<std::pair<VertexId, VertexId>, bool> linked;
  auto vertex_for = [&](std::size_t raw_index) {
    const std::size_t root = sets.find(raw_index);
    auto [it, inserted] = ids.emplace(root, static_cast<VertexId>(ids.size()));
    if (inserted) {
      RoadmapVertex v;
      v.id = v.origin = it->second;
      v.position = vpoint(&vverts[root]);
      full.add_vertex(std::move(v));
    }
    return it->second;
  };
  for (const auto& c : kept) {
    const VertexId a = vertex_for(c.a);
    const VertexId b = vertex_for(c.b);
    if (a == b) continue;
    if (!linked.emplace(std::minmax(a, b), true).second) continue;
    RoadmapEdge edge;
    edge.id = static_cast<EdgeId>(full.edge_count());
    edge.u = a;
    edge.v = b;
    edge.length = distance(*full.vertex(a).position, *full.vertex(b).position);
    edge.clearance = c.clearance;
    full.add_edge(std::move(edge));
  }
  if (full.empty()) throw InputError("resulting graph empty");

  std::vector<VertexId> best;
  std::unordered_map<VertexId, bool> visited;
  for (const auto& v : full.vertices()) {
    if (visited.contains(v.id)) continue;
    std::vector<VertexId> comp = full.component(v.id);
    for (VertexId w : comp) visited[w] = true;
    if (comp.size() > best.size()) best = std::move(comp);
  }
  std::sort(best.begin(), best.end());
  return full.induced(best);
}

RoadmapGraph prune_tails(const RoadmapGraph& graph) {
  std::unordered_map<VertexId, std::size_t> degree;
  std::unordered_map<VertexId, bool> removed;
  std::vector<VertexId> queue;
  for (const auto& v : graph.vertices()) {
    degree[v.id] = graph.degree(v.id);
    if (!v.terminal && degree[v.id] <= 1) queue.push_back(v.id);
  }
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (EdgeId e : graph.incident(v)) {
      const VertexId w = graph.edge(e).other(v);
      if (removed[w]) continue;
      if (--degree[w] <= 1 && !graph.vertex(w).terminal) queue.push_back(w);
    }
  }
  std::vector<VertexId> keep;
  for (const auto& v : graph.vertices()) {
    if (!removed[v.id]) keep.push_back(v.id);
  }
  return graph.induced(keep);
}

RoadmapGraph normalize_degree(const RoadmapGraph& graph) {
  VertexId next_vertex = graph.next_vertex_id();
  EdgeId next_edge = graph.next_edge_id();
  std::size_t cost_len = 0;
  for (const auto& e : graph.edges()) cost_len = std::max(cost_len, e.costs.size());

  // (edge id, endpoint) -> replacement vertex
  std::map<std::pair<EdgeId, VertexId>, VertexId> rewire;
  std::vector<RoadmapVertex> extra_vertices;
  std::vector<RoadmapEdge> chain_edges;

  for (const auto& v : graph.vertices()) {
    const auto incident = graph.incident(v.id);
    const std::size_t d = incident.size();
    if (d <= 3) continue;
    std::vector<std::pair<double, EdgeId>> order;
    double min_clearance = std::numeric_limits<double>::infinity();
    for (EdgeId e : incident) {
      const RoadmapEdge& edge = graph.edge(e);
      const auto& other = graph.vertex(edge.other(v.id));
      double angle = 0.0;
      if (v.position && other.position) {
        angle = std::atan2(other.position->y - v.position->y, other.position->x - v.position->x);
      }
      order.emplace_back(angle, e);
      min_clearance = std::min(min_clearance, edge.clearance);
    }
    std::sort(order.begin(), order.end());

    std::vector<VertexId> chain{v.id};
    for (std::size_t k = 1; k < d - 2; ++k) {
      RoadmapVertex copy = v;
      copy.id = next_vertex++;
      copy.terminal = false;
      extra_vertices.push_back(copy);
      chain.push_back(copy.id);
    }
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t slot = k < 2 ? 0 : (k >= d - 2 ? chain.size() - 1 : k - 1);
      rewire[{order[k].second, v.id}] = chain[slot];
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      RoadmapEdge link;
      link.id = next_edge++;
      link.u = chain[k];
      link.v = chain[k + 1];
      link.zero_cost = true;
      link.clearance = std::isfinite(min_clearance) ? min_clearance : 0.0;
      link.costs.assign(cost_len, 0);
      chain_edges.push_back(std::move(link));
    }
  }
  if (rewire.empty()) return graph;

  RoadmapGraph out;
  for (const auto& v : graph.vertices()) out.add_vertex(v);
  for (auto& v : extra_vertices) out.add_vertex(std::move(v));
  for (RoadmapEdge e : graph.edges()) {
    const VertexId u = e.u;
    const VertexId w = e.v;
    if (auto it = rewire.find({e.id, u}); it != rewire.end()) e.u = it->second;
    if (auto it = rewire.find({e.id, w}); it != rewire.end()) e.v = it->second;
    out.add_edge(std::move(e));
  }
  for (auto& e : chain_edges) out.add_edge(std::move(e));
  return out;
}

AttachResult attach_terminal(const RoadmapGraph& graph, const EnvironmentMap& map, Point2D point) {
  if (!map.in_free_space(point)) throw InputError("terminal point is not in free space");
  if (!graph.has_geometry()) throw InputError("graph has no vertex positions to attach to");

  std::vector<std::pair<double, VertexId>> by_distance;
  for (const auto& v : graph.vertices()) by_distance.emplace_back(distance(*v.position, point), v.id);
  std::sort(by_distance.begin(), by_distance.end());

  if (!by_distance.empty() && by_distance.front().first <= kCoincidenceTolerance) {
    AttachResult result{graph, by_distance.front().second};
    result.graph.vertex(result.vertex).terminal = true;
    return result;
  }
  for (const auto& [dist, id] : by_distance) {
    const Point2D target = *graph.vertex(id).position;
    if (!map.segment_free(point, target)) continue;
    RoadmapGraph out = graph;
    RoadmapVertex terminal;
    terminal.id = terminal.origin = graph.next_vertex_id();
    terminal.position = point;
    terminal.terminal = true;
    out.add_vertex(terminal);
    RoadmapEdge link;
    link.id = graph.next_edge_id();
    link.u = terminal.id;
    link.v = id;
    link.length = dist;
    link.clearance = map.clearance(point, target);
    out.add_edge(std::move(link));
    return {normalize_degree(out), terminal.id};
  }
  throw InputError("no collision-free connection from terminal point to the roadmap");
}

}  // namespace formation
