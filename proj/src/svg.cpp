#include "formation/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "formation/error.hpp"

namespace formation {

namespace {

struct Frame {
  double min_x = std::numeric_limits<double>::max(), min_y = std::numeric_limits<double>::max();
  double max_x = std::numeric_limits<double>::lowest(), max_y = std::numeric_limits<double>::lowest();
  double scale = 1.0;
  static constexpr double kMargin = 20.0;
  static constexpr double kSize = 800.0;

  void include(Point2D p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  void fit() {
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    scale = (kSize - 2 * kMargin) / span;
  }
  double width() const { return (max_x - min_x) * scale + 2 * kMargin; }
  double height() const { return (max_y - min_y) * scale + 2 * kMargin; }
  // SVG y grows downwards.
  Point2D map(Point2D p) const { return {kMargin + (p.x - min_x) * scale, kMargin + (max_y - p.y) * scale}; }
};

std::string fixed(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

std::string points_attr(const Polygon& poly, const Frame& frame) {
  std::string out;
  for (const auto& v : poly.vertices()) {
    const Point2D q = frame.map(v);
    out += fixed(q.x) + "," + fixed(q.y) + " ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string cost_label(const CostVector& costs) {
  std::string out = "[";
  for (std::size_t k = 0; k < costs.size(); ++k) out += (k ? "," : "") + std::to_string(costs[k]);
  return out + "]";
}

}  // namespace

std::string render_svg(const RoadmapGraph& graph, const EnvironmentMap* map, const PlanResult* plan) {
  if (graph.empty() || !graph.has_geometry()) throw InputError("no geometry to render");
  if (plan) {
    for (const auto& u : plan->edge_usage) {
      if (!graph.has_edge(u.edge)) throw InputError("plan uses unknown edge " + std::to_string(u.edge));
      const RoadmapEdge& e = graph.edge(u.edge);
      if (!((e.u == u.from && e.v == u.to) || (e.v == u.from && e.u == u.to))) {
        throw InputError("plan edge " + std::to_string(u.edge) + " does not join " + std::to_string(u.from) +
                         " and " + std::to_string(u.to));
      }
    }
  }

  Frame frame;
  for (const auto& v : graph.vertices()) frame.include(*v.position);
  if (map) {
    for (const auto& p : map->border.vertices()) frame.include(p);
  }
  frame.fit();

  std::ostringstream svg;
  const std::string w = fixed(frame.width());
  const std::string h = fixed(frame.height());
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << " " << h << "\">\n";
  svg << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
         "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (map) {
    svg << "<polygon class=\"border\" points=\"" << points_attr(map->border, frame)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& obstacle : map->obstacles) {
      svg << "<polygon class=\"obstacle\" points=\"" << points_attr(obstacle, frame)
          << "\" fill=\"#a0522d\" stroke=\"#5c2e0e\"/>\n";
    }
  }
  auto line = [&](const char* cls, EdgeId id, Point2D a, Point2D b) {
    svg << "<line class=\"" << cls << "\" data-edge=\"" << id << "\" x1=\"" << fixed(a.x) << "\" y1=\"" << fixed(a.y)
        << "\" x2=\"" << fixed(b.x) << "\" y2=\"" << fixed(b.y) << "\"";
  };
  for (const auto& e : graph.edges()) {
    line("edge", e.id, frame.map(*graph.vertex(e.u).position), frame.map(*graph.vertex(e.v).position));
    svg << " stroke=\"" << (e.zero_cost ? "#999999" : "#2e8b57") << "\" stroke-width=\"1.5\"/>\n";
  }
  if (plan) {
    for (const auto& u : plan->edge_usage) {
      const Point2D a = frame.map(*graph.vertex(u.from).position);
      Point2D b = frame.map(*graph.vertex(u.to).position);
      // Stop the arrow at the vertex marker.
      const double len = distance(a, b);
      if (len > 12.0) b = a + ((len - 6.0) / len) * (b - a);
      const Point2D mid = a + 0.5 * (b - a);
      line("usage", u.edge, a, b);
      svg << " stroke=\"#c0392b\" stroke-width=\"2.5\" marker-end=\"url(#arrow)\"/>\n";
      svg << "<text class=\"usage-label\" data-edge=\"" << u.edge << "\" x=\"" << fixed(mid.x + 4) << "\" y=\""
          << fixed(mid.y - 4) << "\" font-size=\"12\" fill=\"#c0392b\">" << u.count << " "
          << cost_label(graph.edge(u.edge).costs) << "</text>\n";
    }
  }
  for (const auto& v : graph.vertices()) {
    const Point2D p = frame.map(*v.position);
    svg << "<circle class=\"vertex\" data-vertex=\"" << v.id << "\" cx=\"" << fixed(p.x) << "\" cy=\"" << fixed(p.y)
        << "\" r=\"" << (v.terminal ? 6 : 4) << "\" fill=\"" << (v.terminal ? "#1f4e9c" : "#333333") << "\"/>\n";
    svg << "<text class=\"vertex-label\" x=\"" << fixed(p.x + 6) << "\" y=\"" << fixed(p.y + 12)
        << "\" font-size=\"11\">" << v.id << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace formation
