#include "formation/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace formation {

namespace {

constexpr double kBoundaryEps = 1e-12;

int orientation(Point2D a, Point2D b, Point2D c) {
  const double v = cross(b - a, c - a);
  const double scale = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                                 std::abs(c.y - a.y), 1.0});
  if (std::abs(v) <= 1e-12 * scale * scale) return 0;
  return v > 0 ? 1 : -1;
}

bool on_segment(Point2D p, Point2D a, Point2D b) {
  return std::min(a.x, b.x) - kBoundaryEps <= p.x && p.x <= std::max(a.x, b.x) + kBoundaryEps &&
         std::min(a.y, b.y) - kBoundaryEps <= p.y && p.y <= std::max(a.y, b.y) + kBoundaryEps;
}

}  // namespace

double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(Point2D p, Point2D a, Point2D b) {
  const Point2D ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool segments_intersect(Point2D a, Point2D b, Point2D c, Point2D d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

double segment_segment_distance(Point2D a, Point2D b, Point2D c, Point2D d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double Polygon::signed_area() const {
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    twice += cross(vertex(i), vertex(i + 1));
  }
  return 0.5 * twice;
}

double Polygon::area() const { return std::abs(signed_area()); }

void Polygon::make_counterclockwise() {
  if (signed_area() < 0.0) std::reverse(vertices_.begin(), vertices_.end());
}

bool Polygon::is_simple() const {
  const std::size_t n = vertices_.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertex(i) == vertex(i + 1)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D a = vertex(i);
    const Point2D b = vertex(i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2D c = vertex(j);
      const Point2D d = vertex(j + 1);
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (!adjacent) {
        if (segments_intersect(a, b, c, d)) return false;
        continue;
      }
      // Adjacent edges may only meet at the shared vertex: reject folding back.
      const Point2D shared = (j == i + 1) ? b : a;
      const Point2D p = (j == i + 1) ? a : b;
      const Point2D q = (j == i + 1) ? d : c;
      if (orientation(p, shared, q) == 0 && dot(p - shared, q - shared) > 0.0) return false;
    }
  }
  return true;
}

bool Polygon::contains(Point2D p) const {
  if (boundary_distance(p) <= kBoundaryEps) return false;
  bool inside = false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2D a = vertices_[i];
    const Point2D b = vertices_[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double Polygon::boundary_distance(Point2D p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, point_segment_distance(p, vertex(i), vertex(i + 1)));
  }
  return best;
}

double Polygon::boundary_distance(Point2D a, Point2D b) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, segment_segment_distance(a, b, vertex(i), vertex(i + 1)));
  }
  return best;
}

bool Polygon::boundary_intersects(Point2D a, Point2D b) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (segments_intersect(a, b, vertex(i), vertex(i + 1))) return true;
  }
  return false;
}

}  // namespace formation
