#pragma once

#include <span>
#include <vector>

namespace formation {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2D, Point2D) = default;
};

double dot(Point2D a, Point2D b);
double cross(Point2D a, Point2D b);
double distance(Point2D a, Point2D b);

double point_segment_distance(Point2D p, Point2D a, Point2D b);
double segment_segment_distance(Point2D a, Point2D b, Point2D c, Point2D d);

// True if the closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(Point2D a, Point2D b, Point2D c, Point2D d);

class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point2D> vertices) : vertices_(std::move(vertices)) {}

  std::span<const Point2D> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2D vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  // Positive for counterclockwise vertex order.
  double signed_area() const;
  double area() const;
  bool is_counterclockwise() const { return signed_area() > 0.0; }
  void make_counterclockwise();

  // Non-adjacent edges must not touch; adjacent edges share only their vertex.
  bool is_simple() const;

  // Even-odd test; points on the boundary are reported as outside.
  bool contains(Point2D p) const;
  double boundary_distance(Point2D p) const;
  double boundary_distance(Point2D a, Point2D b) const;
  bool boundary_intersects(Point2D a, Point2D b) const;

 private:
  std::vector<Point2D> vertices_;
};

}  // namespace formation
