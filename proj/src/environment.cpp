#include "formation/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "formation/error.hpp"

namespace formation {

namespace {

using nlohmann::json;

constexpr double kTouchEps = 1e-12;

Polygon parse_polygon(const json& j, int index) {
  if (!j.is_array()) throw MapError(index, "malformed polygon: expected an array of points");
  std::vector<Point2D> pts;
  pts.reserve(j.size());
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw MapError(index, "malformed point: expected [x, y]");
    }
    const Point2D q{p[0].get<double>(), p[1].get<double>()};
    if (!std::isfinite(q.x) || !std::isfinite(q.y)) throw MapError(index, "non-finite coordinate");
    pts.push_back(q);
  }
  return Polygon(std::move(pts));
}

bool properly_cross(Point2D a, Point2D b, Point2D c, Point2D d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > kTouchEps && d2 < -kTouchEps) || (d1 < -kTouchEps && d2 > kTouchEps)) &&
         ((d3 > kTouchEps && d4 < -kTouchEps) || (d3 < -kTouchEps && d4 > kTouchEps));
}

bool inside_or_on(const Polygon& poly, Point2D p) {
  return poly.contains(p) || poly.boundary_distance(p) <= 1e-9;
}

void check_shape(Polygon& poly, int index) {
  if (poly.size() < 3) throw MapError(index, "polygon needs at least 3 vertices");
  if (!poly.is_simple()) throw MapError(index, "self-intersecting polygon");
  if (poly.area() == 0.0) throw MapError(index, "degenerate polygon with zero area");
  poly.make_counterclockwise();
}

}  // namespace

bool EnvironmentMap::in_free_space(Point2D p) const {
  if (!border.contains(p)) return false;
  return std::none_of(obstacles.begin(), obstacles.end(), [&](const Polygon& o) {
    return o.contains(p) || o.boundary_distance(p) <= kTouchEps;
  });
}

double EnvironmentMap::clearance(Point2D p) const {
  double best = border.boundary_distance(p);
  for (const auto& o : obstacles) best = std::min(best, o.boundary_distance(p));
  return best;
}

double EnvironmentMap::clearance(Point2D a, Point2D b) const {
  double best = border.boundary_distance(a, b);
  for (const auto& o : obstacles) best = std::min(best, o.boundary_distance(a, b));
  return best;
}

bool EnvironmentMap::segment_free(Point2D a, Point2D b) const {
  if (!in_free_space(a) || !in_free_space(b)) return false;
  if (border.boundary_intersects(a, b)) return false;
  return std::none_of(obstacles.begin(), obstacles.end(),
                      [&](const Polygon& o) { return o.boundary_intersects(a, b); });
}

double EnvironmentMap::free_area() const {
  double area = border.area();
  for (const auto& o : obstacles) area -= o.area();
  return area;
}

EnvironmentMap validated_environment(Polygon border, std::vector<Polygon> obstacles) {
  check_shape(border, -1);
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const int index = static_cast<int>(i);
    check_shape(obstacles[i], index);
    const Polygon& o = obstacles[i];
    for (Point2D v : o.vertices()) {
      if (!inside_or_on(border, v)) throw MapError(index, "obstacle outside border");
    }
    for (std::size_t k = 0; k < o.size(); ++k) {
      for (std::size_t m = 0; m < border.size(); ++m) {
        if (properly_cross(o.vertex(k), o.vertex(k + 1), border.vertex(m), border.vertex(m + 1))) {
          throw MapError(index, "obstacle outside border");
        }
      }
    }
  }
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Polygon& a = obstacles[i];
      const Polygon& b = obstacles[j];
      bool overlap = inside_or_on(a, b.vertex(0)) || inside_or_on(b, a.vertex(0));
      for (std::size_t k = 0; k < a.size() && !overlap; ++k) {
        overlap = b.boundary_intersects(a.vertex(k), a.vertex(k + 1));
      }
      if (overlap) {
        throw MapError(static_cast<int>(i), "obstacle overlaps obstacle " + std::to_string(j));
      }
    }
  }
  return EnvironmentMap{std::move(border), std::move(obstacles)};
}

EnvironmentMap load_environment(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed map file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("border")) {
    throw InputError("malformed map file: missing \"border\"");
  }
  Polygon border = parse_polygon(doc["border"], -1);
  std::vector<Polygon> obstacles;
  if (doc.contains("obstacles")) {
    const json& list = doc["obstacles"];
    if (!list.is_array()) throw InputError("malformed map file: \"obstacles\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      obstacles.push_back(parse_polygon(list[i], static_cast<int>(i)));
    }
  }
  return validated_environment(std::move(border), std::move(obstacles));
}

EnvironmentMap load_environment_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw InputError("cannot open map file " + std::string(path));
  return load_environment(in);
}

}  // namespace formation
