#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "formation/geometry.hpp"

namespace formation {

// Free space is the interior of `border` minus the closed obstacle polygons.
// After loading, the border and every obstacle are counterclockwise.
struct EnvironmentMap {
  Polygon border;
  std::vector<Polygon> obstacles;

  bool in_free_space(Point2D p) const;
  // Distance to the nearest border or obstacle edge.
  double clearance(Point2D p) const;
  double clearance(Point2D a, Point2D b) const;
  // Segment lies in free space without touching any boundary.
  bool segment_free(Point2D a, Point2D b) const;
  double free_area() const;
};

// Checks the polygon invariants and normalizes orientation. Throws MapError.
EnvironmentMap validated_environment(Polygon border, std::vector<Polygon> obstacles);

// Reads the JSON map format: {"border": [[x,y],...], "obstacles": [[[x,y],...],...]}.
EnvironmentMap load_environment(std::istream& in);
EnvironmentMap load_environment_file(std::string_view path);

}  // namespace formation
