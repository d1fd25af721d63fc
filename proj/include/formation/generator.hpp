#pragma once

#include <cstdint>

#include "formation/graph.hpp"

namespace formation {

struct GeneratorParams {
  int vertices = 8;
  int robots = 3;
  // Extra non-crossing edges tried beyond the spanning tree, as a fraction of `vertices`.
  double extra_edges = 0.5;
  double base_min = 10.0, base_max = 150.0;
  double slope_min = 1.0, slope_max = 60.0;
};

// Connected random graph on [0,100]^2 with max degree 3. Vertex ids are 1..n,
// edge ids 1..m. Each edge gets costs trunc(base + r * slope) for r = 1..robots.
// Identical for identical seed and params on every platform.
RoadmapGraph generate_graph(std::uint64_t seed, const GeneratorParams& params);

}  // namespace formation
