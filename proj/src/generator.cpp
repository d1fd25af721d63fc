#include "formation/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <tuple>

#include "formation/error.hpp"

namespace formation {

namespace {

// std::uniform_real_distribution is implementation-defined; this mapping is not.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

bool proper_crossing(Point2D a, Point2D b, Point2D c, Point2D d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace

RoadmapGraph generate_graph(std::uint64_t seed, const GeneratorParams& params) {
  if (params.vertices < 1) throw InputError("vertex count must be >= 1");
  if (params.robots < 1) throw InputError("robot count must be >= 1");
  Uniform uniform(seed);
  RoadmapGraph graph;
  std::vector<Point2D> pos;
  for (int i = 1; i <= params.vertices; ++i) {
    pos.push_back({uniform(0.0, 100.0), uniform(0.0, 100.0)});
    graph.add_vertex({i, pos.back(), false, i});
  }

  std::vector<std::pair<int, int>> links;
  auto crosses_existing = [&](int a, int b) {
    for (auto [c, d] : links) {
      if (c == a || c == b || d == a || d == b) continue;
      if (proper_crossing(pos[a], pos[b], pos[c], pos[d])) return true;
    }
    return false;
  };
  std::vector<int> degree(static_cast<std::size_t>(params.vertices), 0);
  auto link = [&](int a, int b) {
    links.emplace_back(a, b);
    ++degree[a];
    ++degree[b];
  };

  // Spanning tree: each vertex joins the nearest earlier vertex with spare degree.
  // Earlier leaves always have degree 1, so a partner exists.
  for (int i = 1; i < params.vertices; ++i) {
    int best = -1;
    for (int j = 0; j < i; ++j) {
      if (degree[j] >= 3) continue;
      if (best < 0 || distance(pos[i], pos[j]) < distance(pos[i], pos[best])) best = j;
    }
    link(best, i);
  }

  std::vector<std::tuple<double, int, int>> candidates;
  for (int a = 0; a < params.vertices; ++a) {
    for (int b = a + 1; b < params.vertices; ++b) candidates.emplace_back(distance(pos[a], pos[b]), a, b);
  }
  std::sort(candidates.begin(), candidates.end());
  int budget = static_cast<int>(std::lround(params.extra_edges * params.vertices));
  for (const auto& [len, a, b] : candidates) {
    if (budget == 0) break;
    if (degree[a] >= 3 || degree[b] >= 3) continue;
    if (std::find(links.begin(), links.end(), std::make_pair(a, b)) != links.end() ||
        std::find(links.begin(), links.end(), std::make_pair(b, a)) != links.end()) {
      continue;
    }
    if (crosses_existing(a, b)) continue;
    link(a, b);
    --budget;
  }

  EdgeId id = 1;
  for (auto [a, b] : links) {
    const double base = uniform(params.base_min, params.base_max);
    const double slope = uniform(params.slope_min, params.slope_max);
    RoadmapEdge edge;
    edge.id = id++;
    edge.u = a + 1;
    edge.v = b + 1;
    edge.length = distance(pos[a], pos[b]);
    for (int r = 1; r <= params.robots; ++r) edge.costs.push_back(static_cast<Cost>(std::trunc(base + r * slope)));
    graph.add_edge(std::move(edge));
  }
  return graph;
}

}  // namespace formation
