#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "formation/graph.hpp"
#include "formation/planner.hpp"

namespace formation {

// A simple path as vertex and edge sequences (edges disambiguate parallel edges).
struct SimplePath {
  std::vector<VertexId> nodes;
  std::vector<EdgeId> edges;

  friend auto operator<=>(const SimplePath&, const SimplePath&) = default;
};

// Simple start->goal paths with at most `max_edges` edges, ordered
// lexicographically by node sequence, then edge sequence.
std::vector<SimplePath> enumerate_simple_paths(const RoadmapGraph& graph, VertexId start, VertexId goal,
                                               int max_edges);

struct JointAssignment {
  std::vector<SimplePath> paths;
  std::vector<Cost> robot_costs;
  // Directed edge counts n_e, sorted by (edge, from).
  std::vector<EdgeUsage> usage;
};

struct OracleResult {
  Cost formation_cost = 0;
  JointAssignment assignment;
  std::uint64_t evaluated = 0;
};

struct OracleOptions {
  int max_edges = 0;  // 0: vertex count - 1
  std::uint64_t max_assignments = 20'000'000;
};

// Exhaustive minimum over multisets of `robots` simple paths, with no directed
// edge used in both directions. Ties go to the lexicographically smallest
// assignment. nullopt when the goal is unreachable. Throws ResourceLimitError
// when the number of multisets exceeds options.max_assignments.
std::optional<OracleResult> brute_force_plan(const RoadmapGraph& graph, int robots, VertexId start,
                                             VertexId goal, const OracleOptions& options = {});

}  // namespace formation
