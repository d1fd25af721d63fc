#include <algorithm>
#include <map>
#include <string>

#include "formation/planner.hpp"

namespace formation {

PlanResult reconstruct(const OptimalPathSet& result, const RoadmapGraph& graph, VertexId goal, int robots) {
  if (robots < 1 || robots > result.robots()) {
    throw InputError("robot count " + std::to_string(robots) + " outside 1.." + std::to_string(result.robots()));
  }
  if (!graph.has_vertex(goal)) throw InputError("goal vertex " + std::to_string(goal) + " is not in the graph");

  PlanResult out;
  if (goal == result.start()) {
    out.robots.assign(static_cast<std::size_t>(robots),
                      RobotPlan{{graph.vertex(goal).origin}, 0});
    return out;
  }
  const FormationState* state = result.find(goal, robots);
  if (!state) {
    throw InputError("no plan for " + std::to_string(robots) + " robots to vertex " + std::to_string(goal));
  }

  std::map<std::pair<EdgeId, VertexId>, EdgeUsage> usage;
  for (const auto& path : state->paths) {
    RobotPlan robot;
    for (VertexId v : path.nodes(result.start())) {
      const VertexId original = graph.vertex(v).origin;
      // Chain vertices of one substituted vertex collapse into it.
      if (robot.nodes.empty() || robot.nodes.back() != original) robot.nodes.push_back(original);
    }
    robot.cost = robot_path_cost(path, graph);
    out.robots.push_back(std::move(robot));
    for (const auto& use : path.uses) usage.try_emplace({use.edge, use.from}, EdgeUsage{use.edge, use.from, use.to, use.count});
  }
  std::sort(out.robots.begin(), out.robots.end(), [](const RobotPlan& a, const RobotPlan& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.nodes < b.nodes;
  });
  out.formation_cost = state->cost;
  for (auto& [key, use] : usage) out.edge_usage.push_back(use);
  return out;
}

}  // namespace formation
