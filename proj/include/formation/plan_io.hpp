#pragma once

#include <iosfwd>
#include <string_view>

#include "formation/planner.hpp"

namespace formation {

// {"formation_cost": int, "robots": [{"nodes": [...], "cost": int}],
//  "edge_usage": [{"edge", "from", "to", "count"}]}
void write_plan(std::ostream& out, const PlanResult& plan);
PlanResult load_plan(std::istream& in);
PlanResult load_plan_file(std::string_view path);

// All (node, robots, cost) entries of a search, for runs without a goal.
void write_cost_table(std::ostream& out, const OptimalPathSet& result);

}  // namespace formation
