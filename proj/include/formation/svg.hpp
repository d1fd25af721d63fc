#pragma once

#include <string>

#include "formation/environment.hpp"
#include "formation/graph.hpp"
#include "formation/planner.hpp"

namespace formation {

// SVG picture of the map (optional), roadmap and plan (optional). Plan edges
// are drawn as arrows labeled "count [c1,...,cR]". Throws InputError when the
// graph has no positions or the plan references edges not in the graph.
std::string render_svg(const RoadmapGraph& graph, const EnvironmentMap* map, const PlanResult* plan);

}  // namespace formation
