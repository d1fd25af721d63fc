#include "formation/cost_model.hpp"

#include <cmath>
#include <string>

#include "formation/error.hpp"

namespace formation {

namespace {

Cost truncate_cost(double value, const RoadmapEdge& edge) {
  if (!std::isfinite(value)) {
    throw InputError("edge " + std::to_string(edge.id) + ": non-finite cost");
  }
  const double truncated = std::trunc(value);
  if (truncated < 0.0) throw InputError("edge " + std::to_string(edge.id) + ": negative cost");
  return static_cast<Cost>(truncated);
}

}  // namespace

void validate(const CostModelSpec& model) {
  if (!std::isfinite(model.alpha) || model.alpha < 0.0) throw InputError("alpha must be finite and >= 0");
  if (!std::isfinite(model.width) || model.width <= 0.0) throw InputError("width must be finite and > 0");
  if (model.split_penalty < 0) throw InputError("split penalty must be >= 0");
  auto finite = [](const LinearCoefficients& c) { return std::isfinite(c.base) && std::isfinite(c.slope); };
  if (!finite(model.per_length)) throw InputError("linear coefficients must be finite");
  for (const auto& [id, c] : model.linear) {
    if (!finite(c)) throw InputError("edge " + std::to_string(id) + ": linear coefficients must be finite");
  }
}

Cost evaluate_edge_cost(const RoadmapEdge& edge, int robots, const CostModelSpec& model) {
  if (robots < 1) throw InputError("robot count must be >= 1");
  if (edge.zero_cost) return 0;
  switch (model.kind) {
    case CostModelKind::explicit_vectors: {
      if (static_cast<std::size_t>(robots) > edge.costs.size()) {
        throw InputError("edge " + std::to_string(edge.id) + ": no stored cost for " +
                         std::to_string(robots) + " robots");
      }
      return edge.costs[robots - 1];
    }
    case CostModelKind::linear: {
      LinearCoefficients c;
      if (auto it = model.linear.find(edge.id); it != model.linear.end()) {
        c = it->second;
      } else {
        c = {model.per_length.base * edge.length, model.per_length.slope * edge.length};
      }
      return truncate_cost(c.base + robots * c.slope, edge);
    }
    case CostModelKind::clearance: {
      if (edge.clearance <= 0.0) {
        throw InputError("edge " + std::to_string(edge.id) + ": degenerate clearance");
      }
      return truncate_cost(edge.length * (1.0 + model.alpha * robots * model.width / edge.clearance), edge);
    }
  }
  throw InputError("unknown cost model");
}

CostVector apply_split_penalty(CostVector costs, Cost penalty, int robots) {
  const auto split = std::min(costs.size(), static_cast<std::size_t>(std::max(robots - 1, 0)));
  for (std::size_t k = 0; k < split; ++k) costs[k] += penalty;
  return costs;
}

RoadmapGraph build_cost_vectors(const RoadmapGraph& graph, const CostModelSpec& model, int robots) {
  if (robots < 1) throw InputError("robot count must be >= 1");
  validate(model);
  RoadmapGraph out = graph;
  for (RoadmapEdge& edge : out.edges()) {
    CostVector costs(static_cast<std::size_t>(robots));
    for (int r = 1; r <= robots; ++r) costs[r - 1] = evaluate_edge_cost(edge, r, model);
    if (!edge.zero_cost) costs = apply_split_penalty(std::move(costs), model.split_penalty, robots);
    edge.costs = std::move(costs);
  }
  return out;
}

std::vector<EdgeId> non_monotone_edges(const RoadmapGraph& graph) {
  std::vector<EdgeId> out;
  for (const auto& edge : graph.edges()) {
    for (std::size_t k = 1; k < edge.costs.size(); ++k) {
      if (edge.costs[k] < edge.costs[k - 1]) {
        out.push_back(edge.id);
        break;
      }
    }
  }
  return out;
}

}  // namespace formation
