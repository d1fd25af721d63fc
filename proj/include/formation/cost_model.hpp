#pragma once

#include <map>
#include <vector>

#include "formation/graph.hpp"

namespace formation {

enum class CostModelKind {
  explicit_vectors,  // read the vector stored on the edge
  linear,            // trunc(base + r * slope)
  clearance,         // trunc(length * (1 + alpha * r * width / clearance))
};

struct LinearCoefficients {
  double base = 0.0;
  double slope = 0.0;
};

struct CostModelSpec {
  CostModelKind kind = CostModelKind::explicit_vectors;
  // Linear model: per-edge coefficients; edges not listed use
  // `per_length` scaled by the edge length.
  std::map<EdgeId, LinearCoefficients> linear;
  LinearCoefficients per_length{1.0, 0.0};
  double alpha = 0.0;
  double width = 1.0;
  // Added to every entry with fewer than R robots (zero-cost edges exempt).
  Cost split_penalty = 0;
};

// Throws InputError on invalid model parameters.
void validate(const CostModelSpec& model);

// Cost for `robots` robots crossing `edge` together. Zero-cost edges cost 0.
// Throws InputError("degenerate clearance") for the clearance model on an edge
// with zero clearance, and when a result would be negative or non-finite.
Cost evaluate_edge_cost(const RoadmapEdge& edge, int robots, const CostModelSpec& model);

// Copy of `graph` whose edges carry cost vectors of length `robots`, with the
// model's split penalty applied.
RoadmapGraph build_cost_vectors(const RoadmapGraph& graph, const CostModelSpec& model, int robots);

CostVector apply_split_penalty(CostVector costs, Cost penalty, int robots);

// Edges whose vectors decrease somewhere in r.
std::vector<EdgeId> non_monotone_edges(const RoadmapGraph& graph);

}  // namespace formation
