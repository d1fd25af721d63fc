#pragma once

#include "formation/environment.hpp"
#include "formation/graph.hpp"

namespace formation {

struct RoadmapParams {
  // Maximum spacing of boundary samples.
  double sampling_step = 1.0;
  // Retained edges keep at least this distance to every boundary.
  double min_clearance = 0.0;
};

// Medial-axis roadmap of the free space, approximated by the Voronoi diagram
// of points sampled along every border and obstacle edge. Ribs between samples
// of the same boundary edge are dropped, as are edges leaving free space or
// closer than `min_clearance` to a boundary. Returns the largest connected
// component. Throws InputError("free space empty") or ("resulting graph empty").
RoadmapGraph build_roadmap(const EnvironmentMap& map, const RoadmapParams& params);

// Repeatedly removes non-terminal vertices of degree <= 1.
RoadmapGraph prune_tails(const RoadmapGraph& graph);

// Replaces every vertex of degree d > 3 by a chain of d - 2 vertices joined by
// zero-cost edges. Incident edges are dealt out in ascending angle (edge id
// when positions are missing): two to each chain end, one to each interior
// vertex. New vertices record the replaced vertex in `origin`; the first chain
// vertex keeps the original id and terminal flag.
RoadmapGraph normalize_degree(const RoadmapGraph& graph);

struct AttachResult {
  RoadmapGraph graph;
  VertexId vertex = 0;
};

inline constexpr double kCoincidenceTolerance = 1e-9;

// Marks an existing vertex within kCoincidenceTolerance of `point` as terminal,
// or inserts a terminal vertex joined to the nearest vertex reachable by a
// collision-free straight segment. Degree normalization is re-applied.
AttachResult attach_terminal(const RoadmapGraph& graph, const EnvironmentMap& map, Point2D point);

}  // namespace formation
