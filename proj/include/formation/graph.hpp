#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "formation/geometry.hpp"

namespace formation {

using VertexId = int;
using EdgeId = int;
using Cost = std::int64_t;
// costs[k] is the cost for k + 1 robots crossing the edge together.
using CostVector = std::vector<Cost>;

struct RoadmapVertex {
  VertexId id = 0;
  std::optional<Point2D> position;
  bool terminal = false;
  // Vertex of the graph before degree substitution; equals `id` otherwise.
  VertexId origin = 0;
};

struct RoadmapEdge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  double length = 0.0;
  double clearance = 0.0;
  bool zero_cost = false;
  CostVector costs;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

// Undirected multigraph with stable ids. Self-loops are rejected; parallel
// edges are allowed as long as their ids differ.
class RoadmapGraph {
 public:
  const RoadmapVertex& add_vertex(RoadmapVertex vertex);
  const RoadmapEdge& add_edge(RoadmapEdge edge);

  bool has_vertex(VertexId id) const { return vertex_index_.contains(id); }
  bool has_edge(EdgeId id) const { return edge_index_.contains(id); }
  const RoadmapVertex& vertex(VertexId id) const;
  RoadmapVertex& vertex(VertexId id);
  const RoadmapEdge& edge(EdgeId id) const;
  RoadmapEdge& edge(EdgeId id);

  std::span<const RoadmapVertex> vertices() const { return vertices_; }
  std::span<const RoadmapEdge> edges() const { return edges_; }
  std::span<RoadmapEdge> edges() { return edges_; }
  // Incident edge ids in insertion order.
  std::span<const EdgeId> incident(VertexId id) const;
  std::size_t degree(VertexId id) const { return incident(id).size(); }
  std::size_t max_degree() const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  VertexId next_vertex_id() const;
  EdgeId next_edge_id() const;

  bool is_connected() const;
  // Vertices of the connected component containing `seed`.
  std::vector<VertexId> component(VertexId seed) const;
  // Copy keeping only the listed vertices and the edges between them.
  RoadmapGraph induced(std::span<const VertexId> keep) const;
  bool has_geometry() const;

 private:
  std::vector<RoadmapVertex> vertices_;
  std::vector<RoadmapEdge> edges_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

// Graph file: {"vertices": [{"id", "x", "y", "terminal"}], "edges": [{"id", "u", "v", "costs"}]}.
// Optional extras written by this tool: vertex "origin", edge "length",
// "clearance", "zero_cost".
RoadmapGraph load_graph(std::istream& in);
RoadmapGraph load_graph_file(std::string_view path);
void write_graph(std::ostream& out, const RoadmapGraph& graph);
void write_graph_file(std::string_view path, const RoadmapGraph& graph);

}  // namespace formation
