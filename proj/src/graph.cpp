#include "formation/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "formation/error.hpp"

namespace formation {

using nlohmann::json;

const RoadmapVertex& RoadmapGraph::add_vertex(RoadmapVertex vertex) {
  if (vertex_index_.contains(vertex.id)) {
    throw InputError("duplicate vertex id " + std::to_string(vertex.id));
  }
  vertex_index_.emplace(vertex.id, vertices_.size());
  vertices_.push_back(std::move(vertex));
  adjacency_.emplace_back();
  return vertices_.back();
}

const RoadmapEdge& RoadmapGraph::add_edge(RoadmapEdge edge) {
  if (edge_index_.contains(edge.id)) throw InputError("duplicate edge id " + std::to_string(edge.id));
  if (!has_vertex(edge.u) || !has_vertex(edge.v)) {
    throw InputError("edge " + std::to_string(edge.id) + " references an unknown vertex");
  }
  if (edge.u == edge.v) throw InputError("edge " + std::to_string(edge.id) + " is a self-loop");
  if (edge.length < 0.0 || edge.clearance < 0.0) {
    throw InputError("edge " + std::to_string(edge.id) + " has negative length or clearance");
  }
  edge_index_.emplace(edge.id, edges_.size());
  adjacency_[vertex_index_.at(edge.u)].push_back(edge.id);
  adjacency_[vertex_index_.at(edge.v)].push_back(edge.id);
  edges_.push_back(std::move(edge));
  return edges_.back();
}

const RoadmapVertex& RoadmapGraph::vertex(VertexId id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw InputError("unknown vertex " + std::to_string(id));
  return vertices_[it->second];
}

RoadmapVertex& RoadmapGraph::vertex(VertexId id) {
  return const_cast<RoadmapVertex&>(std::as_const(*this).vertex(id));
}

const RoadmapEdge& RoadmapGraph::edge(EdgeId id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw InputError("unknown edge " + std::to_string(id));
  return edges_[it->second];
}

RoadmapEdge& RoadmapGraph::edge(EdgeId id) {
  return const_cast<RoadmapEdge&>(std::as_const(*this).edge(id));
}

std::span<const EdgeId> RoadmapGraph::incident(VertexId id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw InputError("unknown vertex " + std::to_string(id));
  return adjacency_[it->second];
}

std::size_t RoadmapGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

VertexId RoadmapGraph::next_vertex_id() const {
  VertexId next = 0;
  for (const auto& v : vertices_) next = std::max(next, v.id + 1);
  return next;
}

EdgeId RoadmapGraph::next_edge_id() const {
  EdgeId next = 0;
  for (const auto& e : edges_) next = std::max(next, e.id + 1);
  return next;
}

std::vector<VertexId> RoadmapGraph::component(VertexId seed) const {
  std::vector<VertexId> out{seed};
  std::unordered_map<VertexId, bool> seen{{seed, true}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (EdgeId e : incident(out[head])) {
      const VertexId w = edge(e).other(out[head]);
      if (seen.emplace(w, true).second) out.push_back(w);
    }
  }
  return out;
}

bool RoadmapGraph::is_connected() const {
  if (vertices_.empty()) return true;
  return component(vertices_.front().id).size() == vertices_.size();
}

RoadmapGraph RoadmapGraph::induced(std::span<const VertexId> keep) const {
  std::unordered_map<VertexId, bool> kept;
  for (VertexId id : keep) kept[id] = true;
  RoadmapGraph out;
  for (const auto& v : vertices_) {
    if (kept.contains(v.id)) out.add_vertex(v);
  }
  for (const auto& e : edges_) {
    if (kept.contains(e.u) && kept.contains(e.v)) out.add_edge(e);
  }
  return out;
}

bool RoadmapGraph::has_geometry() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RoadmapVertex& v) { return v.position.has_value(); });
}

namespace {

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError("malformed graph file: " + where + " lacks \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError("malformed graph file: " + where + " has a bad \"" + key + "\"");
  }
}

}  // namespace

RoadmapGraph load_graph(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed graph file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("malformed graph file: missing \"vertices\" array");
  }
  RoadmapGraph graph;
  for (const auto& jv : doc["vertices"]) {
    RoadmapVertex v;
    v.id = field<int>(jv, "id", "vertex");
    const std::string where = "vertex " + std::to_string(v.id);
    if (jv.contains("x") != jv.contains("y")) throw InputError("malformed graph file: " + where + " needs both x and y");
    if (jv.contains("x")) v.position = Point2D{field<double>(jv, "x", where), field<double>(jv, "y", where)};
    v.terminal = jv.value("terminal", false);
    v.origin = jv.contains("origin") ? field<int>(jv, "origin", where) : v.id;
    graph.add_vertex(std::move(v));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("malformed graph file: \"edges\" must be an array");
    for (const auto& je : doc["edges"]) {
      RoadmapEdge e;
      e.id = field<int>(je, "id", "edge");
      const std::string where = "edge " + std::to_string(e.id);
      e.u = field<int>(je, "u", where);
      e.v = field<int>(je, "v", where);
      if (je.contains("costs")) e.costs = field<CostVector>(je, "costs", where);
      if (std::any_of(e.costs.begin(), e.costs.end(), [](Cost c) { return c < 0; })) {
        throw InputError("malformed graph file: " + where + " has a negative cost");
      }
      e.zero_cost = je.value("zero_cost", false);
      e.clearance = je.value("clearance", 0.0);
      if (je.contains("length")) {
        e.length = field<double>(je, "length", where);
      } else if (graph.has_vertex(e.u) && graph.has_vertex(e.v) && graph.vertex(e.u).position &&
                 graph.vertex(e.v).position) {
        e.length = distance(*graph.vertex(e.u).position, *graph.vertex(e.v).position);
      }
      graph.add_edge(std::move(e));
    }
  }
  return graph;
}

RoadmapGraph load_graph_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw InputError("cannot open graph file " + std::string(path));
  return load_graph(in);
}

void write_graph(std::ostream& out, const RoadmapGraph& graph) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : graph.vertices()) {
    json jv{{"id", v.id}};
    if (v.position) {
      jv["x"] = v.position->x;
      jv["y"] = v.position->y;
    }
    jv["terminal"] = v.terminal;
    if (v.origin != v.id) jv["origin"] = v.origin;
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = json::array();
  for (const auto& e : graph.edges()) {
    json je{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"costs", e.costs}};
    je["length"] = e.length;
    je["clearance"] = e.clearance;
    if (e.zero_cost) je["zero_cost"] = true;
    doc["edges"].push_back(std::move(je));
  }
  out << doc.dump(2) << '\n';
}

void write_graph_file(std::string_view path, const RoadmapGraph& graph) {
  std::ofstream out{std::string(path)};
  if (!out) throw InputError("cannot write " + std::string(path));
  write_graph(out, graph);
}

}  // namespace formation
