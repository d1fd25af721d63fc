#include "formation/plan_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

namespace formation {

using nlohmann::json;

void write_plan(std::ostream& out, const PlanResult& plan) {
  json doc;
  doc["formation_cost"] = plan.formation_cost;
  doc["robots"] = json::array();
  for (const auto& r : plan.robots) doc["robots"].push_back({{"nodes", r.nodes}, {"cost", r.cost}});
  doc["edge_usage"] = json::array();
  for (const auto& u : plan.edge_usage) {
    doc["edge_usage"].push_back({{"edge", u.edge}, {"from", u.from}, {"to", u.to}, {"count", u.count}});
  }
  out << doc.dump(2) << '\n';
}

PlanResult load_plan(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed plan file: ") + e.what());
  }
  PlanResult plan;
  try {
    plan.formation_cost = doc.at("formation_cost").get<Cost>();
    for (const auto& r : doc.at("robots")) {
      plan.robots.push_back({r.at("nodes").get<std::vector<VertexId>>(), r.at("cost").get<Cost>()});
    }
    for (const auto& u : doc.at("edge_usage")) {
      plan.edge_usage.push_back(
          {u.at("edge").get<EdgeId>(), u.at("from").get<VertexId>(), u.at("to").get<VertexId>(), u.at("count").get<int>()});
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed plan file: ") + e.what());
  }
  return plan;
}

PlanResult load_plan_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw InputError("cannot open " + std::string(path));
  return load_plan(in);
}

void write_cost_table(std::ostream& out, const OptimalPathSet& result) {
  json doc;
  doc["start"] = result.start();
  doc["robots"] = result.robots();
  doc["table"] = json::array();
  for (const auto& [key, state] : result.entries()) {
    doc["table"].push_back({{"node", key.first}, {"robots", key.second}, {"cost", state.cost}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace formation
