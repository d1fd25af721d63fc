#include <gtest/gtest.h>

#include "formation/cost_model.hpp"
#include "formation/error.hpp"
#include "reference.hpp"

namespace formation {
namespace {

using testing::example_graph;

RoadmapEdge plain_edge(double length, double clearance = 1.0) {
  RoadmapEdge e;
  e.id = 1;
  e.u = 1;
  e.v = 2;
  e.length = length;
  e.clearance = clearance;
  return e;
}

CostModelSpec linear(double base, double slope) {
  CostModelSpec m;
  m.kind = CostModelKind::linear;
  m.linear[1] = {base, slope};
  return m;
}

TEST(LinearModel, TruncatesToInteger) {
  const CostModelSpec m = linear(76.048, 13.88);
  EXPECT_EQ(evaluate_edge_cost(plain_edge(1), 1, m), 89);
  EXPECT_EQ(evaluate_edge_cost(plain_edge(1), 2, m), 103);
  const CostModelSpec e1 = linear(142.93, 19.99);
  EXPECT_EQ(evaluate_edge_cost(plain_edge(1), 1, e1), 162);
  EXPECT_EQ(evaluate_edge_cost(plain_edge(1), 2, e1), 182);
}

TEST(LinearModel, ExampleVectors) {
  const RoadmapGraph g = example_graph(4);
  EXPECT_EQ(g.edge(1).costs, (CostVector{162, 182, 202, 222}));
  EXPECT_EQ(g.edge(12).costs[3], 131);
  EXPECT_EQ(g.edge(6).costs[1], 178);
}

TEST(LinearModel, MatchesStoredExampleFile) {
  const RoadmapGraph stored = load_graph_file(testing::data_path("eight_node.json"));
  const RoadmapGraph computed = example_graph(10);
  ASSERT_EQ(stored.edge_count(), computed.edge_count());
  for (const auto& e : computed.edges()) {
    EXPECT_EQ(stored.edge(e.id).costs, e.costs) << "edge " << e.id;
    EXPECT_EQ(stored.edge(e.id).u, e.u);
    EXPECT_EQ(stored.edge(e.id).v, e.v);
  }
}

TEST(LinearModel, PerLengthDefault) {
  CostModelSpec m;
  m.kind = CostModelKind::linear;
  m.per_length = {2.0, 0.5};
  EXPECT_EQ(evaluate_edge_cost(plain_edge(10), 3, m), 35);
}

TEST(LinearModel, MonotoneForNonNegativeSlope) {
  const RoadmapGraph g = example_graph(10);
  EXPECT_TRUE(non_monotone_edges(g).empty());
  for (const auto& e : g.edges()) {
    for (std::size_t k = 1; k < e.costs.size(); ++k) EXPECT_LE(e.costs[k - 1], e.costs[k]);
  }
}

TEST(LinearModel, NegativeSlopeIsReported) {
  RoadmapGraph g;
  g.add_vertex({1, std::nullopt, false, 1});
  g.add_vertex({2, std::nullopt, false, 2});
  g.add_edge(plain_edge(1));
  const RoadmapGraph h = build_cost_vectors(g, linear(100, -10), 3);
  EXPECT_EQ(h.edge(1).costs, (CostVector{90, 80, 70}));
  EXPECT_EQ(non_monotone_edges(h), std::vector<EdgeId>{1});
}

TEST(CostModel, ZeroCostEdge) {
  RoadmapEdge e = plain_edge(5);
  e.zero_cost = true;
  EXPECT_EQ(evaluate_edge_cost(e, 3, linear(100, 10)), 0);
  CostModelSpec c;
  c.kind = CostModelKind::clearance;
  c.alpha = 1.0;
  e.clearance = 0.0;
  EXPECT_EQ(evaluate_edge_cost(e, 2, c), 0);
}

TEST(CostModel, SingleRobotIsLengthForClearanceModel) {
  CostModelSpec m;
  m.kind = CostModelKind::clearance;
  m.alpha = 0.0;
  EXPECT_EQ(evaluate_edge_cost(plain_edge(12.7, 3.0), 1, m), 12);
  m.alpha = 0.5;
  m.width = 2.0;
  // 10 * (1 + 0.5 * 3 * 2 / 4) = 17.5
  EXPECT_EQ(evaluate_edge_cost(plain_edge(10, 4.0), 3, m), 17);
}

TEST(CostModel, DegenerateClearance) {
  CostModelSpec m;
  m.kind = CostModelKind::clearance;
  m.alpha = 1.0;
  EXPECT_THROW(evaluate_edge_cost(plain_edge(10, 0.0), 1, m), InputError);
}

TEST(CostModel, ExplicitVectorsPassThrough) {
  RoadmapEdge e = plain_edge(1);
  e.costs = {5, 7, 4};
  CostModelSpec m;
  EXPECT_EQ(evaluate_edge_cost(e, 1, m), 5);
  EXPECT_EQ(evaluate_edge_cost(e, 3, m), 4);
  EXPECT_THROW(evaluate_edge_cost(e, 4, m), InputError);
}

TEST(CostModel, InvalidParameters) {
  CostModelSpec m;
  m.alpha = -1;
  EXPECT_THROW(validate(m), InputError);
  m = {};
  m.width = 0;
  EXPECT_THROW(validate(m), InputError);
  m = {};
  m.split_penalty = -3;
  EXPECT_THROW(validate(m), InputError);
  EXPECT_THROW(evaluate_edge_cost(plain_edge(1), 0, linear(1, 1)), InputError);
  EXPECT_THROW(evaluate_edge_cost(plain_edge(1), 1, linear(-5, 1)), InputError);
}

TEST(SplitPenalty, AddedBelowFullFormation) {
  EXPECT_EQ(apply_split_penalty({10, 20, 30}, 100, 3), (CostVector{110, 120, 30}));
  EXPECT_EQ(apply_split_penalty({10}, 100, 1), (CostVector{10}));
  CostModelSpec m = linear(100, 10);
  m.split_penalty = 50;
  RoadmapGraph g;
  g.add_vertex({1, std::nullopt, false, 1});
  g.add_vertex({2, std::nullopt, false, 2});
  g.add_edge(plain_edge(1));
  RoadmapEdge link = plain_edge(1);
  link.id = 2;
  link.zero_cost = true;
  g.add_edge(link);
  const RoadmapGraph h = build_cost_vectors(g, m, 3);
  EXPECT_EQ(h.edge(1).costs, (CostVector{160, 170, 130}));
  EXPECT_EQ(h.edge(2).costs, (CostVector{0, 0, 0}));
}

}  // namespace
}  // namespace formation
