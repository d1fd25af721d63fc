// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "formation/cost_model.hpp"
#include "formation/environment.hpp"
#include "formation/generator.hpp"
#include "formation/oracle.hpp"
#include "formation/planner.hpp"
#include "formation/roadmap.hpp"
#include "reference.hpp"

using namespace formation;
using testing::dijkstra;
using testing::example_graph;

namespace {

// Every full-formation state returned in criteria 1-4, for criterion 6.
std::vector<FormationState> g_returned;

struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 10) problems.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

using Listing = std::vector<std::pair<Cost, std::vector<VertexId>>>;

Listing listing_of(const PlanResult& p) {
  Listing out;
  for (const auto& r : p.robots) out.emplace_back(r.cost, r.nodes);
  std::sort(out.begin(), out.end());
  return out;
}

Listing sorted(Listing l) {
  std::sort(l.begin(), l.end());
  return l;
}

void keep_full_states(const OptimalPathSet& result) {
  for (const auto& [key, state] : result.entries()) {
    if (key.second == result.robots()) g_returned.push_back(state);
  }
}

RoadmapGraph random_graph(std::uint64_t seed, int vertices, int robots) {
  GeneratorParams p;
  p.vertices = vertices;
  p.robots = robots;
  return generate_graph(seed, p);
}

Check criterion1(double& elapsed) {
  Check c;
  const RoadmapGraph g = example_graph(4);
  const auto t0 = Clock::now();
  const OptimalPathSet result = plan(g, 4, 1);
  const PlanResult p = reconstruct(result, g, 7, 4);
  elapsed = seconds_since(t0);
  keep_full_states(result);
  c.expect(p.formation_cost == 449, "formation cost " + std::to_string(p.formation_cost));
  const Listing expected = sorted({{449, {1, 2, 3, 7}}, {420, {1, 4, 5, 8, 7}}, {397, {1, 2, 7}}, {390, {1, 4, 3, 7}}});
  c.expect(listing_of(p) == expected, "robot costs or sequences differ");
  c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion2(double& elapsed) {
  Check c;
  const RoadmapGraph g = example_graph(10);
  PlannerOptions options;
  options.stop_at = 7;
  const auto t0 = Clock::now();
  const OptimalPathSet result = plan(g, 10, 1, options);
  const PlanResult p = reconstruct(result, g, 7, 10);
  elapsed = seconds_since(t0);
  g_returned.push_back(*result.find(7, 10));
  c.expect(p.formation_cost == 606, "formation cost " + std::to_string(p.formation_cost));
  const std::vector<VertexId> a{1, 6, 8, 7}, b{1, 2, 3, 7}, d{1, 4, 5, 8, 7}, e{1, 2, 7}, f{1, 4, 3, 7};
  const Listing expected =
      sorted({{606, a}, {606, a}, {592, b}, {592, b}, {589, d}, {589, d}, {582, e}, {582, e}, {582, e}, {480, f}});
  c.expect(listing_of(p) == expected, "robot costs or sequences differ");
  c.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion3(double& elapsed, int& graphs) {
  Check c;
  const auto t0 = Clock::now();
  for (int r = 1; r <= 4; ++r) {
    const RoadmapGraph g = example_graph(r);
    const OptimalPathSet result = plan(g, r, 1);
    keep_full_states(result);
    const auto oracle = brute_force_plan(g, r, 1, 7);
    const Cost mine = result.find(7, r)->cost;
    c.expect(oracle && oracle->formation_cost == mine,
             "example R=" + std::to_string(r) + ": planner " + std::to_string(mine));
    if (r == 1) {
      c.expect(mine == 299, "R=1 cost " + std::to_string(mine));
      c.expect(reconstruct(result, g, 7, 1).robots[0].nodes == std::vector<VertexId>{1, 4, 3, 7}, "R=1 route");
    }
  }
  graphs = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int robots = 1 + static_cast<int>(seed % 3);
    const int vertices = 3 + static_cast<int>(seed % 8);
    const RoadmapGraph g = random_graph(seed, vertices, robots);
    const VertexId goal = vertices;
    const OptimalPathSet result = plan(g, robots, 1);
    keep_full_states(result);
    const auto oracle = brute_force_plan(g, robots, 1, goal);
    const FormationState* mine = result.find(goal, robots);
    c.expect(oracle && mine && oracle->formation_cost == mine->cost, "seed " + std::to_string(seed) + " mismatch");
    ++graphs;
  }
  elapsed = seconds_since(t0);
  c.expect(elapsed < 600.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion4(int& graphs, int& vertices_checked) {
  Check c;
  graphs = 0;
  vertices_checked = 0;
  for (std::uint64_t seed = 1000; seed < 1120; ++seed) {
    const int vertices = 2 + static_cast<int>(seed % 49);
    const RoadmapGraph g = random_graph(seed, vertices, 1);
    const auto dist = dijkstra(g, 1);
    const OptimalPathSet result = plan(g, 1, 1);
    keep_full_states(result);
    for (const auto& [v, d] : dist) {
      if (v == 1) continue;
      const FormationState* s = result.find(v, 1);
      c.expect(s && s->cost == d, "seed " + std::to_string(seed) + " vertex " + std::to_string(v));
      ++vertices_checked;
    }
    ++graphs;
  }
  return c;
}

RoadmapGraph star(int d) {
  RoadmapGraph g;
  g.add_vertex({0, Point2D{0, 0}, false, 0});
  for (int k = 1; k <= d; ++k) {
    const double angle = 2 * 3.141592653589793 * k / d;
    g.add_vertex({k, Point2D{std::cos(angle), std::sin(angle)}, false, k});
    RoadmapEdge e;
    e.id = k;
    e.u = 0;
    e.v = k;
    e.length = 1;
    e.costs = {static_cast<Cost>(7 * k)};
    g.add_edge(e);
  }
  return g;
}

bool same_distances(const RoadmapGraph& before, const RoadmapGraph& after) {
  for (const auto& s : before.vertices()) {
    const auto a = dijkstra(before, s.id);
    const auto b = dijkstra(after, s.id);
    for (const auto& [v, d] : a) {
      auto it = b.find(v);
      if (it == b.end() || it->second != d) return false;
    }
  }
  return true;
}

bool prune_clean(const RoadmapGraph& pruned) {
  for (const auto& v : pruned.vertices()) {
    if (!v.terminal && pruned.degree(v.id) <= 1) return false;
  }
  const RoadmapGraph again = prune_tails(pruned);
  return again.vertex_count() == pruned.vertex_count() && again.edge_count() == pruned.edge_count();
}

Check criterion5() {
  Check c;
  for (int d : {4, 5}) {
    const RoadmapGraph g = normalize_degree(star(d));
    int chain = 0;
    for (const auto& v : g.vertices()) chain += v.origin == 0 ? 1 : 0;
    c.expect(chain == d - 2, "degree " + std::to_string(d) + " became " + std::to_string(chain) + " vertices");
    c.expect(g.max_degree() <= 3, "degree above 3 after substitution");
    c.expect(same_distances(star(d), g), "star distances changed");
  }

  std::istringstream rooms_text(R"({
    "border": [[0,0],[100,0],[100,60],[0,60]],
    "obstacles": [[[15,10],[35,10],[35,25],[15,25]], [[50,5],[65,15],[55,30],[42,20]],
                  [[20,38],[40,35],[38,50],[22,52]], [[70,35],[88,35],[88,50],[70,50]], [[72,8],[90,8],[80,24]]]})");
  const EnvironmentMap rooms = load_environment(rooms_text);
  const RoadmapGraph raw = build_roadmap(rooms, {1.0, 0.5});
  const RoadmapGraph pruned = prune_tails(raw);
  c.expect(!pruned.empty() && prune_clean(pruned), "roadmap prune left a tail or is not idempotent");
  CostModelSpec per_length;
  per_length.kind = CostModelKind::linear;
  per_length.per_length = {10.0, 0.0};
  const RoadmapGraph costed = build_cost_vectors(pruned, per_length, 1);
  const RoadmapGraph normalized = normalize_degree(costed);
  c.expect(normalized.max_degree() <= 3, "roadmap degree above 3");
  c.expect(same_distances(costed, normalized), "roadmap distances changed");

  // Random multigraphs with high degrees, some terminals, and dangling chains.
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL;
    auto next = [&](int n) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      return static_cast<int>(x % static_cast<std::uint64_t>(n));
    };
    const int n = 5 + next(20);
    RoadmapGraph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex({v, std::nullopt, next(6) == 0, v});
    EdgeId id = 1;
    for (VertexId v = 2; v <= n; ++v) {
      RoadmapEdge e;
      e.id = id++;
      e.u = 1 + next(v - 1);
      e.v = v;
      e.costs = {static_cast<Cost>(1 + next(40))};
      g.add_edge(e);
    }
    for (int k = next(n); k > 0; --k) {
      RoadmapEdge e;
      e.id = id++;
      e.u = 1 + next(n);
      e.v = 1 + next(n);
      if (e.u == e.v) continue;
      e.costs = {static_cast<Cost>(1 + next(40))};
      g.add_edge(e);
    }
    const RoadmapGraph h = normalize_degree(g);
    c.expect(h.max_degree() <= 3, "random graph degree above 3, seed " + std::to_string(seed));
    c.expect(same_distances(g, h), "random graph distances changed, seed " + std::to_string(seed));
    c.expect(prune_clean(prune_tails(g)), "random graph prune, seed " + std::to_string(seed));
  }
  return c;
}

Check criterion6(std::size_t& states) {
  Check c;
  auto single = [](std::vector<DirectedEdgeUse> uses) { return std::vector<EdgeUsagePath>{EdgeUsagePath{uses}}; };
  c.expect(!cross_edges_rule(single({{7, 3, 4, 1}}), single({{7, 4, 3, 1}})), "opposite directions accepted");
  c.expect(cross_edges_rule(single({{7, 3, 4, 2}}), single({{7, 3, 4, 2}})), "same direction rejected");
  c.expect(!shared_edges_rule(single({{1, 1, 2, 2}}), single({{1, 1, 2, 3}})), "mismatched counts accepted");
  c.expect(shared_edges_rule(single({{1, 1, 2, 2}}), single({{1, 1, 2, 2}})), "matching counts rejected");
  states = g_returned.size();
  for (const auto& s : g_returned) {
    c.expect(testing::pairwise_rules_hold(s), "returned state at vertex " + std::to_string(s.node) + " breaks a rule");
  }
  c.expect(states > 0, "no plans recorded");
  return c;
}

Check criterion7(double& elapsed, std::size_t& generated, int& vertices) {
  Check c;
  GeneratorParams params;
  params.vertices = 60;
  params.robots = 3;
  const RoadmapGraph g = generate_graph(2024, params);
  vertices = static_cast<int>(g.vertex_count());
  c.expect(vertices >= 45 && vertices <= 77 && g.max_degree() <= 3 && g.is_connected(), "bad generated graph");
  const auto t0 = Clock::now();
  PlannerOptions options;
  try {
    const OptimalPathSet result = plan(g, 3, 1, options);
    elapsed = seconds_since(t0);
    generated = result.stats.generated;
    std::size_t full = 0;
    for (const auto& [key, state] : result.entries()) {
      if (key.second != 3) continue;
      ++full;
      c.expect(testing::pairwise_rules_hold(state), "state at vertex " + std::to_string(key.first) + " breaks a rule");
      c.expect(usage_consistent(UsageSummary::of(state.paths), true), "inconsistent usage counts");
    }
    c.expect(full + 1 == g.vertex_count(), "not every vertex reached by the full formation");
  } catch (const StateLimitError& e) {
    elapsed = seconds_since(t0);
    c.expect(false, std::string("state cap hit: ") + e.what());
  }
  c.expect(elapsed < 600.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

int report(int number, const std::string& name, const Check& c, const std::string& detail) {
  const bool ok = c.problems.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " " << name << " (" << detail << ")";
  for (const auto& p : c.problems) std::cout << "; " << p;
  std::cout << std::endl;
  return ok ? 0 : 1;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

}  // namespace

int main() {
  int failed = 0;
  auto guarded = [&](int number, const std::string& name, const std::function<int()>& body) {
    try {
      failed += body();
    } catch (const std::exception& e) {
      Check c;
      c.problems.push_back(std::string("exception: ") + e.what());
      failed += report(number, name, c, "aborted");
    }
  };

  guarded(1, "example R=4", [] {
    double t = 0;
    const Check c = criterion1(t);
    return report(1, "example R=4", c, fmt_seconds(t));
  });
  guarded(2, "example R=10", [] {
    double t = 0;
    const Check c = criterion2(t);
    return report(2, "example R=10", c, fmt_seconds(t) + ", goal 7 with early exit");
  });
  guarded(3, "oracle agreement", [] {
    double t = 0;
    int graphs = 0;
    const Check c = criterion3(t, graphs);
    return report(3, "oracle agreement", c, "example R=1..4, " + std::to_string(graphs) + " random graphs, " + fmt_seconds(t));
  });
  guarded(4, "single robot equals Dijkstra", [] {
    int graphs = 0, vertices = 0;
    const Check c = criterion4(graphs, vertices);
    return report(4, "single robot equals Dijkstra", c,
                  std::to_string(graphs) + " graphs, " + std::to_string(vertices) + " vertices");
  });
  guarded(5, "graph transforms", [] { return report(5, "graph transforms", criterion5(), "stars, roadmap, 60 random graphs"); });
  guarded(6, "merge rules", [] {
    std::size_t states = 0;
    const Check c = criterion6(states);
    return report(6, "merge rules", c, std::to_string(states) + " returned states");
  });
  guarded(7, "scale", [] {
    double t = 0;
    std::size_t generated = 0;
    int vertices = 0;
    const Check c = criterion7(t, generated, vertices);
    return report(7, "scale", c,
                  std::to_string(vertices) + " vertices, R=3, " + std::to_string(generated) + " states, " + fmt_seconds(t));
  });
  return failed;
}
