#include "formation/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace formation {

std::vector<SimplePath> enumerate_simple_paths(const RoadmapGraph& graph, VertexId start, VertexId goal,
                                               int max_edges) {
  if (max_edges < 1) throw InputError("max_edges must be >= 1");
  if (!graph.has_vertex(start) || !graph.has_vertex(goal)) throw InputError("unknown start or goal vertex");
  std::vector<SimplePath> out;
  if (start == goal) {
    out.push_back({{start}, {}});
    return out;
  }
  SimplePath current{{start}, {}};
  std::unordered_set<VertexId> on_path{start};

  auto dfs = [&](auto&& self, VertexId u) -> void {
    if (u == goal) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.edges.size()) == max_edges) return;
    std::vector<std::pair<VertexId, EdgeId>> next;
    for (EdgeId e : graph.incident(u)) next.emplace_back(graph.edge(e).other(u), e);
    std::sort(next.begin(), next.end());
    for (auto [v, e] : next) {
      if (on_path.contains(v)) continue;
      on_path.insert(v);
      current.nodes.push_back(v);
      current.edges.push_back(e);
      self(self, v);
      current.nodes.pop_back();
      current.edges.pop_back();
      on_path.erase(v);
    }
  };
  dfs(dfs, start);
  return out;
}

namespace {

// C(n + k - 1, k), saturating.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - 1 + i;
    // result * num / i stays integral at every step.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    result = result * num / i;
  }
  return result;
}

struct DirectedUse {
  std::size_t slot;  // 2 * edge index + direction
};

}  // namespace

std::optional<OracleResult> brute_force_plan(const RoadmapGraph& graph, int robots, VertexId start,
                                             VertexId goal, const OracleOptions& options) {
  if (robots < 1) throw InputError("robot count must be >= 1");
  const int max_edges =
      options.max_edges > 0 ? options.max_edges : std::max<int>(1, static_cast<int>(graph.vertex_count()) - 1);
  const std::vector<SimplePath> paths = enumerate_simple_paths(graph, start, goal, max_edges);
  if (paths.empty()) return std::nullopt;

  const std::uint64_t total = multiset_count(paths.size(), static_cast<std::uint64_t>(robots));
  if (total > options.max_assignments) {
    throw ResourceLimitError("oracle: " + std::to_string(paths.size()) + " paths and " + std::to_string(robots) +
                             " robots give more than " + std::to_string(options.max_assignments) +
                             " assignments");
  }

  std::unordered_map<EdgeId, std::size_t> edge_index;
  for (const auto& e : graph.edges()) {
    if (e.costs.size() < static_cast<std::size_t>(robots)) {
      throw InputError("edge " + std::to_string(e.id) + " has fewer than " + std::to_string(robots) + " costs");
    }
    edge_index.emplace(e.id, edge_index.size());
  }
  std::vector<std::vector<DirectedUse>> uses(paths.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t k = 0; k < paths[p].edges.size(); ++k) {
      const RoadmapEdge& e = graph.edge(paths[p].edges[k]);
      const std::size_t dir = paths[p].nodes[k] == e.u ? 0 : 1;
      uses[p].push_back({2 * edge_index.at(e.id) + dir});
    }
  }

  std::vector<int> counts(2 * edge_index.size(), 0);
  std::vector<std::size_t> pick(static_cast<std::size_t>(robots), 0);
  std::vector<std::size_t> best;
  Cost best_cost = std::numeric_limits<Cost>::max();
  std::uint64_t evaluated = 0;

  auto evaluate = [&]() {
    ++evaluated;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t p : pick) {
      for (const auto& u : uses[p]) ++counts[u.slot];
    }
    for (std::size_t s = 0; s < counts.size(); s += 2) {
      if (counts[s] > 0 && counts[s + 1] > 0) return;
    }
    Cost worst = 0;
    for (std::size_t p : pick) {
      Cost c = 0;
      for (const auto& u : uses[p]) c += graph.edges()[u.slot / 2].costs[counts[u.slot] - 1];
      worst = std::max(worst, c);
    }
    if (worst < best_cost) {
      best_cost = worst;
      best = pick;
    }
  };

  // Non-decreasing index tuples in lexicographic order.
  const std::size_t n = paths.size();
  while (true) {
    evaluate();
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] == n - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    std::fill(pick.begin() + static_cast<long>(k), pick.end(), pick[k - 1]);
  }
  if (best.empty()) return std::nullopt;

  OracleResult result;
  result.formation_cost = best_cost;
  result.evaluated = evaluated;
  pick = best;
  std::fill(counts.begin(), counts.end(), 0);
  for (std::size_t p : pick) {
    for (const auto& u : uses[p]) ++counts[u.slot];
  }
  for (std::size_t p : pick) {
    result.assignment.paths.push_back(paths[p]);
    Cost c = 0;
    for (const auto& u : uses[p]) c += graph.edges()[u.slot / 2].costs[counts[u.slot] - 1];
    result.assignment.robot_costs.push_back(c);
  }
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    const RoadmapEdge& e = graph.edges()[s / 2];
    const bool forward = s % 2 == 0;
    result.assignment.usage.push_back({e.id, forward ? e.u : e.v, forward ? e.v : e.u, counts[s]});
  }
  std::sort(result.assignment.usage.begin(), result.assignment.usage.end(),
            [](const EdgeUsage& a, const EdgeUsage& b) { return std::tie(a.edge, a.from) < std::tie(b.edge, b.from); });
  return result;
}

}  // namespace formation
