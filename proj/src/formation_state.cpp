#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "formation/planner.hpp"

namespace formation {

std::vector<VertexId> EdgeUsagePath::nodes(VertexId start) const {
  std::vector<VertexId> out{start};
  for (const auto& use : uses) out.push_back(use.to);
  return out;
}

Cost robot_path_cost(const EdgeUsagePath& path, const RoadmapGraph& graph) {
  Cost total = 0;
  for (const auto& use : path.uses) {
    const CostVector& costs = graph.edge(use.edge).costs;
    if (use.count < 1 || static_cast<std::size_t>(use.count) > costs.size()) {
      throw InputError("edge " + std::to_string(use.edge) + ": no cost for " + std::to_string(use.count) +
                       " robots");
    }
    total += costs[use.count - 1];
  }
  return total;
}

Cost state_cost(std::span<const EdgeUsagePath> paths, const RoadmapGraph& graph) {
  if (paths.empty()) throw InputError("state cost of an empty path set");
  Cost worst = 0;
  for (const auto& p : paths) worst = std::max(worst, robot_path_cost(p, graph));
  return worst;
}

namespace {

bool key_less(const UsageEntry& a, const UsageEntry& b) {
  return std::tie(a.edge, a.from) < std::tie(b.edge, b.from);
}

std::vector<VertexId> visited_vertices(const UsageSummary& s) {
  std::vector<VertexId> out;
  for (const auto& e : s.entries()) {
    out.push_back(e.from);
    out.push_back(e.to);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

UsageSummary::UsageSummary(std::vector<UsageEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), key_less);
}

UsageSummary UsageSummary::of(std::span<const EdgeUsagePath> paths) {
  std::map<std::pair<EdgeId, VertexId>, UsageEntry> acc;
  for (const auto& path : paths) {
    for (const auto& use : path.uses) {
      auto [it, inserted] = acc.try_emplace({use.edge, use.from}, UsageEntry{use.edge, use.from, use.to, use.count, 0});
      // Conflicting counts inside one set can never be consistent; record 0.
      if (!inserted && it->second.count != use.count) it->second.count = 0;
      ++it->second.used;
    }
  }
  std::vector<UsageEntry> entries;
  entries.reserve(acc.size());
  for (auto& [key, entry] : acc) entries.push_back(entry);
  return UsageSummary(std::move(entries));
}

UsageSummary UsageSummary::merged(const UsageSummary& a, const UsageSummary& b) {
  std::vector<UsageEntry> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && key_less(*i, *j))) {
      out.push_back(*i++);
    } else if (i == a.entries_.end() || key_less(*j, *i)) {
      out.push_back(*j++);
    } else {
      UsageEntry e = *i++;
      e.used += j++->used;
      out.push_back(e);
    }
  }
  UsageSummary s;
  s.entries_ = std::move(out);
  return s;
}

bool shared_edges_rule(const UsageSummary& a, const UsageSummary& b) {
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (key_less(*i, *j)) {
      ++i;
    } else if (key_less(*j, *i)) {
      ++j;
    } else {
      if (i->count != j->count) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

bool cross_edges_rule(const UsageSummary& a, const UsageSummary& b) {
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->edge < j->edge) {
      ++i;
    } else if (j->edge < i->edge) {
      ++j;
    } else {
      if (i->from != j->from) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

bool shared_nodes_rule(const UsageSummary& a, const UsageSummary& b, VertexId start) {
  const std::vector<VertexId> va = visited_vertices(a);
  const std::vector<VertexId> vb = visited_vertices(b);
  std::vector<VertexId> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
  if (shared.empty()) return true;
  const UsageSummary both = UsageSummary::merged(a, b);
  for (VertexId w : shared) {
    if (w == start) continue;
    long entering = 0;
    long leaving = 0;
    for (const auto& e : both.entries()) {
      if (e.to == w) entering += e.count;
      if (e.from == w) leaving += e.count;
    }
    if (entering < leaving) return false;
  }
  return true;
}

bool usage_consistent(const UsageSummary& summary, bool complete) {
  return std::all_of(summary.entries().begin(), summary.entries().end(), [&](const UsageEntry& e) {
    return complete ? e.used == e.count : e.used <= e.count;
  });
}

bool shared_edges_rule(std::span<const EdgeUsagePath> a, std::span<const EdgeUsagePath> b) {
  return shared_edges_rule(UsageSummary::of(a), UsageSummary::of(b));
}

bool shared_nodes_rule(std::span<const EdgeUsagePath> a, std::span<const EdgeUsagePath> b, VertexId start) {
  return shared_nodes_rule(UsageSummary::of(a), UsageSummary::of(b), start);
}

bool cross_edges_rule(std::span<const EdgeUsagePath> a, std::span<const EdgeUsagePath> b) {
  return cross_edges_rule(UsageSummary::of(a), UsageSummary::of(b));
}

std::vector<std::vector<std::size_t>> split_choices(const FormationState& state, int robots,
                                                    SplitRule rule, VertexId start,
                                                    const RoadmapGraph& graph) {
  const std::size_t n = state.paths.size();
  if (robots < 1 || static_cast<std::size_t>(robots) > n) return {};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (static_cast<std::size_t>(robots) == n) return {order};

  if (rule == SplitRule::cheapest) {
    std::vector<std::pair<Cost, std::vector<VertexId>>> keys;
    for (const auto& p : state.paths) keys.emplace_back(robot_path_cost(p, graph), p.nodes(start));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
    order.resize(static_cast<std::size_t>(robots));
    std::sort(order.begin(), order.end());
    return {order};
  }

  // Group identical paths; pick how many of each group go.
  std::vector<std::vector<std::size_t>> groups;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return state.paths[x] < state.paths[y]; });
  for (std::size_t idx : order) {
    if (groups.empty() || state.paths[groups.back().front()] != state.paths[idx]) groups.emplace_back();
    groups.back().push_back(idx);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> take(groups.size(), 0);
  auto recurse = [&](auto&& self, std::size_t g, std::size_t remaining) -> void {
    if (g == groups.size()) {
      if (remaining != 0) return;
      std::vector<std::size_t> pick;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        pick.insert(pick.end(), groups[k].begin(), groups[k].begin() + static_cast<long>(take[k]));
      }
      std::sort(pick.begin(), pick.end());
      out.push_back(std::move(pick));
      return;
    }
    const std::size_t most = std::min(remaining, groups[g].size());
    for (std::size_t k = most + 1; k-- > 0;) {
      take[g] = k;
      self(self, g + 1, remaining - k);
    }
  };
  recurse(recurse, 0, static_cast<std::size_t>(robots));
  return out;
}

FormationState extend_state(const FormationState& state, const RoadmapGraph& graph, EdgeId edge,
                            std::span<const std::size_t> chosen) {
  const RoadmapEdge& e = graph.edge(edge);
  if (e.u != state.node && e.v != state.node) {
    throw InputError("edge " + std::to_string(edge) + " does not touch vertex " + std::to_string(state.node));
  }
  if (chosen.empty()) throw InputError("extension needs at least one robot");
  FormationState next;
  next.node = e.other(state.node);
  next.robots = static_cast<int>(chosen.size());
  const DirectedEdgeUse use{edge, state.node, next.node, next.robots};
  for (std::size_t idx : chosen) {
    EdgeUsagePath p = state.paths.at(idx);
    p.uses.push_back(use);
    next.paths.push_back(std::move(p));
  }
  std::sort(next.paths.begin(), next.paths.end());
  next.cost = state_cost(next.paths, graph);
  return next;
}

FormationState extend_state(const FormationState& state, const RoadmapGraph& graph, EdgeId edge,
                            int robots, VertexId start) {
  const auto choices = split_choices(state, robots, SplitRule::cheapest, start, graph);
  if (choices.empty()) throw InputError("cannot move " + std::to_string(robots) + " robots from this state");
  return extend_state(state, graph, edge, choices.front());
}

std::vector<FormationState> combine_states(const FormationState& state,
                                           std::span<const FormationState> table, int max_robots,
                                           VertexId start, const RoadmapGraph& graph) {
  std::vector<FormationState> out;
  const UsageSummary mine = UsageSummary::of(state.paths);
  for (int extra = 1; extra <= max_robots - state.robots; ++extra) {
    for (const auto& other : table) {
      if (other.node != state.node || other.robots != extra) continue;
      const UsageSummary theirs = UsageSummary::of(other.paths);
      if (!shared_edges_rule(theirs, mine)) continue;
      if (!shared_nodes_rule(theirs, mine, start)) continue;
      if (!cross_edges_rule(theirs, mine)) continue;
      if (!usage_consistent(UsageSummary::merged(theirs, mine), state.robots + extra == max_robots)) continue;
      FormationState merged;
      merged.node = state.node;
      merged.robots = state.robots + extra;
      merged.paths = other.paths;
      merged.paths.insert(merged.paths.end(), state.paths.begin(), state.paths.end());
      std::sort(merged.paths.begin(), merged.paths.end());
      merged.cost = state_cost(merged.paths, graph);
      out.push_back(std::move(merged));
    }
  }
  return out;
}

}  // namespace formation
