#pragma once

#include <compare>
#include <functional>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "formation/error.hpp"
#include "formation/graph.hpp"

namespace formation {

// One robot crossing `edge` from `from` to `to` together with `count - 1` others.
struct DirectedEdgeUse {
  EdgeId edge = 0;
  VertexId from = 0;
  VertexId to = 0;
  int count = 1;

  friend auto operator<=>(const DirectedEdgeUse&, const DirectedEdgeUse&) = default;
};

// A robot's route in edge representation. Uses are chained: each use starts
// where the previous one ended.
struct EdgeUsagePath {
  std::vector<DirectedEdgeUse> uses;

  std::vector<VertexId> nodes(VertexId start) const;
  friend auto operator<=>(const EdgeUsagePath&, const EdgeUsagePath&) = default;
};

// `robots` robots standing at `node`; `cost` is the worst robot cost among `paths`.
struct FormationState {
  VertexId node = 0;
  int robots = 0;
  Cost cost = 0;
  std::vector<EdgeUsagePath> paths;
};

// Sum of cost_vector(edge)[count] over the path's uses.
Cost robot_path_cost(const EdgeUsagePath& path, const RoadmapGraph& graph);
// Worst robot cost; throws InputError on an empty set.
Cost state_cost(std::span<const EdgeUsagePath> paths, const RoadmapGraph& graph);

// Directed edges used by a set of paths with the stored robot count and the
// number of paths in the set that contain the use. Sorted by (edge, from).
struct UsageEntry {
  EdgeId edge = 0;
  VertexId from = 0;
  VertexId to = 0;
  int count = 0;
  int used = 0;

  friend bool operator==(const UsageEntry&, const UsageEntry&) = default;
};

class UsageSummary {
 public:
  UsageSummary() = default;
  explicit UsageSummary(std::vector<UsageEntry> entries);
  static UsageSummary of(std::span<const EdgeUsagePath> paths);

  std::span<const UsageEntry> entries() const { return entries_; }
  // Union in which uses present in both keep the first summary's count and
  // add up their `used` values.
  static UsageSummary merged(const UsageSummary& a, const UsageSummary& b);

 private:
  std::vector<UsageEntry> entries_;
};

// Same-direction uses present in both sets carry the same robot count.
bool shared_edges_rule(const UsageSummary& a, const UsageSummary& b);
// At every vertex other than `start` visited by both sets, the robots
// entering it (union of uses, shared uses counted once) are at least the
// robots leaving it.
bool shared_nodes_rule(const UsageSummary& a, const UsageSummary& b, VertexId start);
// No edge is used u->v in one set and v->u in the other.
bool cross_edges_rule(const UsageSummary& a, const UsageSummary& b);
// Every use is contained in at most `count` paths; with `complete` (all R
// robots present) exactly `count`.
bool usage_consistent(const UsageSummary& summary, bool complete);

bool shared_edges_rule(std::span<const EdgeUsagePath> a, std::span<const EdgeUsagePath> b);
bool shared_nodes_rule(std::span<const EdgeUsagePath> a, std::span<const EdgeUsagePath> b, VertexId start);
bool cross_edges_rule(std::span<const EdgeUsagePath> a, std::span<const EdgeUsagePath> b);

// How extend_state picks which robots follow a split.
enum class SplitRule {
  all_subsets,  // every distinct sub-multiset of the state's paths
  cheapest,     // only the cheapest paths, ties by node sequence
};

// Index sets of `state.paths` that may continue as a group of `robots`.
std::vector<std::vector<std::size_t>> split_choices(const FormationState& state, int robots,
                                                    SplitRule rule, VertexId start,
                                                    const RoadmapGraph& graph);

// Moves the chosen paths across `edge` (incident to state.node) as one group.
// Prefix counts are kept; the new use records the group size.
FormationState extend_state(const FormationState& state, const RoadmapGraph& graph, EdgeId edge,
                            std::span<const std::size_t> chosen);
// Extension with the cheapest-subset selection.
FormationState extend_state(const FormationState& state, const RoadmapGraph& graph, EdgeId edge,
                            int robots, VertexId start);

// Merges `state` with every partner in `table` at the same node whose robot
// count keeps the total within `max_robots`, when all merge rules pass.
std::vector<FormationState> combine_states(const FormationState& state,
                                           std::span<const FormationState> table, int max_robots,
                                           VertexId start, const RoadmapGraph& graph);

struct PlannerOptions {
  SplitRule split = SplitRule::all_subsets;
  // Cap on distinct generated states.
  std::size_t max_states = 5'000'000;
  // Stop as soon as the full formation reaches this vertex.
  std::optional<VertexId> stop_at;
  // With stop_at: order the queue by cost plus the cheapest single-robot cost
  // from the state's vertex to stop_at. States at one vertex keep their
  // relative order, so entries of the result are unaffected; only fewer are
  // computed.
  bool goal_bound = true;
  // Observers for every distinct generated state and every popped state.
  std::function<void(VertexId node, int robots, Cost cost)> on_generated;
  std::function<void(VertexId node, int robots, Cost cost)> on_popped;
};

struct PlanStats {
  std::size_t generated = 0;
  std::size_t popped = 0;
  std::size_t merges = 0;
};

// Cheapest state found per (vertex, robot count).
class OptimalPathSet {
 public:
  OptimalPathSet() = default;
  OptimalPathSet(VertexId start, int robots) : start_(start), robots_(robots) {}

  VertexId start() const { return start_; }
  int robots() const { return robots_; }
  const FormationState* find(VertexId node, int robots) const;
  const std::map<std::pair<VertexId, int>, FormationState>& entries() const { return entries_; }
  void insert(FormationState state);

  PlanStats stats;

 private:
  VertexId start_ = 0;
  int robots_ = 0;
  std::map<std::pair<VertexId, int>, FormationState> entries_;
};

class StateLimitError : public ResourceLimitError {
 public:
  StateLimitError(std::size_t limit, OptimalPathSet partial);
  const OptimalPathSet& partial() const { return partial_; }

 private:
  OptimalPathSet partial_;
};

// Split/merge extension of Dijkstra: optimal formation states from `start`
// to every vertex for every formation size 1..robots. Edge cost vectors must
// have at least `robots` entries. Throws InputError on bad input and
// StateLimitError when more than options.max_states states are generated.
OptimalPathSet plan(const RoadmapGraph& graph, int robots, VertexId start,
                    const PlannerOptions& options = {});

struct RobotPlan {
  std::vector<VertexId> nodes;
  Cost cost = 0;
};

struct EdgeUsage {
  EdgeId edge = 0;
  VertexId from = 0;
  VertexId to = 0;
  int count = 0;
};

struct PlanResult {
  Cost formation_cost = 0;
  std::vector<RobotPlan> robots;
  std::vector<EdgeUsage> edge_usage;
};

// Robots ordered by descending cost, then node sequence. Node sequences use
// the vertices before degree substitution.
PlanResult reconstruct(const OptimalPathSet& result, const RoadmapGraph& graph, VertexId goal, int robots);

}  // namespace formation
