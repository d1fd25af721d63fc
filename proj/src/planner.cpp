#include "formation/planner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <tuple>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace formation {

namespace {

using Index = std::uint32_t;
constexpr Index kNone = ~Index{0};

struct Arc {
  Index edge;
  Index to;
};

// Dense copy of the graph: vertices and edges addressed by position.
struct Compiled {
  std::vector<VertexId> vertex_id;
  std::unordered_map<VertexId, Index> vertex_index;
  std::vector<EdgeId> edge_id;
  std::vector<const CostVector*> costs;
  std::vector<std::vector<Arc>> arcs;

  Compiled(const RoadmapGraph& graph, int robots) {
    for (const auto& v : graph.vertices()) {
      vertex_index.emplace(v.id, static_cast<Index>(vertex_id.size()));
      vertex_id.push_back(v.id);
    }
    std::unordered_map<EdgeId, Index> edge_index;
    for (const auto& e : graph.edges()) {
      if (e.costs.size() < static_cast<std::size_t>(robots)) {
        throw InputError("edge " + std::to_string(e.id) + " has " + std::to_string(e.costs.size()) +
                         " costs, need " + std::to_string(robots));
      }
      edge_index.emplace(e.id, static_cast<Index>(edge_id.size()));
      edge_id.push_back(e.id);
      costs.push_back(&e.costs);
    }
    arcs.resize(vertex_id.size());
    for (const auto& v : graph.vertices()) {
      for (EdgeId e : graph.incident(v.id)) {
        const RoadmapEdge& edge = graph.edge(e);
        arcs[vertex_index.at(v.id)].push_back({edge_index.at(e), vertex_index.at(edge.other(v.id))});
      }
    }
  }
};

// Interned robot paths stored as parent-linked use lists. Equal paths share
// one id, so a state is identified by its sorted list of path ids.
class PathArena {
 public:
  struct Node {
    Index parent;
    Index edge;
    Index from;
    Index to;
    int count;
    Cost cost;
    std::uint64_t visit_mask;
  };

  explicit PathArena(Index start) { nodes_.push_back({kNone, kNone, start, start, 0, 0, bit(start)}); }

  Index root() const { return 0; }
  const Node& operator[](Index id) const { return nodes_[id]; }

  Index extend(Index parent, Index edge, Index to, int count, Cost step) {
    const Key key{parent, edge, static_cast<Index>(count)};
    auto [it, inserted] = intern_.try_emplace(key, static_cast<Index>(nodes_.size()));
    if (inserted) {
      const Node& p = nodes_[parent];
      nodes_.push_back({parent, edge, p.to, to, count, p.cost + step, p.visit_mask | bit(to)});
    }
    return it->second;
  }

  bool visits(Index path, Index vertex) const {
    if ((nodes_[path].visit_mask & bit(vertex)) == 0) return false;
    for (Index p = path; p != kNone; p = nodes_[p].parent) {
      if (nodes_[p].to == vertex) return true;
    }
    return false;
  }

 private:
  struct Key {
    Index parent, edge, count;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.parent;
      h = h * 0x9E3779B97F4A7C15ULL ^ k.edge;
      h = h * 0x9E3779B97F4A7C15ULL ^ k.count;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  static std::uint64_t bit(Index v) { return std::uint64_t{1} << (v % 64); }

  std::vector<Node> nodes_;
  std::unordered_map<Key, Index, KeyHash> intern_;
};

struct StateRecord {
  Index node;
  int robots;
  Cost cost;
  std::size_t paths_at;
};

class StateStore {
 public:
  StateStore() : seen_(1024, Hash{this}, Equal{this}) {}

  std::span<const Index> paths(Index s) const {
    const auto& r = records_[s];
    return {pool_.data() + r.paths_at, static_cast<std::size_t>(r.robots)};
  }
  const StateRecord& operator[](Index s) const { return records_[s]; }
  std::size_t size() const { return records_.size(); }

  // Returns the new state's index, or kNone if an equal state exists.
  Index insert(Index node, std::span<const Index> sorted_paths, Cost cost) {
    const std::size_t at = pool_.size();
    pool_.insert(pool_.end(), sorted_paths.begin(), sorted_paths.end());
    records_.push_back({node, static_cast<int>(sorted_paths.size()), cost, at});
    const Index id = static_cast<Index>(records_.size() - 1);
    if (!seen_.insert(id).second) {
      records_.pop_back();
      pool_.resize(at);
      return kNone;
    }
    return id;
  }

 private:
  struct Hash {
    const StateStore* store;
    std::size_t operator()(Index s) const {
      std::uint64_t h = store->records_[s].node;
      for (Index p : store->paths(s)) h = (h ^ p) * 0x100000001B3ULL;
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };
  struct Equal {
    const StateStore* store;
    bool operator()(Index a, Index b) const {
      if (store->records_[a].node != store->records_[b].node) return false;
      const auto pa = store->paths(a);
      const auto pb = store->paths(b);
      return std::equal(pa.begin(), pa.end(), pb.begin(), pb.end());
    }
  };

  std::vector<StateRecord> records_;
  std::vector<Index> pool_;
  std::unordered_set<Index, Hash, Equal> seen_;
};

struct QueueItem {
  Cost cost;  // plus the goal bound when one is used
  int robots;
  VertexId vertex;
  Index state;

  // Ascending cost, then larger formations, vertex id, creation order.
  bool operator>(const QueueItem& o) const {
    if (cost != o.cost) return cost > o.cost;
    if (robots != o.robots) return robots < o.robots;
    if (vertex != o.vertex) return vertex > o.vertex;
    return state > o.state;
  }
};

class Search {
 public:
  Search(const RoadmapGraph& graph, int robots, VertexId start, const PlannerOptions& options)
      : compiled_(graph, robots),
        robots_(robots),
        start_(compiled_.vertex_index.at(start)),
        options_(options),
        arena_(start_),
        result_(start, robots),
        popped_(compiled_.vertex_id.size(), std::vector<Bucket>(robots + 1)),
        completion_index_(compiled_.vertex_id.size()),
        balance_(compiled_.vertex_id.size(), 0) {}

  OptimalPathSet run() {
    if (options_.stop_at && options_.goal_bound) compute_bound(compiled_.vertex_index.at(*options_.stop_at));
    std::vector<bool> finalized(compiled_.vertex_id.size(), false);
    std::size_t pending = finalized.size();
    finalized[start_] = true;
    --pending;

    for (int r = 1; r <= robots_; ++r) {
      for (const Arc& arc : compiled_.arcs[start_]) {
        const Index p = arena_.extend(arena_.root(), arc.edge, arc.to, r, step_cost(arc.edge, r));
        std::vector<Index> paths(static_cast<std::size_t>(r), p);
        push(arc.to, paths);
      }
    }

    while (pending > 0 && !queue_.empty()) {
      const QueueItem item = queue_.top();
      queue_.pop();
      ++result_.stats.popped;
      const Index s = item.state;
      const Index u = store_[s].node;
      const int r_u = store_[s].robots;
      const VertexId uid = compiled_.vertex_id[u];
      if (options_.on_popped) options_.on_popped(uid, r_u, store_[s].cost);
      if (!result_.find(uid, r_u)) result_.insert(materialize(s));
      if (r_u == robots_ && options_.stop_at && *options_.stop_at == uid) break;

      if (r_u < robots_) {
        const Popped mine = summarize(s);
        combine(mine);
        remember(mine);
      }
      expand(s);

      if (r_u == robots_ && !finalized[u]) {
        finalized[u] = true;
        --pending;
      }
    }
    result_.stats.generated = store_.size();
    return std::move(result_);
  }

 private:
  // Directed use of an edge by the paths of one popped state.
  struct Usage {
    Index edge;
    Index from;
    Index to;
    int count;  // 0 when the state's paths disagree
    int used;

    std::size_t key() const { return 2 * std::size_t{edge} + (from < to ? 0 : 1); }
  };

  // A popped state as merge partner. Its usage list and bit masks live in
  // flat pools: `all` and `full` over directed edge keys (full: used ==
  // count), then visited vertices.
  struct Popped {
    Index state;
    std::uint32_t usage_at;
    std::uint32_t usage_len;
    std::size_t mask_at;
    std::uint64_t deficit_hash;     // over uses with used < count
    std::uint64_t complement_hash;  // what a completing partner's deficit_hash must be
  };

  // Popped states of one (vertex, robots) with their all/full masks side by side.
  struct Bucket {
    std::vector<Popped> items;
    std::vector<std::uint64_t> masks;
  };

  // Dijkstra from the goal with the cheapest entry of every cost vector.
  void compute_bound(Index goal) {
    constexpr Cost kUnreached = std::numeric_limits<Cost>::max();
    bound_.assign(compiled_.vertex_id.size(), kUnreached);
    using Item = std::pair<Cost, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    bound_[goal] = 0;
    queue.push({0, goal});
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (d > bound_[u]) continue;
      for (const Arc& arc : compiled_.arcs[u]) {
        const auto& costs = *compiled_.costs[arc.edge];
        const Cost w = *std::min_element(costs.begin(), costs.begin() + robots_);
        if (d + w < bound_[arc.to]) {
          bound_[arc.to] = d + w;
          queue.push({d + w, arc.to});
        }
      }
    }
    // Vertices that cannot reach the goal keep plain cost order.
    for (Cost& b : bound_) {
      if (b == kUnreached) b = 0;
    }
  }

  Cost priority(Index node, Cost cost) const { return bound_.empty() ? cost : cost + bound_[node]; }

  Cost step_cost(Index edge, int r) const { return (*compiled_.costs[edge])[r - 1]; }

  void push(Index node, std::vector<Index>& paths) {
    std::sort(paths.begin(), paths.end());
    Cost cost = 0;
    for (Index p : paths) cost = std::max(cost, arena_[p].cost);
    if (store_.size() >= options_.max_states) {
      // Probe first so that re-generating a known state never trips the cap.
      const Index probe = store_.insert(node, paths, cost);
      if (probe == kNone) return;
      result_.stats.generated = store_.size();
      throw StateLimitError(options_.max_states, std::move(result_));
    }
    const Index s = store_.insert(node, paths, cost);
    if (s == kNone) return;
    if (options_.on_generated) options_.on_generated(compiled_.vertex_id[node], static_cast<int>(paths.size()), cost);
    queue_.push({priority(node, cost), static_cast<int>(paths.size()), compiled_.vertex_id[node], s});
  }

  std::size_t key_words() const { return (2 * compiled_.edge_id.size() + 63) / 64; }
  std::size_t vertex_words() const { return (compiled_.vertex_id.size() + 63) / 64; }
  std::size_t mask_stride() const { return 2 * key_words() + vertex_words(); }
  static void set_bit(std::uint64_t* words, std::size_t k) { words[k / 64] |= std::uint64_t{1} << (k % 64); }

  static std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h * 0xBF58476D1CE4E5B9ULL;
  }

  Popped summarize(Index s) {
    scratch_.clear();
    const auto paths = store_.paths(s);
    for (std::size_t k = 0; k < paths.size();) {
      std::size_t same = k;
      while (same < paths.size() && paths[same] == paths[k]) ++same;
      const int copies = static_cast<int>(same - k);
      for (Index p = paths[k]; arena_[p].parent != kNone; p = arena_[p].parent) {
        const auto& n = arena_[p];
        scratch_.push_back({n.edge, n.from, n.to, n.count, copies});
      }
      k = same;
    }
    std::sort(scratch_.begin(), scratch_.end(),
              [](const Usage& a, const Usage& b) { return std::tie(a.edge, a.from) < std::tie(b.edge, b.from); });

    Popped out{s, static_cast<std::uint32_t>(usage_pool_.size()), 0, mask_pool_.size(), 0, 0};
    for (const Usage& u : scratch_) {
      if (out.usage_len > 0) {
        Usage& last = usage_pool_.back();
        if (last.edge == u.edge && last.from == u.from) {
          if (last.count != u.count) last.count = 0;
          last.used += u.used;
          continue;
        }
      }
      usage_pool_.push_back(u);
      ++out.usage_len;
    }

    mask_pool_.resize(mask_pool_.size() + mask_stride(), 0);
    std::uint64_t* all = &mask_pool_[out.mask_at];
    std::uint64_t* full = all + key_words();
    std::uint64_t* visited = full + key_words();
    for (std::uint32_t k = 0; k < out.usage_len; ++k) {
      const Usage& u = usage_pool_[out.usage_at + k];
      set_bit(all, u.key());
      set_bit(visited, u.from);
      set_bit(visited, u.to);
      if (u.used >= u.count) {
        set_bit(full, u.key());
      } else {
        out.deficit_hash = mix(mix(mix(out.deficit_hash, u.key()), static_cast<std::uint64_t>(u.count)),
                               static_cast<std::uint64_t>(u.used));
        out.complement_hash = mix(mix(mix(out.complement_hash, u.key()), static_cast<std::uint64_t>(u.count)),
                                  static_cast<std::uint64_t>(u.count - u.used));
      }
    }
    return out;
  }

  // Necessary conditions on masks alone: no opposite uses, and no use that
  // one side already holds in full appears on the other side.
  bool masks_compatible(const Popped& a, const Popped& b) const {
    const std::uint64_t* all_a = &mask_pool_[a.mask_at];
    const std::uint64_t* all_b = &mask_pool_[b.mask_at];
    const std::uint64_t* full_a = all_a + key_words();
    const std::uint64_t* full_b = all_b + key_words();
    constexpr std::uint64_t kEven = 0x5555555555555555ULL;
    for (std::size_t w = 0; w < key_words(); ++w) {
      const std::uint64_t reversed = ((all_b[w] & kEven) << 1) | ((all_b[w] >> 1) & kEven);
      if ((all_a[w] & (reversed | full_b[w])) | (full_a[w] & all_b[w])) return false;
    }
    return true;
  }

  // Merge rules for two popped states at the same vertex: no opposite uses,
  // equal counts on shared uses, robots entering >= leaving at every shared
  // vertex but the start, and no use held by more paths than its count
  // (exactly its count once all robots are present).
  bool compatible(const Popped& a, const Popped& b, bool complete) {
    if (!masks_compatible(a, b)) return false;
    const Usage* i = &usage_pool_[a.usage_at];
    const Usage* i_end = i + a.usage_len;
    const Usage* j = &usage_pool_[b.usage_at];
    const Usage* j_end = j + b.usage_len;
    auto alone_ok = [complete](const Usage& u) { return complete ? u.used == u.count : u.used <= u.count; };
    while (i != i_end || j != j_end) {
      if (j == j_end || (i != i_end && std::tie(i->edge, i->from) < std::tie(j->edge, j->from))) {
        if (!alone_ok(*i++)) return false;
      } else if (i == i_end || std::tie(j->edge, j->from) < std::tie(i->edge, i->from)) {
        if (!alone_ok(*j++)) return false;
      } else {
        if (i->edge == j->edge && i->from != j->from) return false;
        if (i->count != j->count) return false;
        const int used = i->used + j->used;
        if (complete ? used != i->count : used > i->count) return false;
        ++i;
        ++j;
      }
    }

    const std::uint64_t* va = &mask_pool_[a.mask_at] + 2 * key_words();
    const std::uint64_t* vb = &mask_pool_[b.mask_at] + 2 * key_words();
    bool shared = false;
    for (std::size_t w = 0; w < vertex_words() && !shared; ++w) {
      std::uint64_t both = va[w] & vb[w];
      if (w == start_ / 64) both &= ~(std::uint64_t{1} << (start_ % 64));
      shared = both != 0;
    }
    if (!shared) return true;

    // Net robot flow per vertex over the union, shared uses counted once.
    auto add = [this](const Usage& u) {
      balance_[u.to] += u.count;
      balance_[u.from] -= u.count;
    };
    for (i = &usage_pool_[a.usage_at]; i != i_end; ++i) add(*i);
    const Usage* ia = &usage_pool_[a.usage_at];
    for (j = &usage_pool_[b.usage_at]; j != j_end; ++j) {
      while (ia != i_end && std::tie(ia->edge, ia->from) < std::tie(j->edge, j->from)) ++ia;
      if (ia != i_end && ia->edge == j->edge && ia->from == j->from) continue;
      add(*j);
    }
    bool ok = true;
    for (std::size_t w = 0; w < vertex_words() && ok; ++w) {
      std::uint64_t both = va[w] & vb[w];
      while (both) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(both));
        both &= both - 1;
        if (v != start_ && balance_[v] < 0) {
          ok = false;
          break;
        }
      }
    }
    for (i = &usage_pool_[a.usage_at]; i != i_end; ++i) balance_[i->to] = balance_[i->from] = 0;
    for (j = &usage_pool_[b.usage_at]; j != j_end; ++j) balance_[j->to] = balance_[j->from] = 0;
    return ok;
  }

  void merge_with(const Popped& other, const Popped& mine) {
    std::vector<Index> paths(store_.paths(other.state).begin(), store_.paths(other.state).end());
    const auto own = store_.paths(mine.state);
    paths.insert(paths.end(), own.begin(), own.end());
    ++result_.stats.merges;
    push(store_[mine.state].node, paths);
  }

  // Partners are taken in pop order, smaller partners first.
  void combine(const Popped& mine) {
    const Index node = store_[mine.state].node;
    const int r = store_[mine.state].robots;
    const std::size_t kw = key_words();
    // A partner passes the mask filter iff (all & reject) | (full & mine_all) is empty.
    reject_.resize(kw);
    const std::uint64_t* all = &mask_pool_[mine.mask_at];
    const std::uint64_t* full = all + kw;
    constexpr std::uint64_t kEven = 0x5555555555555555ULL;
    for (std::size_t w = 0; w < kw; ++w) {
      reject_[w] = ((all[w] & kEven) << 1) | ((all[w] >> 1) & kEven) | full[w];
    }
    for (int extra = 1; extra < robots_ - r; ++extra) {
      const Bucket& bucket = popped_[node][extra];
      const std::uint64_t* m = bucket.masks.data();
      for (std::size_t k = 0; k < bucket.items.size(); ++k, m += 2 * kw) {
        bool pass = true;
        for (std::size_t w = 0; w < kw && pass; ++w) pass = ((m[w] & reject_[w]) | (m[kw + w] & all[w])) == 0;
        if (pass && compatible(bucket.items[k], mine, false)) merge_with(bucket.items[k], mine);
      }
    }
    // A completing partner must hold exactly the missing share of every
    // under-used edge of `mine`, so its deficit signature is known up front.
    const auto& index = completion_index_[node];
    auto it = index.find(mix(mine.complement_hash, static_cast<std::uint64_t>(robots_ - r)));
    if (it == index.end()) return;
    for (std::uint32_t k : it->second) {
      const Popped& other = popped_[node][robots_ - r].items[k];
      if (compatible(other, mine, true)) merge_with(other, mine);
    }
  }

  void remember(const Popped& mine) {
    const Index node = store_[mine.state].node;
    const int r = store_[mine.state].robots;
    Bucket& bucket = popped_[node][r];
    completion_index_[node][mix(mine.deficit_hash, static_cast<std::uint64_t>(r))].push_back(
        static_cast<std::uint32_t>(bucket.items.size()));
    bucket.items.push_back(mine);
    const std::uint64_t* m = &mask_pool_[mine.mask_at];
    bucket.masks.insert(bucket.masks.end(), m, m + 2 * key_words());
  }

  void expand(Index s) {
    const Index u = store_[s].node;
    const int r_u = store_[s].robots;
    const auto& arcs = compiled_.arcs[u];

    // Distinct paths with multiplicities, and which arcs each may not take.
    groups_.clear();
    for (Index p : store_.paths(s)) {
      if (groups_.empty() || groups_.back().first != p) groups_.emplace_back(p, 0);
      ++groups_.back().second;
    }
    blocked_.assign(groups_.size() * arcs.size(), 0);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (std::size_t a = 0; a < arcs.size(); ++a) blocked_[g * arcs.size() + a] = arena_.visits(groups_[g].first, arcs[a].to);
    }

    take_.assign(groups_.size(), 0);
    for (int r = 1; r <= r_u; ++r) {
      for_each_choice(r, r == r_u, [&] {
        for (std::size_t a = 0; a < arcs.size(); ++a) {
          bool revisits = false;
          for (std::size_t g = 0; g < groups_.size() && !revisits; ++g) {
            revisits = take_[g] > 0 && blocked_[g * arcs.size() + a];
          }
          if (revisits) continue;
          const Cost step = step_cost(arcs[a].edge, r);
          next_.clear();
          for (std::size_t g = 0; g < groups_.size(); ++g) {
            if (take_[g] == 0) continue;
            const Index p = arena_.extend(groups_[g].first, arcs[a].edge, arcs[a].to, r, step);
            next_.insert(next_.end(), static_cast<std::size_t>(take_[g]), p);
          }
          push(arcs[a].to, next_);
        }
      });
    }
  }

  // Calls `visit` once per multiset of r paths (as counts in take_) allowed by
  // the split rule, largest counts of the first groups first.
  template <typename Visit>
  void for_each_choice(int r, bool everyone, Visit&& visit) {
    if (everyone) {
      for (std::size_t g = 0; g < groups_.size(); ++g) take_[g] = groups_[g].second;
      visit();
      return;
    }
    if (options_.split == SplitRule::cheapest) {
      std::vector<std::pair<std::pair<Cost, std::vector<VertexId>>, std::size_t>> keyed;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        keyed.push_back({{arena_[groups_[g].first].cost, node_sequence(groups_[g].first)}, g});
      }
      std::sort(keyed.begin(), keyed.end());
      std::fill(take_.begin(), take_.end(), 0);
      int remaining = r;
      for (const auto& [key, g] : keyed) {
        take_[g] = std::min(remaining, groups_[g].second);
        remaining -= take_[g];
      }
      visit();
      return;
    }
    auto recurse = [&](auto&& self, std::size_t g, int remaining) -> void {
      if (remaining == 0) {
        std::fill(take_.begin() + static_cast<long>(g), take_.end(), 0);
        visit();
        return;
      }
      if (g == groups_.size()) return;
      for (int k = std::min(remaining, groups_[g].second); k >= 0; --k) {
        take_[g] = k;
        self(self, g + 1, remaining - k);
      }
    };
    recurse(recurse, 0, r);
  }

  std::vector<VertexId> node_sequence(Index path) const {
    std::vector<VertexId> out;
    for (Index p = path; p != kNone; p = arena_[p].parent) out.push_back(compiled_.vertex_id[arena_[p].to]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  FormationState materialize(Index s) const {
    FormationState state;
    state.node = compiled_.vertex_id[store_[s].node];
    state.robots = store_[s].robots;
    state.cost = store_[s].cost;
    for (Index path : store_.paths(s)) {
      EdgeUsagePath out;
      for (Index p = path; arena_[p].parent != kNone; p = arena_[p].parent) {
        const auto& n = arena_[p];
        out.uses.push_back({compiled_.edge_id[n.edge], compiled_.vertex_id[n.from], compiled_.vertex_id[n.to],
                            n.count});
      }
      std::reverse(out.uses.begin(), out.uses.end());
      state.paths.push_back(std::move(out));
    }
    std::sort(state.paths.begin(), state.paths.end());
    return state;
  }

  Compiled compiled_;
  int robots_;
  Index start_;
  PlannerOptions options_;
  PathArena arena_;
  StateStore store_;
  OptimalPathSet result_;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue_;
  // popped_[vertex][robots]: merge partners, i.e. states already taken from the queue.
  std::vector<std::vector<Bucket>> popped_;
  // Per vertex: mix(deficit_hash, robots) -> positions in popped_[vertex][robots].
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> completion_index_;
  std::vector<Usage> usage_pool_;
  std::vector<std::uint64_t> mask_pool_;
  std::vector<Usage> scratch_;
  std::vector<long> balance_;
  std::vector<std::uint64_t> reject_;
  std::vector<Cost> bound_;
  std::vector<std::pair<Index, int>> groups_;
  std::vector<char> blocked_;
  std::vector<int> take_;
  std::vector<Index> next_;
};

}  // namespace

const FormationState* OptimalPathSet::find(VertexId node, int robots) const {
  auto it = entries_.find({node, robots});
  return it == entries_.end() ? nullptr : &it->second;
}

void OptimalPathSet::insert(FormationState state) {
  const auto key = std::make_pair(state.node, state.robots);
  entries_.try_emplace(key, std::move(state));
}

StateLimitError::StateLimitError(std::size_t limit, OptimalPathSet partial)
    : ResourceLimitError("state limit of " + std::to_string(limit) + " generated states exceeded"),
      partial_(std::move(partial)) {}

OptimalPathSet plan(const RoadmapGraph& graph, int robots, VertexId start, const PlannerOptions& options) {
  if (robots < 1) throw InputError("robot count must be >= 1");
  if (!graph.has_vertex(start)) throw InputError("start vertex " + std::to_string(start) + " is not in the graph");
  if (options.stop_at && !graph.has_vertex(*options.stop_at)) {
    throw InputError("goal vertex " + std::to_string(*options.stop_at) + " is not in the graph");
  }
  Search search(graph, robots, start, options);
  return search.run();
}

}  // namespace formation
