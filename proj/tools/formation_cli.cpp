#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "formation/cost_model.hpp"
#include "formation/environment.hpp"
#include "formation/generator.hpp"
#include "formation/graph.hpp"
#include "formation/oracle.hpp"
#include "formation/plan_io.hpp"
#include "formation/planner.hpp"
#include "formation/roadmap.hpp"
#include "formation/svg.hpp"

using namespace formation;

namespace {

enum ExitCode { kOk = 0, kFail = 1, kInput = 2, kResource = 3 };

// Error raised inside a named pipeline stage of `build`.
class StageError : public InputError {
 public:
  StageError(const std::string& stage, const std::string& what) : InputError(stage + ": " + what) {}
};

template <typename F>
auto stage(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const ResourceLimitError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

Point2D parse_point(const std::string& text) {
  std::istringstream in(text);
  Point2D p;
  char comma = 0;
  if (!(in >> p.x >> comma >> p.y) || comma != ',' || !(in >> std::ws).eof()) {
    throw InputError("expected \"x,y\", got \"" + text + "\"");
  }
  return p;
}

// Writes via `write` to `path`, or stdout when the path is empty.
template <typename W>
void emit(const std::string& path, W&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write(out);
}

RoadmapGraph with_split_penalty(RoadmapGraph graph, Cost penalty, int robots) {
  if (penalty < 0) throw InputError("split penalty must be >= 0");
  if (penalty == 0) return graph;
  for (RoadmapEdge& e : graph.edges()) {
    if (!e.zero_cost) e.costs = apply_split_penalty(std::move(e.costs), penalty, robots);
  }
  return graph;
}

void warn_non_monotone(const RoadmapGraph& graph) {
  const auto edges = non_monotone_edges(graph);
  if (edges.empty()) return;
  std::cerr << "warning: cost vectors decrease with robot count on " << edges.size() << " edge(s), first "
            << edges.front() << "\n";
}

struct BuildArgs {
  std::string map, out, start, goal, model = "linear";
  double step = 1.0, clearance = 0.0, alpha = 0.5, width = 1.0, base = 1.0, slope = 0.25;
  Cost split_penalty = 0;
  int robots = 1;
};

int run_build(const BuildArgs& a) {
  CostModelSpec model;
  if (a.model == "linear") {
    model.kind = CostModelKind::linear;
    model.per_length = {a.base, a.slope};
  } else if (a.model == "clearance") {
    model.kind = CostModelKind::clearance;
    model.alpha = a.alpha;
    model.width = a.width;
  } else {
    throw InputError("cost model \"explicit\" needs stored cost vectors; build produces geometry only");
  }
  model.split_penalty = a.split_penalty;
  if (a.step <= 0) throw InputError("--step must be > 0");

  const EnvironmentMap map = stage("load map", [&] { return load_environment_file(a.map); });
  RoadmapGraph graph = stage("build roadmap", [&] { return build_roadmap(map, {a.step, a.clearance}); });
  RoadmapGraph pruned = stage("prune tails", [&] { return prune_tails(graph); });
  // A roadmap without cycles and terminals is all tail.
  if (pruned.empty()) {
    std::cerr << "warning: pruning would remove every vertex; keeping the unpruned roadmap\n";
  } else {
    graph = std::move(pruned);
  }
  graph = stage("normalize degree", [&] { return normalize_degree(graph); });
  std::optional<VertexId> start, goal;
  if (!a.start.empty()) {
    auto attached = stage("attach start", [&] { return attach_terminal(graph, map, parse_point(a.start)); });
    graph = std::move(attached.graph);
    start = attached.vertex;
  }
  if (!a.goal.empty()) {
    auto attached = stage("attach goal", [&] { return attach_terminal(graph, map, parse_point(a.goal)); });
    graph = std::move(attached.graph);
    goal = attached.vertex;
  }
  graph = stage("cost vectors", [&] { return build_cost_vectors(graph, model, a.robots); });
  emit(a.out, [&](std::ostream& out) { write_graph(out, graph); });

  std::cerr << "roadmap: " << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges\n";
  if (start) std::cerr << "start vertex " << *start << "\n";
  if (goal) std::cerr << "goal vertex " << *goal << "\n";
  return kOk;
}

struct PlanArgs {
  std::string graph, out, split = "all";
  int robots = 1;
  VertexId start = 0;
  std::optional<VertexId> goal;
  Cost split_penalty = 0;
  std::size_t max_states = PlannerOptions{}.max_states;
  bool no_bound = false;
};

PlannerOptions planner_options(const std::string& split, std::size_t max_states) {
  PlannerOptions options;
  if (split == "cheapest") {
    options.split = SplitRule::cheapest;
  } else if (split != "all") {
    throw InputError("unknown split rule " + split);
  }
  options.max_states = max_states;
  return options;
}

int run_plan(const PlanArgs& a) {
  const RoadmapGraph graph = with_split_penalty(load_graph_file(a.graph), a.split_penalty, a.robots);
  warn_non_monotone(graph);
  PlannerOptions options = planner_options(a.split, a.max_states);
  options.stop_at = a.goal;
  options.goal_bound = !a.no_bound;

  OptimalPathSet result;
  try {
    result = plan(graph, a.robots, a.start, options);
  } catch (const StateLimitError& e) {
    std::cerr << "error: " << e.what() << " (" << e.partial().entries().size() << " (vertex, robots) entries found)\n";
    return kResource;
  }
  std::cerr << "states generated " << result.stats.generated << ", popped " << result.stats.popped << ", merges "
            << result.stats.merges << "\n";
  if (!a.goal) {
    emit(a.out, [&](std::ostream& out) { write_cost_table(out, result); });
    return kOk;
  }
  const PlanResult plan = reconstruct(result, graph, *a.goal, a.robots);
  emit(a.out, [&](std::ostream& out) { write_plan(out, plan); });
  std::cerr << "formation cost " << plan.formation_cost << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string graph, split = "all";
  int robots = 1;
  VertexId start = 0, goal = 0;
  int max_edges = 0;
  std::uint64_t max_assignments = OracleOptions{}.max_assignments;
  std::size_t max_states = PlannerOptions{}.max_states;
};

int run_verify(const VerifyArgs& a) {
  const RoadmapGraph graph = load_graph_file(a.graph);
  const auto oracle = brute_force_plan(graph, a.robots, a.start, a.goal, {a.max_edges, a.max_assignments});
  PlannerOptions options = planner_options(a.split, a.max_states);
  options.stop_at = a.goal;
  const OptimalPathSet result = plan(graph, a.robots, a.start, options);

  std::optional<Cost> planned;
  if (a.goal == a.start) {
    planned = 0;
  } else if (const FormationState* s = result.find(a.goal, a.robots)) {
    planned = s->cost;
  }
  auto show = [](const std::optional<Cost>& c) { return c ? std::to_string(*c) : std::string("unreachable"); };
  const std::optional<Cost> expected = oracle ? std::optional<Cost>(oracle->formation_cost) : std::nullopt;
  std::cout << "planner " << show(planned) << "\n";
  std::cout << "oracle  " << show(expected) << " (" << (oracle ? oracle->evaluated : 0) << " assignments)\n";
  const bool pass = planned == expected;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kFail;
}

struct RenderArgs {
  std::string graph, map, plan, out;
};

int run_render(const RenderArgs& a) {
  const RoadmapGraph graph = load_graph_file(a.graph);
  std::optional<EnvironmentMap> map;
  if (!a.map.empty()) map = load_environment_file(a.map);
  std::optional<PlanResult> plan;
  if (!a.plan.empty()) plan = load_plan_file(a.plan);
  const std::string svg = render_svg(graph, map ? &*map : nullptr, plan ? &*plan : nullptr);
  emit(a.out, [&](std::ostream& out) { out << svg; });
  return kOk;
}

struct GenArgs {
  std::uint64_t seed = 1;
  std::string out;
  GeneratorParams params;
};

int run_gen(const GenArgs& a) {
  const RoadmapGraph graph = generate_graph(a.seed, a.params);
  emit(a.out, [&](std::ostream& out) { write_graph(out, graph); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formation path planning on roadmap graphs"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* cmd_build = app.add_subcommand("build", "Build a costed roadmap graph from a polygon map");
  cmd_build->add_option("--map", build.map, "Map JSON")->required()->check(CLI::ExistingFile);
  cmd_build->add_option("--step", build.step, "Boundary sampling step")->capture_default_str();
  cmd_build->add_option("--clearance", build.clearance, "Minimum edge clearance")->capture_default_str();
  cmd_build->add_option("--start", build.start, "Start point \"x,y\"");
  cmd_build->add_option("--goal", build.goal, "Goal point \"x,y\"");
  cmd_build->add_option("--cost-model", build.model, "linear, clearance or explicit")
      ->check(CLI::IsMember({"linear", "clearance", "explicit"}))
      ->capture_default_str();
  cmd_build->add_option("--alpha", build.alpha, "Clearance model weight")->capture_default_str();
  cmd_build->add_option("--width", build.width, "Clearance model per-robot width")->capture_default_str();
  cmd_build->add_option("--base", build.base, "Linear model base cost per unit length")->capture_default_str();
  cmd_build->add_option("--slope", build.slope, "Linear model cost per robot per unit length")->capture_default_str();
  cmd_build->add_option("--split-penalty", build.split_penalty, "Added to costs for fewer than R robots");
  cmd_build->add_option("--robots", build.robots, "Formation size R")->required()->check(CLI::PositiveNumber);
  cmd_build->add_option("--out", build.out, "Output graph JSON (default stdout)");

  PlanArgs plan_args;
  auto* cmd_plan = app.add_subcommand("plan", "Plan optimal formation paths");
  cmd_plan->add_option("--graph", plan_args.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  cmd_plan->add_option("--robots", plan_args.robots, "Formation size R")->required()->check(CLI::PositiveNumber);
  cmd_plan->add_option("--start", plan_args.start, "Start vertex id")->required();
  cmd_plan->add_option("--goal", plan_args.goal, "Goal vertex id; without it a cost table for all vertices");
  cmd_plan->add_option("--split-penalty", plan_args.split_penalty, "Added to costs for fewer than R robots");
  cmd_plan->add_option("--max-states", plan_args.max_states, "Cap on generated states")->capture_default_str();
  cmd_plan->add_option("--split", plan_args.split, "Split rule: all or cheapest")
      ->check(CLI::IsMember({"all", "cheapest"}))
      ->capture_default_str();
  cmd_plan->add_flag("--no-goal-bound", plan_args.no_bound, "Plain cost order even with a goal");
  cmd_plan->add_option("--out", plan_args.out, "Output JSON (default stdout)");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Compare the planner with exhaustive search");
  cmd_verify->add_option("--graph", verify.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  cmd_verify->add_option("--robots", verify.robots, "Formation size R")->required()->check(CLI::PositiveNumber);
  cmd_verify->add_option("--start", verify.start, "Start vertex id")->required();
  cmd_verify->add_option("--goal", verify.goal, "Goal vertex id")->required();
  cmd_verify->add_option("--max-edges", verify.max_edges, "Longest path considered (default vertices - 1)");
  cmd_verify->add_option("--max-assignments", verify.max_assignments, "Oracle size cap")->capture_default_str();
  cmd_verify->add_option("--max-states", verify.max_states, "Planner state cap")->capture_default_str();
  cmd_verify->add_option("--split", verify.split, "Split rule: all or cheapest")
      ->check(CLI::IsMember({"all", "cheapest"}))
      ->capture_default_str();

  RenderArgs render;
  auto* cmd_render = app.add_subcommand("render", "Draw map, roadmap and plan as SVG");
  cmd_render->add_option("--graph", render.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  cmd_render->add_option("--map", render.map, "Map JSON")->check(CLI::ExistingFile);
  cmd_render->add_option("--plan", render.plan, "Plan JSON")->check(CLI::ExistingFile);
  cmd_render->add_option("--out", render.out, "Output SVG (default stdout)");

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a random test graph");
  cmd_gen->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  cmd_gen->add_option("--vertices", gen.params.vertices, "Vertex count")->required()->check(CLI::PositiveNumber);
  cmd_gen->add_option("--robots", gen.params.robots, "Cost vector length")->required()->check(CLI::PositiveNumber);
  cmd_gen->add_option("--extra-edges", gen.params.extra_edges, "Extra edges per vertex beyond a tree")
      ->capture_default_str();
  cmd_gen->add_option("--out", gen.out, "Output graph JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*cmd_build) return run_build(build);
    if (*cmd_plan) return run_plan(plan_args);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_render) return run_render(render);
    if (*cmd_gen) return run_gen(gen);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
