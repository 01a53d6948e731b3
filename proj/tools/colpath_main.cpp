// colpath — construct colourful paths in properly coloured graphs and hunt
// for counterexamples to the induced-colourful-path conjecture over graph6
// streams.
//
// Machine-readable results go to stdout, human diagnostics to stderr.
// Exit codes: 0 success/verified, 1 counterexample found, 2 operational
// error or malformed input, 3 requested path absent.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "colpath/colouring.hpp"
#include "colpath/errors.hpp"
#include "colpath/graph.hpp"
#include "colpath/graph6.hpp"
#include "colpath/graphs.hpp"
#include "colpath/harness.hpp"
#include "colpath/paths.hpp"
#include "colpath/refined_greedy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;
constexpr int kExitAbsent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw colpath::Error("cannot open file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

// Resolves the one-graph input of check/greedy/path/gen: a positional
// graph6 string or the first line of --file.
colpath::Graph load_graph(const std::string& positional, const std::string& file) {
  if (!positional.empty() && !file.empty())
    throw colpath::Error("give a graph6 string or --file, not both");
  if (positional.empty() && file.empty())
    throw colpath::Error("no graph given: pass a graph6 string or --file");
  std::string record = positional.empty() ? first_line(read_file(file)) : positional;
  return colpath::parse_graph6(record);
}

colpath::Colouring load_colouring(const colpath::Graph& g, const std::string& path) {
  colpath::Colouring beta = colpath::parse_colouring(read_file(path));
  colpath::ProperCheck check = colpath::validate_proper(g, beta);
  if (!check.proper)
    throw colpath::ImproperColouringError(
        "improper colouring at edge (" + std::to_string(check.u) + ", " +
        std::to_string(check.v) + ")");
  return beta;
}

int default_jobs() {
  if (const char* env = std::getenv("COLPATH_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_path(const colpath::Graph&, const colpath::Colouring& beta,
                const colpath::VertexPath& path) {
  std::ostringstream vertices, colours;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) {
      vertices << ' ';
      colours << ' ';
    }
    vertices << path[i];
    colours << beta[path[i]];
  }
  std::cout << vertices.str() << '\n';
  std::cout << "# colours " << colours.str() << '\n';
}

struct CheckArgs {
  std::string graph6;
  std::string file;
  std::string colouring_file;
  colpath::CheckOptions options;
};

int run_check(const CheckArgs& args) {
  colpath::Graph g = load_graph(args.graph6, args.file);

  if (!args.colouring_file.empty()) {
    colpath::Colouring beta = load_colouring(g, args.colouring_file);
    int chi = colpath::chromatic_number(g, args.options.chi_budget).chi;
    auto path = colpath::find_induced_colourful_path(g, beta, chi);
    if (path) {
      print_path(g, beta, *path);
      std::cerr << "induced colourful path on " << chi << " vertices found\n";
      return kExitOk;
    }
    colpath::CounterexampleRecord record{
        colpath::encode_graph6(g), {}, chi,
        "no induced colourful path on " + std::to_string(chi) + " vertices"};
    colpath::CheckOutcome outcome;
    outcome.graph6 = record.graph6;
    outcome.n = g.vertex_count();
    outcome.edge_count = g.edge_count();
    outcome.triangle_free = colpath::is_triangle_free(g);
    outcome.girth = colpath::girth(g);
    outcome.chromatic = chi;
    outcome.partitions_checked = 1;
    outcome.verdict = colpath::Verdict::kCounterexample;
    outcome.counterexamples.push_back(record);
    std::cout << colpath::outcome_to_json(outcome) << '\n';
    std::cerr << "counterexample: this colouring admits no induced colourful "
              << "path on " << chi << " vertices\n";
    return kExitCounterexample;
  }

  colpath::CheckOutcome outcome = colpath::check_graph(g, args.options);
  std::cout << colpath::outcome_to_json(outcome) << '\n';
  std::cerr << "verdict: " << colpath::to_string(outcome.verdict);
  if (!outcome.skip_reason.empty()) std::cerr << " (" << outcome.skip_reason << ")";
  std::cerr << ", partitions checked: " << outcome.partitions_checked << '\n';
  switch (outcome.verdict) {
    case colpath::Verdict::kCounterexample: return kExitCounterexample;
    case colpath::Verdict::kBudgetExceeded: return kExitError;
    default: return kExitOk;
  }
}

struct HuntArgs {
  std::string file;
  colpath::HuntOptions options;
  bool resume = false;
};

int run_hunt(const HuntArgs& args) {
  colpath::HuntCheckpoint checkpoint;
  const colpath::HuntCheckpoint* resume = nullptr;
  if (args.resume) {
    if (args.options.checkpoint_path.empty())
      throw colpath::Error("--resume needs --checkpoint");
    checkpoint = colpath::checkpoint_load(args.options.checkpoint_path);
    resume = &checkpoint;
  }
  colpath::HuntReport report;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw colpath::Error("cannot open file " + args.file);
    report = colpath::hunt(in, std::cout, std::cerr, args.options, resume);
  } else {
    report = colpath::hunt(std::cin, std::cout, std::cerr, args.options, resume);
  }
  return report.exit_code;
}

struct GreedyArgs {
  std::string graph6;
  std::string file;
  std::string colouring_file;
  std::string order = "ascending";
  std::uint64_t seed = 0;
};

int run_greedy(const GreedyArgs& args) {
  colpath::Graph g = load_graph(args.graph6, args.file);
  colpath::Colouring beta = load_colouring(g, args.colouring_file);
  colpath::OrderPolicy policy = colpath::OrderPolicy::kAscendingIndex;
  if (args.order == "shuffle")
    policy = colpath::OrderPolicy::kSeededShuffle;
  else if (args.order != "ascending")
    throw colpath::Error("--order must be ascending or shuffle");
  colpath::Labelling alpha = colpath::refined_greedy(g, beta, policy, args.seed);
  colpath::Colouring as_colouring{alpha.labels};
  std::cout << colpath::format_colouring(as_colouring) << '\n';
  std::cout << "# order";
  for (colpath::Vertex v : alpha.order_trace) std::cout << ' ' << v;
  std::cout << '\n';
  return kExitOk;
}

struct PathArgs {
  std::string graph6;
  std::string file;
  std::string colouring_file;
  int target = 0;  // 0 = chromatic number
  bool induced = false;
  std::uint64_t chi_budget = colpath::kDefaultChiBudget;
};

int run_path(const PathArgs& args) {
  colpath::Graph g = load_graph(args.graph6, args.file);
  colpath::Colouring beta = load_colouring(g, args.colouring_file);

  if (!args.induced) {
    if (args.target != 0)
      throw colpath::Error(
          "--target applies to --induced; the colourful-path construction "
          "always yields chromatic-number many vertices");
    colpath::VertexPath path = colpath::colourful_path(g, beta, args.chi_budget);
    print_path(g, beta, path);
    return kExitOk;
  }

  int target = args.target;
  if (target == 0) target = colpath::chromatic_number(g, args.chi_budget).chi;
  auto path = colpath::find_induced_colourful_path(g, beta, target);
  if (!path) {
    std::cerr << "no induced colourful path on " << target << " vertices\n";
    return kExitAbsent;
  }
  print_path(g, beta, *path);
  return kExitOk;
}

int run_gen_from_graph6(const std::string& positional, const std::string& file) {
  if (!positional.empty() && !file.empty())
    throw colpath::Error("give a graph6 string or --file, not both");
  if (!positional.empty()) {
    std::cout << colpath::encode_graph6(colpath::parse_graph6(positional)) << '\n';
    return kExitOk;
  }
  if (file.empty())
    throw colpath::Error("no graph given: pass a graph6 string or --file");
  std::ifstream in(file);
  if (!in) throw colpath::Error("cannot open file " + file);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    std::cout << colpath::encode_graph6(colpath::parse_graph6(line)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colourful-path construction and conjecture hunting on "
               "properly coloured graphs"};
  app.require_subcommand(1);

  CheckArgs check_args;
  std::string check_scope = "triangle-free-only";
  auto* check = app.add_subcommand(
      "check", "sweep every proper colour partition of one graph (or check "
               "one given colouring) for an induced colourful path");
  check->add_option("graph6", check_args.graph6, "graph6 record");
  check->add_option("--file", check_args.file, "file whose first line is the graph");
  check->add_option("--colouring", check_args.colouring_file,
                    "colouring file: one line of whitespace-separated positive integers");
  check->add_option("--scope", check_scope, "triangle-free-only | girth-ge-chi-only | all");
  check->add_option("--partition-limit", check_args.options.partition_limit,
                    "abort after this many partitions");
  check->add_option("--chi-budget", check_args.options.chi_budget,
                    "node budget for the exact chromatic search");

  HuntArgs hunt_args;
  std::string hunt_scope = "triangle-free-only";
  hunt_args.options.jobs = default_jobs();
  auto* huntcmd = app.add_subcommand(
      "hunt", "run check over a graph6 line stream (stdin or --file), in parallel");
  huntcmd->add_option("--file", hunt_args.file, "graph6 lines; default stdin");
  huntcmd->add_option("--scope", hunt_scope, "triangle-free-only | girth-ge-chi-only | all");
  huntcmd->add_option("--partition-limit", hunt_args.options.check.partition_limit,
                      "per-graph partition cap");
  huntcmd->add_option("--chi-budget", hunt_args.options.check.chi_budget,
                      "node budget for the exact chromatic search");
  huntcmd->add_option("--jobs", hunt_args.options.jobs,
                      "parallel workers (default: COLPATH_JOBS or hardware)");
  huntcmd->add_option("--checkpoint", hunt_args.options.checkpoint_path,
                      "checkpoint file, written at graph boundaries");
  huntcmd->add_option("--checkpoint-every", hunt_args.options.checkpoint_every,
                      "graphs between periodic checkpoint writes");
  huntcmd->add_flag("--resume", hunt_args.resume, "resume from --checkpoint");
  huntcmd->add_flag("--halt-on-counterexample", hunt_args.options.halt_on_counterexample,
                    "stop at the first counterexample");

  GreedyArgs greedy_args;
  auto* greedy = app.add_subcommand(
      "greedy", "refined greedy relabelling; prints the labelling and the "
                "processing order");
  greedy->add_option("graph6", greedy_args.graph6, "graph6 record");
  greedy->add_option("--file", greedy_args.file, "file whose first line is the graph");
  greedy->add_option("--colouring", greedy_args.colouring_file, "colouring file")
      ->required();
  greedy->add_option("--order", greedy_args.order, "ascending | shuffle");
  greedy->add_option("--seed", greedy_args.seed, "shuffle seed");

  PathArgs path_args;
  auto* pathcmd = app.add_subcommand(
      "path", "construct a colourful path (default) or search for an "
              "induced colourful path (--induced)");
  pathcmd->add_option("graph6", path_args.graph6, "graph6 record");
  pathcmd->add_option("--file", path_args.file, "file whose first line is the graph");
  pathcmd->add_option("--colouring", path_args.colouring_file, "colouring file")
      ->required();
  pathcmd->add_option("--target", path_args.target,
                      "vertex count for --induced (default: chromatic number)");
  pathcmd->add_flag("--induced", path_args.induced, "exhaustive induced search");
  pathcmd->add_option("--chi-budget", path_args.chi_budget,
                      "node budget for the exact chromatic search");

  auto* gen = app.add_subcommand("gen", "emit graph6 for a named family");
  gen->require_subcommand(1);
  int cycle_k = 0;
  auto* gen_cycle = gen->add_subcommand("cycle", "cycle on k vertices");
  gen_cycle->add_option("k", cycle_k, "cycle length, at least 3")->required();
  int tower_depth = 0;
  auto* gen_tower = gen->add_subcommand(
      "mycielski-tower", "iterated Mycielskian of K2 (1 = C5, 2 = Grotzsch)");
  gen_tower->add_option("depth", tower_depth, "iterations")->required();
  std::string from_g6, from_file;
  auto* gen_from = gen->add_subcommand(
      "from-graph6", "validate and re-emit records canonically");
  gen_from->add_option("graph6", from_g6, "graph6 record");
  gen_from->add_option("--file", from_file, "graph6 lines");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      auto scope = colpath::scope_from_string(check_scope);
      if (!scope) throw colpath::Error("unknown scope " + check_scope);
      check_args.options.scope = *scope;
      return run_check(check_args);
    }
    if (huntcmd->parsed()) {
      auto scope = colpath::scope_from_string(hunt_scope);
      if (!scope) throw colpath::Error("unknown scope " + hunt_scope);
      hunt_args.options.check.scope = *scope;
      if (hunt_args.options.jobs < 1 || hunt_args.options.checkpoint_every < 1)
        throw colpath::Error("--jobs and --checkpoint-every must be positive");
      return run_hunt(hunt_args);
    }
    if (greedy->parsed()) return run_greedy(greedy_args);
    if (pathcmd->parsed()) return run_path(path_args);
    if (gen->parsed()) {
      if (gen_cycle->parsed()) {
        std::cout << colpath::encode_graph6(colpath::cycle_graph(cycle_k)) << '\n';
        return kExitOk;
      }
      if (gen_tower->parsed()) {
        std::cout << colpath::encode_graph6(colpath::mycielski_tower(tower_depth))
                  << '\n';
        return kExitOk;
      }
      if (gen_from->parsed()) return run_gen_from_graph6(from_g6, from_file);
    }
  } catch (const colpath::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
