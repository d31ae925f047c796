#include "nonrep/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nonrep/graph.hpp"
#include "nonrep/nr_graph.hpp"
#include "nonrep/simple_paths.hpp"
#include "sudoku/generator.hpp"
#include "sudoku/graphs.hpp"
#include "sudoku/solver.hpp"

namespace nonrep::cli {

namespace {

using json = nlohmann::json;
using namespace nonrep::sudoku;

// Reference figures printed beside measured ones.
constexpr double kReferenceUnsolvable = 0.044;
constexpr double kReferenceNonlocal = 0.116;
constexpr double kReferenceNonlocalOfSolvable = 0.121;
constexpr double kReferenceRescue = 0.725;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string from;
  std::string to;
  std::string label;
  std::string format = "text";
  bool no_reversal = false;
  bool directed = false;
  bool trace = false;
  bool asymmetric = false;
  std::uint64_t seed = 1;
  int count = 1;
  int box = 3;
  int max_tier = kMaxTier;
  int jobs = 1;
};

std::string read_input(const std::string& source, std::istream& in) {
  std::ostringstream text;
  if (source == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) throw UsageError("cannot open " + source);
    text << file.rdbuf();
  }
  return text.str();
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

FlagLabeledGraph load_graph(const Options& o, std::istream& in) {
  FlagLabeledGraph g = parse_labeled_graph(read_input(o.input, in));
  return o.no_reversal ? no_reversal_view(g) : g;
}

int vertex_arg(const FlagLabeledGraph& g, const std::string& name, const char* flag) {
  if (name.empty()) throw UsageError(std::string("missing ") + flag);
  const auto v = g.find_vertex(name);
  if (!v) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

std::string edge_line(const FlagLabeledGraph& g, const FlagEdge& e) {
  if (e.label_u == e.label_v)
    return "edge " + g.vertex_name(e.u) + " " + g.vertex_name(e.v) + " " + g.label_name(e.label_u);
  return "flagedge " + g.vertex_name(e.u) + " " + g.vertex_name(e.v) + " " + g.label_name(e.label_u) + " " +
         g.label_name(e.label_v);
}

json edge_json(const FlagLabeledGraph& g, const FlagEdge& e) {
  return json{{"id", e.id},
              {"u", g.vertex_name(e.u)},
              {"v", g.vertex_name(e.v)},
              {"label_u", g.label_name(e.label_u)},
              {"label_v", g.label_name(e.label_v)}};
}

std::string walk_text(const FlagLabeledGraph& g, int start, const std::vector<Traversal>& walk) {
  std::string out = g.vertex_name(start);
  for (const Traversal& t : walk) {
    std::string label = g.label_name(g.tail_label(t));
    if (g.tail_label(t) != g.head_label(t)) label += "/" + g.label_name(g.head_label(t));
    out += " -[" + label + "]-> " + g.vertex_name(g.head(t));
  }
  return out;
}

json walk_json(const FlagLabeledGraph& g, int start, const std::vector<Traversal>& walk) {
  json steps = json::array();
  for (const Traversal& t : walk)
    steps.push_back(json{{"edge", t.edge},
                         {"from", g.vertex_name(g.tail(t))},
                         {"to", g.vertex_name(g.head(t))},
                         {"label_from", g.label_name(g.tail_label(t))},
                         {"label_to", g.label_name(g.head_label(t))}});
  return json{{"start", g.vertex_name(start)}, {"length", walk.size()}, {"steps", steps}};
}

int print_edges(const Options& o, std::ostream& out, const FlagLabeledGraph& g, const std::vector<int>& edges,
                const char* key) {
  if (o.format == "structured") {
    json list = json::array();
    for (int e : edges) list.push_back(edge_json(g, g.edge(e)));
    out << json{{key, list}}.dump() << "\n";
  } else {
    for (int e : edges) out << edge_line(g, g.edge(e)) << "\n";
  }
  return edges.empty() ? kExitNegative : kExitOk;
}

int cmd_cycles(const Options& o, std::istream& in, std::ostream& out) {
  const FlagLabeledGraph g = load_graph(o, in);
  return print_edges(o, out, g, cyclic_edges(g), "cyclic_edges");
}

int cmd_reach(const Options& o, std::istream& in, std::ostream& out) {
  const FlagLabeledGraph g = load_graph(o, in);
  const int v = vertex_arg(g, o.from, "--from");
  if (o.label.empty()) throw UsageError("missing --label");
  const auto label = g.find_label(o.label);
  if (!label) throw UsageError("unknown label '" + o.label + "'");
  const auto reached = reachable_edges(g, v, *label);
  if (o.format == "structured") {
    json list = json::array();
    for (const ReachedEdge& r : reached) {
      const Traversal t{r.edge, r.reversed};
      list.push_back(json{{"edge", r.edge},
                          {"from", g.vertex_name(g.tail(t))},
                          {"to", g.vertex_name(g.head(t))},
                          {"far_label", g.label_name(r.far_label)}});
    }
    out << json{{"reachable_edges", list}}.dump() << "\n";
  } else {
    for (const ReachedEdge& r : reached) {
      const Traversal t{r.edge, r.reversed};
      out << g.vertex_name(g.tail(t)) << " -> " << g.vertex_name(g.head(t)) << " " << g.label_name(r.far_label)
          << "\n";
    }
  }
  return reached.empty() ? kExitNegative : kExitOk;
}

int print_walk(const Options& o, std::ostream& out, const FlagLabeledGraph& g, int start,
               const std::optional<std::vector<Traversal>>& walk) {
  if (o.format == "structured") {
    out << (walk ? json{{"found", true}, {"path", walk_json(g, start, *walk)}} : json{{"found", false}}).dump()
        << "\n";
  } else if (walk) {
    out << "length " << walk->size() << "\n" << walk_text(g, start, *walk) << "\n";
  } else {
    out << "no path\n";
  }
  return walk ? kExitOk : kExitNegative;
}

int cmd_shortest(const Options& o, std::istream& in, std::ostream& out) {
  const FlagLabeledGraph g = load_graph(o, in);
  const int a = vertex_arg(g, o.from, "--from");
  const int b = vertex_arg(g, o.to, "--to");
  return print_walk(o, out, g, a, shortest_nonrepetitive_path(g, a, b));
}

void refuse_directed(const Options& o, const FlagLabeledGraph& g) {
  if (o.directed || g.directed())
    throw UsageError(
        "simple nonrepetitive paths and cycles in directed graphs are NP-complete; only undirected input is "
        "supported");
}

int cmd_simple_path(const Options& o, std::istream& in, std::ostream& out) {
  if (o.directed) refuse_directed(o, FlagLabeledGraph{});
  const FlagLabeledGraph g = load_graph(o, in);
  refuse_directed(o, g);
  const int a = vertex_arg(g, o.from, "--from");
  const int b = vertex_arg(g, o.to, "--to");
  const SimplePathResult r = nonrep_simple_path_exists(g, a, b);
  return print_walk(o, out, g, a, r.exists ? std::optional(r.path) : std::nullopt);
}

int cmd_simple_cycles(const Options& o, std::istream& in, std::ostream& out) {
  if (o.directed) refuse_directed(o, FlagLabeledGraph{});
  const FlagLabeledGraph g = load_graph(o, in);
  refuse_directed(o, g);
  return print_edges(o, out, g, simple_cycle_edges(g), "simple_cycle_edges");
}

Board load_board(const Options& o, std::istream& in) { return parse_board(read_input(o.input, in)); }

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  const Board board = load_board(o, in);
  SolveOptions so;
  so.max_tier = o.max_tier;
  const SolveTrace t = solve(board, so);
  if (o.format == "structured") {
    json steps = json::array();
    for (const Deduction& d : t.steps) steps.push_back(format_deduction(board.geometry(), d));
    json j{{"outcome", outcome_name(t.outcome)}, {"tier", t.tier}, {"board", serialize_board(t.final_board)}};
    if (o.trace) j["steps"] = steps;
    out << j.dump() << "\n";
  } else {
    if (o.trace) {
      const std::string text = format_trace(t);
      out << text.substr(0, text.rfind("outcome:"));
    }
    out << render_grid(t.final_board);
    out << "outcome: " << outcome_name(t.outcome) << " tier " << t.tier << "\n";
  }
  return t.outcome == Outcome::solved ? kExitOk : kExitNegative;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.count < 1) throw UsageError("--count must be positive");
  for (int i = 0; i < o.count; ++i) {
    const GeneratedPuzzle p = generate(o.box, puzzle_seed(o.seed, i), !o.asymmetric);
    if (o.format == "structured") {
      out << json{{"seed", p.seed},
                  {"puzzle", serialize_board(p.puzzle)},
                  {"clues", p.clue_count},
                  {"restarts", p.restarts},
                  {"symmetric", p.symmetric},
                  {"minimal", p.minimal}}
                 .dump()
          << "\n";
    } else {
      out << serialize_board(p.puzzle);
      if (o.box == 3) out << "\n";
    }
  }
  return kExitOk;
}

int cmd_grade(const Options& o, std::istream& in, std::ostream& out) {
  const Board board = load_board(o, in);
  int tier = 0;
  try {
    tier = grade(board);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "structured")
    out << json{{"tier", tier_name(tier)}}.dump() << "\n";
  else
    out << "tier " << tier_name(tier) << "\n";
  return tier == kUnsolvable ? kExitNegative : kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  if (o.count < 1) throw UsageError("--count must be positive");
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  const BatchStats s = batch_stats(o.count, o.seed, o.box, o.jobs);
  const int solvable = s.count - s.unsolvable();
  const double of_solvable = solvable ? double(s.nonlocal()) / solvable : 0.0;
  if (o.format == "structured") {
    json hist;
    for (int t = 0; t <= kUnsolvable; ++t) hist[tier_name(t)] = s.histogram[static_cast<std::size_t>(t)];
    out << json{{"total", s.count},
                {"seed", s.seed},
                {"box", s.box},
                {"histogram", hist},
                {"unsolvable_count", s.unsolvable()},
                {"unsolvable_fraction", s.unsolvable_fraction()},
                {"nonlocal_needed_count", s.nonlocal()},
                {"nonlocal_needed_fraction", s.nonlocal_fraction()},
                {"nonlocal_needed_fraction_of_solvable", of_solvable},
                {"nonlocal_rescue_ratio", s.nonlocal_share()},
                {"restarts", s.total_restarts},
                {"reference",
                 {{"unsolvable_fraction", kReferenceUnsolvable},
                  {"nonlocal_needed_fraction", kReferenceNonlocal},
                  {"nonlocal_needed_fraction_of_solvable", kReferenceNonlocalOfSolvable},
                  {"nonlocal_rescue_ratio", kReferenceRescue}}}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "total: " << s.count << "\n";
  out << "seed: " << s.seed << "\n";
  out << "box: " << s.box << "\n";
  for (int t = 0; t <= kUnsolvable; ++t)
    out << "tier_" << tier_name(t) << ": " << s.histogram[static_cast<std::size_t>(t)] << "\n";
  out << "unsolvable_count: " << s.unsolvable() << "\n";
  out << "unsolvable_fraction: " << fixed(s.unsolvable_fraction()) << " (reference " << fixed(kReferenceUnsolvable)
      << ")\n";
  out << "nonlocal_needed_count: " << s.nonlocal() << "\n";
  out << "nonlocal_needed_fraction: " << fixed(s.nonlocal_fraction()) << " (reference " << fixed(kReferenceNonlocal)
      << ")\n";
  out << "nonlocal_needed_fraction_of_solvable: " << fixed(of_solvable) << " (reference "
      << fixed(kReferenceNonlocalOfSolvable) << ")\n";
  out << "nonlocal_rescue_ratio: " << fixed(s.nonlocal_share()) << " (reference " << fixed(kReferenceRescue) << ")\n";
  out << "restarts: " << s.total_restarts << "\n";
  return kExitOk;
}

int cmd_fixture(const Options& o, std::ostream& out) {
  if (o.box < kMinBox || o.box > 5) throw UsageError("--box must be between 2 and 5 for the fixture");
  const Board b = dense_bivalue_fixture(o.box);
  const BivalueGraph bv = build_bivalue_graph(b);
  const BilocationGraph bl = build_bilocation_graph(b);
  if (o.format == "structured") {
    out << json{{"box", o.box},
                {"board", serialize_board(b)},
                {"bivalued_cells", bv.graph.vertex_count()},
                {"bivalue_edges", bv.graph.edge_count()},
                {"bilocation_edges", bl.graph.edge_count()}}
                   .dump()
        << "\n";
  } else {
    out << serialize_board(b);
    if (o.box == 3) out << "\n";
    out << "bivalued_cells: " << bv.graph.vertex_count() << "\n";
    out << "bivalue_edges: " << bv.graph.edge_count() << "\n";
    out << "bilocation_edges: " << bl.graph.edge_count() << "\n";
  }
  return kExitOk;
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format: text or structured (JSON)")
      ->check(CLI::IsMember({"text", "structured"}));
}

void add_graph_input(CLI::App* app, Options& o) {
  app->add_option("input", o.input,
                  "Graph file ('-' for standard input). Format: 'graph directed|undirected', then "
                  "'edge <u> <v> <label>' or 'flagedge <u> <v> <label-at-u> <label-at-v>' lines");
  app->add_flag("--no-reversal", o.no_reversal,
                "Undirected input only: relabel every edge by its own identity, so walks only avoid "
                "immediate reversals");
  add_format(app, o);
}

void add_board_input(CLI::App* app, Options& o) {
  app->add_option("input", o.input,
                  "Board file ('-' for standard input): 81 characters (digits, '.' or '0' for empty) "
                  "for 9x9, or 'B <n>' followed by n^4 integers");
  add_format(app, o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nonrepetitive walks in labeled graphs and Sudoku deduction", "nonrep"};
  app.require_subcommand(1);

  CLI::App* graph = app.add_subcommand("graph", "Analyse edge- or flag-labeled graphs");
  graph->require_subcommand(1);
  CLI::App* cycles = graph->add_subcommand("cycles", "List edges on nonrepetitive cycles, one edge line each");
  add_graph_input(cycles, o);
  CLI::App* reach = graph->add_subcommand(
      "reach", "List traversals reachable by nonrepetitive walks leaving --from with first label --label, as "
               "'<tail> -> <head> <label at head>'");
  add_graph_input(reach, o);
  reach->add_option("--from", o.from, "Start vertex name")->required();
  reach->add_option("--label", o.label, "Label of the first flag")->required();
  CLI::App* shortest =
      graph->add_subcommand("shortest", "Fewest-edge nonrepetitive walk between two vertices");
  add_graph_input(shortest, o);
  shortest->add_option("--from", o.from, "Start vertex name")->required();
  shortest->add_option("--to", o.to, "End vertex name")->required();
  CLI::App* simple_path = graph->add_subcommand(
      "simple-path", "Simple nonrepetitive path between two vertices of an undirected graph");
  add_graph_input(simple_path, o);
  simple_path->add_option("--from", o.from, "Start vertex name");
  simple_path->add_option("--to", o.to, "End vertex name");
  simple_path->add_flag("--directed", o.directed, "Directed variant (refused: NP-complete)");
  CLI::App* simple_cycles = graph->add_subcommand(
      "simple-cycles", "List edges on simple nonrepetitive cycles of an undirected graph");
  add_graph_input(simple_cycles, o);
  simple_cycles->add_flag("--directed", o.directed, "Directed variant (refused: NP-complete)");

  CLI::App* sudoku = app.add_subcommand("sudoku", "Solve, grade and generate Sudoku puzzles");
  sudoku->require_subcommand(1);
  CLI::App* solve_cmd = sudoku->add_subcommand("solve", "Solve with deduction rules; prints the grid and outcome");
  add_board_input(solve_cmd, o);
  solve_cmd->add_option("--max-tier", o.max_tier, "Highest rule tier to use (0..4)")->check(CLI::Range(0, kMaxTier));
  solve_cmd->add_flag("--trace", o.trace, "Print one line per deduction");
  CLI::App* generate_cmd =
      sudoku->add_subcommand("generate", "Generate minimal puzzles; one board per puzzle on output");
  generate_cmd->add_option("--seed", o.seed, "Random seed");
  generate_cmd->add_option("--count", o.count, "Number of puzzles");
  generate_cmd->add_option("--box", o.box, "Box size B (grid is B^2 x B^2)")->check(CLI::Range(kMinBox, kMaxBox));
  generate_cmd->add_flag("--asymmetric", o.asymmetric, "Do not pair clues with their 180-degree partner");
  add_format(generate_cmd, o);
  CLI::App* grade_cmd = sudoku->add_subcommand("grade", "Print the highest rule tier needed, or 'inf'");
  add_board_input(grade_cmd, o);
  CLI::App* stats = sudoku->add_subcommand("stats", "Generate and grade a batch; prints tier counts and fractions");
  stats->add_option("--seed", o.seed, "Batch seed");
  stats->add_option("--count", o.count, "Number of puzzles");
  stats->add_option("--box", o.box, "Box size B")->check(CLI::Range(kMinBox, kMaxBox));
  stats->add_option("--jobs", o.jobs, "Worker threads");
  add_format(stats, o);
  CLI::App* fixture = sudoku->add_subcommand(
      "fixture", "Print the dense bivalue board for --box and its graph sizes");
  fixture->add_option("--box", o.box, "Box size B (2..5)");
  add_format(fixture, o);

  std::vector<std::string> argv_store{"nonrep"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cycles) return cmd_cycles(o, in, out);
    if (*reach) return cmd_reach(o, in, out);
    if (*shortest) return cmd_shortest(o, in, out);
    if (*simple_path) {
      if (!o.directed && (o.from.empty() || o.to.empty())) throw UsageError("--from and --to are required");
      return cmd_simple_path(o, in, out);
    }
    if (*simple_cycles) return cmd_simple_cycles(o, in, out);
    if (*solve_cmd) return cmd_solve(o, in, out);
    if (*generate_cmd) return cmd_generate(o, out);
    if (*grade_cmd) return cmd_grade(o, in, out);
    if (*stats) return cmd_stats(o, out);
    if (*fixture) return cmd_fixture(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoardParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nonrep::cli
