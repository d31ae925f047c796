#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nonrep {

enum class Directedness { directed, undirected };

/// Raised by the graph text parser; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Precondition failure in an analysis routine (self-loops, wrong directedness,
/// unknown vertex and so on).
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A (vertex, incident edge) pair. `end` is 0 for the edge's first endpoint and
/// 1 for its second, so a self-loop contributes two distinct flags.
struct Flag {
  int edge = -1;
  int end = 0;
  friend bool operator==(const Flag&, const Flag&) = default;
};

struct FlagEdge {
  int u = -1;
  int v = -1;
  int label_u = 0;  // flag label at u
  int label_v = 0;  // flag label at v
  int id = -1;

  bool is_loop() const noexcept { return u == v; }
  int endpoint(int end) const noexcept { return end == 0 ? u : v; }
  int label(int end) const noexcept { return end == 0 ? label_u : label_v; }
};

/// One pass over an edge. For directed graphs `reversed` is always false.
struct Traversal {
  int edge = -1;
  bool reversed = false;
  friend auto operator<=>(const Traversal&, const Traversal&) = default;
};

/// Directed or undirected multigraph whose flags carry integer labels.
/// Vertices and labels may optionally carry names (interned by the parser);
/// unnamed ones print as their integer id.
class FlagLabeledGraph {
public:
  explicit FlagLabeledGraph(Directedness d = Directedness::directed, int vertex_count = 0);

  int add_vertex(std::string name = {});
  int add_edge(int u, int v, int label) { return add_flag_edge(u, v, label, label); }
  int add_flag_edge(int u, int v, int label_u, int label_v);

  int intern_vertex(std::string_view name);
  int intern_label(std::string_view name);
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_label(std::string_view name) const;
  std::string vertex_name(int v) const;
  std::string label_name(int label) const;

  Directedness directedness() const noexcept { return directedness_; }
  bool directed() const noexcept { return directedness_ == Directedness::directed; }
  int vertex_count() const noexcept { return static_cast<int>(incidence_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const FlagEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const FlagEdge> edges() const noexcept { return edges_; }
  std::span<const Flag> flags(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  int vertex_at(Flag f) const { return edge(f.edge).endpoint(f.end); }
  int label_at(Flag f) const { return edge(f.edge).label(f.end); }
  int opposite(Flag f) const { return edge(f.edge).endpoint(1 - f.end); }

  int tail(Traversal t) const { return edge(t.edge).endpoint(t.reversed ? 1 : 0); }
  int head(Traversal t) const { return edge(t.edge).endpoint(t.reversed ? 0 : 1); }
  int tail_label(Traversal t) const { return edge(t.edge).label(t.reversed ? 1 : 0); }
  int head_label(Traversal t) const { return edge(t.edge).label(t.reversed ? 0 : 1); }

  /// Traversals that leave `v` through flag `f` (none for an incoming directed edge).
  std::optional<Traversal> leaving(Flag f) const;

  bool edge_labeled() const noexcept;
  bool has_self_loop() const noexcept;
  bool contains(int v) const noexcept { return v >= 0 && v < vertex_count(); }

private:
  Directedness directedness_;
  std::vector<FlagEdge> edges_;
  std::vector<std::vector<Flag>> incidence_;
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<std::string> label_names_;
  std::unordered_map<std::string, int> label_index_;
};

struct LabelGroup {
  int label = 0;
  std::vector<Flag> flags;
};

/// Partition of the flags at `v` by label, in first-occurrence order.
std::vector<LabelGroup> group_flags_by_label(const FlagLabeledGraph& g, int v);

FlagLabeledGraph parse_labeled_graph(std::istream& in);
FlagLabeledGraph parse_labeled_graph(std::string_view text);
std::string serialize_labeled_graph(const FlagLabeledGraph& g);

/// Plain digraph with per-node out-arc lists; arcs keep their insertion index.
class Digraph {
public:
  explicit Digraph(int nodes = 0) : out_(static_cast<std::size_t>(nodes)) {}

  int add_node();
  int add_arc(int from, int to);

  int node_count() const noexcept { return static_cast<int>(out_.size()); }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  std::pair<int, int> arc(int id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  std::span<const std::pair<int, int>> arcs() const noexcept { return arcs_; }
  /// Arc ids leaving `node`, in insertion order.
  std::span<const int> out_arcs(int node) const { return out_.at(static_cast<std::size_t>(node)); }

private:
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_;
};

struct SccResult {
  std::vector<int> component;  // node -> component id
  int count = 0;
};

/// Tarjan's algorithm, iterative. Component ids come out in reverse
/// topological order of the condensation (sinks first).
SccResult strongly_connected_components(const Digraph& g);

/// Nodes reachable from `sources` (inclusive).
std::vector<char> reachable_nodes(const Digraph& g, std::span<const int> sources);

}  // namespace nonrep
