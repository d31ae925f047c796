#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nonrep/graph.hpp"

namespace nonrep {

/// Binary-label reduction of an undirected flag-labeled graph. Each vertex v
/// with k incident labels becomes a center plus a pair (v,i,0), (v,i,1) per
/// label; original edges join the (.,.,0) nodes with label 0.
struct UspGraph {
  FlagLabeledGraph graph{Directedness::undirected};
  std::vector<int> center;          // original vertex -> center vertex
  std::vector<int> original_vertex; // usp vertex -> original vertex
  std::vector<int> original_edge;   // usp edge -> original edge, -1 for gadget edges
};

/// Throws GraphError on directed input or self-loops.
UspGraph build_usp(const FlagLabeledGraph& g);

/// Digraph with a fixed-point-free involution sigma that reverses every arc.
/// Pairs are nodes (2i, 2i+1); add_arc inserts the arc and its mirror.
class SkewSymmetricGraph {
public:
  explicit SkewSymmetricGraph(int pair_count = 0, int source = 0);

  int node_count() const noexcept { return static_cast<int>(out_.size()); }
  int sigma(int node) const { return sigma_.at(static_cast<std::size_t>(node)); }
  int source() const noexcept { return source_; }
  void set_source(int s);

  int add_pair();
  /// Adds a->b and sigma(b)->sigma(a); duplicates are ignored.
  void add_arc(int a, int b);
  bool has_arc(int a, int b) const;
  const std::vector<int>& successors(int node) const { return out_.at(static_cast<std::size_t>(node)); }
  std::vector<std::pair<int, int>> arcs() const;

  /// Checks the involution and arc-closure invariants.
  bool valid() const;

private:
  void insert(int a, int b);

  std::vector<int> sigma_;
  std::vector<std::vector<int>> out_;
  int source_;
};

struct SsgGraph {
  SkewSymmetricGraph ssg;
  int vertex_count = 0;  // nodes 2v (=(v,0)) and 2v+1 (=(v,1)); s = 2n, sigma(s) = 2n+1
};

/// Skew-symmetric graph whose r-reachability from s to sigma(s) decides a simple
/// nonrepetitive p..q path starting with label start_label at p and ending with
/// end_label at q. Node (v,i) means "at v, arrived by an edge labeled i".
SsgGraph build_ssg(const FlagLabeledGraph& binary, int p, int q, int start_label, int end_label);

struct RReachResult {
  bool reachable = false;
  std::vector<int> path;  // s, ..., sigma(s) when reachable
};

/// Path from s to sigma(s) using at most one node of every other sigma-pair,
/// decided by one augmenting-path search in an auxiliary matching graph.
RReachResult r_reachable(const SkewSymmetricGraph& ssg);

struct SimplePathResult {
  bool exists = false;
  std::vector<Traversal> path;  // witness in the input graph
};

/// Simple nonrepetitive path between p and q in an undirected graph.
SimplePathResult nonrep_simple_path_exists(const FlagLabeledGraph& g, int p, int q);

/// Edges lying on some nonrepetitive simple cycle: one path test per edge.
std::vector<int> simple_cycle_edges(const FlagLabeledGraph& g);

/// Existence of a nonrepetitive simple cycle by peeling. Every edge-labeled
/// undirected graph is accepted; flag-labeled input throws GraphError.
bool has_nonrep_simple_cycle(const FlagLabeledGraph& g);

}  // namespace nonrep
