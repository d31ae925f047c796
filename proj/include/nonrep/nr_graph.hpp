#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nonrep/graph.hpp"

namespace nonrep {

/// `linear` is the pair-grouping recursive gadget with O(k) size; `quadratic`
/// wires every in-node to every differently labeled out-node and exists as an
/// independent reference construction.
enum class GadgetKind { linear, quadratic };

/// Label-routing gadget: in_nodes[x] reaches out_nodes[y] iff x != y.
struct Gadget {
  int k = 0;
  std::vector<int> in_nodes;
  std::vector<int> out_nodes;
  int node_count = 0;
  std::vector<std::pair<int, int>> arcs;
};

Gadget build_reachability_gadget(int k, GadgetKind kind = GadgetKind::linear);

/// Size bounds of the linear gadget for k labels; frozen from the recurrence
/// V(k) = 2k + V(ceil(k/2)), A(k) = 3k - (k mod 2) + A(ceil(k/2)) and checked in
/// the tests for every k up to 4096.
inline constexpr int kGadgetNodesPerLabel = 5;
inline constexpr int kGadgetArcsPerLabel = 7;

enum class NodeSide { in, out, internal };

struct NodeOrigin {
  int vertex = -1;
  int label = -1;  // -1 for internal gadget nodes
  NodeSide side = NodeSide::internal;
};

struct GadgetPort {
  int label = 0;
  int in_node = -1;
  int out_node = -1;
};

/// nr(G): every vertex replaced by a gadget over its incident flag labels, every
/// edge traversal by a connector arc from the tail's out-node to the head's
/// in-node. Immutable once built.
class NrGraph {
public:
  const Digraph& digraph() const noexcept { return digraph_; }
  int node_count() const noexcept { return digraph_.node_count(); }
  int arc_count() const noexcept { return digraph_.arc_count(); }

  const NodeOrigin& origin(int node) const { return origin_.at(static_cast<std::size_t>(node)); }
  /// Connector arc for a traversal, or -1 (an undirected edge has two).
  int connector(Traversal t) const;
  /// Traversal carried by an arc; nullopt for gadget-internal arcs.
  std::optional<Traversal> traversal_of_arc(int arc) const;

  std::span<const GadgetPort> ports(int vertex) const { return ports_.at(static_cast<std::size_t>(vertex)); }
  std::optional<GadgetPort> port(int vertex, int label) const;

  GadgetKind kind() const noexcept { return kind_; }

private:
  friend NrGraph build_nr(const FlagLabeledGraph& g, GadgetKind kind);

  GadgetKind kind_ = GadgetKind::linear;
  Digraph digraph_;
  std::vector<NodeOrigin> origin_;
  std::vector<std::vector<GadgetPort>> ports_;
  std::vector<int> connector_;         // 2 * edge + reversed -> arc
  std::vector<Traversal> arc_traversal_;  // arc -> traversal, edge == -1 if internal
};

/// Throws GraphError on self-loops.
NrGraph build_nr(const FlagLabeledGraph& g, GadgetKind kind = GadgetKind::linear);

/// Traversals whose connector arc lies inside a strongly connected component of
/// nr(G), i.e. that lie on some nonrepetitive closed walk. Both directions of an
/// undirected edge are reported when they qualify.
std::vector<Traversal> cyclic_traversals(const FlagLabeledGraph& g, const NrGraph& nr);
std::vector<Traversal> cyclic_traversals(const FlagLabeledGraph& g,
                                         GadgetKind kind = GadgetKind::linear);
/// Sorted edge ids of the edges lying on nonrepetitive cycles.
/// Label pairs (in, out), in != out, such that some nonrepetitive closed walk
/// enters `v` on `in` and leaves on `out`: exactly the port pairs whose in-node
/// and out-node share a component. `scc` must come from nr.digraph().
std::vector<std::pair<int, int>> closed_walk_turns(const NrGraph& nr, const SccResult& scc, int v);

std::vector<int> cyclic_edges(const FlagLabeledGraph& g, GadgetKind kind = GadgetKind::linear);

struct ReachedEdge {
  int edge = -1;
  bool reversed = false;
  int far_label = 0;  // flag label at the head of the traversal
  friend auto operator<=>(const ReachedEdge&, const ReachedEdge&) = default;
};

/// Traversals that occur on a nonrepetitive walk starting at `v` with first flag
/// label `label`. Empty when no edge leaves `v` with that label.
std::vector<ReachedEdge> reachable_edges(const FlagLabeledGraph& g, const NrGraph& nr, int v,
                                         int label);
std::vector<ReachedEdge> reachable_edges(const FlagLabeledGraph& g, int v, int label,
                                         GadgetKind kind = GadgetKind::linear);

/// A nonrepetitive walk that starts at `v` with first flag label `label` and
/// ends with the traversal `last`; nullopt when `last` is not reached.
std::optional<std::vector<Traversal>> nonrepetitive_walk(const FlagLabeledGraph& g, const NrGraph& nr,
                                                         int v, int label, Traversal last);

/// Fewest-edge nonrepetitive walk from src to dst; empty when src == dst.
std::optional<std::vector<Traversal>> shortest_nonrepetitive_path(const FlagLabeledGraph& g,
                                                                  int src, int dst);

/// Undirected input only: relabels both flags of each edge with the edge id, so
/// nonrepetitive walks become walks that never immediately reverse an edge.
FlagLabeledGraph no_reversal_view(const FlagLabeledGraph& g);

}  // namespace nonrep
