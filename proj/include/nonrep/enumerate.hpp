#pragma once

#include <cstddef>
#include <vector>

#include "nonrep/graph.hpp"

namespace nonrep {

// Exhaustive backtracking over simple nonrepetitive paths and cycles. Used as
// a reference answer for small graphs; exponential in general.

enum class OracleQuery { simple_paths, simple_cycles };

struct OracleAnswer {
  std::size_t count = 0;   // p..q paths, or cycles up to rotation and reflection
  std::vector<int> edges;  // sorted union of edges on the counted paths/cycles
};

inline constexpr int kDefaultOracleVertexBound = 12;

/// Throws GraphError when the graph exceeds `max_vertices`. `p` and `q` are
/// only used for path queries.
OracleAnswer oracle_enumerate(const FlagLabeledGraph& g, OracleQuery query, int p = -1, int q = -1,
                              int max_vertices = kDefaultOracleVertexBound);

/// For every target vertex, whether a simple nonrepetitive path from `p`
/// reaches it. Memoised over (visited set, vertex, last label) states.
std::vector<char> oracle_simple_reach(const FlagLabeledGraph& g, int p,
                                      int max_vertices = kDefaultOracleVertexBound);

/// Edges on some simple nonrepetitive cycle, by state-space search per edge.
std::vector<int> oracle_simple_cycle_edges(const FlagLabeledGraph& g,
                                           int max_vertices = kDefaultOracleVertexBound);

}  // namespace nonrep
