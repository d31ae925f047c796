#pragma once

#include <vector>

#include "nonrep/graph.hpp"
#include "sudoku/board.hpp"

namespace nonrep::sudoku {

/// Cells as vertices; an edge labeled d joins the only two homes of digit d in
/// some group. Only unplaced cells with at least one such edge get a vertex.
struct BilocationGraph {
  FlagLabeledGraph graph{Directedness::undirected};
  std::vector<int> cell_of_vertex;
  std::vector<int> vertex_of_cell;  // -1 when absent
  /// Two cells joined by three or more distinct digits: those digits cannot
  /// all fit.
  bool contradiction = false;
  std::vector<int> contradiction_cells;
};

BilocationGraph build_bilocation_graph(const Board& board);

/// Cells with exactly two candidates as vertices; an edge labeled d joins two
/// such cells that share a group and the candidate d.
struct BivalueGraph {
  FlagLabeledGraph graph{Directedness::undirected};
  std::vector<int> cell_of_vertex;
  std::vector<int> vertex_of_cell;
};

BivalueGraph build_bivalue_graph(const Board& board);

/// Bipartite form of the bivalue constraints: one vertex per bivalued cell and
/// one per (group, digit). Cell c with candidate d in group g is joined to
/// (g, d); the flag at c carries d and the flag at (g, d) carries c.
struct BipartiteBivalueGraph {
  FlagLabeledGraph graph{Directedness::undirected};
  std::vector<int> cell_of_vertex;  // -1 for (group, digit) vertices
  std::vector<int> vertex_of_cell;
  int group_digit_base = 0;         // first (group, digit) vertex
  int digit_count = 0;

  int group_digit_vertex(int group, int digit) const { return group_digit_base + group * digit_count + digit - 1; }
  bool is_cell_vertex(int v) const { return v < group_digit_base; }
  int group_of_vertex(int v) const { return (v - group_digit_base) / digit_count; }
  int digit_of_vertex(int v) const { return (v - group_digit_base) % digit_count + 1; }
};

BipartiteBivalueGraph build_bipartite_bivalue_graph(const Board& board);

/// Grid with B diagonal boxes and every copy of digit 1 removed; it has a
/// unique solution and B^2 - 1 bivalued cells in each emptied box.
Board dense_bivalue_fixture(int box);

}  // namespace nonrep::sudoku
