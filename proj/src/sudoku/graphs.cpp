#include <map>
#include <set>
#include <tuple>

#include "sudoku/graphs.hpp"

namespace nonrep::sudoku {

namespace {

int vertex_for(FlagLabeledGraph& g, std::vector<int>& cell_of_vertex, std::vector<int>& vertex_of_cell,
               const Geometry& geo, int cell) {
  int& v = vertex_of_cell[static_cast<std::size_t>(cell)];
  if (v < 0) {
    v = g.add_vertex(geo.cell_name(cell));
    cell_of_vertex.push_back(cell);
  }
  return v;
}

}  // namespace

BilocationGraph build_bilocation_graph(const Board& board) {
  const Geometry& geo = board.geometry();
  BilocationGraph out;
  out.vertex_of_cell.assign(static_cast<std::size_t>(geo.cell_count()), -1);
  std::set<std::tuple<int, int, int>> seen;
  std::map<std::pair<int, int>, DigitMask> between;
  for (int g = 0; g < geo.group_count(); ++g) {
    for (int d = 1; d <= geo.size(); ++d) {
      int homes[2] = {-1, -1};
      int count = 0;
      bool placed = false;
      for (int c : geo.group(g)) {
        if (board.value(c) == d) placed = true;
        if (board.is_placed(c) || !board.has_candidate(c, d)) continue;
        if (count < 2) homes[count] = c;
        ++count;
      }
      if (placed || count != 2) continue;
      if (!seen.insert({homes[0], homes[1], d}).second) continue;
      const int a = vertex_for(out.graph, out.cell_of_vertex, out.vertex_of_cell, geo, homes[0]);
      const int b = vertex_for(out.graph, out.cell_of_vertex, out.vertex_of_cell, geo, homes[1]);
      out.graph.add_edge(a, b, d);
      DigitMask& m = between[{homes[0], homes[1]}];
      m |= digit_bit(d);
      if (mask_count(m) >= 3 && !out.contradiction) {
        out.contradiction = true;
        out.contradiction_cells = {homes[0], homes[1]};
      }
    }
  }
  return out;
}

BivalueGraph build_bivalue_graph(const Board& board) {
  const Geometry& geo = board.geometry();
  BivalueGraph out;
  out.vertex_of_cell.assign(static_cast<std::size_t>(geo.cell_count()), -1);
  auto bivalued = [&](int c) { return !board.is_placed(c) && mask_count(board.candidates(c)) == 2; };
  for (int c = 0; c < geo.cell_count(); ++c)
    if (bivalued(c)) vertex_for(out.graph, out.cell_of_vertex, out.vertex_of_cell, geo, c);
  std::set<std::tuple<int, int, int>> seen;
  for (int g = 0; g < geo.group_count(); ++g) {
    const auto& cells = geo.group(g);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!bivalued(cells[i])) continue;
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        if (!bivalued(cells[j])) continue;
        DigitMask shared = board.candidates(cells[i]) & board.candidates(cells[j]);
        while (shared) {
          const int d = lowest_digit(shared);
          shared &= shared - 1;
          if (!seen.insert({cells[i], cells[j], d}).second) continue;
          out.graph.add_edge(out.vertex_of_cell[static_cast<std::size_t>(cells[i])],
                             out.vertex_of_cell[static_cast<std::size_t>(cells[j])], d);
        }
      }
    }
  }
  return out;
}

BipartiteBivalueGraph build_bipartite_bivalue_graph(const Board& board) {
  const Geometry& geo = board.geometry();
  const int n = geo.size();
  BipartiteBivalueGraph out;
  out.digit_count = n;
  out.vertex_of_cell.assign(static_cast<std::size_t>(geo.cell_count()), -1);
  for (int c = 0; c < geo.cell_count(); ++c) {
    if (board.is_placed(c) || mask_count(board.candidates(c)) != 2) continue;
    out.vertex_of_cell[static_cast<std::size_t>(c)] = out.graph.add_vertex(geo.cell_name(c));
    out.cell_of_vertex.push_back(c);
  }
  out.group_digit_base = out.graph.vertex_count();
  for (int g = 0; g < geo.group_count(); ++g)
    for (int d = 1; d <= n; ++d) {
      out.graph.add_vertex(geo.group_name(g) + "#" + std::to_string(d));
      out.cell_of_vertex.push_back(-1);
    }
  for (int v = 0; v < out.group_digit_base; ++v) {
    const int c = out.cell_of_vertex[static_cast<std::size_t>(v)];
    DigitMask m = board.candidates(c);
    while (m) {
      const int d = lowest_digit(m);
      m &= m - 1;
      for (int g : geo.groups_of(c)) out.graph.add_flag_edge(v, out.group_digit_vertex(g, d), d, c);
    }
  }
  return out;
}

Board dense_bivalue_fixture(int box) {
  Board b(box);
  const Geometry& geo = b.geometry();
  const int n = geo.size();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int cell = geo.cell(r, c);
      const int value = ((r % box) * box + r / box + c) % n + 1;
      const int bx = geo.box_of(cell);
      if (value == 1 || bx / box == bx % box) continue;
      if (!b.place(cell, value)) throw std::logic_error("fixture base grid is not a solution");
    }
  }
  return b;
}

}  // namespace nonrep::sudoku
