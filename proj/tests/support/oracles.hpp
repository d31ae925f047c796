#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "nonrep/graph.hpp"
#include "sudoku/board.hpp"

namespace oracle {

using nonrep::Directedness;
using nonrep::FlagEdge;
using nonrep::FlagLabeledGraph;
using nonrep::Traversal;

struct GraphShape {
  int max_vertices = 8;
  int max_edges = 12;
  int labels = 3;
  bool directed = false;
  bool flag_labels = true;  // otherwise both ends of an edge share a label
};

inline FlagLabeledGraph random_graph(std::mt19937_64& rng, const GraphShape& shape) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(1, shape.max_vertices);
  FlagLabeledGraph g(shape.directed ? Directedness::directed : Directedness::undirected, n);
  const int m = n < 2 ? 0 : pick(0, shape.max_edges);
  for (int i = 0; i < m; ++i) {
    const int u = pick(0, n - 1);
    int v = pick(0, n - 2);
    if (v >= u) ++v;
    const int a = pick(0, shape.labels - 1);
    const int b = shape.flag_labels ? pick(0, shape.labels - 1) : a;
    g.add_flag_edge(u, v, a, b);
  }
  return g;
}

inline std::vector<Traversal> traversals(const FlagLabeledGraph& g) {
  std::vector<Traversal> out;
  for (const FlagEdge& e : g.edges()) {
    out.push_back({e.id, false});
    if (!g.directed()) out.push_back({e.id, true});
  }
  return out;
}

// Walk states are traversals; t1 -> t2 when t2 leaves the head of t1 through a
// flag whose label differs from the one t1 arrived on.
inline std::map<Traversal, std::vector<Traversal>> state_graph(const FlagLabeledGraph& g) {
  std::map<Traversal, std::vector<Traversal>> next;
  const auto all = traversals(g);
  for (const Traversal& a : all) {
    auto& list = next[a];
    for (const Traversal& b : all)
      if (g.tail(b) == g.head(a) && g.tail_label(b) != g.head_label(a)) list.push_back(b);
  }
  return next;
}

inline std::set<Traversal> closure(const std::map<Traversal, std::vector<Traversal>>& next,
                                   std::vector<Traversal> start) {
  std::set<Traversal> seen(start.begin(), start.end());
  while (!start.empty()) {
    const Traversal t = start.back();
    start.pop_back();
    for (const Traversal& u : next.at(t))
      if (seen.insert(u).second) start.push_back(u);
  }
  return seen;
}

/// Traversals lying on a closed walk with no two consecutive equal labels
/// (including the wrap-around).
inline std::set<Traversal> cyclic_traversals(const FlagLabeledGraph& g) {
  const auto next = state_graph(g);
  std::set<Traversal> out;
  for (const auto& [t, succ] : next) {
    if (closure(next, succ).count(t)) out.insert(t);
  }
  return out;
}

inline std::set<int> cyclic_edges(const FlagLabeledGraph& g) {
  std::set<int> out;
  for (const Traversal& t : oracle::cyclic_traversals(g)) out.insert(t.edge);
  return out;
}

/// Traversals on nonrepetitive walks leaving `v` through a flag labeled `label`.
inline std::set<Traversal> reachable(const FlagLabeledGraph& g, int v, int label) {
  const auto next = state_graph(g);
  std::vector<Traversal> start;
  for (const Traversal& t : traversals(g))
    if (g.tail(t) == v && g.tail_label(t) == label) start.push_back(t);
  return closure(next, start);
}

/// Fewest edges on a nonrepetitive walk from a to b, -1 if none; 0 when a == b.
inline int shortest_length(const FlagLabeledGraph& g, int a, int b) {
  if (a == b) return 0;
  const auto next = state_graph(g);
  std::map<Traversal, int> dist;
  std::deque<Traversal> queue;
  for (const Traversal& t : traversals(g))
    if (g.tail(t) == a) {
      dist[t] = 1;
      queue.push_back(t);
    }
  while (!queue.empty()) {
    const Traversal t = queue.front();
    queue.pop_front();
    if (g.head(t) == b) return dist[t];
    for (const Traversal& u : next.at(t))
      if (!dist.count(u)) {
        dist[u] = dist[t] + 1;
        queue.push_back(u);
      }
  }
  return -1;
}

/// Whether `walk` is a connected nonrepetitive walk from a to b in g.
inline bool is_nonrep_walk(const FlagLabeledGraph& g, int a, int b, const std::vector<Traversal>& walk) {
  int at = a;
  int last = -1;
  bool first = true;
  for (const Traversal& t : walk) {
    if (t.edge < 0 || t.edge >= g.edge_count()) return false;
    if (g.directed() && t.reversed) return false;
    if (g.tail(t) != at) return false;
    if (!first && g.tail_label(t) == last) return false;
    first = false;
    last = g.head_label(t);
    at = g.head(t);
  }
  return at == b;
}

inline bool is_simple(const FlagLabeledGraph& g, int a, const std::vector<Traversal>& walk) {
  std::set<int> seen{a};
  for (const Traversal& t : walk)
    if (!seen.insert(g.head(t)).second) return false;
  return true;
}

/// Largest matching by trying every edge subset (small inputs only).
inline int brute_matching_size(int vertices, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  const int m = static_cast<int>(edges.size());
  std::function<void(int, std::uint64_t, int)> go = [&](int i, std::uint64_t used, int size) {
    best = std::max(best, size);
    if (i == m || size + (m - i) <= best) return;
    const auto [a, b] = edges[static_cast<std::size_t>(i)];
    if (a != b && !(used >> a & 1) && !(used >> b & 1))
      go(i + 1, used | (std::uint64_t{1} << a) | (std::uint64_t{1} << b), size + 1);
    go(i + 1, used, size);
  };
  (void)vertices;
  go(0, 0, 0);
  return best;
}

/// All perfect matchings of a bipartite instance, as sets of edge indices.
inline std::vector<std::vector<int>> perfect_matchings(int left, int right,
                                                       const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> out;
  if (left != right) return out;
  std::vector<int> chosen;
  std::vector<char> used(static_cast<std::size_t>(right), 0);
  std::function<void(int)> go = [&](int l) {
    if (l == left) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first != l || used[static_cast<std::size_t>(edges[i].second)]) continue;
      used[static_cast<std::size_t>(edges[i].second)] = 1;
      chosen.push_back(static_cast<int>(i));
      go(l + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(edges[i].second)] = 0;
    }
  };
  go(0);
  return out;
}

/// Plain row-major backtracking over the grid, honouring the board's candidate
/// sets; stops after `cap` completions.
inline std::vector<std::vector<int>> sudoku_completions(const nonrep::sudoku::Board& b, int cap) {
  const auto& geo = b.geometry();
  const int n = geo.size();
  std::vector<int> grid(static_cast<std::size_t>(geo.cell_count()));
  for (int c = 0; c < geo.cell_count(); ++c) grid[static_cast<std::size_t>(c)] = b.value(c);
  std::vector<std::vector<int>> out;
  auto fits = [&](int c, int d) {
    for (int p : geo.peers(c))
      if (grid[static_cast<std::size_t>(p)] == d) return false;
    return true;
  };
  for (int c = 0; c < geo.cell_count(); ++c)
    if (grid[static_cast<std::size_t>(c)] && !fits(c, grid[static_cast<std::size_t>(c)])) return out;
  std::function<void(int)> go = [&](int c) {
    if (static_cast<int>(out.size()) >= cap) return;
    if (c == geo.cell_count()) {
      out.push_back(grid);
      return;
    }
    if (grid[static_cast<std::size_t>(c)]) return go(c + 1);
    for (int d = 1; d <= n; ++d) {
      if (!b.has_candidate(c, d) || !fits(c, d)) continue;
      grid[static_cast<std::size_t>(c)] = d;
      go(c + 1);
      grid[static_cast<std::size_t>(c)] = 0;
    }
  };
  go(0);
  return out;
}

/// Empty string when `d` agrees with `solution`, otherwise a description.
inline std::string check_deduction(const nonrep::sudoku::Deduction& d, const std::vector<int>& solution) {
  if (d.contradiction) return "contradiction reported";
  for (const auto& [cell, digit] : d.placements)
    if (solution[static_cast<std::size_t>(cell)] != digit)
      return "placed " + std::to_string(digit) + " at cell " + std::to_string(cell);
  for (const auto& [cell, digit] : d.eliminations)
    if (solution[static_cast<std::size_t>(cell)] == digit)
      return "eliminated " + std::to_string(digit) + " at cell " + std::to_string(cell);
  return {};
}

}  // namespace oracle
