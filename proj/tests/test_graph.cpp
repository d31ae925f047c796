#include <doctest.h>

#include <random>
#include <sstream>

#include "nonrep/graph.hpp"

using namespace nonrep;

TEST_SUITE("graph_core") {

TEST_CASE("directed edge line gives two vertices and one edge") {
  const auto g = parse_labeled_graph("graph directed\nedge a b L1\n");
  CHECK(g.directed());
  CHECK(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 1);
  const FlagEdge& e = g.edge(0);
  CHECK(g.vertex_name(e.u) == "a");
  CHECK(g.vertex_name(e.v) == "b");
  CHECK(g.label_name(e.label_u) == "L1");
  CHECK(e.label_u == e.label_v);
  CHECK(g.edge_labeled());
}

TEST_CASE("parallel edges are kept") {
  const auto g = parse_labeled_graph("graph undirected\nedge a b 0\nedge b a 0\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.flags(0).size() == 2);
}

TEST_CASE("comments, blank lines and flag edges") {
  const auto g = parse_labeled_graph("# leading comment\n\ngraph undirected  # trailing\nflagedge x y p q\n");
  REQUIRE(g.edge_count() == 1);
  CHECK(g.label_name(g.edge(0).label_u) == "p");
  CHECK(g.label_name(g.edge(0).label_v) == "q");
  CHECK_FALSE(g.edge_labeled());
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      parse_labeled_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("graph sideways\n") == 1);
  CHECK(line_of("graph directed\ngraph directed\n") == 2);
  CHECK(line_of("graph directed\nedge a b\n") == 2);
  CHECK(line_of("graph directed\nedge a b c d\n") == 2);
  CHECK(line_of("# nothing\nedge a b c\n") == 2);
  CHECK(line_of("") == 1);
  CHECK(line_of("graph undirected\nedge a b c\nvertex z\n") == 3);
}

TEST_CASE("serialize then parse reproduces the graph") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    FlagLabeledGraph g(round % 2 ? Directedness::directed : Directedness::undirected);
    const int n = 2 + static_cast<int>(rng() % 6);
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, g.intern_label("L0"));
    for (int i = 0; i < 6; ++i) {
      const int u = static_cast<int>(rng() % n);
      const int v = static_cast<int>(rng() % n);
      g.add_flag_edge(u, v, g.intern_label("L" + std::to_string(rng() % 3)),
                      g.intern_label("L" + std::to_string(rng() % 3)));
    }
    const std::string text = serialize_labeled_graph(g);
    const auto h = parse_labeled_graph(text);
    CHECK(serialize_labeled_graph(h) == text);
    REQUIRE(h.edge_count() == g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(h.vertex_name(h.edge(e).u) == g.vertex_name(g.edge(e).u));
      CHECK(h.label_name(h.edge(e).label_v) == g.label_name(g.edge(e).label_v));
    }
  }
}

TEST_CASE("traversal accessors follow direction") {
  FlagLabeledGraph g(Directedness::undirected, 2);
  const int e = g.add_flag_edge(0, 1, 5, 6);
  const Traversal fwd{e, false};
  const Traversal back{e, true};
  CHECK(g.tail(fwd) == 0);
  CHECK(g.head(fwd) == 1);
  CHECK(g.tail_label(back) == 6);
  CHECK(g.head_label(back) == 5);
  CHECK(g.leaving(g.flags(1)[0]) == back);

  FlagLabeledGraph d(Directedness::directed, 2);
  d.add_edge(0, 1, 0);
  CHECK(d.leaving(d.flags(0)[0]).has_value());
  CHECK_FALSE(d.leaving(d.flags(1)[0]).has_value());
}

TEST_CASE("labels group by value at a vertex") {
  FlagLabeledGraph g(Directedness::undirected, 4);
  g.add_edge(0, 1, 2);
  g.add_edge(0, 2, 7);
  g.add_edge(0, 3, 2);
  const auto groups = group_flags_by_label(g, 0);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].label == 2);
  CHECK(groups[0].flags.size() == 2);
  CHECK(groups[1].label == 7);
}

TEST_CASE("strongly connected components agree with mutual reachability") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 9);
    Digraph d(n);
    const int m = static_cast<int>(rng() % 18);
    for (int i = 0; i < m; ++i) d.add_arc(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    const SccResult scc = strongly_connected_components(d);
    std::vector<std::vector<char>> reach;
    for (int v = 0; v < n; ++v) reach.push_back(reachable_nodes(d, std::span<const int>(&v, 1)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const bool same = scc.component[static_cast<std::size_t>(a)] == scc.component[static_cast<std::size_t>(b)];
        CHECK(same == (reach[a][b] && reach[b][a]));
      }
    // Component ids are a reverse topological order: arcs never go to a larger id.
    for (const auto& [a, b] : d.arcs())
      CHECK(scc.component[static_cast<std::size_t>(a)] >= scc.component[static_cast<std::size_t>(b)]);
  }
}

TEST_CASE("a long path does not overflow the stack") {
  const int n = 200000;
  Digraph d(n);
  for (int v = 0; v + 1 < n; ++v) d.add_arc(v, v + 1);
  d.add_arc(n - 1, 0);
  CHECK(strongly_connected_components(d).count == 1);
}

}
