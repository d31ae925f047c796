#include <doctest.h>

#include <random>

#include "nonrep/nr_graph.hpp"
#include "support/oracles.hpp"

using namespace nonrep;

namespace {

std::vector<std::vector<char>> gadget_reach(const Gadget& gd) {
  Digraph d(gd.node_count);
  for (const auto& [a, b] : gd.arcs) d.add_arc(a, b);
  std::vector<std::vector<char>> out;
  for (int x = 0; x < gd.k; ++x) {
    const int s = gd.in_nodes[static_cast<std::size_t>(x)];
    out.push_back(reachable_nodes(d, std::span<const int>(&s, 1)));
  }
  return out;
}

void check_gadget_law(const Gadget& gd) {
  const auto reach = gadget_reach(gd);
  for (int x = 0; x < gd.k; ++x)
    for (int y = 0; y < gd.k; ++y) {
      const bool r = reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(gd.out_nodes[static_cast<std::size_t>(y)])];
      CHECK_MESSAGE(r == (x != y), "k=" << gd.k << " x=" << x << " y=" << y);
    }
}

std::set<oracle::Traversal> as_set(const std::vector<Traversal>& v) { return {v.begin(), v.end()}; }

std::set<oracle::Traversal> reached_set(const std::vector<ReachedEdge>& v) {
  std::set<Traversal> out;
  for (const auto& r : v) out.insert(Traversal{r.edge, r.reversed});
  return out;
}

}  // namespace

TEST_SUITE("nonrep_engine") {

TEST_CASE("gadget routes x to every out-node except its own") {
  for (int k = 1; k <= 64; ++k) {
    check_gadget_law(build_reachability_gadget(k, GadgetKind::linear));
    check_gadget_law(build_reachability_gadget(k, GadgetKind::quadratic));
  }
  CHECK_THROWS_AS(build_reachability_gadget(0), GraphError);
}

TEST_CASE("small gadgets have the expected shape") {
  const Gadget one = build_reachability_gadget(1);
  CHECK(one.node_count == 2);
  CHECK(one.arcs.empty());
  const Gadget two = build_reachability_gadget(2);
  CHECK(two.node_count == 4);
  CHECK(two.arcs.size() == 2);
}

TEST_CASE("linear gadget size follows its recurrence and the frozen bounds") {
  // V(1) = 2, A(1) = 0, V(2) = 4, A(2) = 2, and for k > 2
  // V(k) = 2k + V(ceil(k/2)), A(k) = 3k - (k mod 2) + A(ceil(k/2)).
  std::vector<long> v(4097), a(4097);
  v[1] = 2;
  a[1] = 0;
  v[2] = 4;
  a[2] = 2;
  for (int k = 3; k <= 4096; ++k) {
    v[k] = 2L * k + v[(k + 1) / 2];
    a[k] = 3L * k - (k % 2) + a[(k + 1) / 2];
  }
  for (int k = 1; k <= 4096; ++k) {
    const Gadget gd = build_reachability_gadget(k);
    REQUIRE(gd.node_count == v[k]);
    REQUIRE(static_cast<long>(gd.arcs.size()) == a[k]);
    REQUIRE(gd.node_count <= kGadgetNodesPerLabel * k);
    REQUIRE(static_cast<long>(gd.arcs.size()) <= kGadgetArcsPerLabel * k);
  }
}

TEST_CASE("single directed edge gives an acyclic nr graph") {
  FlagLabeledGraph g(Directedness::directed, 2);
  g.add_edge(0, 1, 0);
  CHECK(cyclic_edges(g).empty());
  const NrGraph nr = build_nr(g);
  CHECK(strongly_connected_components(nr.digraph()).count == nr.node_count());
}

TEST_CASE("triangle cycles depend on labels") {
  auto tri = [](int a, int b, int c) {
    FlagLabeledGraph g(Directedness::undirected, 3);
    g.add_edge(0, 1, a);
    g.add_edge(1, 2, b);
    g.add_edge(2, 0, c);
    return g;
  };
  CHECK(cyclic_edges(tri(1, 2, 3)) == std::vector<int>{0, 1, 2});
  CHECK(cyclic_edges(tri(1, 2, 1)).empty());
  CHECK(cyclic_edges(tri(4, 4, 4)).empty());
}

TEST_CASE("self-loops are rejected") {
  FlagLabeledGraph g(Directedness::undirected, 1);
  g.add_edge(0, 0, 1);
  CHECK_THROWS_AS(build_nr(g), GraphError);
}

TEST_CASE("cyclic and reachable traversals match the state-graph oracle") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 300; ++round) {
    oracle::GraphShape shape;
    shape.directed = round % 2 == 0;
    shape.flag_labels = round % 3 != 0;
    const auto g = oracle::random_graph(rng, shape);
    const NrGraph lin = build_nr(g, GadgetKind::linear);
    const NrGraph quad = build_nr(g, GadgetKind::quadratic);
    const auto expected = oracle::cyclic_traversals(g);
    CHECK(as_set(cyclic_traversals(g, lin)) == expected);
    CHECK(as_set(cyclic_traversals(g, quad)) == expected);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int label = 0; label < shape.labels; ++label) {
        const auto want = oracle::reachable(g, v, label);
        CHECK(reached_set(reachable_edges(g, lin, v, label)) == want);
        CHECK(reached_set(reachable_edges(g, quad, v, label)) == want);
      }
  }
}

TEST_CASE("reached edges report the label at their head") {
  FlagLabeledGraph g(Directedness::undirected, 3);
  g.add_flag_edge(0, 1, 0, 1);
  g.add_flag_edge(1, 2, 2, 3);
  const auto r = reachable_edges(g, 0, 0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == ReachedEdge{0, false, 1});
  CHECK(r[1] == ReachedEdge{1, false, 3});
  CHECK(reachable_edges(g, 0, 9).empty());
}

TEST_CASE("every cyclic traversal closes a walk from its own tail") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    oracle::GraphShape shape;
    shape.directed = round % 2 == 1;
    const auto g = oracle::random_graph(rng, shape);
    const NrGraph nr = build_nr(g);
    for (const Traversal& t : cyclic_traversals(g, nr)) {
      // Start through t's own flag; the walk must come back to t.
      const auto walk = nonrepetitive_walk(g, nr, g.tail(t), g.tail_label(t), t);
      REQUIRE(walk.has_value());
      CHECK(oracle::is_nonrep_walk(g, g.tail(t), g.head(t), *walk));
    }
  }
}

TEST_CASE("closed-walk turns match the state-graph oracle") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 200; ++round) {
    oracle::GraphShape shape{6, 10, 3, round % 3 == 0, round % 2 == 0};
    const auto g = oracle::random_graph(rng, shape);
    const NrGraph nr = build_nr(g);
    const SccResult scc = strongly_connected_components(nr.digraph());
    const auto next = oracle::state_graph(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::set<std::pair<int, int>> want;
      for (const Traversal& b : oracle::traversals(g)) {
        if (g.tail(b) != v) continue;
        for (const Traversal& a : oracle::closure(next, {b}))
          if (g.head(a) == v && g.head_label(a) != g.tail_label(b)) want.insert({g.head_label(a), g.tail_label(b)});
      }
      const auto got = closed_walk_turns(nr, scc, v);
      CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == want);
      CHECK(got.size() == want.size());
    }
  }
}

TEST_CASE("walk witnesses are valid nonrepetitive walks") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 150; ++round) {
    oracle::GraphShape shape;
    shape.directed = round % 2 == 0;
    const auto g = oracle::random_graph(rng, shape);
    const NrGraph nr = build_nr(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (const GadgetPort& p : nr.ports(v))
        for (const ReachedEdge& r : reachable_edges(g, nr, v, p.label)) {
          const Traversal t{r.edge, r.reversed};
          const auto walk = nonrepetitive_walk(g, nr, v, p.label, t);
          REQUIRE(walk.has_value());
          CHECK(walk->back() == t);
          CHECK(g.tail_label(walk->front()) == p.label);
          CHECK(oracle::is_nonrep_walk(g, v, g.head(t), *walk));
        }
  }
}

TEST_CASE("shortest nonrepetitive walks match breadth-first search over states") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 200; ++round) {
    oracle::GraphShape shape;
    shape.directed = round % 2 == 0;
    const auto g = oracle::random_graph(rng, shape);
    for (int a = 0; a < g.vertex_count(); ++a)
      for (int b = 0; b < g.vertex_count(); ++b) {
        const auto walk = shortest_nonrepetitive_path(g, a, b);
        const int want = oracle::shortest_length(g, a, b);
        REQUIRE(walk.has_value() == (want >= 0));
        if (!walk) continue;
        CHECK(static_cast<int>(walk->size()) == want);
        CHECK(oracle::is_nonrep_walk(g, a, b, *walk));
      }
  }
}

TEST_CASE("nr graph size is linear in the number of flags") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    oracle::GraphShape shape{8, 20, 5, round % 2 == 0, true};
    const auto g = oracle::random_graph(rng, shape);
    const NrGraph nr = build_nr(g);
    long labels = 0;
    for (int v = 0; v < g.vertex_count(); ++v) labels += static_cast<long>(nr.ports(v).size());
    const long connectors = g.directed() ? g.edge_count() : 2L * g.edge_count();
    CHECK(nr.node_count() <= kGadgetNodesPerLabel * labels);
    CHECK(nr.arc_count() <= kGadgetArcsPerLabel * labels + connectors);
    for (const Traversal& t : oracle::traversals(g)) {
      const int arc = nr.connector(t);
      REQUIRE(arc >= 0);
      CHECK(nr.traversal_of_arc(arc) == t);
      const auto [from, to] = nr.digraph().arc(arc);
      CHECK(nr.origin(from).vertex == g.tail(t));
      CHECK(nr.origin(from).side == NodeSide::out);
      CHECK(nr.origin(from).label == g.tail_label(t));
      CHECK(nr.origin(to).vertex == g.head(t));
      CHECK(nr.origin(to).side == NodeSide::in);
    }
  }
}

TEST_CASE("identity labels turn nonrepetitive walks into non-reversing walks") {
  FlagLabeledGraph single(Directedness::undirected, 2);
  single.add_edge(0, 1, 0);
  CHECK(cyclic_edges(no_reversal_view(single)).empty());

  FlagLabeledGraph tri(Directedness::undirected, 3);
  tri.add_edge(0, 1, 0);
  tri.add_edge(1, 2, 0);
  tri.add_edge(2, 0, 0);
  CHECK(cyclic_edges(no_reversal_view(tri)) == std::vector<int>{0, 1, 2});

  FlagLabeledGraph d(Directedness::directed, 2);
  d.add_edge(0, 1, 0);
  CHECK_THROWS_AS(no_reversal_view(d), GraphError);

  // Oracle: states are traversals, a step may use any other edge.
  std::mt19937_64 rng(8);
  for (int round = 0; round < 200; ++round) {
    oracle::GraphShape shape{7, 10, 1, false, false};
    const auto g = oracle::random_graph(rng, shape);
    const auto view = no_reversal_view(g);
    std::set<int> want;
    const auto all = oracle::traversals(g);
    std::map<Traversal, std::vector<Traversal>> next;
    for (const Traversal& a : all) next[a];
    for (const Traversal& a : all)
      for (const Traversal& b : all)
        if (g.tail(b) == g.head(a) && b.edge != a.edge) next[a].push_back(b);
    for (const Traversal& a : all) {
      if (oracle::closure(next, next[a]).count(a)) want.insert(a.edge);
    }
    const auto got = cyclic_edges(view);
    CHECK(std::set<int>(got.begin(), got.end()) == want);
  }
}

}
