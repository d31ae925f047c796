#include "nonrep/simple_paths.hpp"

#include <algorithm>
#include <set>

#include "nonrep/matching.hpp"

namespace nonrep {

UspGraph build_usp(const FlagLabeledGraph& g) {
  if (g.directed()) throw GraphError("usp reduction needs an undirected graph");
  if (g.has_self_loop()) throw GraphError("self-loops are not supported by nonrepetitive analysis");
  UspGraph usp;
  FlagLabeledGraph& h = usp.graph;
  const int zero = h.intern_label("0");
  const int one = h.intern_label("1");

  std::vector<int> port0(static_cast<std::size_t>(2 * g.edge_count()), -1);
  usp.center.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int center = h.add_vertex();
    usp.center[static_cast<std::size_t>(v)] = center;
    usp.original_vertex.push_back(v);
    for (const LabelGroup& group : group_flags_by_label(g, v)) {
      const int a0 = h.add_vertex();
      const int a1 = h.add_vertex();
      usp.original_vertex.push_back(v);
      usp.original_vertex.push_back(v);
      h.add_edge(center, a0, one);
      h.add_edge(center, a1, zero);
      h.add_edge(a0, a1, one);
      usp.original_edge.insert(usp.original_edge.end(), 3, -1);
      for (const Flag& f : group.flags) port0[static_cast<std::size_t>(2 * f.edge + f.end)] = a0;
    }
  }
  for (const FlagEdge& e : g.edges()) {
    h.add_edge(port0[static_cast<std::size_t>(2 * e.id)], port0[static_cast<std::size_t>(2 * e.id + 1)], zero);
    usp.original_edge.push_back(e.id);
  }
  return usp;
}

SkewSymmetricGraph::SkewSymmetricGraph(int pair_count, int source) : source_(source) {
  if (pair_count < 0) throw GraphError("negative pair count");
  for (int i = 0; i < pair_count; ++i) add_pair();
  if (pair_count > 0) set_source(source);
}

void SkewSymmetricGraph::set_source(int s) {
  if (s < 0 || s >= node_count()) throw GraphError("source out of range");
  source_ = s;
}

int SkewSymmetricGraph::add_pair() {
  const int a = node_count();
  sigma_.push_back(a + 1);
  sigma_.push_back(a);
  out_.emplace_back();
  out_.emplace_back();
  return a;
}

void SkewSymmetricGraph::insert(int a, int b) {
  auto& succ = out_[static_cast<std::size_t>(a)];
  if (std::find(succ.begin(), succ.end(), b) == succ.end()) succ.push_back(b);
}

void SkewSymmetricGraph::add_arc(int a, int b) {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) throw GraphError("arc endpoint out of range");
  insert(a, b);
  insert(sigma(b), sigma(a));
}

bool SkewSymmetricGraph::has_arc(int a, int b) const {
  const auto& succ = successors(a);
  return std::find(succ.begin(), succ.end(), b) != succ.end();
}

std::vector<std::pair<int, int>> SkewSymmetricGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < node_count(); ++a)
    for (int b : successors(a)) out.emplace_back(a, b);
  return out;
}

bool SkewSymmetricGraph::valid() const {
  for (int v = 0; v < node_count(); ++v) {
    const int s = sigma(v);
    if (s == v || s < 0 || s >= node_count() || sigma(s) != v) return false;
  }
  for (const auto& [a, b] : arcs())
    if (!has_arc(sigma(b), sigma(a))) return false;
  return true;
}

SsgGraph build_ssg(const FlagLabeledGraph& binary, int p, int q, int start_label, int end_label) {
  if (binary.directed()) throw GraphError("ssg construction needs an undirected graph");
  if (!binary.contains(p) || !binary.contains(q)) throw GraphError("unknown endpoint");
  if (p == q) throw GraphError("ssg endpoints must differ");
  if ((start_label != 0 && start_label != 1) || (end_label != 0 && end_label != 1))
    throw GraphError("endpoint labels must be 0 or 1");
  const int n = binary.vertex_count();
  SsgGraph out{SkewSymmetricGraph(n + 1, 2 * n), n};
  SkewSymmetricGraph& ssg = out.ssg;
  auto node = [](int v, int i) { return 2 * v + i; };
  for (const FlagEdge& e : binary.edges()) {
    if (e.label_u != e.label_v || (e.label_u != 0 && e.label_u != 1))
      throw GraphError("ssg construction needs edge labels in {0,1}");
    if (e.is_loop()) throw GraphError("self-loops are not supported by nonrepetitive analysis");
    // Arriving at a vertex by label i lands on (vertex, i); leaving (v, i)
    // uses an edge labeled 1 - i.
    if (e.label_u == 0)
      ssg.add_arc(node(e.u, 1), node(e.v, 0));
    else
      ssg.add_arc(node(e.u, 0), node(e.v, 1));
  }
  const int s = 2 * n;
  ssg.add_arc(s, node(p, 1 - start_label));
  ssg.add_arc(node(q, end_label), ssg.sigma(s));
  return out;
}

RReachResult r_reachable(const SkewSymmetricGraph& ssg) {
  const int n = ssg.node_count();
  if (n == 0) return {};
  const int s = ssg.source();
  const int sbar = ssg.sigma(s);

  // Each node x outside s's pair becomes a matching vertex port[x]; the pair
  // is joined by a seed edge. An arc a->b becomes the edge {port[a],
  // port[sigma(b)]}, shared with its mirror. s is split into two free copies
  // so that an augmenting path between them is exactly a regular s..sigma(s)
  // path.
  std::vector<int> port(static_cast<std::size_t>(n), -1);
  std::vector<int> node_of;
  for (int x = 0; x < n; ++x) {
    if (x == s || x == sbar) continue;
    port[static_cast<std::size_t>(x)] = static_cast<int>(node_of.size());
    node_of.push_back(x);
  }
  const int s1 = static_cast<int>(node_of.size());
  const int s2 = s1 + 1;
  const int h_nodes = s1 + 2;

  std::set<std::pair<int, int>> edge_set;
  auto add = [&](int a, int b) { edge_set.emplace(std::min(a, b), std::max(a, b)); };
  for (const auto& [a, b] : ssg.arcs()) {
    if (a == b) continue;
    const int x = a;
    const int y = ssg.sigma(b);
    if (x == sbar || y == sbar) continue;
    if (x == s && y == s) {
      add(s1, s2);
    } else if (x == s || y == s) {
      const int other = port[static_cast<std::size_t>(x == s ? y : x)];
      add(s1, other);
      add(s2, other);
    } else if (x != y && ssg.sigma(x) != y) {
      add(port[static_cast<std::size_t>(x)], port[static_cast<std::size_t>(y)]);
    }
  }
  std::vector<std::pair<int, int>> seed;
  for (int x : node_of) {
    const int mx = port[static_cast<std::size_t>(x)];
    const int my = port[static_cast<std::size_t>(ssg.sigma(x))];
    if (mx < my) seed.emplace_back(mx, my);
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  edges.insert(edges.end(), seed.begin(), seed.end());

  GeneralMatcher matcher(h_nodes, edges);
  matcher.set_matching(seed);
  if (!matcher.augment_from(s1)) return {};

  RReachResult result;
  result.reachable = true;
  result.path.push_back(s);
  const auto& mate = matcher.mate();
  int cur = s1;
  for (int guard = 0; guard <= h_nodes; ++guard) {
    const int next = mate[static_cast<std::size_t>(cur)];
    if (next == s2) {
      result.path.push_back(sbar);
      return result;
    }
    // Edge {port(prev), port(y)} is the arc prev -> sigma(y).
    const int reached = ssg.sigma(node_of[static_cast<std::size_t>(next)]);
    result.path.push_back(reached);
    cur = port[static_cast<std::size_t>(reached)];
  }
  throw std::logic_error("r-reachability witness did not terminate");
}

namespace {

// Converts an ssg witness over usp(G) into traversals of G, oriented p -> q.
std::vector<Traversal> project_witness(const FlagLabeledGraph& g, const UspGraph& usp,
                                       const std::vector<int>& ssg_path, int p_center) {
  const FlagLabeledGraph& h = usp.graph;
  std::vector<std::pair<int, int>> states;  // (usp vertex, arrival label)
  for (std::size_t i = 1; i + 1 < ssg_path.size(); ++i)
    states.emplace_back(ssg_path[i] / 2, ssg_path[i] % 2);

  std::vector<Traversal> usp_steps;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    const auto [a, unused] = states[i];
    const auto [b, label] = states[i + 1];
    (void)unused;
    bool found = false;
    for (const Flag& f : h.flags(a)) {
      const FlagEdge& e = h.edge(f.edge);
      if (h.opposite(f) != b || e.label_u != label) continue;
      usp_steps.push_back(Traversal{f.edge, f.end == 1});
      found = true;
      break;
    }
    if (!found) throw std::logic_error("ssg witness uses an arc with no usp edge");
  }

  std::vector<Traversal> path;
  for (const Traversal& t : usp_steps) {
    const int original = usp.original_edge[static_cast<std::size_t>(t.edge)];
    if (original >= 0) path.push_back(Traversal{original, t.reversed});
  }
  if (!states.empty() && states.front().first != p_center) {
    std::reverse(path.begin(), path.end());
    for (Traversal& t : path) t.reversed = !t.reversed;
  }
  (void)g;
  return path;
}

}  // namespace

SimplePathResult nonrep_simple_path_exists(const FlagLabeledGraph& g, int p, int q) {
  if (g.directed())
    throw GraphError("simple nonrepetitive paths are only decided for undirected graphs");
  if (!g.contains(p) || !g.contains(q)) throw GraphError("unknown vertex");
  if (p == q) return SimplePathResult{true, {}};
  const UspGraph usp = build_usp(g);
  const int pc = usp.center[static_cast<std::size_t>(p)];
  const int qc = usp.center[static_cast<std::size_t>(q)];
  for (int start = 0; start < 2; ++start) {
    for (int end = 0; end < 2; ++end) {
      const SsgGraph ssg = build_ssg(usp.graph, pc, qc, start, end);
      const RReachResult r = r_reachable(ssg.ssg);
      if (r.reachable) return SimplePathResult{true, project_witness(g, usp, r.path, pc)};
    }
  }
  return {};
}

std::vector<int> simple_cycle_edges(const FlagLabeledGraph& g) {
  if (g.directed())
    throw GraphError("simple nonrepetitive cycles are only decided for undirected graphs");
  std::vector<int> out;
  for (const FlagEdge& e : g.edges()) {
    if (e.is_loop()) continue;
    FlagLabeledGraph rest(Directedness::undirected, g.vertex_count());
    for (const FlagEdge& f : g.edges()) {
      if (f.is_loop()) continue;
      const bool clashes_at_u = (f.u == e.u && f.label_u == e.label_u) || (f.v == e.u && f.label_v == e.label_u);
      const bool clashes_at_v = (f.u == e.v && f.label_u == e.label_v) || (f.v == e.v && f.label_v == e.label_v);
      if (clashes_at_u || clashes_at_v) continue;
      rest.add_flag_edge(f.u, f.v, f.label_u, f.label_v);
    }
    if (nonrep_simple_path_exists(rest, e.u, e.v).exists) out.push_back(e.id);
  }
  return out;
}

namespace {

// Edge blocks (biconnected components) of the alive subgraph.
std::vector<std::vector<int>> edge_blocks(const FlagLabeledGraph& g, const std::vector<char>& alive) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t pos;
  };
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto flags = g.flags(top.v);
      if (top.pos < flags.size()) {
        const Flag f = flags[top.pos++];
        if (f.edge == top.parent_edge || !alive[static_cast<std::size_t>(f.edge)]) continue;
        const int w = g.opposite(f);
        const int v = top.v;
        if (disc[static_cast<std::size_t>(w)] == -1) {
          edge_stack.push_back(f.edge);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back(Frame{w, f.edge, 0});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
          edge_stack.push_back(f.edge);
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) continue;
      const int parent = stack.back().v;
      low[static_cast<std::size_t>(parent)] =
          std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
      if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent)]) {
        std::vector<int> block;
        int e;
        do {
          e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
        } while (e != done.parent_edge);
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

}  // namespace

bool has_nonrep_simple_cycle(const FlagLabeledGraph& g) {
  if (g.directed()) throw GraphError("cycle peeling needs an undirected graph");
  if (!g.edge_labeled()) throw GraphError("cycle peeling needs an edge-labeled graph");
  std::vector<char> alive(static_cast<std::size_t>(g.edge_count()), 1);
  for (const FlagEdge& e : g.edges())
    if (e.is_loop()) alive[static_cast<std::size_t>(e.id)] = 0;

  // A simple cycle stays inside one block, so a vertex whose edges within a
  // block all carry one label cannot lie on a nonrepetitive cycle of that
  // block. Bridges are single-edge blocks and fall out the same way.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& block : edge_blocks(g, alive)) {
      std::vector<std::pair<int, int>> first_label;  // vertex -> label, -2 = mixed
      auto note = [&](int v, int label) {
        for (auto& [x, l] : first_label) {
          if (x != v) continue;
          if (l != label) l = -2;
          return;
        }
        first_label.emplace_back(v, label);
      };
      for (int e : block) {
        note(g.edge(e).u, g.edge(e).label_u);
        note(g.edge(e).v, g.edge(e).label_v);
      }
      for (int e : block) {
        const FlagEdge& edge = g.edge(e);
        for (const auto& [x, l] : first_label) {
          if (l != -2 && (x == edge.u || x == edge.v)) {
            alive[static_cast<std::size_t>(e)] = 0;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return std::any_of(alive.begin(), alive.end(), [](char a) { return a != 0; });
}

}  // namespace nonrep
