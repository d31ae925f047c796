#include "nonrep/nr_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace nonrep {

namespace {

struct LabelNodes {
  std::vector<int> in;
  std::vector<int> out;
};

LabelNodes fresh_label_nodes(Digraph& d, int k) {
  LabelNodes nodes;
  for (int x = 0; x < k; ++x) nodes.in.push_back(d.add_node());
  for (int x = 0; x < k; ++x) nodes.out.push_back(d.add_node());
  return nodes;
}

// Labels 2i and 2i+1 are paired: each reaches its partner's out-node directly
// and every other out-node through a gadget over ceil(k/2) pair labels. An
// unpaired last label only goes through the inner gadget.
LabelNodes build_linear(Digraph& d, int k) {
  LabelNodes nodes = fresh_label_nodes(d, k);
  if (k == 1) return nodes;
  if (k == 2) {
    d.add_arc(nodes.in[0], nodes.out[1]);
    d.add_arc(nodes.in[1], nodes.out[0]);
    return nodes;
  }
  const LabelNodes inner = build_linear(d, (k + 1) / 2);
  for (int x = 0; x < k; ++x) {
    const int partner = x ^ 1;
    const int pair = x / 2;
    if (partner < k) d.add_arc(nodes.in[x], nodes.out[partner]);
    d.add_arc(nodes.in[x], inner.in[pair]);
    d.add_arc(inner.out[pair], nodes.out[x]);
  }
  return nodes;
}

LabelNodes build_quadratic(Digraph& d, int k) {
  LabelNodes nodes = fresh_label_nodes(d, k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (x != y) d.add_arc(nodes.in[x], nodes.out[y]);
  return nodes;
}

LabelNodes build_into(Digraph& d, int k, GadgetKind kind) {
  return kind == GadgetKind::linear ? build_linear(d, k) : build_quadratic(d, k);
}

}  // namespace

Gadget build_reachability_gadget(int k, GadgetKind kind) {
  if (k < 1) throw GraphError("gadget needs at least one label");
  Digraph d;
  LabelNodes nodes = build_into(d, k, kind);
  Gadget gadget;
  gadget.k = k;
  gadget.in_nodes = std::move(nodes.in);
  gadget.out_nodes = std::move(nodes.out);
  gadget.node_count = d.node_count();
  gadget.arcs.assign(d.arcs().begin(), d.arcs().end());
  return gadget;
}

int NrGraph::connector(Traversal t) const {
  const auto slot = static_cast<std::size_t>(2 * t.edge + (t.reversed ? 1 : 0));
  return slot < connector_.size() ? connector_[slot] : -1;
}

std::optional<Traversal> NrGraph::traversal_of_arc(int arc) const {
  const Traversal& t = arc_traversal_.at(static_cast<std::size_t>(arc));
  if (t.edge < 0) return std::nullopt;
  return t;
}

std::optional<GadgetPort> NrGraph::port(int vertex, int label) const {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= ports_.size()) return std::nullopt;
  for (const GadgetPort& p : ports_[static_cast<std::size_t>(vertex)])
    if (p.label == label) return p;
  return std::nullopt;
}

NrGraph build_nr(const FlagLabeledGraph& g, GadgetKind kind) {
  if (g.has_self_loop()) throw GraphError("self-loops are not supported by nonrepetitive analysis");
  NrGraph nr;
  nr.kind_ = kind;
  nr.ports_.resize(static_cast<std::size_t>(g.vertex_count()));
  // (edge, end) -> port index at that endpoint
  std::vector<int> flag_port(static_cast<std::size_t>(2 * g.edge_count()), -1);

  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto groups = group_flags_by_label(g, v);
    if (groups.empty()) continue;
    const LabelNodes nodes = build_into(nr.digraph_, static_cast<int>(groups.size()), kind);
    nr.origin_.resize(static_cast<std::size_t>(nr.digraph_.node_count()), NodeOrigin{v, -1, NodeSide::internal});
    auto& ports = nr.ports_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const int label = groups[i].label;
      ports.push_back(GadgetPort{label, nodes.in[i], nodes.out[i]});
      nr.origin_[static_cast<std::size_t>(nodes.in[i])] = NodeOrigin{v, label, NodeSide::in};
      nr.origin_[static_cast<std::size_t>(nodes.out[i])] = NodeOrigin{v, label, NodeSide::out};
      for (const Flag& f : groups[i].flags)
        flag_port[static_cast<std::size_t>(2 * f.edge + f.end)] = static_cast<int>(i);
    }
  }
  nr.arc_traversal_.assign(static_cast<std::size_t>(nr.digraph_.arc_count()), Traversal{-1, false});

  nr.connector_.assign(static_cast<std::size_t>(2 * g.edge_count()), -1);
  auto connect = [&](Traversal t) {
    const FlagEdge& e = g.edge(t.edge);
    const int tail_end = t.reversed ? 1 : 0;
    const int tail = e.endpoint(tail_end);
    const int head = e.endpoint(1 - tail_end);
    const int tail_port = flag_port[static_cast<std::size_t>(2 * t.edge + tail_end)];
    const int head_port = flag_port[static_cast<std::size_t>(2 * t.edge + 1 - tail_end)];
    const int from = nr.ports_[static_cast<std::size_t>(tail)][static_cast<std::size_t>(tail_port)].out_node;
    const int to = nr.ports_[static_cast<std::size_t>(head)][static_cast<std::size_t>(head_port)].in_node;
    const int arc = nr.digraph_.add_arc(from, to);
    nr.connector_[static_cast<std::size_t>(2 * t.edge + (t.reversed ? 1 : 0))] = arc;
    nr.arc_traversal_.push_back(t);
  };
  for (const FlagEdge& e : g.edges()) {
    connect(Traversal{e.id, false});
    if (!g.directed()) connect(Traversal{e.id, true});
  }
  return nr;
}

std::vector<Traversal> cyclic_traversals(const FlagLabeledGraph& g, const NrGraph& nr) {
  const SccResult scc = strongly_connected_components(nr.digraph());
  std::vector<Traversal> out;
  for (const FlagEdge& e : g.edges()) {
    for (bool reversed : {false, true}) {
      const int arc = nr.connector(Traversal{e.id, reversed});
      if (arc < 0) continue;
      const auto [from, to] = nr.digraph().arc(arc);
      if (scc.component[static_cast<std::size_t>(from)] == scc.component[static_cast<std::size_t>(to)])
        out.push_back(Traversal{e.id, reversed});
    }
  }
  return out;
}

std::vector<Traversal> cyclic_traversals(const FlagLabeledGraph& g, GadgetKind kind) {
  return cyclic_traversals(g, build_nr(g, kind));
}

std::vector<std::pair<int, int>> closed_walk_turns(const NrGraph& nr, const SccResult& scc, int v) {
  std::vector<std::pair<int, int>> out;
  const auto ports = nr.ports(v);
  for (const GadgetPort& a : ports)
    for (const GadgetPort& b : ports)
      if (a.label != b.label && scc.component[static_cast<std::size_t>(a.in_node)] ==
                                    scc.component[static_cast<std::size_t>(b.out_node)])
        out.push_back({a.label, b.label});
  return out;
}

std::vector<int> cyclic_edges(const FlagLabeledGraph& g, GadgetKind kind) {
  std::vector<int> ids;
  for (const Traversal& t : cyclic_traversals(g, kind))
    if (ids.empty() || ids.back() != t.edge) ids.push_back(t.edge);
  return ids;
}

std::vector<ReachedEdge> reachable_edges(const FlagLabeledGraph& g, const NrGraph& nr, int v,
                                         int label) {
  if (!g.contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
  const auto start = nr.port(v, label);
  if (!start) return {};
  const int source = start->out_node;
  const std::vector<char> seen = reachable_nodes(nr.digraph(), std::span<const int>(&source, 1));
  std::vector<ReachedEdge> out;
  for (const FlagEdge& e : g.edges()) {
    for (bool reversed : {false, true}) {
      const Traversal t{e.id, reversed};
      const int arc = nr.connector(t);
      if (arc < 0 || !seen[static_cast<std::size_t>(nr.digraph().arc(arc).first)]) continue;
      out.push_back(ReachedEdge{e.id, reversed, g.head_label(t)});
    }
  }
  return out;
}

std::vector<ReachedEdge> reachable_edges(const FlagLabeledGraph& g, int v, int label,
                                         GadgetKind kind) {
  return reachable_edges(g, build_nr(g, kind), v, label);
}

std::optional<std::vector<Traversal>> shortest_nonrepetitive_path(const FlagLabeledGraph& g,
                                                                  int src, int dst) {
  if (!g.contains(src) || !g.contains(dst)) throw GraphError("unknown vertex");
  if (src == dst) return std::vector<Traversal>{};
  const NrGraph nr = build_nr(g);
  const Digraph& d = nr.digraph();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(d.node_count()), kInf);
  std::vector<int> via(static_cast<std::size_t>(d.node_count()), -1);
  std::deque<int> queue;
  for (const GadgetPort& p : nr.ports(src)) {
    dist[static_cast<std::size_t>(p.out_node)] = 0;
    queue.push_back(p.out_node);
  }
  // 0-1 BFS: connector arcs cost one edge of G, gadget arcs cost nothing.
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int arc : d.out_arcs(a)) {
      const int b = d.arc(arc).second;
      const int w = nr.traversal_of_arc(arc) ? 1 : 0;
      const int nd = dist[static_cast<std::size_t>(a)] + w;
      if (nd < dist[static_cast<std::size_t>(b)]) {
        dist[static_cast<std::size_t>(b)] = nd;
        via[static_cast<std::size_t>(b)] = arc;
        if (w == 0)
          queue.push_front(b);
        else
          queue.push_back(b);
      }
    }
  }
  int best = -1;
  for (const GadgetPort& p : nr.ports(dst)) {
    const int node = p.in_node;
    if (dist[static_cast<std::size_t>(node)] == kInf) continue;
    if (best < 0 || dist[static_cast<std::size_t>(node)] < dist[static_cast<std::size_t>(best)]) best = node;
  }
  if (best < 0) return std::nullopt;
  std::vector<Traversal> path;
  for (int node = best; via[static_cast<std::size_t>(node)] >= 0;) {
    const int arc = via[static_cast<std::size_t>(node)];
    if (auto t = nr.traversal_of_arc(arc)) path.push_back(*t);
    node = d.arc(arc).first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<Traversal>> nonrepetitive_walk(const FlagLabeledGraph& g, const NrGraph& nr,
                                                         int v, int label, Traversal last) {
  if (!g.contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
  const auto start = nr.port(v, label);
  const int target_arc = nr.connector(last);
  if (!start || target_arc < 0) return std::nullopt;
  const Digraph& d = nr.digraph();
  const int target = d.arc(target_arc).first;
  std::vector<int> via(static_cast<std::size_t>(d.node_count()), -1);
  std::vector<char> seen(static_cast<std::size_t>(d.node_count()), 0);
  std::deque<int> queue{start->out_node};
  seen[static_cast<std::size_t>(start->out_node)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(target)]) {
    const int a = queue.front();
    queue.pop_front();
    for (int arc : d.out_arcs(a)) {
      const int b = d.arc(arc).second;
      if (seen[static_cast<std::size_t>(b)]) continue;
      seen[static_cast<std::size_t>(b)] = 1;
      via[static_cast<std::size_t>(b)] = arc;
      queue.push_back(b);
    }
  }
  if (!seen[static_cast<std::size_t>(target)]) return std::nullopt;
  std::vector<Traversal> path{last};
  for (int node = target; via[static_cast<std::size_t>(node)] >= 0;) {
    const int arc = via[static_cast<std::size_t>(node)];
    if (auto t = nr.traversal_of_arc(arc)) path.push_back(*t);
    node = d.arc(arc).first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

FlagLabeledGraph no_reversal_view(const FlagLabeledGraph& g) {
  if (g.directed()) throw GraphError("no-reversal view needs an undirected graph");
  FlagLabeledGraph view(Directedness::undirected);
  for (int v = 0; v < g.vertex_count(); ++v) view.add_vertex(g.vertex_name(v));
  for (const FlagEdge& e : g.edges()) {
    const int label = view.intern_label("e" + std::to_string(e.id));
    view.add_edge(e.u, e.v, label);
  }
  return view;
}

}  // namespace nonrep
