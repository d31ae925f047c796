#include "nonrep/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace nonrep {

namespace {

constexpr int kNoLabel = -1;

void check_bounds(const FlagLabeledGraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw GraphError("oracle bound exceeded: " + std::to_string(g.vertex_count()) + " vertices > " +
                     std::to_string(max_vertices));
  if (g.vertex_count() > 32) throw GraphError("oracle supports at most 32 vertices");
  if (g.has_self_loop()) throw GraphError("self-loops are not supported by nonrepetitive analysis");
}

struct Enumerator {
  const FlagLabeledGraph& g;
  std::vector<int> trail;
  std::vector<char> on_some;
  std::size_t count = 0;

  void record(int closing_edge) {
    ++count;
    for (int e : trail) on_some[static_cast<std::size_t>(e)] = 1;
    on_some[static_cast<std::size_t>(closing_edge)] = 1;
  }

  void paths(int v, std::uint32_t mask, int last, int q) {
    for (const Flag& f : g.flags(v)) {
      const auto t = g.leaving(f);
      if (!t || g.label_at(f) == last) continue;
      const int w = g.head(*t);
      if (mask & (1u << w)) continue;
      if (w == q) {
        record(t->edge);
        continue;
      }
      trail.push_back(t->edge);
      paths(w, mask | (1u << w), g.head_label(*t), q);
      trail.pop_back();
    }
  }

  // Cycles whose smallest vertex is `start`.
  void cycles(int start, int first_label, int v, std::uint32_t mask, int last) {
    for (const Flag& f : g.flags(v)) {
      const auto t = g.leaving(f);
      if (!t || g.label_at(f) == last) continue;
      const int w = g.head(*t);
      if (w == start) {
        const bool same_edge_back = trail.size() == 1 && trail.front() == t->edge;
        if (!trail.empty() && !same_edge_back && g.head_label(*t) != first_label) record(t->edge);
        continue;
      }
      if (w < start || (mask & (1u << w))) continue;
      trail.push_back(t->edge);
      cycles(start, first_label, w, mask | (1u << w), g.head_label(*t));
      trail.pop_back();
    }
  }
};

std::uint64_t state_key(std::uint32_t mask, int v, int last) {
  return static_cast<std::uint64_t>(mask) | (static_cast<std::uint64_t>(v) << 32) |
         (static_cast<std::uint64_t>(last + 1) << 40);
}

}  // namespace

OracleAnswer oracle_enumerate(const FlagLabeledGraph& g, OracleQuery query, int p, int q, int max_vertices) {
  check_bounds(g, max_vertices);
  Enumerator en{g, {}, std::vector<char>(static_cast<std::size_t>(g.edge_count()), 0), 0};
  if (query == OracleQuery::simple_paths) {
    if (!g.contains(p) || !g.contains(q)) throw GraphError("unknown endpoint");
    if (p == q) return OracleAnswer{1, {}};
    en.paths(p, 1u << p, kNoLabel, q);
  } else {
    for (int s = 0; s < g.vertex_count(); ++s) {
      for (const Flag& f : g.flags(s)) {
        const auto t = g.leaving(f);
        if (!t) continue;
        const int w = g.head(*t);
        if (w <= s) continue;
        en.trail.push_back(t->edge);
        en.cycles(s, g.label_at(f), w, (1u << s) | (1u << w), g.head_label(*t));
        en.trail.pop_back();
      }
    }
    if (!g.directed()) en.count /= 2;
  }
  OracleAnswer answer;
  answer.count = en.count;
  for (int e = 0; e < g.edge_count(); ++e)
    if (en.on_some[static_cast<std::size_t>(e)]) answer.edges.push_back(e);
  return answer;
}

std::vector<char> oracle_simple_reach(const FlagLabeledGraph& g, int p, int max_vertices) {
  check_bounds(g, max_vertices);
  if (!g.contains(p)) throw GraphError("unknown vertex");
  std::vector<char> reach(static_cast<std::size_t>(g.vertex_count()), 0);
  reach[static_cast<std::size_t>(p)] = 1;
  std::unordered_set<std::uint64_t> seen;
  struct State {
    std::uint32_t mask;
    int v;
    int last;
  };
  std::vector<State> todo{{1u << p, p, kNoLabel}};
  seen.insert(state_key(1u << p, p, kNoLabel));
  while (!todo.empty()) {
    const State s = todo.back();
    todo.pop_back();
    for (const Flag& f : g.flags(s.v)) {
      const auto t = g.leaving(f);
      if (!t || g.label_at(f) == s.last) continue;
      const int w = g.head(*t);
      if (s.mask & (1u << w)) continue;
      reach[static_cast<std::size_t>(w)] = 1;
      const State next{s.mask | (1u << w), w, g.head_label(*t)};
      if (seen.insert(state_key(next.mask, next.v, next.last)).second) todo.push_back(next);
    }
  }
  return reach;
}

std::vector<int> oracle_simple_cycle_edges(const FlagLabeledGraph& g, int max_vertices) {
  check_bounds(g, max_vertices);
  std::vector<int> out;
  for (const FlagEdge& e : g.edges()) {
    std::unordered_set<std::uint64_t> seen;
    struct State {
      std::uint32_t mask;
      int v;
      int last;
    };
    const std::uint32_t start_mask = (1u << e.u) | (1u << e.v);
    std::vector<State> todo{{start_mask, e.v, e.label_v}};
    bool found = false;
    while (!todo.empty() && !found) {
      const State s = todo.back();
      todo.pop_back();
      for (const Flag& f : g.flags(s.v)) {
        const auto t = g.leaving(f);
        if (!t || t->edge == e.id || g.label_at(f) == s.last) continue;
        const int w = g.head(*t);
        if (w == e.u) {
          if (g.head_label(*t) != e.label_u) {
            found = true;
            break;
          }
          continue;
        }
        if (s.mask & (1u << w)) continue;
        const State next{s.mask | (1u << w), w, g.head_label(*t)};
        if (seen.insert(state_key(next.mask, next.v, next.last)).second) todo.push_back(next);
      }
    }
    if (found) out.push_back(e.id);
  }
  return out;
}

}  // namespace nonrep
