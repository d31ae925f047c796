#include "nonrep/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nonrep/graph.hpp"

namespace nonrep {

void BipartiteInstance::validate() const {
  if (left_size < 0 || right_size < 0) throw std::invalid_argument("negative side size");
  std::set<std::pair<int, int>> seen;
  for (const auto& [l, r] : edges) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
      throw std::invalid_argument("bipartite edge index out of range");
    if (!seen.emplace(l, r).second) throw std::invalid_argument("duplicate bipartite edge");
  }
}

namespace {

class Kuhn {
public:
  Kuhn(const BipartiteInstance& inst, int skip_edge)
      : inst_(inst), adj_(static_cast<std::size_t>(inst.left_size)),
        match_right_(static_cast<std::size_t>(inst.right_size), -1),
        match_left_(static_cast<std::size_t>(inst.left_size), -1) {
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
      if (static_cast<int>(i) != skip_edge)
        adj_[static_cast<std::size_t>(inst.edges[i].first)].push_back(static_cast<int>(i));
  }

  int run() {
    int size = 0;
    for (int l = 0; l < inst_.left_size; ++l) {
      visited_.assign(static_cast<std::size_t>(inst_.right_size), 0);
      if (try_augment(l)) ++size;
    }
    return size;
  }

  const std::vector<int>& left_edge() const { return match_left_; }

private:
  // Iterative DFS over alternating paths.
  bool try_augment(int root) {
    struct Frame {
      int left;
      std::size_t pos;
      int via_edge;
    };
    std::vector<Frame> stack{{root, 0, -1}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& edges = adj_[static_cast<std::size_t>(top.left)];
      if (top.pos == edges.size()) {
        stack.pop_back();
        continue;
      }
      const int e = edges[top.pos++];
      const int r = inst_.edges[static_cast<std::size_t>(e)].second;
      if (visited_[static_cast<std::size_t>(r)]) continue;
      visited_[static_cast<std::size_t>(r)] = 1;
      const int owner = match_right_[static_cast<std::size_t>(r)];
      if (owner < 0) {
        // Flip along the stack.
        int edge = e;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          const int right = inst_.edges[static_cast<std::size_t>(edge)].second;
          match_right_[static_cast<std::size_t>(right)] = edge;
          match_left_[static_cast<std::size_t>(it->left)] = edge;
          edge = it->via_edge;
        }
        return true;
      }
      const int next_left = inst_.edges[static_cast<std::size_t>(owner)].first;
      stack.push_back(Frame{next_left, 0, e});
    }
    return false;
  }

  const BipartiteInstance& inst_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;  // right -> edge index
  std::vector<int> match_left_;   // left -> edge index
  std::vector<char> visited_;
};

}  // namespace

std::vector<int> max_bipartite_matching(const BipartiteInstance& inst) {
  inst.validate();
  Kuhn kuhn(inst, -1);
  kuhn.run();
  std::vector<int> out;
  for (int e : kuhn.left_edge())
    if (e >= 0) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeClassification classify_edges(const BipartiteInstance& inst, bool find_mandatory) {
  inst.validate();
  if (inst.left_size == 0 && inst.right_size == 0) throw std::invalid_argument("empty bipartite instance");
  EdgeClassification result;
  result.classes.assign(inst.edges.size(), EdgeClass::optional);

  Kuhn kuhn(inst, -1);
  result.matching_size = kuhn.run();
  result.perfect = result.matching_size == inst.left_size && result.matching_size == inst.right_size;
  std::vector<char> matched(inst.edges.size(), 0);
  for (int e : kuhn.left_edge())
    if (e >= 0) matched[static_cast<std::size_t>(e)] = 1;

  if (result.perfect) {
    Digraph oriented(inst.left_size + inst.right_size);
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      const int l = inst.edges[i].first;
      const int r = inst.left_size + inst.edges[i].second;
      if (matched[i])
        oriented.add_arc(l, r);
      else
        oriented.add_arc(r, l);
    }
    const SccResult scc = strongly_connected_components(oriented);
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      if (matched[i]) continue;
      const int l = inst.edges[i].first;
      const int r = inst.left_size + inst.edges[i].second;
      if (scc.component[static_cast<std::size_t>(l)] != scc.component[static_cast<std::size_t>(r)])
        result.classes[i] = EdgeClass::forbidden;
    }
  } else {
    // An unmatched edge belongs to some maximum matching iff forcing it keeps
    // the matching size.
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      if (matched[i]) continue;
      const auto [l, r] = inst.edges[i];
      BipartiteInstance rest{inst.left_size, inst.right_size, {}};
      for (const auto& e : inst.edges)
        if (e.first != l && e.second != r) rest.edges.push_back(e);
      if (Kuhn(rest, -1).run() + 1 < result.matching_size) result.classes[i] = EdgeClass::forbidden;
    }
  }

  for (std::size_t i = 0; i < inst.edges.size() && find_mandatory; ++i) {
    if (!matched[i]) continue;
    if (Kuhn(inst, static_cast<int>(i)).run() < result.matching_size)
      result.classes[i] = EdgeClass::mandatory;
  }
  return result;
}

GeneralMatcher::GeneralMatcher(int vertex_count, std::span<const std::pair<int, int>> edges)
    : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count)),
      mate_(static_cast<std::size_t>(vertex_count), -1), parent_(static_cast<std::size_t>(vertex_count)),
      base_(static_cast<std::size_t>(vertex_count)), used_(static_cast<std::size_t>(vertex_count)) {
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::invalid_argument("matching edge out of range");
    if (a == b) continue;
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
}

void GeneralMatcher::set_matching(std::span<const std::pair<int, int>> pairs) {
  std::fill(mate_.begin(), mate_.end(), -1);
  for (const auto& [a, b] : pairs) {
    const auto& nb = adj_.at(static_cast<std::size_t>(a));
    if (std::find(nb.begin(), nb.end(), b) == nb.end()) throw std::invalid_argument("seed pair is not an edge");
    if (mate_[static_cast<std::size_t>(a)] != -1 || mate_[static_cast<std::size_t>(b)] != -1)
      throw std::invalid_argument("seed pairs overlap");
    mate_[static_cast<std::size_t>(a)] = b;
    mate_[static_cast<std::size_t>(b)] = a;
  }
}

int GeneralMatcher::size() const noexcept {
  int matched = 0;
  for (int m : mate_)
    if (m >= 0) ++matched;
  return matched / 2;
}

int GeneralMatcher::lowest_common_ancestor(int a, int b) const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (;;) {
    a = base_[static_cast<std::size_t>(a)];
    seen[static_cast<std::size_t>(a)] = 1;
    if (mate_[static_cast<std::size_t>(a)] == -1) break;
    a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
  }
  for (;;) {
    b = base_[static_cast<std::size_t>(b)];
    if (seen[static_cast<std::size_t>(b)]) return b;
    b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
  }
}

void GeneralMatcher::mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
  while (base_[static_cast<std::size_t>(v)] != b) {
    const int m = mate_[static_cast<std::size_t>(v)];
    in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
    in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(m)])] = 1;
    parent_[static_cast<std::size_t>(v)] = child;
    child = m;
    v = parent_[static_cast<std::size_t>(m)];
  }
}

// Returns the free vertex ending an augmenting path from root, or -1.
int GeneralMatcher::find_path(int root) {
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), -1);
  for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
  used_[static_cast<std::size_t>(root)] = 1;
  queue_.assign(1, root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int v = queue_[head];
    for (int to : adj_[static_cast<std::size_t>(v)]) {
      if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
          mate_[static_cast<std::size_t>(v)] == to)
        continue;
      if (to == root ||
          (mate_[static_cast<std::size_t>(to)] != -1 &&
           parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != -1)) {
        const int cur = lowest_common_ancestor(v, to);
        std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
        mark_path(v, cur, to, in_blossom);
        mark_path(to, cur, v, in_blossom);
        for (int i = 0; i < n_; ++i) {
          if (!in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) continue;
          base_[static_cast<std::size_t>(i)] = cur;
          if (!used_[static_cast<std::size_t>(i)]) {
            used_[static_cast<std::size_t>(i)] = 1;
            queue_.push_back(i);
          }
        }
      } else if (parent_[static_cast<std::size_t>(to)] == -1) {
        parent_[static_cast<std::size_t>(to)] = v;
        if (mate_[static_cast<std::size_t>(to)] == -1) return to;
        const int next = mate_[static_cast<std::size_t>(to)];
        used_[static_cast<std::size_t>(next)] = 1;
        queue_.push_back(next);
      }
    }
  }
  return -1;
}

bool GeneralMatcher::augment_from(int root) {
  if (root < 0 || root >= n_) throw std::invalid_argument("root out of range");
  if (mate_[static_cast<std::size_t>(root)] != -1) return false;
  int v = find_path(root);
  if (v == -1) return false;
  while (v != -1) {
    const int pv = parent_[static_cast<std::size_t>(v)];
    const int ppv = mate_[static_cast<std::size_t>(pv)];
    mate_[static_cast<std::size_t>(v)] = pv;
    mate_[static_cast<std::size_t>(pv)] = v;
    v = ppv;
  }
  return true;
}

int GeneralMatcher::solve() {
  for (int v = 0; v < n_; ++v)
    if (mate_[static_cast<std::size_t>(v)] == -1) augment_from(v);
  return size();
}

std::vector<int> max_general_matching(int vertex_count, std::span<const std::pair<int, int>> edges) {
  GeneralMatcher matcher(vertex_count, edges);
  matcher.solve();
  return matcher.mate();
}

}  // namespace nonrep
