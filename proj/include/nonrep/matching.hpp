#pragma once

#include <span>
#include <utility>
#include <vector>

namespace nonrep {

struct BipartiteInstance {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> edges;  // (left, right)

  /// Throws std::invalid_argument on out-of-range indices or duplicate edges.
  void validate() const;
};

/// Maximum-cardinality bipartite matching by augmenting paths, left vertices
/// scanned in index order and edges in input order. Returns indices into
/// `inst.edges`, sorted.
std::vector<int> max_bipartite_matching(const BipartiteInstance& inst);

enum class EdgeClass { mandatory, forbidden, optional };

struct EdgeClassification {
  std::vector<EdgeClass> classes;  // parallel to inst.edges
  /// False when no perfect matching exists; classes are then relative to
  /// maximum matchings instead.
  bool perfect = true;
  int matching_size = 0;
};

/// Perfect case: one matching oriented left->right on matched edges and
/// right->left otherwise; unmatched edges crossing strongly connected
/// components are forbidden. Mandatory edges are the matched ones whose removal
/// shrinks the maximum matching; with `find_mandatory` false they stay
/// optional. Throws std::invalid_argument when both sides are empty.
EdgeClassification classify_edges(const BipartiteInstance& inst, bool find_mandatory = true);

/// Edmonds' blossom-contraction matching on a general undirected graph.
/// mate()[v] is the partner of v or -1.
class GeneralMatcher {
public:
  GeneralMatcher(int vertex_count, std::span<const std::pair<int, int>> edges);

  /// Seeds the matching; pairs must be edges and vertex-disjoint.
  void set_matching(std::span<const std::pair<int, int>> pairs);
  /// One search for an augmenting path from a free `root`; true if augmented.
  bool augment_from(int root);
  /// Augments from every free vertex in index order until maximum.
  int solve();

  const std::vector<int>& mate() const noexcept { return mate_; }
  int size() const noexcept;

private:
  int lowest_common_ancestor(int a, int b) const;
  void mark_path(int v, int b, int child, std::vector<char>& in_blossom);
  int find_path(int root);

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<int> queue_;
};

/// Maximum matching of a simple undirected graph, as a mate vector.
std::vector<int> max_general_matching(int vertex_count, std::span<const std::pair<int, int>> edges);

}  // namespace nonrep
