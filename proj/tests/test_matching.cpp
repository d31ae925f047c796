#include <doctest.h>

#include <random>

#include "nonrep/matching.hpp"
#include "support/oracles.hpp"

using namespace nonrep;

namespace {

BipartiteInstance random_bipartite(std::mt19937_64& rng, int max_side, double density) {
  BipartiteInstance inst;
  inst.left_size = 1 + static_cast<int>(rng() % max_side);
  inst.right_size = rng() % 3 == 0 ? 1 + static_cast<int>(rng() % max_side) : inst.left_size;
  std::bernoulli_distribution keep(density);
  for (int l = 0; l < inst.left_size; ++l)
    for (int r = 0; r < inst.right_size; ++r)
      if (keep(rng)) inst.edges.emplace_back(l, r);
  std::shuffle(inst.edges.begin(), inst.edges.end(), rng);
  return inst;
}

int bipartite_brute(const BipartiteInstance& inst) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [l, r] : inst.edges) edges.emplace_back(l, inst.left_size + r);
  return oracle::brute_matching_size(inst.left_size + inst.right_size, edges);
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("bipartite matching size equals the brute-force maximum") {
  std::mt19937_64 rng(10);
  for (int round = 0; round < 300; ++round) {
    const auto inst = random_bipartite(rng, 6, 0.35);
    const auto m = max_bipartite_matching(inst);
    CHECK(static_cast<int>(m.size()) == bipartite_brute(inst));
    std::set<int> left, right;
    for (int e : m) {
      CHECK(left.insert(inst.edges[static_cast<std::size_t>(e)].first).second);
      CHECK(right.insert(inst.edges[static_cast<std::size_t>(e)].second).second);
    }
    CHECK(std::is_sorted(m.begin(), m.end()));
  }
}

TEST_CASE("edge classes match enumeration of perfect matchings") {
  std::mt19937_64 rng(12);
  int perfect_seen = 0;
  for (int round = 0; round < 400; ++round) {
    auto inst = random_bipartite(rng, 6, 0.5);
    inst.right_size = inst.left_size;
    std::erase_if(inst.edges, [&](const auto& e) { return e.second >= inst.right_size; });
    if (inst.edges.empty()) continue;
    const auto cls = classify_edges(inst);
    const auto all = oracle::perfect_matchings(inst.left_size, inst.right_size, inst.edges);
    REQUIRE(cls.perfect == !all.empty());
    if (!cls.perfect) continue;
    ++perfect_seen;
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      std::size_t in = 0;
      for (const auto& pm : all) in += std::count(pm.begin(), pm.end(), static_cast<int>(i));
      const EdgeClass want = in == 0 ? EdgeClass::forbidden : in == all.size() ? EdgeClass::mandatory : EdgeClass::optional;
      CHECK(cls.classes[i] == want);
    }
    const auto lazy = classify_edges(inst, false);
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
      CHECK((lazy.classes[i] == EdgeClass::forbidden) == (cls.classes[i] == EdgeClass::forbidden));
  }
  CHECK(perfect_seen > 50);
}

TEST_CASE("non-perfect instances classify against maximum matchings") {
  BipartiteInstance inst{2, 2, {{0, 0}, {1, 0}}};
  const auto cls = classify_edges(inst);
  CHECK_FALSE(cls.perfect);
  CHECK(cls.matching_size == 1);
  CHECK(cls.classes[0] == EdgeClass::optional);
  CHECK(cls.classes[1] == EdgeClass::optional);
}

TEST_CASE("invalid bipartite input is rejected") {
  CHECK_THROWS_AS(classify_edges(BipartiteInstance{0, 0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(max_bipartite_matching(BipartiteInstance{1, 1, {{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(max_bipartite_matching(BipartiteInstance{1, 1, {{0, 0}, {0, 0}}}), std::invalid_argument);
}

TEST_CASE("general matching is maximum and has no augmenting path") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 11);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution keep(0.3);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (keep(rng)) edges.emplace_back(a, b);
    const auto mate = max_general_matching(n, edges);
    int size = 0;
    for (int v = 0; v < n; ++v) {
      const int m = mate[static_cast<std::size_t>(v)];
      if (m < 0) continue;
      CHECK(mate[static_cast<std::size_t>(m)] == v);
      CHECK(std::count(edges.begin(), edges.end(), std::pair(std::min(v, m), std::max(v, m))) == 1);
      ++size;
    }
    // Berge: maximum iff no augmenting path, checked through the brute-force size.
    CHECK(size / 2 == oracle::brute_matching_size(n, edges));
  }
}

TEST_CASE("odd cycles need blossom contraction") {
  // Pentagon with a pendant on vertex 0; maximum matching has 3 edges.
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}};
  GeneralMatcher m(6, edges);
  const std::vector<std::pair<int, int>> seed{{1, 2}, {3, 4}};
  m.set_matching(seed);
  CHECK(m.size() == 2);
  CHECK(m.augment_from(5));
  CHECK(m.size() == 3);
  CHECK_FALSE(m.augment_from(0));
}

}
