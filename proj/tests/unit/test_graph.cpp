#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "homcx/error.hpp"
#include "homcx/graph.hpp"

using namespace homcx;

namespace {

// Adjacency-matrix graph from a bitmask over the pairs (u<v) in
// lexicographic order.
struct Dense {
  std::size_t n;
  std::array<std::array<bool, 8>, 8> adj{};
};

std::vector<Edge> pairs(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

bool dense_has_square(const Dense& d) {
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = 0; b < d.n; ++b)
      for (std::size_t c = 0; c < d.n; ++c)
        for (std::size_t e = 0; e < d.n; ++e) {
          if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
          if (d.adj[a][b] && d.adj[b][c] && d.adj[c][e] && d.adj[e][a]) return true;
        }
  return false;
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph(2, loop), Error);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(2, dup), Error);
  std::vector<Edge> range{{0, 2}};
  EXPECT_THROW(Graph(2, range), Error);
}

TEST(Graph, Presets) {
  EXPECT_EQ(make_cycle(5).size(), 5u);
  EXPECT_EQ(make_path(4).size(), 3u);
  EXPECT_EQ(make_complete(4).size(), 6u);
  EXPECT_EQ(make_complete_bipartite(2, 3).size(), 6u);
  const Graph p = make_petersen();
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
}

TEST(Graph, SquareFreeExamples) {
  EXPECT_FALSE(is_square_free(make_cycle(4)));
  EXPECT_TRUE(is_square_free(make_cycle(5)));
  EXPECT_TRUE(is_square_free(make_complete(2)));
  EXPECT_TRUE(is_square_free(make_petersen()));
  EXPECT_FALSE(is_square_free(make_complete(4)));
  EXPECT_FALSE(is_square_free(make_complete_bipartite(2, 2)));
  const auto w = find_square(make_cycle(4));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::array<Vertex, 4>{0, 1, 2, 3}));
}

TEST(Graph, SquareFreeAgreesWithMatrixSearchOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = pairs(n);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      Dense d{n};
      std::vector<Edge> e;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask >> k & 1) {
          e.push_back(all[k]);
          d.adj[all[k].first][all[k].second] = d.adj[all[k].second][all[k].first] = true;
        }
      }
      const Graph g(n, e);
      ASSERT_EQ(is_square_free(g), !dense_has_square(d)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Graph, Bipartition) {
  const auto c6 = is_bipartite(make_cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->side0, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(c6->side1, (std::vector<Vertex>{1, 3, 5}));
  EXPECT_FALSE(is_bipartite(make_cycle(5)));
  const auto one = is_bipartite(Graph(1));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->side0, (std::vector<Vertex>{0}));
  EXPECT_TRUE(one->side1.empty());
}

TEST(Graph, ProductOfCyclesWithK2) {
  const Graph k2 = make_complete(2);
  const Graph c5k2 = product(make_cycle(5), k2);
  EXPECT_TRUE(find_isomorphism(c5k2, make_cycle(10)));

  const Graph c6k2 = product(make_cycle(6), k2);
  const auto comps = connected_components(c6k2);
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& c : comps) EXPECT_TRUE(find_isomorphism(induced_subgraph(c6k2, c), make_cycle(6)));

  const Graph k2k2 = product(k2, k2);
  EXPECT_EQ(k2k2.size(), 2u);
  EXPECT_EQ(connected_components(k2k2).size(), 2u);
}

TEST(Graph, ProductIsSymmetricUnderCoordinateSwap) {
  const Graph g = make_cycle(5), h = make_path(3);
  const Graph gh = product(g, h), hg = product(h, g);
  ASSERT_EQ(gh.order(), hg.order());
  for (auto [a, b] : gh.edges()) {
    auto swap = [&](Vertex x) { return Vertex((x % h.order()) * g.order() + x / h.order()); };
    EXPECT_TRUE(hg.adjacent(swap(a), swap(b)));
  }
  EXPECT_EQ(gh.size(), hg.size());
}

TEST(Graph, TimesK2Reports) {
  const auto p3 = times_k2(make_path(3));
  EXPECT_TRUE(p3.bipartite);
  ASSERT_EQ(p3.components.size(), 2u);
  ASSERT_EQ(p3.isomorphisms.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const Graph sub = induced_subgraph(p3.product, p3.components[i]);
    const Graph p = make_path(3);
    for (auto [a, b] : sub.edges()) EXPECT_TRUE(p.adjacent(p3.isomorphisms[i][a], p3.isomorphisms[i][b]));
  }

  const auto c5 = times_k2(make_cycle(5));
  EXPECT_FALSE(c5.bipartite);
  ASSERT_EQ(c5.components.size(), 1u);
  EXPECT_TRUE(find_isomorphism(c5.product, make_cycle(10)));

  EXPECT_EQ(times_k2(make_complete(2)).components.size(), 2u);
  std::vector<Edge> none;
  EXPECT_THROW(times_k2(Graph(2, none)), Error);
}

TEST(Graph, IsomorphismWitnessIsEdgeBijection) {
  const Graph a = make_cycle(6);
  std::vector<Edge> e{{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}};
  const Graph b(6, e);
  const auto iso = find_isomorphism(a, b);
  ASSERT_TRUE(iso);
  std::set<Vertex> image(iso->begin(), iso->end());
  EXPECT_EQ(image.size(), 6u);
  for (auto [u, v] : a.edges()) EXPECT_TRUE(b.adjacent((*iso)[u], (*iso)[v]));
  EXPECT_FALSE(find_isomorphism(make_cycle(6), make_path(6)));
}

TEST(Graph, CycleRank) {
  EXPECT_EQ(cycle_rank(make_cycle(5)), 1u);
  EXPECT_EQ(cycle_rank(make_path(4)), 0u);
  EXPECT_EQ(cycle_rank(make_petersen()), 6u);
  EXPECT_EQ(cycle_rank(make_complete(4)), 3u);
}

TEST(Graph, HomomorphismValidation) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  EXPECT_NO_THROW(GraphHom(k2, c5, {0, 1}));
  EXPECT_THROW(GraphHom(k2, c5, {0, 2}), Error);
  EXPECT_THROW(GraphHom(k2, c5, {0}), Error);
}
