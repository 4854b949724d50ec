#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "homcx/classifier.hpp"
#include "homcx/error.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom_poset.hpp"

using namespace homcx;

namespace {

std::vector<std::vector<Vertex>> brute_homs(const Graph& g, const Graph& h) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> m(g.order(), 0);
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && h.adjacent(m[u], m[v]);
    if (ok) out.push_back(m);
    std::size_t i = g.order();
    while (i > 0 && ++m[i - 1] == h.order()) m[--i] = 0;
    if (i == 0) return out;
  }
}

using Sets = std::vector<std::vector<Vertex>>;

// Every set-valued homomorphism, found by trying all tuples of nonempty
// subsets, grouped into components of the comparability graph.
std::vector<std::set<Sets>> brute_components(const Graph& g, const Graph& h) {
  const std::uint32_t full = (1u << h.order()) - 1;
  std::vector<std::uint32_t> masks(g.order(), 1);
  std::vector<std::vector<std::uint32_t>> elems;
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      for (Vertex x = 0; x < h.order() && ok; ++x)
        for (Vertex y = 0; y < h.order() && ok; ++y)
          if ((masks[u] >> x & 1) && (masks[v] >> y & 1) && !h.adjacent(x, y)) ok = false;
    }
    if (ok) elems.push_back(masks);
    std::size_t i = g.order();
    while (i > 0 && ++masks[i - 1] > full) masks[--i] = 1;
    if (i == 0) break;
  }
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto leq = [&](std::size_t a, std::size_t b) {
    for (std::size_t u = 0; u < g.order(); ++u)
      if ((elems[a][u] & ~elems[b][u]) != 0) return false;
    return true;
  };
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (leq(a, b)) parent[find(a)] = find(b);
  std::map<std::size_t, std::set<Sets>> groups;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    Sets s(g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
      for (Vertex x = 0; x < h.order(); ++x)
        if (elems[a][u] >> x & 1) s[u].push_back(x);
    groups[find(a)].insert(s);
  }
  std::vector<std::set<Sets>> out;
  for (auto& [_, s] : groups) out.push_back(std::move(s));
  return out;
}

}  // namespace

TEST(HomPoset, SetValuedValidation) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  EXPECT_NO_THROW(SetValuedHom(k2, c5, {{0}, {1, 4}}));
  EXPECT_THROW(SetValuedHom(k2, c5, {{0}, {1, 2}}), Error);
  EXPECT_THROW(SetValuedHom(k2, c5, {{0}, {}}), Error);
  const SetValuedHom a(k2, c5, {{0}, {4, 1}});
  EXPECT_EQ(a(1), (std::vector<Vertex>{1, 4}));
  EXPECT_EQ(a.total_size(), 3u);
  EXPECT_FALSE(a.is_singleton());
}

TEST(HomPoset, EnumerationMatchesBruteForce) {
  EXPECT_EQ(enumerate_graph_homs(make_complete(2), make_complete(2)).size(), 2u);
  const Graph c3 = make_cycle(3);
  const auto homs = enumerate_graph_homs(c3, c3);
  ASSERT_EQ(homs.size(), 6u);
  const auto brute = brute_homs(c3, c3);  // 27 maps tried
  ASSERT_EQ(brute.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(homs[i].map(), brute[i]);
  EXPECT_TRUE(enumerate_graph_homs(make_cycle(5), make_path(4)).empty());

  const std::vector<std::pair<Graph, Graph>> cases = {{make_cycle(6), make_cycle(3)},
                                                      {make_path(4), make_cycle(5)},
                                                      {make_petersen(), make_complete(3)},
                                                      {make_cycle(4), make_path(3)}};
  for (const auto& [g, h] : cases) {
    std::vector<std::vector<Vertex>> maps;
    for (const auto& f : enumerate_graph_homs(g, h)) maps.push_back(f.map());
    EXPECT_EQ(maps, brute_homs(g, h));
  }
}

TEST(HomPoset, HomAdjacency) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  const GraphHom f(k2, c5, {0, 1}), g(k2, c5, {2, 1}), h(k2, c5, {2, 3});
  EXPECT_TRUE(hom_adjacent(f, g));
  EXPECT_FALSE(hom_adjacent(f, f));
  EXPECT_FALSE(hom_adjacent(f, h));
}

TEST(HomPoset, ComponentExamples) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5), c3 = make_cycle(3);
  const auto kk = enumerate_component(k2, k2, GraphHom(k2, k2, {0, 1}));
  EXPECT_EQ(kk.size(), 1u);
  const auto kc = enumerate_component(k2, c5, GraphHom(k2, c5, {0, 1}));
  EXPECT_EQ(kc.homs().size(), 10u);
  EXPECT_EQ(kc.size(), 20u);
  const auto cc = enumerate_component(c3, c3, GraphHom(c3, c3, {0, 1, 2}));
  EXPECT_EQ(cc.size(), 1u);
}

TEST(HomPoset, ComponentsMatchComparabilityOracle) {
  const std::vector<std::pair<Graph, Graph>> cases = {{make_complete(2), make_cycle(5)},
                                                      {make_complete(2), make_path(4)},
                                                      {make_path(3), make_cycle(5)},
                                                      {make_path(3), make_cycle(6)},
                                                      {make_cycle(3), make_cycle(3)},
                                                      {make_complete(2), make_cycle(4)}};
  for (const auto& [g, h] : cases) {
    const auto oracle = brute_components(g, h);
    std::set<std::set<Sets>> got;
    std::set<std::vector<Vertex>> done;
    for (const auto& f : enumerate_graph_homs(g, h)) {
      if (done.count(f.map())) continue;
      const auto p = enumerate_component(g, h, f);
      std::set<Sets> elems;
      for (const auto& e : p.elements) elems.insert(e.sets());
      for (auto i : p.homs()) done.insert(p.elements[i].as_hom()->map());
      got.insert(std::move(elems));
    }
    EXPECT_EQ(got, std::set<std::set<Sets>>(oracle.begin(), oracle.end()));
  }
}

TEST(HomPoset, PosetAxiomsAndCanonicalOrder) {
  const Graph p3 = make_path(3), c5 = make_cycle(5);
  const auto p = enumerate_component(p3, c5, GraphHom(p3, c5, {0, 1, 2}));
  EXPECT_TRUE(std::is_sorted(p.elements.begin(), p.elements.end()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_TRUE(p.elements[i].leq(p.elements[i]));
    std::set<std::uint32_t> up(p.above[i].begin(), p.above[i].end());
    for (std::size_t j = 0; j < p.size(); ++j) {
      const bool lt = i != j && p.elements[i].leq(p.elements[j]);
      EXPECT_EQ(lt, up.count(std::uint32_t(j)) == 1);
      if (lt) EXPECT_FALSE(p.elements[j].leq(p.elements[i]));
      for (auto k : p.above[j]) {
        if (lt) EXPECT_TRUE(up.count(k));
      }
    }
    EXPECT_EQ(p.index_of(p.elements[i]), i);
  }
}

TEST(HomPoset, PostComposition) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5), c10 = make_cycle(10);
  const SetValuedHom phi(k2, c5, {{0}, {1, 4}});
  EXPECT_EQ(post_compose(GraphHom(c5, c5, {0, 1, 2, 3, 4}), phi), phi);

  std::vector<Vertex> mod5;
  for (Vertex i = 0; i < 10; ++i) mod5.push_back(i % 5);
  const GraphHom cover(c10, c5, mod5);
  const auto single = post_compose(cover, SetValuedHom::singleton(GraphHom(k2, c10, {7, 8})));
  EXPECT_TRUE(single.is_singleton());
  EXPECT_EQ(single.sets(), (Sets{{2}, {3}}));
}

TEST(HomPoset, PostCompositionIsMonotone) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5), c10 = make_cycle(10);
  std::vector<Vertex> mod5;
  for (Vertex i = 0; i < 10; ++i) mod5.push_back(i % 5);
  const GraphHom cover(c10, c5, mod5);
  const auto p = enumerate_component(k2, c10, GraphHom(k2, c10, {0, 1}));
  for (const auto& a : p.elements)
    for (const auto& b : p.elements)
      if (a.leq(b)) EXPECT_TRUE(post_compose(cover, a).leq(post_compose(cover, b)));
}

TEST(HomPoset, ComponentCountsMultiplyOverDisjointDomains) {
  const Graph k2 = make_complete(2);
  const std::vector<Graph> hs = {make_complete(2), make_cycle(3), make_path(3)};
  for (const auto& h : hs) {
    const auto single = component_census(k2, h).size();
    EXPECT_EQ(component_census(disjoint_union(k2, k2), h).size(), single * single);
  }
}

TEST(HomPoset, ExplosionGuard) {
  const Graph p3 = make_path(3), c5 = make_cycle(5);
  EXPECT_THROW(enumerate_component(p3, c5, GraphHom(p3, c5, {0, 1, 2}), 3), Error);
}

TEST(HomPoset, FactorsThroughK2) {
  const Graph c6 = make_cycle(6), c3 = make_cycle(3);
  EXPECT_TRUE(factors_through_k2(GraphHom(c6, c3, {0, 1, 0, 1, 0, 1})));
  EXPECT_FALSE(factors_through_k2(GraphHom(c6, c3, {0, 1, 2, 0, 1, 2})));
}
