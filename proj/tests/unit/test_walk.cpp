#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "homcx/error.hpp"
#include "homcx/graph.hpp"
#include "homcx/walk.hpp"

using namespace homcx;

namespace {

// Every walk from x of exactly `len` steps.
void all_walks(const Graph& g, std::vector<Vertex>& cur, std::size_t len,
               std::vector<std::vector<Vertex>>& out) {
  if (cur.size() == len + 1) {
    out.push_back(cur);
    return;
  }
  for (auto y : g.neighbors(cur.back())) {
    cur.push_back(y);
    all_walks(g, cur, len, out);
    cur.pop_back();
  }
}

// Results of every possible sequence of elementary reductions.
void all_normal_forms(const std::vector<Vertex>& w, std::set<std::vector<Vertex>>& out) {
  bool any = false;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] != w[i + 2]) continue;
    any = true;
    auto v = w;
    v.erase(v.begin() + std::ptrdiff_t(i) + 1, v.begin() + std::ptrdiff_t(i) + 3);
    all_normal_forms(v, out);
  }
  if (!any) out.insert(w);
}

}  // namespace

TEST(Walk, RejectsNonEdgesAndBacktracks) {
  const Graph c5 = make_cycle(5);
  EXPECT_THROW(Walk(c5, {0, 2}), Error);
  EXPECT_THROW(Walk(c5, {}), Error);
  EXPECT_THROW(ReducedWalk(c5, {0, 1, 0}), Error);
  EXPECT_NO_THROW(ReducedWalk(c5, {0, 1, 2}));
}

TEST(Walk, ReduceExamples) {
  const Graph c5 = make_cycle(5);
  EXPECT_EQ(reduce(Walk(c5, {0, 1, 0})).vertices(), (std::vector<Vertex>{0}));
  EXPECT_EQ(reduce(Walk(c5, {0, 1, 2, 1, 0, 4})).vertices(), (std::vector<Vertex>{0, 4}));
  EXPECT_EQ(reduce(Walk(c5, {0, 1, 2})).vertices(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Walk, ReductionIsConfluent) {
  for (const Graph& g : {make_cycle(5), make_path(4)}) {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (Vertex x = 0; x < g.order(); ++x) {
        std::vector<std::vector<Vertex>> walks;
        std::vector<Vertex> cur{x};
        all_walks(g, cur, len, walks);
        for (const auto& w : walks) {
          std::set<std::vector<Vertex>> forms;
          all_normal_forms(w, forms);
          ASSERT_EQ(forms.size(), 1u);
          const auto r = reduce(Walk(g, w));
          EXPECT_EQ(r.vertices(), *forms.begin());
          EXPECT_TRUE(r.is_reduced());
          EXPECT_EQ(reduce(r), r);
          EXPECT_EQ(r.source(), w.front());
          EXPECT_EQ(r.target(), w.back());
        }
      }
    }
  }
}

TEST(Walk, ProductExamples) {
  const Graph star = make_complete_bipartite(1, 3);  // center 0
  EXPECT_EQ(walk_product(ReducedWalk(star, {1, 0, 2}), ReducedWalk(star, {2, 0, 3})).vertices(),
            (std::vector<Vertex>{1, 0, 3}));
  const Graph c5 = make_cycle(5);
  const ReducedWalk xi(c5, {0, 1, 2});
  EXPECT_EQ(walk_product(xi, walk_inverse(xi)), ReducedWalk::trivial(c5, 0));
  EXPECT_EQ(walk_product(ReducedWalk::trivial(c5, 0), ReducedWalk(c5, {0, 1})).vertices(),
            (std::vector<Vertex>{0, 1}));
  EXPECT_THROW(walk_product(xi, ReducedWalk(c5, {0, 1})), Error);
}

TEST(Walk, InverseIsInvolution) {
  const Graph c5 = make_cycle(5);
  EXPECT_EQ(walk_inverse(ReducedWalk(c5, {0, 1, 2})).vertices(), (std::vector<Vertex>{2, 1, 0}));
  EXPECT_EQ(walk_inverse(ReducedWalk::trivial(c5, 0)), ReducedWalk::trivial(c5, 0));
  for (Vertex x = 0; x < 5; ++x) {
    for (const auto& w : reduced_walks_from(c5, x, 4)) EXPECT_EQ(walk_inverse(walk_inverse(w)), w);
  }
}

TEST(Walk, GroupLawsOnClosedWalks) {
  const Graph c5 = make_cycle(5);
  std::vector<ReducedWalk> loops;
  for (const auto& w : reduced_walks_from(c5, 0, 6)) {
    if (w.is_closed()) loops.push_back(w);
  }
  ASSERT_EQ(loops.size(), 3u);
  const auto e = ReducedWalk::trivial(c5, 0);
  for (const auto& a : loops) {
    EXPECT_EQ(walk_product(a, e), a);
    EXPECT_EQ(walk_product(e, a), a);
    EXPECT_EQ(walk_product(a, walk_inverse(a)), e);
    for (const auto& b : loops)
      for (const auto& c : loops)
        EXPECT_EQ(walk_product(walk_product(a, b), c), walk_product(a, walk_product(b, c)));
  }
  // Composable open walks as well.
  for (const auto& a : reduced_walks_from(c5, 0, 3))
    for (const auto& b : reduced_walks_from(c5, a.target(), 3))
      for (const auto& c : reduced_walks_from(c5, b.target(), 3))
        EXPECT_EQ(walk_product(walk_product(a, b), c), walk_product(a, walk_product(b, c)));
}

TEST(Walk, MapWalk) {
  const Graph c6 = make_cycle(6), c3 = make_cycle(3);
  const GraphHom f(c6, c3, {0, 1, 2, 0, 1, 2});
  EXPECT_EQ(map_walk(f, Walk(c6, {0, 1, 2, 3})).vertices(), (std::vector<Vertex>{0, 1, 2, 0}));
  const GraphHom id(c6, c6, {0, 1, 2, 3, 4, 5});
  const Walk w(c6, {3, 2, 1, 2});
  EXPECT_EQ(map_walk(id, w), w);
}

TEST(Walk, CoveringMapsPreserveReducedness) {
  const Graph c10 = make_cycle(10), c5 = make_cycle(5);
  std::vector<Vertex> map;
  for (Vertex i = 0; i < 10; ++i) map.push_back(i % 5);
  const GraphHom p(c10, c5, map);
  for (Vertex x = 0; x < 10; ++x) {
    for (const auto& w : reduced_walks_from(c10, x, 8)) EXPECT_TRUE(map_walk(p, w).is_reduced());
  }
}

TEST(Walk, CyclicReduction) {
  const Graph c5 = make_cycle(5), k3 = make_complete(3);
  EXPECT_TRUE(is_cyclically_reduced(Walk(c5, {0, 1, 2, 3, 4, 0})));
  EXPECT_FALSE(is_cyclically_reduced(Walk(c5, {0, 1, 0})));
  EXPECT_TRUE(is_cyclically_reduced(Walk(k3, {0, 1, 2, 0})));
  EXPECT_FALSE(is_cyclically_reduced(Walk(c5, {1, 0, 4, 0, 1})));
  EXPECT_THROW(is_cyclically_reduced(Walk(c5, {0, 1})), Error);
}

TEST(Walk, FTight) {
  const Graph c3 = make_cycle(3), c6 = make_cycle(6), k2 = make_complete(2), c5 = make_cycle(5);
  EXPECT_TRUE(is_f_tight(GraphHom(c3, c3, {0, 1, 2}), Walk(c3, {0, 1, 2, 0})));
  EXPECT_FALSE(is_f_tight(GraphHom(k2, c5, {0, 1}), Walk(k2, {0, 1, 0})));
  const GraphHom mod3(c6, c3, {0, 1, 2, 0, 1, 2});
  EXPECT_TRUE(is_f_tight(mod3, Walk(c6, {0, 1, 2, 3, 4, 5, 0})));
}

TEST(Walk, CanonicalOrderAndTruncate) {
  const Graph c5 = make_cycle(5);
  const auto ws = reduced_walks_from(c5, 0, 3);
  EXPECT_EQ(ws.size(), 1u + 2 + 2 + 2);
  EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
  EXPECT_EQ(truncate(ReducedWalk(c5, {0, 1, 2, 3}), 2).vertices(), (std::vector<Vertex>{0, 1}));
}
