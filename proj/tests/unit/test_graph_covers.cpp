#include <gtest/gtest.h>

#include <set>

#include "homcx/e_f.hpp"
#include "homcx/error.hpp"
#include "homcx/graph.hpp"
#include "homcx/graph_covers.hpp"
#include "homcx/walk.hpp"

using namespace homcx;

namespace {

Graph theta() {
  // Two vertices joined by three paths of length 2 and 3 and 3.
  std::vector<Edge> e{{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}};
  return Graph(7, e);
}

}  // namespace

TEST(Covers, SmallWindows) {
  const Graph k2 = make_complete(2), c3 = make_cycle(3), c5 = make_cycle(5);
  EXPECT_EQ(TreeCover(k2, 0, 3).vertices().size(), 2u);
  const TreeCover t3(c3, 0, 2);
  EXPECT_EQ(t3.vertices().size(), 5u);
  EXPECT_EQ(t3.tree().size(), 4u);
  EXPECT_EQ(t3.vertices().front(), ReducedWalk::trivial(c3, 0));
  const TreeCover t5(c5, 0, 5);
  EXPECT_EQ(t5.vertices().size(), 11u);
  EXPECT_TRUE(is_connected(t5.tree()));
  EXPECT_EQ(t5.tree().size(), 10u);
}

TEST(Covers, TreesCoverThemselves) {
  const Graph p4 = make_path(4);
  const TreeCover c(p4, 1, 5);
  EXPECT_EQ(c.vertices().size(), 4u);
  EXPECT_TRUE(find_isomorphism(c.tree(), p4));
  std::set<Vertex> images;
  for (std::size_t i = 0; i < c.vertices().size(); ++i) images.insert(c.project(i));
  EXPECT_EQ(images.size(), 4u);
}

TEST(Covers, ProjectionIsAHomomorphism) {
  for (const Graph& g : {make_cycle(5), make_petersen(), theta()}) {
    const TreeCover c(g, 0, 4);
    for (auto [a, b] : c.tree().edges()) EXPECT_TRUE(g.adjacent(c.project(a), c.project(b)));
    EXPECT_EQ(c.tree().size() + 1, c.vertices().size());
  }
}

TEST(Covers, Errors) {
  std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(TreeCover(Graph(3, e), 0, 2), Error);
  EXPECT_THROW(TreeCover(make_cycle(5), 7, 2), Error);
  const Graph c5 = make_cycle(5);
  EXPECT_THROW(f_star(GraphHom(c5, c5, {0, 1, 2, 3, 4}), ReducedWalk(c5, {0, 1})), Error);
}

TEST(Covers, FundamentalGroupElements) {
  const Graph c5 = make_cycle(5);
  EXPECT_EQ(pi1_elements(c5, 0, 5).size(), 3u);
  EXPECT_EQ(pi1_elements(c5, 0, 4).size(), 1u);
  EXPECT_EQ(pi1_elements(c5, 0, 10, true).size(), 3u);
  for (const auto& w : pi1_elements(c5, 0, 10)) {
    EXPECT_TRUE(w.is_closed());
    EXPECT_TRUE(w.is_reduced());
  }
}

TEST(Covers, InducedMapOnLoops) {
  const Graph c6 = make_cycle(6), c3 = make_cycle(3);
  const GraphHom f(c6, c3, {0, 1, 2, 0, 1, 2});
  const auto img = f_star(f, ReducedWalk(c6, {0, 1, 2, 3, 4, 5, 0}));
  EXPECT_EQ(img.length(), 6u);
  EXPECT_EQ(img.vertices(), (std::vector<Vertex>{0, 1, 2, 0, 1, 2, 0}));
  const GraphHom fold(c6, c3, {0, 1, 0, 1, 0, 1});
  EXPECT_EQ(f_star(fold, ReducedWalk(c6, {0, 1, 2, 3, 4, 5, 0})).length(), 0u);
}

TEST(Covers, LiftExample) {
  const Graph c5 = make_cycle(5);
  const TreeCover c(c5, 0, 5);
  const auto base = ReducedWalk::trivial(c5, 0);
  EXPECT_EQ(lift_walk(c, base, ReducedWalk(c5, {0, 1, 2})).vertices(), (std::vector<Vertex>{0, 1, 2}));
  const ReducedWalk x(c5, {0, 4, 3});
  EXPECT_EQ(lift_walk(c, x, ReducedWalk(c5, {3, 4})), ReducedWalk(c5, {0, 4}));
  EXPECT_THROW(lift_walk(c, ReducedWalk(c5, {0, 1, 2, 3, 4}), ReducedWalk(c5, {4, 0, 1})), Error);
  EXPECT_THROW(lift_walk(c, x, ReducedWalk(c5, {1, 2})), Error);
}

TEST(Covers, LiftAndProjectionRoundTrip) {
  for (const Graph& g : {make_cycle(5), theta()}) {
    const std::size_t r = 5;
    const TreeCover c(g, 0, r);
    std::size_t checked = 0;
    for (const auto& x : c.vertices()) {
      for (const auto& xi : reduced_walks_from(g, x.target(), r - x.length())) {
        const auto y = lift_walk(c, x, xi);
        EXPECT_TRUE(c.contains(y));
        EXPECT_EQ(y.target(), xi.target());
        EXPECT_EQ(proj_vertex(c, x, y), xi);
        ++checked;
      }
      for (const auto& y : c.vertices()) {
        const auto xi = proj_vertex(c, x, y);
        EXPECT_EQ(xi.source(), x.target());
        EXPECT_EQ(xi.target(), y.target());
        if (x.length() + xi.length() <= r) EXPECT_EQ(lift_walk(c, x, xi), y);
      }
    }
    EXPECT_GT(checked, 0u);
  }
}

TEST(Covers, ProjectionDetectsTreeAdjacency) {
  const Graph g = theta();
  const TreeCover c(g, 0, 4);
  const auto& v = c.vertices();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      EXPECT_EQ(c.tree().adjacent(Vertex(a), Vertex(b)), proj_vertex(c, v[a], v[b]).length() == 1);
}

TEST(Covers, DeckTransformationsCommuteWithLifts) {
  const Graph c5 = make_cycle(5);
  const TreeCover c(c5, 0, 15);
  for (const auto& gamma : pi1_elements(c5, 0, 5)) {
    for (const auto& x : c.vertices()) {
      if (x.length() > 3) continue;
      for (const auto& xi : reduced_walks_from(c5, x.target(), 3)) {
        EXPECT_EQ(deck_translate(c, gamma, lift_walk(c, x, xi)), lift_walk(c, deck_translate(c, gamma, x), xi));
      }
    }
  }
  EXPECT_THROW(deck_translate(c, ReducedWalk(c5, {0, 1}), ReducedWalk::trivial(c5, 0)), Error);
}

TEST(Covers, CoveringMapInducesIsomorphicWindows) {
  const Graph c10 = make_cycle(10), c5 = make_cycle(5);
  std::vector<Vertex> mod5;
  for (Vertex i = 0; i < 10; ++i) mod5.push_back(i % 5);
  const GraphHom p(c10, c5, mod5);
  const TreeCover up(c10, 0, 6), down(c5, 0, 6);
  ASSERT_EQ(up.vertices().size(), down.vertices().size());
  std::set<std::size_t> hit;
  for (const auto& w : up.vertices()) {
    const auto img = map_walk(p, w);
    const auto i = down.index_of(img);
    ASSERT_TRUE(i);
    hit.insert(*i);
  }
  EXPECT_EQ(hit.size(), down.vertices().size());
}

TEST(Covers, LiftedIdentityIsTheInducedMap) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  const GraphHom f(k2, c5, {0, 1});
  const TreeCover cg(k2, 0, 4), ch(c5, 0, 6);
  const auto id = EfElement::identity(f);
  for (const auto& v : cg.vertices()) {
    const auto ft = ftilde(f, cg, ch, v);
    EXPECT_EQ(psi_apply(id, cg, ch, v), std::vector<ReducedWalk>{ft});
  }
  const TreeCover wrong(c5, 2, 6);
  EXPECT_THROW(ftilde(f, cg, wrong, cg.vertices().front()), Error);
}

TEST(Covers, LiftedElementsProjectToTargets) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  const GraphHom f(k2, c5, {0, 1});
  const TreeCover cg(k2, 0, 1), ch(c5, 0, 8);
  for (const auto& phi : enumerate_Ef_bounded(f, 6)) {
    const auto t = phi.target();
    for (const auto& v : cg.vertices()) {
      const auto lifts = psi_apply(phi, cg, ch, v);
      EXPECT_EQ(lifts.size(), phi(v.target()).size());
      std::set<Vertex> ends;
      for (const auto& w : lifts) ends.insert(w.target());
      EXPECT_EQ(std::vector<Vertex>(ends.begin(), ends.end()), t(v.target()));
    }
  }
}
