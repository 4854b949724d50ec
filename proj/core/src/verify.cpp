#include "homcx/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "homcx/classifier.hpp"
#include "homcx/e_f.hpp"
#include "homcx/error.hpp"
#include "homcx/graph_covers.hpp"
#include "homcx/hom_poset.hpp"
#include "homcx/homology.hpp"
#include "homcx/pi_graph.hpp"
#include "homcx/walk.hpp"

namespace homcx {

namespace {

// mt19937_64 output is fixed by the standard; the reductions below avoid the
// implementation-defined distributions so runs agree across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::size_t(gen_() % n); }
  bool coin(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 gen_;
};

struct Recorder {
  SuiteResult& r;
  void expect(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back(what);
  }
};

Graph random_graph(Rng& rng, std::size_t n, unsigned percent) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.coin(percent)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph random_connected(Rng& rng, std::size_t n, unsigned extra_percent, bool square_free) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(Vertex(rng.below(v)), v);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::find(e.begin(), e.end(), Edge{u, v}) != e.end() || !rng.coin(extra_percent)) continue;
      e.emplace_back(u, v);
      std::sort(e.begin(), e.end());
      if (square_free && !is_square_free(Graph(n, e))) e.erase(std::find(e.begin(), e.end(), Edge{u, v}));
    }
  }
  return Graph(n, e);
}

bool brute_has_square(const Graph& g) {
  const auto n = Vertex(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a)) return true;
        }
  return false;
}

Walk random_walk(Rng& rng, const Graph& g, Vertex x, std::size_t len) {
  std::vector<Vertex> v{x};
  for (std::size_t i = 0; i < len && g.degree(v.back()) > 0; ++i) {
    const auto nb = g.neighbors(v.back());
    v.push_back(nb[rng.below(nb.size())]);
  }
  return Walk(g, v);
}

ReducedWalk random_reduced(Rng& rng, const Graph& g, Vertex x, std::size_t len) {
  return reduce(random_walk(rng, g, x, len));
}

// Elementary reductions applied at random positions until none remain.
std::vector<Vertex> reduce_randomly(Rng& rng, std::vector<Vertex> v) {
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
      if (v[i] == v[i + 2]) spots.push_back(i);
    }
    if (spots.empty()) return v;
    const auto i = spots[rng.below(spots.size())];
    v.erase(v.begin() + std::ptrdiff_t(i) + 1, v.begin() + std::ptrdiff_t(i) + 3);
  }
}

void core_suite(Rng& rng, Recorder& rec) {
  for (int iter = 0; iter < 40; ++iter) {
    const Graph g = random_graph(rng, 3 + rng.below(5), 45);
    const auto sq = find_square(g);
    rec.expect(sq.has_value() == brute_has_square(g), "square detection disagrees with brute force");
    if (sq) {
      const auto& s = *sq;
      rec.expect(g.adjacent(s[0], s[1]) && g.adjacent(s[1], s[2]) && g.adjacent(s[2], s[3]) &&
                     g.adjacent(s[3], s[0]),
                 "square witness is not a 4-cycle");
    }
  }
  for (int iter = 0; iter < 40; ++iter) {
    const Graph g = random_connected(rng, 3 + rng.below(5), 30, false);
    const auto x = Vertex(rng.below(g.order()));
    const Walk w = random_walk(rng, g, x, rng.below(14));
    const auto r = reduce(w);
    rec.expect(r.is_reduced(), "reduce produced a backtrack");
    rec.expect(reduce(r) == r, "reduce is not idempotent");
    rec.expect(reduce_randomly(rng, w.vertices()) == r.vertices(), "reduction order changed the result");
    rec.expect(r.source() == w.source() && r.target() == w.target(), "reduce moved an endpoint");

    const auto a = random_reduced(rng, g, x, rng.below(6));
    const auto b = random_reduced(rng, g, a.target(), rng.below(6));
    const auto c = random_reduced(rng, g, b.target(), rng.below(6));
    rec.expect(walk_product(walk_product(a, b), c) == walk_product(a, walk_product(b, c)),
               "walk product is not associative");
    rec.expect(walk_product(a, walk_inverse(a)) == ReducedWalk::trivial(g, x), "inverse fails");

    const auto y = g.neighbors(x)[rng.below(g.degree(x))];
    const auto xi = random_reduced(rng, g, x, rng.below(5));
    const auto eta = random_reduced(rng, g, y, rng.below(5));
    const bool adj = pi_adjacent(xi, eta);
    rec.expect(adj == pi_adjacent(eta, xi), "ΠH adjacency is not symmetric");
    rec.expect(adj == !classify_adjacency(xi, eta).empty(), "adjacency type disagrees with adjacency");
    if (adj) rec.expect(g.adjacent(xi.target(), eta.target()), "adjacent walks with nonadjacent targets");
    const auto x1 = g.neighbors(xi.source())[rng.below(g.degree(xi.source()))];
    const auto y1 = g.neighbors(xi.target())[rng.below(g.degree(xi.target()))];
    const auto nb = pi_neighbor(xi, x1, y1);
    rec.expect(pi_adjacent(xi, nb) && nb.source() == x1 && nb.target() == y1,
               "pi_neighbor is not a neighbor over the given endpoints");
  }
}

const Graph& pick_codomain(Rng& rng) {
  static const std::vector<Graph> pool = {make_cycle(5), make_cycle(6), make_cycle(7), make_path(4),
                                          make_complete(2), make_complete(3)};
  return pool[rng.below(pool.size())];
}

void poset_suite(Rng& rng, Recorder& rec) {
  for (int iter = 0; iter < 12; ++iter) {
    const Graph g = random_connected(rng, 2 + rng.below(3), 25, false);
    const Graph& h = pick_codomain(rng);
    const auto homs = enumerate_graph_homs(g, h);
    std::set<std::vector<Vertex>> covered;
    std::size_t total = 0;
    for (const auto& f : homs) {
      if (covered.count(f.map())) continue;
      const auto p = enumerate_component(g, h, f);
      for (auto i : p.homs()) {
        covered.insert(p.elements[i].as_hom()->map());
        ++total;
      }
      const auto k = order_complex(p);
      const auto b = betti_numbers(k, std::min<std::size_t>(k.dimension(), 3));
      rec.expect(b.at(0) == 1, "component is not connected");
      std::int64_t chi = 0;
      for (std::size_t d = 0; d < b.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * b[d];
      if (k.dimension() <= 3) rec.expect(chi == k.euler_characteristic(), "Euler characteristic mismatch");
      for (std::size_t d = 2; d <= std::min<std::size_t>(k.dimension(), 3); ++d) {
        rec.expect(boundary_squared_is_zero(k, d), "boundary squared is nonzero");
      }
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (auto j : p.above[i]) rec.expect(p.elements[i].leq(p.elements[j]), "up-set not above");
      }
    }
    rec.expect(total == homs.size(), "components do not partition the homomorphisms");
    if (is_square_free(h)) {
      try {
        full_case_report(g, h);
        rec.expect(true, "");
      } catch (const Error& e) {
        rec.expect(e.code() == ErrorCode::EmptyHomSet, std::string("case report failed: ") + e.what());
      }
    }
  }
}

void ef_suite(Rng& rng, Recorder& rec) {
  static const std::vector<std::pair<Graph, Graph>> pool = {
      {make_complete(2), make_cycle(5)}, {make_path(3), make_cycle(5)}, {make_path(3), make_path(4)},
      {make_cycle(4), make_cycle(5)},    {make_complete(2), make_cycle(6)}};
  for (int iter = 0; iter < 6; ++iter) {
    const auto& [g, h] = pool[rng.below(pool.size())];
    const auto homs = enumerate_graph_homs(g, h);
    const auto& f = homs[rng.below(homs.size())];
    const std::size_t max_norm = g.order() <= 2 ? 6 : 4;
    const auto ef = enumerate_Ef_bounded(f, max_norm);
    std::vector<EfElement> filtered;
    for (auto& phi : enumerate_fiber_bounded(f, max_norm)) {
      if (is_in_Ef(phi)) filtered.push_back(std::move(phi));
    }
    std::sort(filtered.begin(), filtered.end());
    rec.expect(ef == filtered, "E_f search disagrees with the filtered fiber");
    for (const auto& phi : ef) {
      if (!phi.is_singleton()) continue;
      const auto steps = reduce_to_identity(phi);
      rec.expect(steps.size() == phi.norm() / 2 + 1, "certificate length is not half the norm");
      bool members = true;
      for (const auto& s : steps) members = members && is_in_Ef(s);
      rec.expect(members, "certificate leaves E_f");
    }
  }
}

void covers_suite(Rng& rng, Recorder& rec) {
  for (int iter = 0; iter < 12; ++iter) {
    const Graph g = random_connected(rng, 2 + rng.below(5), 30, false);
    const auto u = Vertex(rng.below(g.order()));
    const std::size_t radius = 2 + rng.below(4);
    const TreeCover c(g, u, radius);
    rec.expect(c.tree().size() + 1 == c.tree().order(), "cover is not a tree");
    const auto& vs = c.vertices();
    for (int k = 0; k < 20; ++k) {
      const auto& x = vs[rng.below(vs.size())];
      const auto xi = random_reduced(rng, g, x.target(), rng.below(radius - x.length() + 1));
      const auto y = lift_walk(c, x, xi);
      rec.expect(c.contains(y) && y.target() == xi.target(), "lift leaves the cover or the fiber");
      rec.expect(proj_vertex(c, x, y) == xi, "proj does not invert lift");
      const auto& z = vs[rng.below(vs.size())];
      const auto back = proj_vertex(c, x, z);
      if (x.length() + back.length() <= radius) {
        rec.expect(lift_walk(c, x, back) == z, "lift does not invert proj");
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"core", "poset", "ef", "covers"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& suite, std::uint64_t seed) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    fail(ErrorCode::Parse, "unknown suite " + suite);
  }
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (suite != "all" && suite != names[i]) continue;
    SuiteResult r{names[i], 0, {}};
    Recorder rec{r};
    Rng rng(seed + i);
    try {
      if (names[i] == "core") core_suite(rng, rec);
      if (names[i] == "poset") poset_suite(rng, rec);
      if (names[i] == "ef") ef_suite(rng, rec);
      if (names[i] == "covers") covers_suite(rng, rec);
    } catch (const Error& e) {
      r.failures.push_back(std::string("unexpected error: ") + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace homcx
