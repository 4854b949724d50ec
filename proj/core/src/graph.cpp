#include "homcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "homcx/error.hpp"

namespace homcx {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorCode::InvalidGraph, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
    }
    if (u == v) fail(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    fail(ErrorCode::InvalidGraph, "duplicate edge (" + std::to_string(dup->first) + "," +
                                      std::to_string(dup->second) + ")");
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

GraphHom::GraphHom(const Graph& dom, const Graph& cod, std::vector<Vertex> map)
    : dom_(&dom), cod_(&cod), map_(std::move(map)) {
  if (map_.size() != dom.order()) {
    fail(ErrorCode::NotHomomorphism, "map has " + std::to_string(map_.size()) +
                                         " entries, domain has " + std::to_string(dom.order()));
  }
  for (Vertex x : map_) {
    if (x >= cod.order()) fail(ErrorCode::NotHomomorphism, "image vertex out of range");
  }
  for (auto [u, v] : dom.edges()) {
    if (!cod.adjacent(map_[u], map_[v])) {
      fail(ErrorCode::NotHomomorphism, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") is not preserved");
    }
  }
}

Graph make_cycle(std::size_t k) {
  if (k < 3) fail(ErrorCode::InvalidGraph, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % k));
  return Graph(k, e);
}

Graph make_path(std::size_t k) {
  if (k < 1) fail(ErrorCode::InvalidGraph, "path needs at least 1 vertex");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(Vertex(i), Vertex(i + 1));
  return Graph(k, e);
}

Graph make_complete(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(Vertex(i), Vertex(j));
  return Graph(k, e);
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(Vertex(i), Vertex(a + j));
  return Graph(a + b, e);
}

Graph make_petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);           // outer 5-cycle
    e.emplace_back(i, i + 5);                 // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);   // inner pentagram
  }
  return Graph(10, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  const auto shift = Vertex(g.order());
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  return Graph(g.order() + h.order(), e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = std::int64_t(i);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) e.emplace_back(Vertex(index[u]), Vertex(index[v]));
  }
  return Graph(vertices.size(), e);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::array<Vertex, 4>> find_square(const Graph& h) {
  // Count 2-paths x-w-y with y > x; the least x, then the least y, reached
  // twice gives the witness. O(sum of squared degrees).
  const auto n = Vertex(h.order());
  std::vector<std::uint32_t> count(n, 0);
  std::vector<Vertex> touched;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex w : h.neighbors(x))
      for (Vertex y : h.neighbors(w))
        if (y > x && count[y]++ == 0) touched.push_back(y);
    std::optional<Vertex> best;
    for (Vertex y : touched) {
      if (count[y] >= 2 && (!best || y < *best)) best = y;
      count[y] = 0;
    }
    touched.clear();
    if (best) {
      std::vector<Vertex> common;
      std::set_intersection(h.neighbors(x).begin(), h.neighbors(x).end(), h.neighbors(*best).begin(),
                            h.neighbors(*best).end(), std::back_inserter(common));
      return std::array<Vertex, 4>{x, common[0], *best, common[1]};
    }
  }
  return std::nullopt;
}

bool is_square_free(const Graph& h) { return !find_square(h).has_value(); }

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < g.order(); ++v) (color[v] == 0 ? b.side0 : b.side1).push_back(v);
  return b;
}

Graph product(const Graph& g, const Graph& h) {
  const auto m = Vertex(h.order());
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    for (auto [x, y] : h.edges()) {
      e.emplace_back(u * m + x, v * m + y);
      e.emplace_back(u * m + y, v * m + x);
    }
  }
  return Graph(g.order() * h.order(), e);
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> order;  // BFS order of g
  std::vector<std::int64_t> image;
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex u = order[depth];
    for (Vertex x = 0; x < h.order(); ++x) {
      if (used[x] || g.degree(u) != h.degree(x)) continue;
      bool ok = true;
      // Edges and non-edges towards already mapped vertices must agree.
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex w = order[i];
        ok = g.adjacent(u, w) == h.adjacent(x, Vertex(image[w]));
      }
      if (!ok) continue;
      image[u] = x;
      used[x] = true;
      if (extend(depth + 1)) return true;
      used[x] = false;
      image[u] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (Vertex v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  IsoSearch s{g, h, {}, std::vector<std::int64_t>(g.order(), -1),
              std::vector<bool>(h.order(), false)};
  for (const auto& comp : connected_components(g)) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> bfs{comp.front()};
    seen[comp.front()] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (Vertex w : g.neighbors(bfs[i])) {
        if (!seen[w]) {
          seen[w] = true;
          bfs.push_back(w);
        }
      }
    }
    s.order.insert(s.order.end(), bfs.begin(), bfs.end());
  }
  if (!s.extend(0)) return std::nullopt;
  return std::vector<Vertex>(s.image.begin(), s.image.end());
}

K2ProductReport times_k2(const Graph& h) {
  if (!is_connected(h)) fail(ErrorCode::NotConnected, "times_k2 requires a connected graph");
  K2ProductReport r;
  r.product = product(h, make_complete(2));
  r.components = connected_components(r.product);
  r.bipartite = is_bipartite(h).has_value();
  if (r.bipartite) {
    for (const auto& comp : r.components) {
      auto sub = induced_subgraph(r.product, comp);
      auto iso = find_isomorphism(sub, h);
      if (!iso) fail(ErrorCode::InvariantViolation, "component of H x K2 not isomorphic to H");
      r.isomorphisms.push_back(std::move(*iso));
    }
  }
  return r;
}

std::size_t cycle_rank(const Graph& g) {
  return g.size() + connected_components(g).size() - g.order();
}

}  // namespace homcx
