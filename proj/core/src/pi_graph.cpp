#include "homcx/pi_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "homcx/error.hpp"

namespace homcx {

std::string to_string(AdjacencyType t) {
  static constexpr const char* names[] = {"A1", "A2", "A3", "A4", "A5"};
  return names[unsigned(t)];
}

std::vector<AdjacencyType> AdjacencyTypes::list() const {
  std::vector<AdjacencyType> out;
  for (auto t : {AdjacencyType::A1, AdjacencyType::A2, AdjacencyType::A3, AdjacencyType::A4,
                 AdjacencyType::A5}) {
    if (contains(t)) out.push_back(t);
  }
  return out;
}

AdjacencyType AdjacencyTypes::single() const {
  if (size() != 1) {
    fail(ErrorCode::InvariantViolation,
         "adjacency type is not unique (" + std::to_string(size()) + " candidates)");
  }
  return list().front();
}

bool pi_adjacent(const ReducedWalk& xi, const ReducedWalk& eta) {
  const Graph& h = xi.graph();
  if (&h != &eta.graph()) return false;
  if (!h.adjacent(xi.source(), eta.source()) || !h.adjacent(xi.target(), eta.target())) {
    return false;
  }
  std::vector<Vertex> v;
  v.reserve(eta.vertices().size() + 2);
  v.push_back(xi.source());
  v.insert(v.end(), eta.vertices().begin(), eta.vertices().end());
  v.push_back(xi.target());
  return reduce(Walk(h, std::move(v))) == xi;
}

AdjacencyTypes classify_adjacency(const ReducedWalk& xi, const ReducedWalk& eta) {
  AdjacencyTypes out;
  const auto& x = xi.vertices();
  const auto& y = eta.vertices();
  const std::size_t l = xi.length();
  const std::size_t m = eta.length();
  // x_i = y_{i+shift_y} resp. x_{i+shift_x} = y_i for i < count.
  auto shifted_eq = [&](std::size_t dx, std::size_t dy, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (x[i + dx] != y[i + dy]) return false;
    }
    return true;
  };
  if (l + 2 == m && shifted_eq(0, 1, l + 1)) out.insert(AdjacencyType::A1);
  if (l == m && l > 0 && shifted_eq(1, 0, l)) out.insert(AdjacencyType::A2);
  if (l == m + 2 && shifted_eq(1, 0, m + 1)) out.insert(AdjacencyType::A3);
  if (l == m && l > 0 && shifted_eq(0, 1, l)) out.insert(AdjacencyType::A4);
  if (l == 0 && m == 0 && xi.graph().adjacent(x[0], y[0])) out.insert(AdjacencyType::A5);
  return out;
}

ReducedWalk pi_neighbor(const ReducedWalk& xi, Vertex x, Vertex y) {
  const Graph& h = xi.graph();
  if (!h.adjacent(x, xi.source()) || !h.adjacent(xi.target(), y)) {
    fail(ErrorCode::NotNeighbor, "(" + std::to_string(x) + "," + std::to_string(y) +
                                     ") is not a neighbor of the walk's endpoints");
  }
  std::vector<Vertex> v;
  v.reserve(xi.vertices().size() + 2);
  v.push_back(x);
  v.insert(v.end(), xi.vertices().begin(), xi.vertices().end());
  v.push_back(y);
  return reduce(Walk(h, std::move(v)));
}

Homotopy::Homotopy(const GraphHom& f, const GraphHom& g, std::vector<ReducedWalk> h)
    : f_(f), g_(g), h_(std::move(h)) {
  const Graph& dom = f.domain();
  if (&g.domain() != &dom || &g.codomain() != &f.codomain()) {
    fail(ErrorCode::NotHomomorphism, "homotopy endpoints have different domain or codomain");
  }
  if (h_.size() != dom.order()) fail(ErrorCode::NotHomomorphism, "homotopy has wrong arity");
  for (Vertex u = 0; u < dom.order(); ++u) {
    if (&h_[u].graph() != &f.codomain()) {
      fail(ErrorCode::InvalidWalk, "homotopy walk lives in the wrong graph");
    }
    if (h_[u].source() != f(u) || h_[u].target() != g(u)) {
      fail(ErrorCode::EndpointMismatch,
           "walk at vertex " + std::to_string(u) + " has wrong endpoints");
    }
  }
  for (auto [u, v] : dom.edges()) {
    if (!pi_adjacent(h_[u], h_[v])) {
      fail(ErrorCode::NotHomomorphism, "walks at " + std::to_string(u) + " and " +
                                           std::to_string(v) + " are not adjacent in ΠH");
    }
  }
}

Homotopy Homotopy::unchecked(const GraphHom& f, const GraphHom& g, std::vector<ReducedWalk> h) {
  return Homotopy(Unchecked{}, f, g, std::move(h));
}

std::size_t Homotopy::norm() const {
  std::size_t n = 0;
  for (const auto& w : h_) n += w.length();
  return n;
}

Homotopy id_homotopy(const GraphHom& f) {
  std::vector<ReducedWalk> h;
  h.reserve(f.domain().order());
  for (Vertex u = 0; u < f.domain().order(); ++u) h.push_back(ReducedWalk::trivial(f.codomain(), f(u)));
  return Homotopy::unchecked(f, f, std::move(h));
}

namespace {

ReducedWalk conjugate(const ReducedWalk& xi, const GraphHom& f, const GraphHom& g,
                      const Walk& omega) {
  return walk_product(walk_product(walk_inverse(reduce(map_walk(f, omega))), xi),
                      reduce(map_walk(g, omega)));
}

}  // namespace

ReducedWalk transport(const Homotopy& h, const Walk& omega) {
  auto out = conjugate(h(omega.source()), h.source_hom(), h.target_hom(), omega);
  if (out != h(omega.target())) {
    fail(ErrorCode::TransportMismatch, "transport along the walk disagrees with h at its target");
  }
  return out;
}

std::vector<Vertex> bfs_parents(const Graph& g, Vertex root) {
  const auto none = Vertex(g.order());
  std::vector<Vertex> parent(g.order(), none);
  parent.at(root) = root;
  std::queue<Vertex> q;
  q.push(root);
  while (!q.empty()) {
    Vertex a = q.front();
    q.pop();
    for (Vertex b : g.neighbors(a)) {
      if (parent[b] == none) {
        parent[b] = a;
        q.push(b);
      }
    }
  }
  return parent;
}

Walk tree_walk(const Graph& g, const std::vector<Vertex>& parent, Vertex root, Vertex v) {
  if (parent.at(v) == g.order()) fail(ErrorCode::NotConnected, "vertex not reachable from root");
  std::vector<Vertex> path{v};
  while (path.back() != root) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return Walk(g, std::move(path));
}

bool is_topologically_valid(const ReducedWalk& xi, const GraphHom& f, const GraphHom& g, Vertex u) {
  if (xi.source() != f(u) || xi.target() != g(u)) {
    fail(ErrorCode::EndpointMismatch, "walk endpoints do not match f(u), g(u)");
  }
  const Graph& dom = f.domain();
  const auto parent = bfs_parents(dom, u);
  for (auto [a, b] : dom.edges()) {
    if (parent[a] == dom.order()) continue;  // other component
    if (parent[a] == b || parent[b] == a) continue;  // tree edge
    auto omega = concat(concat(tree_walk(dom, parent, u, a), Walk(dom, {a, b})),
                        walk_inverse(tree_walk(dom, parent, u, b)));
    if (conjugate(xi, f, g, omega) != xi) return false;
  }
  return true;
}

Homotopy homotopy_from_valid_walk(const ReducedWalk& xi, const GraphHom& f, const GraphHom& g,
                                  Vertex u) {
  if (!is_topologically_valid(xi, f, g, u)) {
    fail(ErrorCode::NotValid, "walk is not topologically valid at the base vertex");
  }
  const Graph& dom = f.domain();
  if (!is_connected(dom)) fail(ErrorCode::NotConnected, "domain must be connected");
  const auto parent = bfs_parents(dom, u);
  std::vector<ReducedWalk> h;
  h.reserve(dom.order());
  for (Vertex v = 0; v < dom.order(); ++v) {
    h.push_back(conjugate(xi, f, g, tree_walk(dom, parent, u, v)));
  }
  return Homotopy(f, g, std::move(h));
}

PiWindow materialize_pi(const Graph& h, std::size_t lmax) {
  PiWindow w;
  w.lmax = lmax;
  for (Vertex x = 0; x < h.order(); ++x) {
    auto walks = reduced_walks_from(h, x, lmax);
    w.walks.insert(w.walks.end(), walks.begin(), walks.end());
  }
  std::sort(w.walks.begin(), w.walks.end());

  // Bucket by endpoints; neighbors of ξ live in buckets (x, y) with x ~ s ξ, y ~ t ξ.
  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> bucket;
  for (std::size_t i = 0; i < w.walks.size(); ++i) {
    bucket[{w.walks[i].source(), w.walks[i].target()}].push_back(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w.walks.size(); ++i) {
    const auto& xi = w.walks[i];
    for (Vertex x : h.neighbors(xi.source())) {
      for (Vertex y : h.neighbors(xi.target())) {
        auto it = bucket.find({x, y});
        if (it == bucket.end()) continue;
        for (std::size_t j : it->second) {
          if (j > i && !classify_adjacency(xi, w.walks[j]).empty()) {
            edges.emplace_back(Vertex(i), Vertex(j));
          }
        }
      }
    }
  }
  w.graph = Graph(w.walks.size(), edges);
  for (const auto& xi : w.walks) {
    w.boundary.push_back(xi.length() + 1 >= lmax);
    w.interior.push_back(xi.length() + 2 <= lmax);
  }
  return w;
}

}  // namespace homcx
