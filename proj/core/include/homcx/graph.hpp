#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace homcx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the dense vertex set 0..n-1.
///
/// Edges are stored once with u < v; neighbor lists are sorted so adjacency is
/// a binary search. Construction rejects loops, duplicates and out-of-range
/// endpoints with ErrorCode::InvalidGraph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex u) const { return adj_.at(u); }
  std::size_t degree(Vertex u) const { return adj_.at(u).size(); }

  /// Sorted edge list, each edge as (min, max).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Vertex map dom -> cod that preserves edges. Holds non-owning references to
/// both graphs, which must outlive it.
class GraphHom {
 public:
  GraphHom(const Graph& dom, const Graph& cod, std::vector<Vertex> map);

  const Graph& domain() const noexcept { return *dom_; }
  const Graph& codomain() const noexcept { return *cod_; }
  Vertex operator()(Vertex u) const { return map_.at(u); }
  const std::vector<Vertex>& map() const noexcept { return map_; }

  friend bool operator==(const GraphHom& a, const GraphHom& b) { return a.map_ == b.map_; }

 private:
  const Graph* dom_;
  const Graph* cod_;
  std::vector<Vertex> map_;
};

// Presets.
Graph make_cycle(std::size_t k);
Graph make_path(std::size_t k);  // k vertices, k-1 edges
Graph make_complete(std::size_t k);
Graph make_complete_bipartite(std::size_t a, std::size_t b);
Graph make_petersen();

/// Graph with the vertex set of `g` followed by that of `h`.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Induced subgraph on `vertices` (in the given order); vertex i of the
/// result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_square_free(const Graph& h);

/// A 4-cycle (a,b,c,d) as a witness of non-square-freeness: a~b~c~d~a.
std::optional<std::array<Vertex, 4>> find_square(const Graph& h);

struct Bipartition {
  std::vector<Vertex> side0;
  std::vector<Vertex> side1;
};

/// 2-coloring in which the least vertex of every component gets side 0.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Categorical product; vertex (u, x) is flattened to u * |V(H)| + x.
Graph product(const Graph& g, const Graph& h);

/// Backtracking isomorphism search with degree pruning; returns the image of
/// each vertex of `g` in `h`.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

struct K2ProductReport {
  Graph product;
  bool bipartite = false;
  std::vector<std::vector<Vertex>> components;
  /// For bipartite H: per component, the isomorphism component -> H given as
  /// the image of each component vertex (in component order).
  std::vector<std::vector<Vertex>> isomorphisms;
};

/// H x K2 with its component structure. Throws NotConnected when H is
/// disconnected.
K2ProductReport times_k2(const Graph& h);

/// Cycle rank |E| - |V| + c of a graph with c components.
std::size_t cycle_rank(const Graph& g);

}  // namespace homcx
