#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcx/graph.hpp"
#include "homcx/walk.hpp"

namespace homcx {

enum class AdjacencyType : std::uint8_t { A1, A2, A3, A4, A5 };

std::string to_string(AdjacencyType t);

/// Set of adjacency conditions met by an ordered pair of reduced walks.
class AdjacencyTypes {
 public:
  void insert(AdjacencyType t) { bits_ |= mask(t); }
  bool contains(AdjacencyType t) const { return (bits_ & mask(t)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return std::size_t(__builtin_popcount(bits_)); }
  std::vector<AdjacencyType> list() const;

  /// The unique element; throws InvariantViolation unless size() == 1.
  AdjacencyType single() const;

  friend bool operator==(AdjacencyTypes, AdjacencyTypes) = default;

 private:
  static unsigned mask(AdjacencyType t) { return 1u << unsigned(t); }
  unsigned bits_ = 0;
};

/// Adjacency in ΠH: endpoints adjacent and ξ = (s ξ, s η)·η·(t η, t ξ).
bool pi_adjacent(const ReducedWalk& xi, const ReducedWalk& eta);

/// Which of the index patterns A1..A5 the ordered pair (ξ, η) satisfies.
/// Works from the patterns alone, independently of pi_adjacent.
AdjacencyTypes classify_adjacency(const ReducedWalk& xi, const ReducedWalk& eta);

/// The neighbor (x, s ξ)·ξ·(t ξ, y) of ξ over (x, y). Throws NotNeighbor.
ReducedWalk pi_neighbor(const ReducedWalk& xi, Vertex x, Vertex y);

/// A graph homomorphism h: G -> ΠH with s∘h = f and t∘h = g.
class Homotopy {
 public:
  /// Validates endpoints and ΠH-adjacency across every edge of G.
  Homotopy(const GraphHom& f, const GraphHom& g, std::vector<ReducedWalk> h);

  static Homotopy unchecked(const GraphHom& f, const GraphHom& g, std::vector<ReducedWalk> h);

  const GraphHom& source_hom() const noexcept { return f_; }
  const GraphHom& target_hom() const noexcept { return g_; }
  const ReducedWalk& operator()(Vertex u) const { return h_.at(u); }
  const std::vector<ReducedWalk>& walks() const noexcept { return h_; }

  /// Sum of walk lengths.
  std::size_t norm() const;

  friend bool operator==(const Homotopy& a, const Homotopy& b) { return a.h_ == b.h_; }

 private:
  struct Unchecked {};
  Homotopy(Unchecked, GraphHom f, GraphHom g, std::vector<ReducedWalk> h)
      : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {}

  GraphHom f_;
  GraphHom g_;
  std::vector<ReducedWalk> h_;
};

/// u ↦ (f(u)).
Homotopy id_homotopy(const GraphHom& f);

/// Returns reduce(f ω)⁻¹·h(s ω)·reduce(g ω), which must equal h(t ω);
/// throws TransportMismatch otherwise.
ReducedWalk transport(const Homotopy& h, const Walk& omega);

/// Whether ξ is fixed by conjugation along every closed walk at u. Only the
/// fundamental cycles of the BFS tree at u are tested. Throws
/// EndpointMismatch when s ξ != f(u) or t ξ != g(u).
bool is_topologically_valid(const ReducedWalk& xi, const GraphHom& f, const GraphHom& g, Vertex u);

/// The homotopy h with h(u) = ξ. Throws NotValid for invalid ξ.
Homotopy homotopy_from_valid_walk(const ReducedWalk& xi, const GraphHom& f, const GraphHom& g,
                                  Vertex u);

/// BFS spanning tree with least-index tie-breaking: parent[root] = root.
/// Vertices outside the root's component get parent = order().
std::vector<Vertex> bfs_parents(const Graph& g, Vertex root);

/// Tree walk from root to v along bfs_parents.
Walk tree_walk(const Graph& g, const std::vector<Vertex>& parent, Vertex root, Vertex v);

/// Induced subgraph of ΠH on reduced walks of length <= lmax.
struct PiWindow {
  std::size_t lmax = 0;
  Graph graph;
  std::vector<ReducedWalk> walks;  // label of each vertex
  std::vector<bool> boundary;      // length >= lmax - 1: neighborhood may be cut
  std::vector<bool> interior;      // length <= lmax - 2: neighborhood complete
};

PiWindow materialize_pi(const Graph& h, std::size_t lmax);

}  // namespace homcx
