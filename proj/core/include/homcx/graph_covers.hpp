#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "homcx/e_f.hpp"
#include "homcx/graph.hpp"
#include "homcx/walk.hpp"

namespace homcx {

/// Universal cover of a connected graph truncated at radius R. Vertices are
/// the reduced walks from the basepoint of length <= R; a walk is adjacent to
/// its one-step extensions. Cover vertices are passed around as those walks.
class TreeCover {
 public:
  /// Throws NotConnected. Checks on construction that the result is a tree
  /// and that the projection is bijective on the neighborhood of every
  /// interior vertex (length <= R-1).
  TreeCover(const Graph& g, Vertex basepoint, std::size_t radius);

  const Graph& base() const noexcept { return *g_; }
  Vertex basepoint() const noexcept { return u_; }
  std::size_t radius() const noexcept { return radius_; }

  /// Cover vertices in canonical walk order; index 0 is the basepoint.
  const std::vector<ReducedWalk>& vertices() const noexcept { return walks_; }
  /// The tree on vertex indices.
  const Graph& tree() const noexcept { return tree_; }
  std::optional<std::size_t> index_of(const Walk& w) const;
  bool contains(const Walk& w) const { return index_of(w).has_value(); }
  /// p(ξ) = t(ξ).
  Vertex project(std::size_t i) const { return walks_.at(i).target(); }

 private:
  const Graph* g_;
  Vertex u_;
  std::size_t radius_;
  std::vector<ReducedWalk> walks_;
  std::unordered_map<Walk, std::size_t, WalkHash> index_;
  Graph tree_;
};

TreeCover truncated_universal_cover(const Graph& g, Vertex u, std::size_t radius);

/// Closed reduced walks at u of length <= max_len in canonical order,
/// optionally restricted to even length.
std::vector<ReducedWalk> pi1_elements(const Graph& g, Vertex u, std::size_t max_len,
                                      bool even_only = false);

/// reduce(f(ω)) for a closed walk ω. Throws NotClosed.
ReducedWalk f_star(const GraphHom& f, const ReducedWalk& omega);

/// End of the lift of ξ starting at x̃, i.e. x̃·ξ. Throws OutOfWindow unless
/// len(x̃) + len(ξ) <= R and SourceTargetMismatch unless s(ξ) = p(x̃).
ReducedWalk lift_walk(const TreeCover& c, const ReducedWalk& x, const ReducedWalk& xi);

/// Projection of the tree path from x̃ to ỹ: x̃⁻¹·ỹ. Throws OutOfWindow.
ReducedWalk proj_vertex(const TreeCover& c, const ReducedWalk& x, const ReducedWalk& y);

/// Deck transformation by a closed walk γ at the basepoint: x̃ ↦ γ·x̃.
/// Throws OutOfWindow when the image leaves the window.
ReducedWalk deck_translate(const TreeCover& c, const ReducedWalk& gamma, const ReducedWalk& x);

/// f̃(ṽ) = reduce(f(ṽ)) from the cover of G at u to the cover of H at f(u).
/// Throws OutOfWindow or SourceTargetMismatch on mismatched basepoints.
ReducedWalk ftilde(const GraphHom& f, const TreeCover& cg, const TreeCover& ch, const ReducedWalk& v);

/// Ψ(φ)(ṽ): the lifts at f̃(ṽ) of every walk of φ(p(ṽ)), sorted. Also checks
/// that projecting them recovers (tφ)(p(ṽ)), throwing InvariantViolation
/// otherwise. Throws OutOfWindow when a lift leaves the H window.
std::vector<ReducedWalk> psi_apply(const EfElement& phi, const TreeCover& cg, const TreeCover& ch,
                                   const ReducedWalk& v);

}  // namespace homcx
