#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcx/graph.hpp"
#include "homcx/hom_poset.hpp"
#include "homcx/pi_graph.hpp"
#include "homcx/walk.hpp"

namespace homcx {

/// Set-valued homomorphism φ: G ⇸ ΠH lying over a fixed f (s∘φ = f).
/// Walk sets are kept sorted in canonical walk order.
class EfElement {
 public:
  /// Checks the s-condition (NotInFiber) and cross-adjacency across every
  /// edge of G (NotHomomorphism).
  EfElement(const GraphHom& f, std::vector<std::vector<ReducedWalk>> sets);

  static EfElement unchecked(const GraphHom& f, std::vector<std::vector<ReducedWalk>> sets);
  static EfElement identity(const GraphHom& f);
  static EfElement from_homotopy(const Homotopy& h);

  const GraphHom& base() const noexcept { return f_; }
  const std::vector<ReducedWalk>& operator()(Vertex u) const { return sets_.at(u); }
  const std::vector<std::vector<ReducedWalk>>& sets() const noexcept { return sets_; }

  /// len(φ,u): longest walk length at u.
  std::size_t len(Vertex u) const;
  /// Sum of len(φ,u) over all vertices.
  std::size_t norm() const;
  bool is_singleton() const noexcept;
  /// The homotopy from f to t∘φ of a singleton-valued element.
  std::optional<Homotopy> as_homotopy() const;
  /// tφ: the set-valued homomorphism u ↦ {t ξ : ξ ∈ φ(u)}.
  SetValuedHom target() const;
  bool leq(const EfElement& other) const;

  /// Flat encoding used for hashing and deterministic ordering.
  std::vector<std::uint32_t> key() const;

  friend bool operator==(const EfElement& a, const EfElement& b) { return a.sets_ == b.sets_; }
  /// Norm first, then key.
  friend bool operator<(const EfElement& a, const EfElement& b);

 private:
  struct Unchecked {};
  EfElement(Unchecked, const GraphHom& f, std::vector<std::vector<ReducedWalk>> sets);

  GraphHom f_;
  std::vector<std::vector<ReducedWalk>> sets_;
};

/// Vertices on some f-tight closed walk, ascending. Uses strongly connected
/// components of the digraph on ordered adjacent pairs with arcs
/// (u,v) -> (v,w) whenever f(u) != f(w).
std::vector<Vertex> tight_vertices(const GraphHom& f);

/// Membership in E_f: every walk has even length and each tight vertex
/// carries exactly its trivial walk. Throws NotInFiber if s∘φ != f.
bool is_in_Ef(const EfElement& phi);

struct AuxDigraph {
  std::vector<Vertex> vertices;  // ascending
  std::vector<std::pair<Vertex, Vertex>> arcs;  // sorted

  bool has_vertex(Vertex u) const;
  bool has_arc(Vertex u, Vertex v) const;
  std::vector<Vertex> sinks() const;
  /// Induced subdigraph on the given vertex subset.
  AuxDigraph induced(const std::vector<Vertex>& keep) const;
};

/// Vertices with len(φ,u) >= 2; arc (u,v) when the type of a pair of longest
/// walks at u and v is A1 or A2.
AuxDigraph aux_digraph(const EfElement& phi);

/// Sink-truncation certificate from a singleton h ∈ E_f down to id_f: each
/// step shortens the walk at the least sink by two.
std::vector<EfElement> reduce_to_identity(const EfElement& h);

/// E_f elements of norm <= max_norm, by breadth-first search from id_f
/// through single insertions and deletions. Every element found is also
/// checked against is_in_Ef. Requires connected G and square-free H.
std::vector<EfElement> enumerate_Ef_bounded(const GraphHom& f, std::size_t max_norm,
                                            std::size_t cap = default_cap());

/// Every set-valued φ: G ⇸ ΠH over f with norm <= max_norm, found by
/// backtracking with forward checking. No connectivity or parity filter.
std::vector<EfElement> enumerate_fiber_bounded(const GraphHom& f, std::size_t max_norm,
                                               std::size_t cap = default_cap());

/// Component of id_f in the fiber over f restricted to norm <= max_norm,
/// with no hypothesis on H.
std::vector<EfElement> discover_fiber_component(const GraphHom& f, std::size_t max_norm,
                                                std::size_t cap = default_cap());

/// ξ ∈ φ'(u) forced by a neighbor walk: (f(u), f(v))·η·(t η, x).
ReducedWalk down_lift_formula(const GraphHom& f, Vertex u, Vertex v, const ReducedWalk& eta, Vertex x);
/// η_u·(y_u, z_u, x) with y_u = t(η_u).
ReducedWalk up_lift_formula(const ReducedWalk& eta_u, Vertex z_u, Vertex x);

/// All set-valued homomorphisms ψ ≤ phi (pointwise nonempty subsets).
std::vector<SetValuedHom> homs_below(const SetValuedHom& phi);
/// All set-valued homomorphisms ψ ≥ phi.
std::vector<SetValuedHom> homs_above(const SetValuedHom& phi);

/// Every φ' ≤ φ with tφ' = ψ.
std::vector<EfElement> down_lifts(const EfElement& phi, const SetValuedHom& psi);
/// Every φ' ≥ φ in the fiber over f with tφ' = ψ. New walks at u are forced
/// by adjacency to a walk at a neighbor, so the search is exact.
std::vector<EfElement> up_lifts(const EfElement& phi, const SetValuedHom& psi);

struct CoveringViolation {
  std::string direction;  // "down" or "up"
  EfElement phi;
  SetValuedHom psi;
  std::size_t lifts = 0;
};

struct CoveringOptions {
  /// Run on a non-square-free H using the fiber component of id_f in place
  /// of E_f; used to exhibit failures of the lifting property.
  bool allow_non_square_free = false;
  std::size_t cap = default_cap();
};

struct CoveringReport {
  std::size_t max_norm = 0;
  std::size_t window = 0;      // elements with norm <= window are tested
  std::size_t elements = 0;    // size of the bounded enumeration
  std::size_t tested = 0;
  std::size_t down_checks = 0;
  std::size_t up_checks = 0;
  std::size_t formula_checks = 0;
  std::vector<CoveringViolation> violations;
};

/// Unique-lift check of t: E_f -> Hom(G,H) around every element of norm
/// <= max_norm - 2.
CoveringReport check_poset_covering_local(const GraphHom& f, std::size_t max_norm,
                                          const CoveringOptions& opts = {});

/// The U/D operators for one ordering ω_1..ω_M of the simple paths of G
/// (by length, then lexicographically; length-0 paths included). Path
/// indices are 1-based as in X_{n,i}.
class PathFiltration {
 public:
  explicit PathFiltration(const Graph& g);

  const std::vector<std::vector<Vertex>>& paths() const noexcept { return paths_; }
  std::size_t size() const noexcept { return paths_.size(); }

  bool in_X(const EfElement& phi, std::size_t n) const;
  /// φ ∈ X_{n,i}; requires 0 <= i <= M.
  bool in_X(const EfElement& phi, std::size_t n, std::size_t i) const;
  /// Fixed points of U inside X_{n,i}.
  bool in_U_image(const EfElement& phi, std::size_t n, std::size_t i) const;

  /// Closure operator on X_{n,i}; throws NotInDomain outside it.
  EfElement U(const EfElement& phi, std::size_t n, std::size_t i) const;
  /// Interior operator on U(X_{n,i}); throws NotInDomain outside it.
  EfElement D(const EfElement& phi, std::size_t n, std::size_t i) const;

 private:
  ReducedWalk xi_star(const EfElement& phi, std::size_t n, Vertex vk) const;

  const Graph* g_;
  std::vector<std::vector<Vertex>> paths_;
};

/// Self-homotopies h of f lying in E_f with norm <= max_norm, obtained from
/// the topologically valid even closed reduced walks at f(u).
std::vector<Homotopy> gamma_elements_bounded(const GraphHom& f, Vertex u, std::size_t max_norm);

/// Pointwise product h1(u)·h2(u).
Homotopy gamma_product(const Homotopy& a, const Homotopy& b);
Homotopy gamma_inverse(const Homotopy& h);

/// (h·φ)(u) = {h(u)·ξ : ξ ∈ φ(u)}.
EfElement gamma_act(const Homotopy& h, const EfElement& phi);

}  // namespace homcx
