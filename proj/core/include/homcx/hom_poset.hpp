#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "homcx/graph.hpp"

namespace homcx {

/// Map V(G) -> nonempty subsets of V(K) such that every cross pair across an
/// edge of G is an edge of K. Sets are stored sorted.
class SetValuedHom {
 public:
  /// Validates and sorts; throws NotHomomorphism on any violation.
  SetValuedHom(const Graph& dom, const Graph& cod, std::vector<std::vector<Vertex>> sets);

  static SetValuedHom singleton(const GraphHom& f);
  /// `sets` must already be sorted and valid.
  static SetValuedHom unchecked(const Graph& dom, const Graph& cod,
                                std::vector<std::vector<Vertex>> sets);

  const Graph& domain() const noexcept { return *dom_; }
  const Graph& codomain() const noexcept { return *cod_; }
  const std::vector<Vertex>& operator()(Vertex u) const { return sets_.at(u); }
  const std::vector<std::vector<Vertex>>& sets() const noexcept { return sets_; }

  bool is_singleton() const noexcept;
  /// The underlying graph homomorphism of a singleton-valued element.
  std::optional<GraphHom> as_hom() const;
  /// Sum of set sizes; strictly monotone along the order.
  std::size_t total_size() const noexcept;
  /// Pointwise inclusion.
  bool leq(const SetValuedHom& other) const;

  friend bool operator==(const SetValuedHom& a, const SetValuedHom& b) { return a.sets_ == b.sets_; }
  /// Canonical order: total size, then lexicographic.
  friend bool operator<(const SetValuedHom& a, const SetValuedHom& b);

 private:
  struct Unchecked {};
  SetValuedHom(Unchecked, const Graph& dom, const Graph& cod, std::vector<std::vector<Vertex>> sets)
      : dom_(&dom), cod_(&cod), sets_(std::move(sets)) {}

  const Graph* dom_;
  const Graph* cod_;
  std::vector<std::vector<Vertex>> sets_;
};

bool is_set_valued_hom(const Graph& dom, const Graph& cod,
                       const std::vector<std::vector<Vertex>>& sets);

/// All graph homomorphisms G -> H in lexicographic order of their maps.
std::vector<GraphHom> enumerate_graph_homs(const Graph& g, const Graph& h);

/// Whether two homomorphisms differ at exactly one vertex.
bool hom_adjacent(const GraphHom& f, const GraphHom& g);

/// Explosion cap for poset enumeration: HOMCX_CAP if set, else 200000.
std::size_t default_cap();

/// Finite poset of set-valued homomorphisms, stored in canonical order so
/// that i < j whenever elements[i] < elements[j] in the poset.
struct HomPoset {
  std::vector<SetValuedHom> elements;
  /// Strict up-sets: above[i] lists every j with elements[i] < elements[j],
  /// ascending.
  std::vector<std::vector<std::uint32_t>> above;

  std::size_t size() const noexcept { return elements.size(); }
  /// Indices of singleton elements, i.e. the graph homomorphisms.
  std::vector<std::size_t> homs() const;
  std::optional<std::size_t> index_of(const SetValuedHom& phi) const;
};

/// The connected component of f in Hom(G,H). Throws ExplosionGuard once the
/// element count would exceed `cap`.
HomPoset enumerate_component(const Graph& g, const Graph& h, const GraphHom& f,
                             std::size_t cap = default_cap());

/// (kφ)(u) = k(φ(u)).
SetValuedHom post_compose(const GraphHom& k, const SetValuedHom& phi);

/// Whether the image of f lies inside a single edge of its codomain.
bool factors_through_k2(const GraphHom& f);

}  // namespace homcx
