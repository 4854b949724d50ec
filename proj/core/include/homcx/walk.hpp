#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "homcx/graph.hpp"

namespace homcx {

/// Nonempty vertex sequence in which consecutive vertices are adjacent.
///
/// A walk keeps a non-owning pointer to its ambient graph. Equality and
/// ordering look only at the vertex sequence; the order is by length first,
/// then lexicographic, which is the canonical order used in reports.
class Walk {
 public:
  /// Throws InvalidWalk if the sequence is empty or steps along a non-edge.
  Walk(const Graph& g, std::vector<Vertex> vertices);

  static Walk trivial(const Graph& g, Vertex x);

  const Graph& graph() const noexcept { return *graph_; }
  const std::vector<Vertex>& vertices() const noexcept { return v_; }
  std::size_t length() const noexcept { return v_.size() - 1; }
  Vertex source() const noexcept { return v_.front(); }
  Vertex target() const noexcept { return v_.back(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  bool is_closed() const noexcept { return v_.front() == v_.back(); }
  bool is_reduced() const noexcept;

  friend bool operator==(const Walk& a, const Walk& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Walk& a, const Walk& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    return a.v_ <=> b.v_;
  }

 protected:
  struct Unchecked {};
  Walk(Unchecked, const Graph& g, std::vector<Vertex> vertices)
      : graph_(&g), v_(std::move(vertices)) {}

  const Graph* graph_;
  std::vector<Vertex> v_;
};

/// Walk without backtracking: x_i != x_{i+2}. These are the vertices of ΠH.
class ReducedWalk : public Walk {
 public:
  /// Throws InvalidWalk if the sequence is not a reduced walk.
  ReducedWalk(const Graph& g, std::vector<Vertex> vertices);

  static ReducedWalk trivial(const Graph& g, Vertex x);

  /// Skips validation; callers guarantee the invariant.
  static ReducedWalk unchecked(const Graph& g, std::vector<Vertex> vertices) {
    return ReducedWalk(Unchecked{}, g, std::move(vertices));
  }

 private:
  ReducedWalk(Unchecked tag, const Graph& g, std::vector<Vertex> vertices)
      : Walk(tag, g, std::move(vertices)) {}
};

/// Stack-based reduction; equals the result of any sequence of elementary
/// reductions.
ReducedWalk reduce(const Walk& w);

/// Concatenation a•b (no reduction). Throws SourceTargetMismatch.
Walk concat(const Walk& a, const Walk& b);

/// Reduced product a·b. Throws SourceTargetMismatch if t(a) != s(b).
ReducedWalk walk_product(const ReducedWalk& a, const ReducedWalk& b);

Walk walk_inverse(const Walk& w);
ReducedWalk walk_inverse(const ReducedWalk& w);

/// Pointwise image f(ω). The walk must live in f's domain.
Walk map_walk(const GraphHom& f, const Walk& w);

/// Throws NotClosed for open walks.
bool is_cyclically_reduced(const Walk& w);

/// Whether f(ω) is cyclically reduced. Throws NotClosed for open walks.
bool is_f_tight(const GraphHom& f, const Walk& w);

/// All reduced walks starting at x of length at most max_len, in canonical
/// order.
std::vector<ReducedWalk> reduced_walks_from(const Graph& g, Vertex x, std::size_t max_len);

/// Truncation (x_0, ..., x_{l-k}); requires k <= length.
ReducedWalk truncate(const ReducedWalk& w, std::size_t k);

struct WalkHash {
  std::size_t operator()(const Walk& w) const noexcept;
};

}  // namespace homcx
