#include "homcx/graph_covers.hpp"

#include <algorithm>
#include <string>

#include "homcx/error.hpp"

namespace homcx {

TreeCover::TreeCover(const Graph& g, Vertex basepoint, std::size_t radius)
    : g_(&g), u_(basepoint), radius_(radius) {
  if (basepoint >= g.order()) fail(ErrorCode::InvalidGraph, "basepoint out of range");
  if (!is_connected(g)) fail(ErrorCode::NotConnected, "universal cover needs a connected graph");
  walks_ = reduced_walks_from(g, basepoint, radius);
  index_.reserve(walks_.size());
  for (std::size_t i = 0; i < walks_.size(); ++i) index_.emplace(walks_[i], i);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < walks_.size(); ++i) {
    const auto parent = index_.at(truncate(walks_[i], 1));
    edges.emplace_back(Vertex(std::min(parent, i)), Vertex(std::max(parent, i)));
  }
  tree_ = Graph(walks_.size(), edges);

  // Every non-root vertex has exactly one parent, so n-1 edges plus
  // connectivity make a tree.
  if (tree_.size() + 1 != tree_.order() || !is_connected(tree_)) {
    fail(ErrorCode::InvariantViolation, "truncated cover is not a tree");
  }
  for (std::size_t i = 0; i < walks_.size(); ++i) {
    for (auto j : tree_.neighbors(Vertex(i))) {
      if (!g.adjacent(project(i), project(j))) {
        fail(ErrorCode::InvariantViolation, "cover projection is not a homomorphism");
      }
    }
    if (walks_[i].length() >= radius_) continue;
    std::vector<Vertex> images;
    for (auto j : tree_.neighbors(Vertex(i))) images.push_back(project(j));
    std::sort(images.begin(), images.end());
    const auto nb = g.neighbors(project(i));
    if (!std::equal(images.begin(), images.end(), nb.begin(), nb.end())) {
      fail(ErrorCode::InvariantViolation, "cover projection not locally bijective at an interior vertex");
    }
  }
}

std::optional<std::size_t> TreeCover::index_of(const Walk& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TreeCover truncated_universal_cover(const Graph& g, Vertex u, std::size_t radius) {
  return TreeCover(g, u, radius);
}

std::vector<ReducedWalk> pi1_elements(const Graph& g, Vertex u, std::size_t max_len, bool even_only) {
  std::vector<ReducedWalk> out;
  for (auto& w : reduced_walks_from(g, u, max_len)) {
    if (w.is_closed() && (!even_only || w.length() % 2 == 0)) out.push_back(std::move(w));
  }
  return out;
}

ReducedWalk f_star(const GraphHom& f, const ReducedWalk& omega) {
  if (!omega.is_closed()) fail(ErrorCode::NotClosed, "f_* takes a closed walk");
  return reduce(map_walk(f, omega));
}

namespace {

void require_in_window(const TreeCover& c, const ReducedWalk& x, const char* what) {
  if (x.source() != c.basepoint() || x.length() > c.radius()) {
    fail(ErrorCode::OutOfWindow, std::string(what) + " is not a vertex of the truncated cover");
  }
}

}  // namespace

ReducedWalk lift_walk(const TreeCover& c, const ReducedWalk& x, const ReducedWalk& xi) {
  require_in_window(c, x, "lift start");
  if (x.length() + xi.length() > c.radius()) {
    fail(ErrorCode::OutOfWindow, "lift of length " + std::to_string(xi.length()) + " from depth " +
                                     std::to_string(x.length()) + " leaves radius " +
                                     std::to_string(c.radius()));
  }
  return walk_product(x, xi);
}

ReducedWalk proj_vertex(const TreeCover& c, const ReducedWalk& x, const ReducedWalk& y) {
  require_in_window(c, x, "projection start");
  require_in_window(c, y, "projection end");
  return walk_product(walk_inverse(x), y);
}

ReducedWalk deck_translate(const TreeCover& c, const ReducedWalk& gamma, const ReducedWalk& x) {
  require_in_window(c, x, "translated vertex");
  if (!gamma.is_closed() || gamma.source() != c.basepoint()) {
    fail(ErrorCode::NotClosed, "deck transformation needs a closed walk at the basepoint");
  }
  auto r = walk_product(gamma, x);
  require_in_window(c, r, "translate");
  return r;
}

ReducedWalk ftilde(const GraphHom& f, const TreeCover& cg, const TreeCover& ch, const ReducedWalk& v) {
  if (f(cg.basepoint()) != ch.basepoint()) {
    fail(ErrorCode::SourceTargetMismatch, "cover basepoints are not related by f");
  }
  require_in_window(cg, v, "domain cover vertex");
  auto r = reduce(map_walk(f, v));
  require_in_window(ch, r, "image of f~");
  return r;
}

std::vector<ReducedWalk> psi_apply(const EfElement& phi, const TreeCover& cg, const TreeCover& ch,
                                   const ReducedWalk& v) {
  const auto& f = phi.base();
  const auto base = ftilde(f, cg, ch, v);
  std::vector<ReducedWalk> out;
  for (const auto& xi : phi(v.target())) out.push_back(lift_walk(ch, base, xi));
  std::sort(out.begin(), out.end());

  std::vector<Vertex> down, expected;
  for (const auto& y : out) down.push_back(y.target());
  for (const auto& xi : phi(v.target())) expected.push_back(xi.target());
  std::sort(down.begin(), down.end());
  std::sort(expected.begin(), expected.end());
  if (down != expected) fail(ErrorCode::InvariantViolation, "lifted targets do not project to t(phi)");
  return out;
}

}  // namespace homcx
