#include "homcx/walk.hpp"

#include <algorithm>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "homcx/error.hpp"

namespace homcx {

namespace {

void check_walk(const Graph& g, const std::vector<Vertex>& v) {
  if (v.empty()) fail(ErrorCode::InvalidWalk, "walk must have at least one vertex");
  for (Vertex x : v) {
    if (x >= g.order()) fail(ErrorCode::InvalidWalk, "vertex " + std::to_string(x) + " out of range");
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (!g.adjacent(v[i], v[i + 1])) {
      fail(ErrorCode::InvalidWalk,
           "non-edge step " + std::to_string(v[i]) + "-" + std::to_string(v[i + 1]));
    }
  }
}

void check_same_graph(const Walk& a, const Walk& b) {
  if (&a.graph() != &b.graph()) fail(ErrorCode::InvalidWalk, "walks live in different graphs");
}

}  // namespace

Walk::Walk(const Graph& g, std::vector<Vertex> vertices) : graph_(&g), v_(std::move(vertices)) {
  check_walk(g, v_);
}

Walk Walk::trivial(const Graph& g, Vertex x) { return Walk(g, {x}); }

bool Walk::is_reduced() const noexcept {
  for (std::size_t i = 0; i + 2 < v_.size(); ++i) {
    if (v_[i] == v_[i + 2]) return false;
  }
  return true;
}

ReducedWalk::ReducedWalk(const Graph& g, std::vector<Vertex> vertices)
    : Walk(g, std::move(vertices)) {
  if (!is_reduced()) fail(ErrorCode::InvalidWalk, "walk is not reduced");
}

ReducedWalk ReducedWalk::trivial(const Graph& g, Vertex x) { return ReducedWalk(g, {x}); }

ReducedWalk reduce(const Walk& w) {
  std::vector<Vertex> st;
  st.reserve(w.vertices().size());
  for (Vertex x : w.vertices()) {
    // Appending x after (.., x, y) would create the backtrack x,y,x: drop y.
    if (st.size() >= 2 && st[st.size() - 2] == x) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  return ReducedWalk::unchecked(w.graph(), std::move(st));
}

Walk concat(const Walk& a, const Walk& b) {
  check_same_graph(a, b);
  if (a.target() != b.source()) {
    fail(ErrorCode::SourceTargetMismatch, "t(a)=" + std::to_string(a.target()) +
                                              " differs from s(b)=" + std::to_string(b.source()));
  }
  std::vector<Vertex> v = a.vertices();
  v.insert(v.end(), b.vertices().begin() + 1, b.vertices().end());
  return Walk(a.graph(), std::move(v));
}

ReducedWalk walk_product(const ReducedWalk& a, const ReducedWalk& b) { return reduce(concat(a, b)); }

Walk walk_inverse(const Walk& w) {
  std::vector<Vertex> v(w.vertices().rbegin(), w.vertices().rend());
  return Walk(w.graph(), std::move(v));
}

ReducedWalk walk_inverse(const ReducedWalk& w) {
  std::vector<Vertex> v(w.vertices().rbegin(), w.vertices().rend());
  return ReducedWalk::unchecked(w.graph(), std::move(v));
}

Walk map_walk(const GraphHom& f, const Walk& w) {
  if (&w.graph() != &f.domain()) fail(ErrorCode::InvalidWalk, "walk is not in the domain of f");
  std::vector<Vertex> v;
  v.reserve(w.vertices().size());
  for (Vertex x : w.vertices()) v.push_back(f(x));
  return Walk(f.codomain(), std::move(v));
}

bool is_cyclically_reduced(const Walk& w) {
  if (!w.is_closed()) fail(ErrorCode::NotClosed, "walk is not closed");
  const std::size_t k = w.length();
  if (k < 3 || !w.is_reduced()) return false;
  return w[k - 1] != w[1];
}

bool is_f_tight(const GraphHom& f, const Walk& w) {
  if (!w.is_closed()) fail(ErrorCode::NotClosed, "walk is not closed");
  return is_cyclically_reduced(map_walk(f, w));
}

std::vector<ReducedWalk> reduced_walks_from(const Graph& g, Vertex x, std::size_t max_len) {
  std::vector<std::vector<Vertex>> layer{{x}};
  std::vector<ReducedWalk> out;
  out.push_back(ReducedWalk(g, {x}));
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& w : layer) {
      for (Vertex y : g.neighbors(w.back())) {
        if (w.size() >= 2 && w[w.size() - 2] == y) continue;
        auto e = w;
        e.push_back(y);
        next.push_back(std::move(e));
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& w : next) out.push_back(ReducedWalk::unchecked(g, w));
    layer = std::move(next);
  }
  return out;
}

ReducedWalk truncate(const ReducedWalk& w, std::size_t k) {
  if (k > w.length()) fail(ErrorCode::InvalidWalk, "truncation longer than the walk");
  std::vector<Vertex> v(w.vertices().begin(), w.vertices().end() - std::ptrdiff_t(k));
  return ReducedWalk::unchecked(w.graph(), std::move(v));
}

std::size_t WalkHash::operator()(const Walk& w) const noexcept {
  return boost::hash_range(w.vertices().begin(), w.vertices().end());
}

}  // namespace homcx
