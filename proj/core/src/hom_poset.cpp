#include "homcx/hom_poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "homcx/error.hpp"

namespace homcx {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept { return boost::hash_range(k.begin(), k.end()); }
};

Key key_of(const std::vector<std::vector<Vertex>>& sets) {
  Key k;
  for (const auto& s : sets) {
    k.push_back(std::uint32_t(s.size()));
    k.insert(k.end(), s.begin(), s.end());
  }
  return k;
}

bool canonical_less(const std::vector<std::vector<Vertex>>& a,
                    const std::vector<std::vector<Vertex>>& b) {
  std::size_t sa = 0, sb = 0;
  for (const auto& s : a) sa += s.size();
  for (const auto& s : b) sb += s.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

bool is_set_valued_hom(const Graph& dom, const Graph& cod,
                       const std::vector<std::vector<Vertex>>& sets) {
  if (sets.size() != dom.order()) return false;
  for (const auto& s : sets) {
    if (s.empty()) return false;
    for (Vertex x : s) {
      if (x >= cod.order()) return false;
    }
  }
  for (auto [u, v] : dom.edges()) {
    for (Vertex x : sets[u]) {
      for (Vertex y : sets[v]) {
        if (!cod.adjacent(x, y)) return false;
      }
    }
  }
  return true;
}

SetValuedHom::SetValuedHom(const Graph& dom, const Graph& cod, std::vector<std::vector<Vertex>> sets)
    : dom_(&dom), cod_(&cod), sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      fail(ErrorCode::NotHomomorphism, "repeated vertex in a set-valued homomorphism");
    }
  }
  if (!is_set_valued_hom(dom, cod, sets_)) {
    fail(ErrorCode::NotHomomorphism, "not a set-valued homomorphism");
  }
}

SetValuedHom SetValuedHom::singleton(const GraphHom& f) {
  std::vector<std::vector<Vertex>> sets;
  for (Vertex x : f.map()) sets.push_back({x});
  return unchecked(f.domain(), f.codomain(), std::move(sets));
}

SetValuedHom SetValuedHom::unchecked(const Graph& dom, const Graph& cod,
                                     std::vector<std::vector<Vertex>> sets) {
  return SetValuedHom(Unchecked{}, dom, cod, std::move(sets));
}

bool SetValuedHom::is_singleton() const noexcept {
  return std::all_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.size() == 1; });
}

std::optional<GraphHom> SetValuedHom::as_hom() const {
  if (!is_singleton()) return std::nullopt;
  std::vector<Vertex> map;
  for (const auto& s : sets_) map.push_back(s.front());
  return GraphHom(*dom_, *cod_, std::move(map));
}

std::size_t SetValuedHom::total_size() const noexcept {
  std::size_t n = 0;
  for (const auto& s : sets_) n += s.size();
  return n;
}

bool SetValuedHom::leq(const SetValuedHom& other) const {
  if (sets_.size() != other.sets_.size()) return false;
  for (std::size_t u = 0; u < sets_.size(); ++u) {
    if (!std::includes(other.sets_[u].begin(), other.sets_[u].end(), sets_[u].begin(),
                       sets_[u].end())) {
      return false;
    }
  }
  return true;
}

bool operator<(const SetValuedHom& a, const SetValuedHom& b) { return canonical_less(a.sets_, b.sets_); }

namespace {

struct HomSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> order;
  std::vector<std::vector<char>> domain;  // domain[u][x]: x still possible for u
  std::vector<Vertex> assignment;
  std::vector<bool> assigned;
  std::vector<GraphHom> out;

  // AC-3 over unassigned vertices; domains of assigned vertices are singletons.
  bool propagate(std::vector<std::vector<char>>& dom, Vertex changed) const {
    std::deque<Vertex> queue{changed};
    while (!queue.empty()) {
      Vertex b = queue.front();
      queue.pop_front();
      for (Vertex a : g.neighbors(b)) {
        bool shrunk = false;
        bool any = false;
        for (Vertex x = 0; x < h.order(); ++x) {
          if (!dom[a][x]) continue;
          bool supported = false;
          for (Vertex y : h.neighbors(x)) {
            if (dom[b][y]) {
              supported = true;
              break;
            }
          }
          if (!supported) {
            dom[a][x] = 0;
            shrunk = true;
          } else {
            any = true;
          }
        }
        if (!any) return false;
        if (shrunk) queue.push_back(a);
      }
    }
    return true;
  }

  void search(std::size_t depth) {
    if (depth == order.size()) {
      out.emplace_back(g, h, assignment);
      return;
    }
    const Vertex u = order[depth];
    for (Vertex x = 0; x < h.order(); ++x) {
      if (!domain[u][x]) continue;
      auto saved = domain;
      std::fill(domain[u].begin(), domain[u].end(), 0);
      domain[u][x] = 1;
      if (propagate(domain, u)) {
        assignment[u] = x;
        search(depth + 1);
      }
      domain = std::move(saved);
    }
  }
};

}  // namespace

std::vector<GraphHom> enumerate_graph_homs(const Graph& g, const Graph& h) {
  if (g.order() == 0) return {GraphHom(g, h, {})};
  HomSearch s{g, h, {}, {}, std::vector<Vertex>(g.order(), 0), std::vector<bool>(g.order(), false),
              {}};
  s.domain.assign(g.order(), std::vector<char>(h.order(), 1));
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> bfs{comp.front()};
    std::vector<bool> seen(g.order(), false);
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
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!s.propagate(s.domain, u)) return {};
  }
  s.search(0);
  std::sort(s.out.begin(), s.out.end(),
            [](const GraphHom& a, const GraphHom& b) { return a.map() < b.map(); });
  return s.out;
}

bool hom_adjacent(const GraphHom& f, const GraphHom& g) {
  if (f.map().size() != g.map().size()) return false;
  std::size_t diff = 0;
  for (std::size_t u = 0; u < f.map().size(); ++u) diff += f.map()[u] != g.map()[u];
  return diff == 1;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("HOMCX_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::size_t(v);
  }
  return 200000;
}

std::vector<std::size_t> HomPoset::homs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].is_singleton()) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> HomPoset::index_of(const SetValuedHom& phi) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), phi);
  if (it == elements.end() || !(*it == phi)) return std::nullopt;
  return std::size_t(it - elements.begin());
}

HomPoset enumerate_component(const Graph& g, const Graph& h, const GraphHom& f, std::size_t cap) {
  if (&f.domain() != &g || &f.codomain() != &h) {
    fail(ErrorCode::NotHomomorphism, "seed homomorphism has the wrong domain or codomain");
  }
  // Comparability-connectivity equals connectivity under single-vertex
  // insertions and deletions, since every interval of the poset is filled by
  // such steps.
  std::vector<std::vector<std::vector<Vertex>>> found;
  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  std::vector<std::vector<std::uint32_t>> covers;  // i -> elements covering i
  auto intern = [&](std::vector<std::vector<Vertex>> sets) -> std::uint32_t {
    auto k = key_of(sets);
    auto [it, inserted] = index.try_emplace(std::move(k), std::uint32_t(found.size()));
    if (inserted) {
      if (found.size() >= cap) {
        fail(ErrorCode::ExplosionGuard,
             "component exceeds the element cap of " + std::to_string(cap));
      }
      found.push_back(std::move(sets));
      covers.emplace_back();
    }
    return it->second;
  };
  {
    std::vector<std::vector<Vertex>> seed;
    for (Vertex x : f.map()) seed.push_back({x});
    intern(std::move(seed));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cover_pairs;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto cur = found[i];
    for (Vertex u = 0; u < g.order(); ++u) {
      // Deletions.
      if (cur[u].size() >= 2) {
        for (std::size_t k = 0; k < cur[u].size(); ++k) {
          auto next = cur;
          next[u].erase(next[u].begin() + std::ptrdiff_t(k));
          cover_pairs.emplace_back(intern(std::move(next)), std::uint32_t(i));
        }
      }
      // Insertions: x must be adjacent to everything at every neighbor.
      for (Vertex x = 0; x < h.order(); ++x) {
        if (std::binary_search(cur[u].begin(), cur[u].end(), x)) continue;
        bool ok = true;
        for (Vertex v : g.neighbors(u)) {
          for (Vertex y : cur[v]) {
            if (!h.adjacent(x, y)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) continue;
        auto next = cur;
        next[u].insert(std::upper_bound(next[u].begin(), next[u].end(), x), x);
        cover_pairs.emplace_back(std::uint32_t(i), intern(std::move(next)));
      }
    }
  }

  // Canonical relabelling.
  std::vector<std::uint32_t> perm(found.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return canonical_less(found[a], found[b]); });
  std::vector<std::uint32_t> rank(found.size());
  for (std::uint32_t r = 0; r < perm.size(); ++r) rank[perm[r]] = r;

  HomPoset p;
  p.elements.reserve(found.size());
  for (auto i : perm) p.elements.push_back(SetValuedHom::unchecked(g, h, found[i]));
  std::vector<std::vector<std::uint32_t>> up(found.size());
  for (auto [a, b] : cover_pairs) up[rank[a]].push_back(rank[b]);
  for (auto& l : up) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  // Transitive closure, processing from the top so that up-sets of covers
  // are complete.
  p.above.assign(found.size(), {});
  std::vector<char> mark(found.size(), 0);
  for (std::size_t i = found.size(); i-- > 0;) {
    std::vector<std::uint32_t> acc;
    for (auto j : up[i]) {
      if (!mark[j]) {
        mark[j] = 1;
        acc.push_back(j);
      }
      for (auto k : p.above[j]) {
        if (!mark[k]) {
          mark[k] = 1;
          acc.push_back(k);
        }
      }
    }
    for (auto j : acc) mark[j] = 0;
    std::sort(acc.begin(), acc.end());
    p.above[i] = std::move(acc);
  }
  return p;
}

SetValuedHom post_compose(const GraphHom& k, const SetValuedHom& phi) {
  if (&k.domain() != &phi.codomain()) {
    fail(ErrorCode::NotHomomorphism, "post-composition with a map from the wrong graph");
  }
  std::vector<std::vector<Vertex>> sets;
  for (const auto& s : phi.sets()) {
    std::vector<Vertex> img;
    for (Vertex x : s) img.push_back(k(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    sets.push_back(std::move(img));
  }
  return SetValuedHom::unchecked(phi.domain(), k.codomain(), std::move(sets));
}

bool factors_through_k2(const GraphHom& f) {
  std::vector<Vertex> img = f.map();
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (img.size() == 1) return true;
  return img.size() == 2 && f.codomain().adjacent(img[0], img[1]);
}

}  // namespace homcx
