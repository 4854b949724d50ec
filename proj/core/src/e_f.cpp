#include "homcx/e_f.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "homcx/error.hpp"

namespace homcx {

namespace {

using Sets = std::vector<std::vector<ReducedWalk>>;
using Key = std::vector<std::uint32_t>;
using KeyHash = boost::hash<Key>;

void normalise(std::vector<ReducedWalk>& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const std::vector<ReducedWalk>& s, const ReducedWalk& w) {
  return std::binary_search(s.begin(), s.end(), w);
}

std::size_t max_len(const std::vector<ReducedWalk>& s) {
  std::size_t m = 0;
  for (const auto& w : s) m = std::max(m, w.length());
  return m;
}

bool adjacent_to_all(const ReducedWalk& xi, const std::vector<ReducedWalk>& s) {
  return std::all_of(s.begin(), s.end(), [&](const ReducedWalk& eta) { return pi_adjacent(xi, eta); });
}

void require_connected_domain(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    fail(ErrorCode::NotConnected, "domain must be connected with at least two vertices");
  }
}

void require_square_free(const Graph& h) {
  if (auto sq = find_square(h)) {
    fail(ErrorCode::NotSquareFree,
         "codomain contains the 4-cycle " + std::to_string((*sq)[0]) + "," +
             std::to_string((*sq)[1]) + "," + std::to_string((*sq)[2]) + "," +
             std::to_string((*sq)[3]));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// EfElement

EfElement::EfElement(Unchecked, const GraphHom& f, Sets sets) : f_(f), sets_(std::move(sets)) {}

EfElement::EfElement(const GraphHom& f, Sets sets) : f_(f), sets_(std::move(sets)) {
  const Graph& g = f.domain();
  if (sets_.size() != g.order()) fail(ErrorCode::NotHomomorphism, "wrong number of walk sets");
  for (Vertex u = 0; u < g.order(); ++u) {
    auto& s = sets_[u];
    if (s.empty()) fail(ErrorCode::NotHomomorphism, "empty walk set at vertex " + std::to_string(u));
    const auto before = s.size();
    normalise(s);
    if (s.size() != before) fail(ErrorCode::NotHomomorphism, "repeated walk at vertex " + std::to_string(u));
    for (const auto& w : s) {
      if (&w.graph() != &f.codomain()) fail(ErrorCode::InvalidWalk, "walk lives in the wrong graph");
      if (w.source() != f(u)) {
        fail(ErrorCode::NotInFiber, "walk at vertex " + std::to_string(u) + " does not start at f(u)");
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    for (const auto& xi : sets_[u]) {
      if (!adjacent_to_all(xi, sets_[v])) {
        fail(ErrorCode::NotHomomorphism, "walks at " + std::to_string(u) + " and " +
                                             std::to_string(v) + " are not adjacent in ΠH");
      }
    }
  }
}

EfElement EfElement::unchecked(const GraphHom& f, Sets sets) { return EfElement(Unchecked{}, f, std::move(sets)); }

EfElement EfElement::identity(const GraphHom& f) {
  Sets sets;
  for (Vertex u = 0; u < f.domain().order(); ++u) sets.push_back({ReducedWalk::trivial(f.codomain(), f(u))});
  return unchecked(f, std::move(sets));
}

EfElement EfElement::from_homotopy(const Homotopy& h) {
  Sets sets;
  for (const auto& w : h.walks()) sets.push_back({w});
  return unchecked(h.source_hom(), std::move(sets));
}

std::size_t EfElement::len(Vertex u) const { return max_len(sets_.at(u)); }

std::size_t EfElement::norm() const {
  std::size_t n = 0;
  for (const auto& s : sets_) n += max_len(s);
  return n;
}

bool EfElement::is_singleton() const noexcept {
  return std::all_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.size() == 1; });
}

std::optional<Homotopy> EfElement::as_homotopy() const {
  if (!is_singleton()) return std::nullopt;
  std::vector<ReducedWalk> walks;
  std::vector<Vertex> g;
  for (const auto& s : sets_) {
    walks.push_back(s.front());
    g.push_back(s.front().target());
  }
  return Homotopy(f_, GraphHom(f_.domain(), f_.codomain(), std::move(g)), std::move(walks));
}

SetValuedHom EfElement::target() const {
  std::vector<std::vector<Vertex>> t;
  for (const auto& s : sets_) {
    std::vector<Vertex> ts;
    for (const auto& w : s) ts.push_back(w.target());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    t.push_back(std::move(ts));
  }
  return SetValuedHom::unchecked(f_.domain(), f_.codomain(), std::move(t));
}

bool EfElement::leq(const EfElement& other) const {
  if (sets_.size() != other.sets_.size()) return false;
  for (std::size_t u = 0; u < sets_.size(); ++u) {
    if (!std::includes(other.sets_[u].begin(), other.sets_[u].end(), sets_[u].begin(), sets_[u].end())) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> EfElement::key() const {
  Key k;
  for (const auto& s : sets_) {
    k.push_back(std::uint32_t(s.size()));
    for (const auto& w : s) {
      k.push_back(std::uint32_t(w.vertices().size()));
      k.insert(k.end(), w.vertices().begin(), w.vertices().end());
    }
  }
  return k;
}

bool operator<(const EfElement& a, const EfElement& b) {
  const auto na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  return a.key() < b.key();
}

// ---------------------------------------------------------------------------
// Tight vertices and the membership predicate

std::vector<Vertex> tight_vertices(const GraphHom& f) {
  const Graph& g = f.domain();
  // Node ids for ordered adjacent pairs (u, v): offset[u] + position of v in N(u).
  std::vector<std::size_t> offset(g.order() + 1, 0);
  for (Vertex u = 0; u < g.order(); ++u) offset[u + 1] = offset[u] + g.degree(u);
  const std::size_t nodes = offset.back();
  auto node = [&](Vertex u, Vertex v) {
    auto nb = g.neighbors(u);
    return offset[u] + std::size_t(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  std::vector<Vertex> tail(nodes), head(nodes);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      tail[node(u, v)] = u;
      head[node(u, v)] = v;
    }
  }
  auto successors = [&](std::size_t a, std::vector<std::size_t>& out) {
    out.clear();
    const Vertex u = tail[a], v = head[a];
    for (Vertex w : g.neighbors(v)) {
      if (f(u) != f(w)) out.push_back(node(v, w));
    }
  };

  // Iterative Tarjan.
  constexpr std::size_t unvisited = std::size_t(-1);
  std::vector<std::size_t> index(nodes, unvisited), low(nodes, 0), comp(nodes, unvisited);
  std::vector<char> on_stack(nodes, 0);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> comp_size;
  std::size_t counter = 0;
  struct Frame {
    std::size_t node;
    std::vector<std::size_t> succ;
    std::size_t next = 0;
  };
  for (std::size_t root = 0; root < nodes; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call;
    auto enter = [&](std::size_t a) {
      index[a] = low[a] = counter++;
      stack.push_back(a);
      on_stack[a] = 1;
      Frame fr{a, {}, 0};
      successors(a, fr.succ);
      call.push_back(std::move(fr));
    };
    enter(root);
    while (!call.empty()) {
      Frame& fr = call.back();
      if (fr.next < fr.succ.size()) {
        const std::size_t b = fr.succ[fr.next++];
        if (index[b] == unvisited) {
          enter(b);
        } else if (on_stack[b]) {
          low[fr.node] = std::min(low[fr.node], index[b]);
        }
        continue;
      }
      const std::size_t a = fr.node;
      if (low[a] == index[a]) {
        const std::size_t id = comp_size.size();
        std::size_t size = 0;
        std::size_t b;
        do {
          b = stack.back();
          stack.pop_back();
          on_stack[b] = 0;
          comp[b] = id;
          ++size;
        } while (b != a);
        comp_size.push_back(size);
      }
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[a]);
    }
  }
  // A pair digraph has no loops, so a component carries a cycle iff it has
  // at least two nodes.
  std::vector<char> tight(g.order(), 0);
  for (std::size_t a = 0; a < nodes; ++a) {
    if (comp_size[comp[a]] >= 2) tight[tail[a]] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (tight[u]) out.push_back(u);
  }
  return out;
}

bool is_in_Ef(const EfElement& phi) {
  const GraphHom& f = phi.base();
  for (Vertex u = 0; u < f.domain().order(); ++u) {
    for (const auto& w : phi(u)) {
      if (w.source() != f(u)) fail(ErrorCode::NotInFiber, "s∘φ differs from f at " + std::to_string(u));
    }
  }
  for (const auto& s : phi.sets()) {
    for (const auto& w : s) {
      if (w.length() % 2 != 0) return false;
    }
  }
  for (Vertex u : tight_vertices(f)) {
    if (phi(u).size() != 1 || phi(u).front().length() != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Auxiliary digraph and sink reduction

bool AuxDigraph::has_vertex(Vertex u) const { return std::binary_search(vertices.begin(), vertices.end(), u); }

bool AuxDigraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::pair<Vertex, Vertex>{u, v});
}

std::vector<Vertex> AuxDigraph::sinks() const {
  std::vector<Vertex> out;
  for (Vertex u : vertices) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), std::pair<Vertex, Vertex>{u, 0});
    if (it == arcs.end() || it->first != u) out.push_back(u);
  }
  return out;
}

AuxDigraph AuxDigraph::induced(const std::vector<Vertex>& keep) const {
  AuxDigraph d;
  for (Vertex u : vertices) {
    if (std::find(keep.begin(), keep.end(), u) != keep.end()) d.vertices.push_back(u);
  }
  for (auto a : arcs) {
    if (d.has_vertex(a.first) && d.has_vertex(a.second)) d.arcs.push_back(a);
  }
  return d;
}

AuxDigraph aux_digraph(const EfElement& phi) {
  const Graph& g = phi.base().domain();
  AuxDigraph d;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (phi.len(u) >= 2) d.vertices.push_back(u);
  }
  auto longest = [&](Vertex u) {
    std::vector<const ReducedWalk*> out;
    const auto l = phi.len(u);
    for (const auto& w : phi(u)) {
      if (w.length() == l) out.push_back(&w);
    }
    return out;
  };
  auto forward = [](const ReducedWalk& a, const ReducedWalk& b) {
    const auto t = classify_adjacency(a, b);
    return t.contains(AdjacencyType::A1) || t.contains(AdjacencyType::A2);
  };
  for (auto [u, v] : g.edges()) {
    if (!d.has_vertex(u) || !d.has_vertex(v)) continue;
    std::set<int> directions;
    for (const auto* xi : longest(u)) {
      for (const auto* eta : longest(v)) {
        const bool uv = forward(*xi, *eta);
        const bool vu = forward(*eta, *xi);
        if (uv == vu) fail(ErrorCode::InvariantViolation, "edge of the auxiliary digraph has no unique direction");
        directions.insert(uv ? 0 : 1);
      }
    }
    if (directions.size() != 1) {
      fail(ErrorCode::InvariantViolation, "arc direction depends on the choice of longest walks");
    }
    if (*directions.begin() == 0) {
      d.arcs.emplace_back(u, v);
    } else {
      d.arcs.emplace_back(v, u);
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

std::vector<EfElement> reduce_to_identity(const EfElement& h) {
  if (!h.is_singleton() || !is_in_Ef(h)) {
    fail(ErrorCode::NotInDomain, "sink reduction needs a singleton element of E_f");
  }
  std::vector<EfElement> path{h};
  while (path.back().norm() > 0) {
    const EfElement& cur = path.back();
    const auto sinks = aux_digraph(cur).sinks();
    if (sinks.empty()) fail(ErrorCode::NoSink, "auxiliary digraph has no sink");
    const Vertex v = sinks.front();
    Sets sets = cur.sets();
    sets[v] = {truncate(sets[v].front(), 2)};
    path.emplace_back(cur.base(), std::move(sets));
  }
  return path;
}

// ---------------------------------------------------------------------------
// Bounded enumeration

namespace {

std::vector<EfElement> bfs_fiber(const GraphHom& f, std::size_t max_norm, std::size_t cap) {
  const Graph& g = f.domain();
  const Graph& h = f.codomain();
  std::vector<EfElement> found{EfElement::identity(f)};
  std::unordered_set<Key, KeyHash> seen{found.front().key()};
  auto visit = [&](Sets sets) {
    EfElement e = EfElement::unchecked(f, std::move(sets));
    if (seen.insert(e.key()).second) {
      if (found.size() >= cap) {
        fail(ErrorCode::ExplosionGuard, "bounded enumeration exceeds the cap of " + std::to_string(cap));
      }
      found.push_back(std::move(e));
    }
  };
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Sets cur = found[i].sets();
    const std::size_t norm = found[i].norm();
    for (Vertex u = 0; u < g.order(); ++u) {
      if (cur[u].size() >= 2) {
        for (std::size_t k = 0; k < cur[u].size(); ++k) {
          Sets next = cur;
          next[u].erase(next[u].begin() + std::ptrdiff_t(k));
          visit(std::move(next));
        }
      }
      const std::size_t here = max_len(cur[u]);
      const std::size_t budget = max_norm - (norm - here);  // longest walk allowed at u
      std::vector<ReducedWalk> candidates;
      if (g.degree(u) == 0) {
        candidates = reduced_walks_from(h, f(u), budget);
      } else {
        const ReducedWalk& eta = cur[g.neighbors(u).front()].front();
        for (Vertex y : h.neighbors(eta.target())) candidates.push_back(pi_neighbor(eta, f(u), y));
      }
      for (auto& xi : candidates) {
        if (xi.length() > budget || contains(cur[u], xi)) continue;
        bool ok = true;
        for (Vertex v : g.neighbors(u)) {
          if (!adjacent_to_all(xi, cur[v])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        Sets next = cur;
        next[u].push_back(std::move(xi));
        normalise(next[u]);
        visit(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<EfElement> enumerate_Ef_bounded(const GraphHom& f, std::size_t max_norm, std::size_t cap) {
  require_connected_domain(f.domain());
  require_square_free(f.codomain());
  auto found = bfs_fiber(f, max_norm, cap);
  for (const auto& e : found) {
    if (!is_in_Ef(e)) fail(ErrorCode::InvariantViolation, "discovered element fails the E_f predicate");
  }
  return found;
}

std::vector<EfElement> discover_fiber_component(const GraphHom& f, std::size_t max_norm, std::size_t cap) {
  require_connected_domain(f.domain());
  return bfs_fiber(f, max_norm, cap);
}

namespace {

struct FiberSearch {
  const GraphHom& f;
  const Graph& g;
  std::size_t max_norm;
  std::size_t cap;
  std::vector<std::vector<ReducedWalk>> cand;
  std::vector<Vertex> order;
  std::vector<std::size_t> pos;
  Sets chosen;
  std::vector<EfElement> out;

  bool assigned(Vertex v, std::size_t depth) const { return pos[v] < depth; }

  // Candidates at w compatible with every chosen walk at assigned neighbors,
  // plus the extra set `extra` placed at vertex `at`.
  bool has_support(Vertex w, std::size_t depth, Vertex at, const std::vector<ReducedWalk>& extra) const {
    for (const auto& xi : cand[w]) {
      bool ok = true;
      for (Vertex v : g.neighbors(w)) {
        const std::vector<ReducedWalk>* s = nullptr;
        if (v == at) {
          s = &extra;
        } else if (assigned(v, depth)) {
          s = &chosen[v];
        }
        if (s && !adjacent_to_all(xi, *s)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  void run(std::size_t depth, std::size_t norm) {
    if (depth == order.size()) {
      if (out.size() >= cap) fail(ErrorCode::ExplosionGuard, "fiber enumeration exceeds the cap");
      out.push_back(EfElement::unchecked(f, chosen));
      return;
    }
    const Vertex u = order[depth];
    std::vector<const ReducedWalk*> allowed;
    for (const auto& xi : cand[u]) {
      bool ok = xi.length() + norm <= max_norm;
      for (Vertex v : g.neighbors(u)) {
        if (ok && assigned(v, depth)) ok = adjacent_to_all(xi, chosen[v]);
      }
      if (ok) allowed.push_back(&xi);
    }
    std::vector<ReducedWalk> subset;
    // Candidates are in canonical order, so the last pick is the longest.
    std::function<void(std::size_t)> pick = [&](std::size_t start) {
      for (std::size_t k = start; k < allowed.size(); ++k) {
        subset.push_back(*allowed[k]);
        bool ok = true;
        for (Vertex w : g.neighbors(u)) {
          if (ok && !assigned(w, depth)) ok = has_support(w, depth, u, subset);
        }
        if (ok) {
          chosen[u] = subset;
          run(depth + 1, norm + subset.back().length());
          pick(k + 1);
        }
        subset.pop_back();
      }
    };
    pick(0);
    chosen[u].clear();
  }
};

}  // namespace

std::vector<EfElement> enumerate_fiber_bounded(const GraphHom& f, std::size_t max_norm, std::size_t cap) {
  const Graph& g = f.domain();
  FiberSearch s{f, g, max_norm, cap, {}, {}, std::vector<std::size_t>(g.order(), 0), Sets(g.order()), {}};
  for (Vertex u = 0; u < g.order(); ++u) s.cand.push_back(reduced_walks_from(f.codomain(), f(u), max_norm));
  std::vector<bool> seen(g.order(), false);
  for (Vertex r = 0; r < g.order(); ++r) {
    if (seen[r]) continue;
    std::deque<Vertex> q{r};
    seen[r] = true;
    while (!q.empty()) {
      Vertex a = q.front();
      q.pop_front();
      s.order.push_back(a);
      for (Vertex b : g.neighbors(a)) {
        if (!seen[b]) {
          seen[b] = true;
          q.push_back(b);
        }
      }
    }
  }
  for (std::size_t i = 0; i < s.order.size(); ++i) s.pos[s.order[i]] = i;
  s.run(0, 0);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

// ---------------------------------------------------------------------------
// Covering check

ReducedWalk down_lift_formula(const GraphHom& f, Vertex u, Vertex v, const ReducedWalk& eta, Vertex x) {
  if (!f.domain().adjacent(u, v)) fail(ErrorCode::NotNeighbor, "u and v are not adjacent");
  if (eta.source() != f(v)) fail(ErrorCode::NotInFiber, "walk at v does not start at f(v)");
  return pi_neighbor(eta, f(u), x);
}

ReducedWalk up_lift_formula(const ReducedWalk& eta_u, Vertex z_u, Vertex x) {
  const Graph& h = eta_u.graph();
  return walk_product(eta_u, reduce(Walk(h, {eta_u.target(), z_u, x})));
}

namespace {

// Nonempty subsets of `items` (as index masks are too small for large sets,
// recurse instead).
template <class T, class Emit>
void for_each_nonempty_subset(const std::vector<T>& items, Emit&& emit) {
  std::vector<T> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      if (!cur.empty()) emit(cur);
      return;
    }
    rec(k + 1);
    cur.push_back(items[k]);
    rec(k + 1);
    cur.pop_back();
  };
  rec(0);
}

}  // namespace

std::vector<SetValuedHom> homs_below(const SetValuedHom& phi) {
  const std::size_t n = phi.sets().size();
  std::vector<std::vector<std::vector<Vertex>>> options(n);
  for (std::size_t u = 0; u < n; ++u) {
    for_each_nonempty_subset(phi.sets()[u], [&](const std::vector<Vertex>& s) { options[u].push_back(s); });
    std::sort(options[u].begin(), options[u].end());
  }
  std::vector<SetValuedHom> out;
  std::vector<std::vector<Vertex>> cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t u) {
    if (u == n) {
      out.push_back(SetValuedHom::unchecked(phi.domain(), phi.codomain(), cur));
      return;
    }
    for (const auto& s : options[u]) {
      cur[u] = s;
      rec(u + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<SetValuedHom> homs_above(const SetValuedHom& phi) {
  const Graph& g = phi.domain();
  const Graph& h = phi.codomain();
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> extra(n);  // vertices that may be added at u
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x = 0; x < h.order(); ++x) {
      if (std::binary_search(phi(u).begin(), phi(u).end(), x)) continue;
      bool ok = true;
      for (Vertex v : g.neighbors(u)) {
        for (Vertex y : phi(v)) ok = ok && h.adjacent(x, y);
      }
      if (ok) extra[u].push_back(x);
    }
  }
  std::vector<SetValuedHom> out;
  std::vector<std::vector<Vertex>> cur(n);
  std::function<void(Vertex)> rec = [&](Vertex u) {
    if (u == n) {
      out.push_back(SetValuedHom::unchecked(g, h, cur));
      return;
    }
    std::vector<std::vector<Vertex>> options{{}};
    for_each_nonempty_subset(extra[u], [&](const std::vector<Vertex>& s) { options.push_back(s); });
    for (const auto& add : options) {
      std::vector<Vertex> s = phi(u);
      s.insert(s.end(), add.begin(), add.end());
      std::sort(s.begin(), s.end());
      bool ok = true;
      for (Vertex v : g.neighbors(u)) {
        if (v >= u) continue;
        for (Vertex x : s) {
          for (Vertex y : cur[v]) ok = ok && h.adjacent(x, y);
        }
      }
      if (!ok) continue;
      cur[u] = std::move(s);
      rec(u + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Vertex> targets_of(const std::vector<ReducedWalk>& s) {
  std::vector<Vertex> t;
  for (const auto& w : s) t.push_back(w.target());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

// Cartesian product of per-vertex options subject to cross-adjacency.
std::vector<EfElement> assemble(const GraphHom& f, const std::vector<Sets>& options, bool check_adjacency) {
  const Graph& g = f.domain();
  std::vector<EfElement> out;
  Sets cur(g.order());
  std::function<void(Vertex)> rec = [&](Vertex u) {
    if (u == g.order()) {
      out.push_back(EfElement::unchecked(f, cur));
      return;
    }
    for (const auto& s : options[u]) {
      bool ok = true;
      if (check_adjacency) {
        for (Vertex v : g.neighbors(u)) {
          if (v >= u) continue;
          for (const auto& xi : s) ok = ok && adjacent_to_all(xi, cur[v]);
        }
      }
      if (!ok) continue;
      cur[u] = s;
      rec(u + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<EfElement> down_lifts(const EfElement& phi, const SetValuedHom& psi) {
  const Graph& g = phi.base().domain();
  std::vector<Sets> options(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<ReducedWalk> pool;
    for (const auto& w : phi(u)) {
      if (std::binary_search(psi(u).begin(), psi(u).end(), w.target())) pool.push_back(w);
    }
    for_each_nonempty_subset(pool, [&](const std::vector<ReducedWalk>& s) {
      if (targets_of(s) == psi(u)) options[u].push_back(s);
    });
  }
  // Sub-selections of a set-valued homomorphism are again homomorphisms.
  return assemble(phi.base(), options, false);
}

std::vector<EfElement> up_lifts(const EfElement& phi, const SetValuedHom& psi) {
  const GraphHom& f = phi.base();
  const Graph& g = f.domain();
  const Graph& h = f.codomain();
  std::vector<Sets> options(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0) fail(ErrorCode::NotConnected, "up-lifts need a domain without isolated vertices");
    // Any new walk at u is adjacent to η, hence equals (f u, f v)·η·(t η, x).
    const ReducedWalk& eta = phi(g.neighbors(u).front()).front();
    std::vector<ReducedWalk> fresh;
    for (Vertex x : psi(u)) {
      if (!h.adjacent(eta.target(), x)) continue;
      auto xi = pi_neighbor(eta, f(u), x);
      if (!contains(phi(u), xi)) fresh.push_back(std::move(xi));
    }
    std::vector<std::vector<ReducedWalk>> adds{{}};
    for_each_nonempty_subset(fresh, [&](const std::vector<ReducedWalk>& s) { adds.push_back(s); });
    for (const auto& add : adds) {
      std::vector<ReducedWalk> s = phi(u);
      s.insert(s.end(), add.begin(), add.end());
      normalise(s);
      if (targets_of(s) == psi(u)) options[u].push_back(std::move(s));
    }
  }
  return assemble(f, options, true);
}

CoveringReport check_poset_covering_local(const GraphHom& f, std::size_t max_norm, const CoveringOptions& opts) {
  const Graph& g = f.domain();
  const bool square_free = is_square_free(f.codomain());
  if (!square_free && !opts.allow_non_square_free) require_square_free(f.codomain());
  require_connected_domain(g);

  CoveringReport r;
  r.max_norm = max_norm;
  r.window = std::max<std::size_t>(max_norm, 2) - 2;
  const auto elements = square_free ? enumerate_Ef_bounded(f, max_norm, opts.cap)
                                    : discover_fiber_component(f, max_norm, opts.cap);
  r.elements = elements.size();
  std::unordered_set<Key, KeyHash> known;
  for (const auto& e : elements) known.insert(e.key());

  auto check_member = [&](const EfElement& lift) {
    if (!square_free) return;
    if (!is_in_Ef(lift)) fail(ErrorCode::InvariantViolation, "lift leaves E_f");
    if (lift.norm() <= max_norm && !known.count(lift.key())) {
      fail(ErrorCode::InvariantViolation, "lift within the bound is missing from the enumeration");
    }
  };

  for (const auto& phi : elements) {
    if (phi.norm() > r.window) continue;
    ++r.tested;
    const SetValuedHom tphi = phi.target();
    for (const auto& psi : homs_below(tphi)) {
      ++r.down_checks;
      auto lifts = down_lifts(phi, psi);
      if (lifts.size() != 1) {
        r.violations.push_back({"down", phi, psi, lifts.size()});
        continue;
      }
      const auto& lift = lifts.front();
      check_member(lift);
      for (Vertex u = 0; u < g.order(); ++u) {
        const Vertex v = g.neighbors(u).front();
        const auto& eta = lift(v).front();
        for (const auto& xi : lift(u)) {
          if (down_lift_formula(f, u, v, eta, xi.target()) != xi) {
            fail(ErrorCode::InvariantViolation, "down-lift disagrees with the explicit formula");
          }
          ++r.formula_checks;
        }
      }
    }
    for (const auto& psi : homs_above(tphi)) {
      ++r.up_checks;
      auto lifts = up_lifts(phi, psi);
      if (lifts.size() != 1) {
        r.violations.push_back({"up", phi, psi, lifts.size()});
        continue;
      }
      const auto& lift = lifts.front();
      check_member(lift);
      for (Vertex u = 0; u < g.order(); ++u) {
        if (tphi(u) == psi(u)) continue;
        // Neighbors of a growing vertex share a single image z_u.
        std::optional<Vertex> z;
        bool unique = true;
        for (Vertex v : g.neighbors(u)) {
          if (psi(v).size() != 1 || (z && *z != psi(v).front())) unique = false;
          if (!psi(v).empty()) z = psi(v).front();
        }
        if (!unique || !z) continue;
        std::vector<ReducedWalk> expected;
        for (Vertex x : psi(u)) expected.push_back(up_lift_formula(phi(u).front(), *z, x));
        normalise(expected);
        if (expected != lift(u)) fail(ErrorCode::InvariantViolation, "up-lift disagrees with the explicit formula");
        ++r.formula_checks;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// U/D filtration

PathFiltration::PathFiltration(const Graph& g) : g_(&g) {
  std::vector<Vertex> path;
  std::vector<char> used(g.order(), 0);
  std::function<void()> extend = [&]() {
    paths_.push_back(path);
    for (Vertex w : g.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    path.assign(1, u);
    used[u] = 1;
    extend();
    used[u] = 0;
  }
  std::sort(paths_.begin(), paths_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

bool PathFiltration::in_X(const EfElement& phi, std::size_t n) const {
  for (Vertex u = 0; u < g_->order(); ++u) {
    if (phi.len(u) > 2 * n) return false;
  }
  return true;
}

bool PathFiltration::in_X(const EfElement& phi, std::size_t n, std::size_t i) const {
  if (n == 0) fail(ErrorCode::NotInDomain, "filtration level n must be positive");
  if (i > paths_.size()) fail(ErrorCode::NotInDomain, "path index out of range");
  if (!in_X(phi, n)) return false;
  std::vector<Vertex> top;
  for (Vertex u = 0; u < g_->order(); ++u) {
    if (phi.len(u) == 2 * n) top.push_back(u);
  }
  const AuxDigraph d = aux_digraph(phi).induced(top);
  for (std::size_t j = i; j < paths_.size(); ++j) {
    const auto& w = paths_[j];
    bool walk = std::all_of(w.begin(), w.end(), [&](Vertex v) { return d.has_vertex(v); });
    for (std::size_t k = 0; walk && k + 1 < w.size(); ++k) walk = d.has_arc(w[k], w[k + 1]);
    if (walk) return false;
  }
  return true;
}

bool PathFiltration::in_U_image(const EfElement& phi, std::size_t n, std::size_t i) const {
  return in_X(phi, n, i) && U(phi, n, i) == phi;
}

ReducedWalk PathFiltration::xi_star(const EfElement& phi, std::size_t n, Vertex vk) const {
  std::optional<ReducedWalk> star;
  for (const auto& w : phi(vk)) {
    if (w.length() != 2 * n) continue;
    auto t = truncate(w, 2);
    if (star && *star != t) fail(ErrorCode::InvariantViolation, "truncation depends on the chosen longest walk");
    star = std::move(t);
  }
  if (!star) fail(ErrorCode::InvariantViolation, "terminal vertex carries no walk of length 2n");
  return *star;
}

EfElement PathFiltration::U(const EfElement& phi, std::size_t n, std::size_t i) const {
  if (i == 0 || !in_X(phi, n, i)) fail(ErrorCode::NotInDomain, "U applied outside X_{n,i}");
  if (in_X(phi, n, i - 1)) return phi;
  const Vertex vk = paths_[i - 1].back();
  Sets sets = phi.sets();
  sets[vk].push_back(xi_star(phi, n, vk));
  normalise(sets[vk]);
  return EfElement(phi.base(), std::move(sets));
}

EfElement PathFiltration::D(const EfElement& phi, std::size_t n, std::size_t i) const {
  if (i == 0 || !in_U_image(phi, n, i)) fail(ErrorCode::NotInDomain, "D applied outside U(X_{n,i})");
  if (in_X(phi, n, i - 1)) return phi;
  const Vertex vk = paths_[i - 1].back();
  auto star = xi_star(phi, n, vk);
  if (!contains(phi(vk), star)) fail(ErrorCode::InvariantViolation, "U-closed element misses its truncation");
  Sets sets = phi.sets();
  sets[vk] = {std::move(star)};
  return EfElement(phi.base(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Self-homotopies

std::vector<Homotopy> gamma_elements_bounded(const GraphHom& f, Vertex u, std::size_t max_norm) {
  require_connected_domain(f.domain());
  require_square_free(f.codomain());
  std::vector<Homotopy> out;
  for (const auto& xi : reduced_walks_from(f.codomain(), f(u), max_norm)) {
    if (!xi.is_closed() || xi.length() % 2 != 0) continue;
    if (!is_topologically_valid(xi, f, f, u)) continue;
    auto h = homotopy_from_valid_walk(xi, f, f, u);
    if (h.norm() > max_norm || !is_in_Ef(EfElement::from_homotopy(h))) continue;
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Homotopy& a, const Homotopy& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return a.walks() < b.walks();
  });
  return out;
}

Homotopy gamma_product(const Homotopy& a, const Homotopy& b) {
  if (!(a.target_hom() == b.source_hom())) {
    fail(ErrorCode::SourceTargetMismatch, "homotopies do not compose");
  }
  std::vector<ReducedWalk> walks;
  for (std::size_t u = 0; u < a.walks().size(); ++u) walks.push_back(walk_product(a.walks()[u], b.walks()[u]));
  return Homotopy(a.source_hom(), b.target_hom(), std::move(walks));
}

Homotopy gamma_inverse(const Homotopy& h) {
  std::vector<ReducedWalk> walks;
  for (const auto& w : h.walks()) walks.push_back(walk_inverse(w));
  return Homotopy(h.target_hom(), h.source_hom(), std::move(walks));
}

EfElement gamma_act(const Homotopy& h, const EfElement& phi) {
  if (!(h.target_hom() == phi.base())) fail(ErrorCode::SourceTargetMismatch, "homotopy does not end at f");
  Sets sets;
  for (Vertex u = 0; u < phi.sets().size(); ++u) {
    std::vector<ReducedWalk> s;
    for (const auto& xi : phi(u)) s.push_back(walk_product(h(u), xi));
    sets.push_back(std::move(s));
  }
  return EfElement(h.source_hom(), std::move(sets));
}

}  // namespace homcx
