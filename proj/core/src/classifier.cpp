#include "homcx/classifier.hpp"

#include <algorithm>

#include "homcx/error.hpp"
#include "homcx/homology.hpp"

namespace homcx {

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Normal: return "Normal";
    case InstanceKind::Contractible: return "Contractible";
    case InstanceKind::ProductDecomposition: return "ProductDecomposition";
  }
  return "?";
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Point: return "Point";
    case CaseTag::Circle: return "Circle";
    case CaseTag::HxK2Component: return "HxK2Component";
  }
  return "?";
}

ValidatedInstance validate_instance(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) fail(ErrorCode::InvalidGraph, "graphs must be nonempty");
  if (auto sq = find_square(h)) {
    const auto& s = *sq;
    fail(ErrorCode::NotSquareFree, "codomain contains the 4-cycle " + std::to_string(s[0]) + "," +
                                       std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
                                       std::to_string(s[3]));
  }
  ValidatedInstance v;
  v.g_components = connected_components(g);
  if (v.g_components.size() > 1) {
    v.kind = InstanceKind::ProductDecomposition;
    return v;
  }
  if (g.order() == 1) v.kind = InstanceKind::Contractible;
  for (auto& comp : connected_components(h)) {
    const Graph hc = induced_subgraph(h, comp);
    if (!enumerate_graph_homs(g, hc).empty()) v.h_components.push_back(std::move(comp));
  }
  if (v.h_components.empty()) fail(ErrorCode::EmptyHomSet, "no homomorphism from the domain to the codomain");
  return v;
}

std::size_t expected_rank(const Graph& h) {
  if (!is_connected(h)) fail(ErrorCode::NotConnected, "expected rank needs a connected graph");
  const std::size_t e = h.size(), n = h.order();
  if (is_bipartite(h)) return e + 1 - n;
  return 2 * e + 1 - 2 * n;
}

namespace {

struct Summary {
  std::vector<std::int64_t> betti;
  std::size_t dimension = 0;
  std::int64_t euler = 0;
  std::size_t homs = 0;
  bool k2_factoring = false;
  std::vector<Vertex> least;  // least hom in the component, codomain labels
};

Summary summarize(const HomPoset& p) {
  const OrderComplex k = order_complex(p);
  Summary s;
  s.dimension = k.dimension();
  s.euler = k.euler_characteristic();
  s.betti = betti_numbers(k, std::min<std::size_t>(s.dimension, 3));
  s.betti.resize(4, 0);
  for (auto i : p.homs()) {
    const auto f = p.elements[i].as_hom();
    ++s.homs;
    if (factors_through_k2(*f)) s.k2_factoring = true;
    if (s.least.empty() || f->map() < s.least) s.least = f->map();
  }
  return s;
}

std::vector<Vertex> relabel(const std::vector<Vertex>& map, const std::vector<Vertex>& comp) {
  std::vector<Vertex> out;
  out.reserve(map.size());
  for (auto x : map) out.push_back(comp[x]);
  return out;
}

// Classification of one component of Hom(G, Hc) for connected Hc.
HomotopyType classify(const HomPoset& p, const Graph& hc, const std::vector<Vertex>& comp,
                      bool contractible_domain) {
  const Summary s = summarize(p);
  HomotopyType t;
  t.expected_rank = expected_rank(hc);
  t.betti = s.betti;
  t.elements = p.size();
  t.homs = s.homs;
  t.dimension = s.dimension;
  t.euler = s.euler;
  t.representative = relabel(s.least, comp);

  const std::string where = "component of " + std::to_string(p.size()) + " elements: ";
  if (s.betti[0] != 1) fail(ErrorCode::InvariantViolation, where + "b0 != 1");
  for (std::size_t d = 2; d < 4; ++d) {
    if (s.betti[d] != 0) fail(ErrorCode::InvariantViolation, where + "b" + std::to_string(d) + " != 0");
  }
  const auto b1 = std::size_t(s.betti[1]);
  const auto r = t.expected_rank;
  t.circles = b1;
  if (contractible_domain) {
    if (b1 != 0) fail(ErrorCode::InvariantViolation, where + "single-vertex domain with b1 != 0");
    t.case_tag = CaseTag::Point;
  } else if (s.k2_factoring) {
    if (b1 != r) fail(ErrorCode::InvariantViolation, where + "K2-factoring component with b1 != rank");
    t.case_tag = CaseTag::HxK2Component;
  } else if (b1 == 0) {
    t.case_tag = CaseTag::Point;
  } else if (b1 == 1) {
    t.case_tag = CaseTag::Circle;
  } else {
    fail(ErrorCode::InvariantViolation, where + "b1 = " + std::to_string(b1) +
                                            " on a component not factoring through K2");
  }
  return t;
}

}  // namespace

HomotopyType classify_component(const Graph& g, const Graph& h, const GraphHom& f, std::size_t cap) {
  const auto v = validate_instance(g, h);
  if (v.kind == InstanceKind::ProductDecomposition) {
    fail(ErrorCode::NotConnected, "domain is disconnected; Hom splits as a product over its components");
  }
  for (const auto& comp : v.h_components) {
    if (!std::binary_search(comp.begin(), comp.end(), f(0))) continue;
    const Graph hc = induced_subgraph(h, comp);
    std::vector<Vertex> local;
    for (auto x : f.map()) {
      local.push_back(Vertex(std::lower_bound(comp.begin(), comp.end(), x) - comp.begin()));
    }
    const GraphHom fc(g, hc, std::move(local));
    const auto p = enumerate_component(g, hc, fc, cap);
    return classify(p, hc, comp, v.kind == InstanceKind::Contractible);
  }
  fail(ErrorCode::InvariantViolation, "image of f outside every component of the codomain");
}

CaseReport full_case_report(const Graph& g, const Graph& h, std::size_t cap) {
  const auto v = validate_instance(g, h);
  if (v.kind == InstanceKind::ProductDecomposition) {
    fail(ErrorCode::NotConnected, "domain is disconnected; Hom splits as a product over its components");
  }
  CaseReport rep;
  rep.kind = v.kind;
  rep.g_bipartite = is_bipartite(g).has_value();
  rep.h_bipartite = is_bipartite(h).has_value();
  for (const auto& comp : v.h_components) {
    const Graph hc = induced_subgraph(h, comp);
    const bool hc_bip = is_bipartite(hc).has_value();
    std::size_t found = 0;
    const auto homs = enumerate_graph_homs(g, hc);
    std::vector<char> seen(homs.size(), 0);
    auto index_of = [&](const std::vector<Vertex>& map) {
      auto it = std::lower_bound(homs.begin(), homs.end(), map,
                                 [](const GraphHom& a, const std::vector<Vertex>& b) { return a.map() < b; });
      return std::size_t(it - homs.begin());
    };
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (seen[i]) continue;
      const auto p = enumerate_component(g, hc, homs[i], cap);
      for (auto j : p.homs()) seen[index_of(p.elements[j].as_hom()->map())] = 1;
      auto t = classify(p, hc, comp, v.kind == InstanceKind::Contractible);
      if (t.case_tag == CaseTag::HxK2Component) ++found;
      rep.components.push_back(std::move(t));
    }
    if (v.kind == InstanceKind::Normal) {
      const std::size_t required = rep.g_bipartite ? (hc_bip ? 2 : 1) : 0;
      if (found != required) {
        fail(ErrorCode::InvariantViolation, "found " + std::to_string(found) +
                                                " K2-factoring components, expected " +
                                                std::to_string(required));
      }
      rep.required_hxk2 += required;
    }
    rep.hxk2_components += found;
  }
  std::sort(rep.components.begin(), rep.components.end(),
            [](const HomotopyType& a, const HomotopyType& b) { return a.representative < b.representative; });
  return rep;
}

std::vector<ComponentSummary> component_census(const Graph& g, const Graph& h, std::size_t cap) {
  const auto homs = enumerate_graph_homs(g, h);
  std::vector<char> seen(homs.size(), 0);
  std::vector<ComponentSummary> out;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (seen[i]) continue;
    const auto p = enumerate_component(g, h, homs[i], cap);
    for (auto j : p.homs()) {
      const auto map = p.elements[j].as_hom()->map();
      auto it = std::lower_bound(homs.begin(), homs.end(), map,
                                 [](const GraphHom& a, const std::vector<Vertex>& b) { return a.map() < b; });
      seen[std::size_t(it - homs.begin())] = 1;
    }
    const Summary s = summarize(p);
    ComponentSummary c;
    c.size = p.size();
    c.homs = s.homs;
    c.betti = s.betti;
    c.k2_factoring = s.k2_factoring;
    c.representative = homs[i].map();
    c.dimension = s.dimension;
    c.euler = s.euler;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace homcx
