#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcx/graph.hpp"
#include "homcx/hom_poset.hpp"

namespace homcx {

enum class InstanceKind {
  Normal,                // G, H connected with >= 2 vertices, H square-free
  Contractible,          // G is a single vertex
  ProductDecomposition,  // G disconnected: Hom is a product over its components
};

std::string to_string(InstanceKind k);

struct ValidatedInstance {
  InstanceKind kind = InstanceKind::Normal;
  /// Components of G; more than one only for ProductDecomposition.
  std::vector<std::vector<Vertex>> g_components;
  /// Components of H that receive at least one homomorphism. Since G is
  /// connected, Hom(G,H) splits as a disjoint union over these.
  std::vector<std::vector<Vertex>> h_components;
};

/// Checks the hypotheses under which every component of Hom(G,H) is a wedge
/// of circles. Throws NotSquareFree (message carries a 4-cycle) or
/// EmptyHomSet; a disconnected G is reported as ProductDecomposition.
ValidatedInstance validate_instance(const Graph& g, const Graph& h);

/// |E|-|V|+1 for bipartite H, else 2|E|-2|V|+1. Throws NotConnected.
std::size_t expected_rank(const Graph& h);

enum class CaseTag { Point, Circle, HxK2Component };

std::string to_string(CaseTag t);

struct HomotopyType {
  std::size_t circles = 0;
  CaseTag case_tag = CaseTag::Point;
  std::size_t expected_rank = 0;
  std::vector<std::int64_t> betti;  // b_0..b_3
  std::size_t elements = 0;
  std::size_t homs = 0;
  std::size_t dimension = 0;
  std::int64_t euler = 0;
  std::vector<Vertex> representative;  // least homomorphism in the component
};

/// Enumerates the component of f, computes exact Betti numbers up to
/// min(dimension, 3) and tags the case. H is restricted to the component
/// containing the image of f. Throws InvariantViolation when the homology is
/// not that of a wedge of circles with a permitted rank, and NotConnected for
/// a disconnected G.
HomotopyType classify_component(const Graph& g, const Graph& h, const GraphHom& f,
                                std::size_t cap = default_cap());

struct CaseReport {
  InstanceKind kind = InstanceKind::Normal;
  bool g_bipartite = false;
  bool h_bipartite = false;
  std::vector<HomotopyType> components;
  std::size_t hxk2_components = 0;
  std::size_t required_hxk2 = 0;
};

/// Classifies every component and checks the number of H×K2 components
/// against the bipartiteness of G and H: two per component of H when both
/// are bipartite, one when only G is, none otherwise. Throws
/// InvariantViolation on mismatch and NotConnected for a disconnected G.
CaseReport full_case_report(const Graph& g, const Graph& h, std::size_t cap = default_cap());

struct ComponentSummary {
  std::size_t size = 0;
  std::size_t homs = 0;
  std::vector<std::int64_t> betti;  // b_0..b_3
  bool k2_factoring = false;
  std::vector<Vertex> representative;
  std::size_t dimension = 0;
  std::int64_t euler = 0;
};

/// All components of Hom(G,H) with Betti numbers, ordered by the least
/// homomorphism they contain. No hypothesis on G or H.
std::vector<ComponentSummary> component_census(const Graph& g, const Graph& h,
                                               std::size_t cap = default_cap());

}  // namespace homcx
