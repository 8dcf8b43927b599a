#ifndef WM_BUILDING_HPP
#define WM_BUILDING_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wm/common.hpp"
#include "wm/graph.hpp"
#include "wm/partition.hpp"

namespace wm {

enum class AmbientKind { kTorus, kConedLinear };

/// Ambient variety of a graphic arrangement. TORUS(n) is (C*)^n / C*v of
/// dimension n-1; CONED_LINEAR(n) is C^{n+1} / Cv of dimension n.
struct Ambient {
  AmbientKind kind;
  int n;

  static Ambient torus(int n) { return {AmbientKind::kTorus, n}; }
  static Ambient coned_linear(int n) { return {AmbientKind::kConedLinear, n}; }

  int dim() const { return kind == AmbientKind::kTorus ? n - 1 : n; }

  /// The ambient that matches g: TORUS for base graphs, CONED_LINEAR for
  /// graphs carrying the apex 0.
  static Ambient for_graph(const Graph& g);

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

enum class ElementKind { kType1, kType2 };

/// Lattice element with exactly one non-singleton block. TYPE2 iff the block
/// contains the apex 0.
struct BuildingElement {
  VertexSet block = 0;
  ElementKind kind = ElementKind::kType1;

  static BuildingElement of(VertexSet block) {
    return {block, has_vertex(block, 0) ? ElementKind::kType2 : ElementKind::kType1};
  }

  int codim() const { return cardinality(block) - 1; }
  Partition as_partition(VertexSet ground) const { return Partition::one_block(ground, block); }

  friend bool operator==(const BuildingElement&, const BuildingElement&) = default;
};

/// Canonical element order: (|block| ascending, lex ascending).
bool canonical_less(const BuildingElement& a, const BuildingElement& b);

using NestedSet = std::vector<BuildingElement>;

/// All connected vertex subsets of size >= 2, sorted by (|block|, lex).
std::vector<BuildingElement> building_set(const Graph& g, Ambient ambient);

/// The building set of cone(base) assembled from the base building set
/// (TYPE1) and every {0} ∪ S with S non-empty (TYPE2), in canonical order.
std::vector<BuildingElement> cone_building_set(const Graph& base);

/// The building-set elements whose blocks are the non-singleton blocks of p.
std::vector<BuildingElement> g_factors(const Partition& p, std::span<const BuildingElement> building);

/// Blocks pairwise comparable or disjoint.
bool is_nested(std::span<const BuildingElement> s);

/// Minimal building elements containing L (as subspaces), i.e. the maximal
/// blocks that refine L, computed generically over `building`.
std::vector<BuildingElement> generic_factors(const Partition& L, std::span<const BuildingElement> building);

/// Nestedness decided through the lattice: every antichain of size >= 2
/// must be the factor set of some lattice element.
bool is_nested_by_factors(std::span<const BuildingElement> s, std::span<const BuildingElement> building,
                          std::span<const Partition> lattice);

void for_each_nested_set(std::span<const BuildingElement> building,
                         const std::function<void(const NestedSet&)>& visit);
std::vector<NestedSet> enumerate_nested_sets(std::span<const BuildingElement> building);

/// Building test for a family of lattice elements: for every element L of
/// the induced arrangement that is not in s, the minimal elements of s
/// containing L meet in L with additive codimension. Every member of s must
/// belong to `lattice`.
bool is_building(std::span<const Partition> s, std::span<const Partition> lattice);

/// Every prefix of `ordered` is building. Throws on duplicates.
bool is_building_order(std::span<const BuildingElement> ordered, VertexSet ground,
                       std::span<const Partition> lattice);

/// Index of the first prefix length that is not building, or 0 when every
/// prefix is building.
std::size_t first_non_building_prefix(std::span<const BuildingElement> ordered, VertexSet ground,
                                      std::span<const Partition> lattice);

/// Total order refining inclusion of subspaces: larger blocks first, ties by
/// lex order of blocks.
std::vector<BuildingElement> inclusion_refining_order(std::span<const BuildingElement> building);

/// All TYPE2 elements first, then TYPE1, each segment refining inclusion.
std::vector<BuildingElement> toric_style_order(std::span<const BuildingElement> building);

std::string to_string(const BuildingElement& e);

}  // namespace wm

#endif  // WM_BUILDING_HPP
