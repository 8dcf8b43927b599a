#ifndef WM_PARTITION_HPP
#define WM_PARTITION_HPP

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "wm/common.hpp"
#include "wm/graph.hpp"

namespace wm {

/// Set partition of a ground vertex set. Blocks are kept sorted by their
/// minimum element, which makes equality and ordering canonical.
class Partition {
 public:
  explicit Partition(std::vector<VertexSet> blocks);

  static Partition singletons(VertexSet ground);

  /// The partition whose only non-singleton block is `block`.
  static Partition one_block(VertexSet ground, VertexSet block);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  VertexSet ground() const { return ground_; }

  /// Sum over blocks of (|B| - 1).
  int codim() const;

  /// True iff every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  VertexSet block_of(Vertex v) const;
  std::vector<VertexSet> nonsingleton_blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.blocks_ <=> b.blocks_; }

 private:
  std::vector<VertexSet> blocks_;
  VertexSet ground_ = 0;
};

/// Coarsest partition refined by both; grounds must agree.
Partition join(const Partition& a, const Partition& b);

/// Every block induces a connected subgraph of g and the ground is g's vertex set.
bool is_connected_partition(const Graph& g, const Partition& p);

/// Visits each Γ-connected partition exactly once, in a deterministic order
/// (blocks grown from the smallest unassigned vertex along edges).
void for_each_connected_partition(const Graph& g, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_connected_partitions(const Graph& g);

/// Visits every connected vertex subset of g that contains `root` and lies in
/// `allowed`, once each.
void for_each_connected_subset(const Graph& g, Vertex root, VertexSet allowed,
                               const std::function<void(VertexSet)>& visit);

std::string to_string(const Partition& p);

}  // namespace wm

template <>
struct std::hash<wm::Partition> {
  std::size_t operator()(const wm::Partition& p) const noexcept {
    std::size_t h = 0;
    for (wm::VertexSet b : p.blocks()) h = h * 1000003U ^ std::hash<wm::VertexSet>{}(b);
    return h;
  }
};

#endif  // WM_PARTITION_HPP
