#include "wm/partition.hpp"

#include <algorithm>

namespace wm {

Partition::Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  for (VertexSet b : blocks_) {
    if (b == 0) fail(ErrorKind::kValidation, "empty block in partition");
    if ((ground_ & b) != 0) fail(ErrorKind::kValidation, "blocks of a partition must be disjoint");
    ground_ |= b;
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](VertexSet a, VertexSet b) { return min_vertex(a) < min_vertex(b); });
}

Partition Partition::singletons(VertexSet ground) {
  std::vector<VertexSet> blocks;
  for_each_vertex(ground, [&](Vertex v) { blocks.push_back(bit(v)); });
  return Partition(std::move(blocks));
}

Partition Partition::one_block(VertexSet ground, VertexSet block) {
  if (!is_subset(block, ground)) fail(ErrorKind::kInvalidArgument, "block outside the ground set");
  std::vector<VertexSet> blocks{block};
  for_each_vertex(ground & ~block, [&](Vertex v) { blocks.push_back(bit(v)); });
  return Partition(std::move(blocks));
}

int Partition::codim() const {
  int total = 0;
  for (VertexSet b : blocks_) total += cardinality(b) - 1;
  return total;
}

bool Partition::refines(const Partition& other) const {
  if (ground_ != other.ground_) return false;
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [&](VertexSet b) { return is_subset(b, other.block_of(min_vertex(b))); });
}

VertexSet Partition::block_of(Vertex v) const {
  for (VertexSet b : blocks_)
    if (has_vertex(b, v)) return b;
  fail(ErrorKind::kInvalidArgument, "vertex " + std::to_string(v) + " not in partition");
}

std::vector<VertexSet> Partition::nonsingleton_blocks() const {
  std::vector<VertexSet> out;
  for (VertexSet b : blocks_)
    if (cardinality(b) > 1) out.push_back(b);
  return out;
}

Partition join(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) fail(ErrorKind::kInvalidArgument, "join of partitions with different grounds");
  std::vector<VertexSet> merged;
  auto absorb = [&](VertexSet block) {
    // Any existing block overlapping the new one merges into it.
    VertexSet acc = block;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = merged.begin(); it != merged.end();) {
        if ((*it & acc) != 0) {
          acc |= *it;
          it = merged.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    merged.push_back(acc);
  };
  for (VertexSet blk : a.blocks()) absorb(blk);
  for (VertexSet blk : b.blocks()) absorb(blk);
  return Partition(std::move(merged));
}

bool is_connected_partition(const Graph& g, const Partition& p) {
  if (p.ground() != g.vertices()) return false;
  return std::all_of(p.blocks().begin(), p.blocks().end(),
                     [&](VertexSet b) { return is_connected_induced(g, b); });
}

namespace {

void grow(const Graph& g, VertexSet current, VertexSet frontier, VertexSet excluded, VertexSet allowed,
          const std::function<void(VertexSet)>& visit) {
  visit(current);
  VertexSet candidates = frontier & ~excluded;
  VertexSet skipped = excluded;
  for_each_vertex(candidates, [&](Vertex v) {
    const VertexSet next = current | bit(v);
    const VertexSet next_frontier = (frontier | g.neighbors(v)) & allowed & ~next;
    grow(g, next, next_frontier, skipped, allowed, visit);
    skipped |= bit(v);
  });
}

void partition_rec(const Graph& g, VertexSet unassigned, std::vector<VertexSet>& blocks,
                   const std::function<void(const Partition&)>& visit) {
  if (unassigned == 0) {
    visit(Partition(blocks));
    return;
  }
  const Vertex root = min_vertex(unassigned);
  for_each_connected_subset(g, root, unassigned, [&](VertexSet block) {
    blocks.push_back(block);
    partition_rec(g, unassigned & ~block, blocks, visit);
    blocks.pop_back();
  });
}

}  // namespace

void for_each_connected_subset(const Graph& g, Vertex root, VertexSet allowed,
                               const std::function<void(VertexSet)>& visit) {
  if (!has_vertex(allowed, root)) return;
  const VertexSet start = bit(root);
  grow(g, start, g.neighbors(root) & allowed & ~start, 0, allowed, visit);
}

void for_each_connected_partition(const Graph& g, const std::function<void(const Partition&)>& visit) {
  std::vector<VertexSet> blocks;
  partition_rec(g, g.vertices(), blocks, visit);
}

std::vector<Partition> enumerate_connected_partitions(const Graph& g) {
  std::vector<Partition> out;
  for_each_connected_partition(g, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (VertexSet b : p.blocks()) {
    if (!out.empty()) out += '|';
    for_each_vertex(b, [&](Vertex v) { out += std::to_string(v); });
  }
  return out;
}

}  // namespace wm
