#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "wm/partition.hpp"

using namespace wm;

namespace {

Partition make(std::vector<std::vector<Vertex>> blocks) {
  std::vector<VertexSet> sets;
  for (const auto& b : blocks) sets.push_back(to_vertex_set(b));
  return Partition(std::move(sets));
}

std::vector<std::vector<std::vector<int>>> as_lists(const std::vector<Partition>& ps) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& p : ps) {
    std::vector<std::vector<int>> blocks;
    for (VertexSet b : p.blocks()) blocks.push_back(to_vector(b));
    std::sort(blocks.begin(), blocks.end());
    out.push_back(blocks);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<int>>> as_lists(std::vector<oracle::SetPartition> ps) {
  for (auto& p : ps) std::sort(p.begin(), p.end());
  std::sort(ps.begin(), ps.end());
  return ps;
}

}  // namespace

TEST_CASE("enumerate_connected_partitions: spec examples") {
  const auto p3 = enumerate_connected_partitions(make_family("path:3"));
  CHECK(p3.size() == 4);
  std::set<std::string> names;
  for (const auto& p : p3) names.insert(to_string(p));
  CHECK(names == std::set<std::string>{"1|2|3", "12|3", "1|23", "123"});
  CHECK(enumerate_connected_partitions(make_family("complete:3")).size() == 5);
  const auto e3 = enumerate_connected_partitions(make_family("edgeless:3"));
  REQUIRE(e3.size() == 1);
  CHECK(e3.front() == Partition::singletons(make_family("edgeless:3").vertices()));
}

TEST_CASE("enumerate_connected_partitions matches the filter-all-partitions oracle (all graphs n <= 5, cones n <= 4)") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      const auto ours = enumerate_connected_partitions(g);
      REQUIRE(as_lists(ours) == as_lists(oracle::connected_partitions(g)));
      for (const auto& p : ours) REQUIRE(is_connected_partition(g, p));
      if (n <= 4) REQUIRE(as_lists(enumerate_connected_partitions(cone(g))) ==
                          as_lists(oracle::connected_partitions(cone(g))));
    }
}

TEST_CASE("complete graphs give Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 2; n <= 7; ++n)
    CHECK(enumerate_connected_partitions(make_family("complete:" + std::to_string(n))).size() == bell[n]);
}

TEST_CASE("codim") {
  CHECK(Partition::singletons(0b1110).codim() == 0);
  CHECK(make({{1, 2, 3}}).codim() == 2);
  CHECK(make({{1, 2}, {3, 4}}).codim() == 2);
}

TEST_CASE("join: spec examples and lattice laws") {
  const Partition a = make({{1, 2}, {3}});
  const Partition b = make({{1}, {2, 3}});
  CHECK(join(a, b) == make({{1, 2, 3}}));
  CHECK(join(a, Partition::singletons(a.ground())) == a);
  CHECK(join(a, a) == a);
  CHECK_THROWS_AS(join(a, Partition::singletons(0b11110)), Error);

  const auto all = enumerate_connected_partitions(make_family("complete:4"));
  for (const auto& x : all)
    for (const auto& y : all) {
      const Partition j = join(x, y);
      REQUIRE(j == join(y, x));
      REQUIRE(x.refines(j));
      REQUIRE(y.refines(j));
      // least upper bound: every common upper bound is above the join
      for (const auto& z : all)
        if (x.refines(z) && y.refines(z)) REQUIRE(j.refines(z));
    }
}

TEST_CASE("join of connected partitions stays connected") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = graph_from_edge_mask(4, mask);
    const auto all = enumerate_connected_partitions(g);
    for (const auto& x : all)
      for (const auto& y : all) REQUIRE(is_connected_partition(g, join(x, y)));
  }
}

TEST_CASE("Partition validation") {
  CHECK_THROWS_AS(make({{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(Partition(std::vector<VertexSet>{0}), Error);
  CHECK(make({{3}, {1, 2}}) == make({{1, 2}, {3}}));
  CHECK(make({{1, 2}, {3}}).block_of(2) == to_vertex_set({1, 2}));
  CHECK(make({{1, 2}, {3}}).nonsingleton_blocks() == std::vector<VertexSet>{to_vertex_set({1, 2})});
}

TEST_CASE("for_each_connected_subset visits each connected subset containing the root once") {
  const Graph g = make_family("cycle:5");
  for (Vertex root = 1; root <= 5; ++root) {
    std::multiset<VertexSet> seen;
    for_each_connected_subset(g, root, g.vertices(), [&](VertexSet s) { seen.insert(s); });
    std::multiset<VertexSet> expected;
    for (VertexSet s = 1; s < 64; ++s)
      if (is_subset(s, g.vertices()) && has_vertex(s, root) && is_connected_induced(g, s)) expected.insert(s);
    CHECK(seen == expected);
  }
}
