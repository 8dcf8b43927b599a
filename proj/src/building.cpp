#include "wm/building.hpp"

#include <algorithm>
#include <unordered_set>

namespace wm {

Ambient Ambient::for_graph(const Graph& g) {
  return g.has_apex() ? coned_linear(g.order() - 1) : torus(g.order());
}

bool canonical_less(const BuildingElement& a, const BuildingElement& b) {
  const int ca = cardinality(a.block);
  const int cb = cardinality(b.block);
  if (ca != cb) return ca < cb;
  return lex_less(a.block, b.block);
}

namespace {

void check_ambient(const Graph& g, Ambient ambient) {
  if (ambient.kind == AmbientKind::kTorus) {
    if (g.has_apex() || ambient.n != g.order())
      fail(ErrorKind::kInvalidArgument, "TORUS(n) ambient needs a base graph on n vertices");
  } else if (!g.has_apex() || ambient.n != g.order() - 1) {
    fail(ErrorKind::kInvalidArgument, "CONED_LINEAR(n) ambient needs a cone graph on n+1 vertices");
  }
}

bool comparable_or_disjoint(VertexSet a, VertexSet b) {
  return (a & b) == 0 || is_subset(a, b) || is_subset(b, a);
}

bool inclusion_less(const BuildingElement& a, const BuildingElement& b) {
  const int ca = cardinality(a.block);
  const int cb = cardinality(b.block);
  if (ca != cb) return ca > cb;
  return lex_less(a.block, b.block);
}

}  // namespace

std::vector<BuildingElement> building_set(const Graph& g, Ambient ambient) {
  check_ambient(g, ambient);
  std::vector<BuildingElement> out;
  VertexSet allowed = g.vertices();
  for (Vertex root : g.labels()) {
    for_each_connected_subset(g, root, allowed, [&](VertexSet s) {
      if (cardinality(s) >= 2) out.push_back(BuildingElement::of(s));
    });
    allowed &= ~bit(root);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<BuildingElement> cone_building_set(const Graph& base) {
  std::vector<BuildingElement> out = building_set(base, Ambient::torus(base.order()));
  const VertexSet all = base.vertices();
  for (VertexSet s = all; s != 0; s = (s - 1) & all) out.push_back({s | bit(0), ElementKind::kType2});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<BuildingElement> g_factors(const Partition& p, std::span<const BuildingElement> building) {
  std::vector<BuildingElement> out;
  for (VertexSet b : p.nonsingleton_blocks()) {
    auto it = std::find_if(building.begin(), building.end(),
                           [&](const BuildingElement& e) { return e.block == b; });
    if (it == building.end())
      fail(ErrorKind::kInvalidArgument, "partition " + to_string(p) + " is not a connected partition");
    out.push_back(*it);
  }
  return out;
}

bool is_nested(std::span<const BuildingElement> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!comparable_or_disjoint(s[i].block, s[j].block)) return false;
  return true;
}

std::vector<BuildingElement> generic_factors(const Partition& L, std::span<const BuildingElement> building) {
  std::vector<BuildingElement> below;
  for (const auto& e : building)
    if (e.as_partition(L.ground()).refines(L)) below.push_back(e);
  std::vector<BuildingElement> out;
  for (const auto& e : below) {
    const bool dominated = std::any_of(below.begin(), below.end(), [&](const BuildingElement& o) {
      return is_proper_subset(e.block, o.block);
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

bool is_nested_by_factors(std::span<const BuildingElement> s, std::span<const BuildingElement> building,
                          std::span<const Partition> lattice) {
  if (s.size() > 20) fail(ErrorKind::kLimit, "generic nested test limited to 20 elements");
  std::vector<std::vector<BuildingElement>> lattice_factors;
  lattice_factors.reserve(lattice.size());
  for (const auto& L : lattice) {
    auto f = generic_factors(L, building);
    std::sort(f.begin(), f.end(), canonical_less);
    lattice_factors.push_back(std::move(f));
  }
  const std::size_t m = s.size();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<BuildingElement> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) chosen.push_back(s[i]);
    bool antichain = true;
    for (std::size_t i = 0; i < chosen.size() && antichain; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && antichain; ++j)
        antichain = !is_subset(chosen[i].block, chosen[j].block) && !is_subset(chosen[j].block, chosen[i].block);
    if (!antichain) continue;
    std::sort(chosen.begin(), chosen.end(), canonical_less);
    if (std::find(lattice_factors.begin(), lattice_factors.end(), chosen) == lattice_factors.end()) return false;
  }
  return true;
}

namespace {

void nested_rec(std::span<const BuildingElement> building, std::size_t start, NestedSet& chosen,
                const std::function<void(const NestedSet&)>& visit) {
  visit(chosen);
  for (std::size_t i = start; i < building.size(); ++i) {
    const VertexSet b = building[i].block;
    const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                [&](const BuildingElement& c) { return comparable_or_disjoint(b, c.block); });
    if (!ok) continue;
    chosen.push_back(building[i]);
    nested_rec(building, i + 1, chosen, visit);
    chosen.pop_back();
  }
}

// Incremental check of the building property over growing prefixes.
class PrefixChecker {
 public:
  PrefixChecker(VertexSet ground, std::span<const Partition> lattice) : ground_(ground) {
    for (const auto& p : lattice) lattice_.insert(p);
  }

  // Adds g and reports whether the enlarged family is building.
  bool add(const Partition& g) {
    if (!lattice_.contains(g)) fail(ErrorKind::kInvalidArgument, "element " + to_string(g) + " is not in the lattice");
    if (!members_.insert(g).second) fail(ErrorKind::kInvalidArgument, "duplicate element " + to_string(g));
    family_.push_back(g);
    const std::size_t before = induced_.size();
    std::vector<Partition> fresh;
    if (!induced_set_.contains(g)) fresh.push_back(g);
    for (std::size_t i = 0; i < before; ++i) {
      Partition j = join(induced_[i], g);
      if (!induced_set_.contains(j)) fresh.push_back(std::move(j));
    }
    for (auto& p : fresh)
      if (induced_set_.insert(p).second) induced_.push_back(std::move(p));
    return building();
  }

 private:
  bool building() const {
    std::vector<const Partition*> below;
    for (const auto& L : induced_) {
      if (members_.contains(L)) continue;
      below.clear();
      for (const auto& G : family_)
        if (G.refines(L)) below.push_back(&G);
      int codim_sum = 0;
      Partition meet = Partition::singletons(ground_);
      for (const Partition* G : below) {
        const bool dominated = std::any_of(below.begin(), below.end(), [&](const Partition* o) {
          return o != G && G->refines(*o);
        });
        if (dominated) continue;
        codim_sum += G->codim();
        meet = join(meet, *G);
      }
      if (meet != L || codim_sum != L.codim()) return false;
    }
    return true;
  }

  VertexSet ground_;
  std::unordered_set<Partition> lattice_;
  std::unordered_set<Partition> members_;
  std::vector<Partition> family_;
  std::vector<Partition> induced_;
  std::unordered_set<Partition> induced_set_;
};

}  // namespace

void for_each_nested_set(std::span<const BuildingElement> building,
                         const std::function<void(const NestedSet&)>& visit) {
  NestedSet chosen;
  nested_rec(building, 0, chosen, visit);
}

std::vector<NestedSet> enumerate_nested_sets(std::span<const BuildingElement> building) {
  std::vector<NestedSet> out;
  for_each_nested_set(building, [&](const NestedSet& s) { out.push_back(s); });
  return out;
}

bool is_building(std::span<const Partition> s, std::span<const Partition> lattice) {
  if (s.empty()) return true;
  PrefixChecker checker(s.front().ground(), lattice);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) checker.add(s[i]);
  return checker.add(s.back());
}

std::size_t first_non_building_prefix(std::span<const BuildingElement> ordered, VertexSet ground,
                                      std::span<const Partition> lattice) {
  PrefixChecker checker(ground, lattice);
  std::size_t failed = 0;
  for (std::size_t t = 0; t < ordered.size(); ++t) {
    // Keep consuming the whole order so duplicates are always reported.
    if (!checker.add(ordered[t].as_partition(ground)) && failed == 0) failed = t + 1;
  }
  return failed;
}

bool is_building_order(std::span<const BuildingElement> ordered, VertexSet ground,
                       std::span<const Partition> lattice) {
  return first_non_building_prefix(ordered, ground, lattice) == 0;
}

std::vector<BuildingElement> inclusion_refining_order(std::span<const BuildingElement> building) {
  std::vector<BuildingElement> out(building.begin(), building.end());
  std::sort(out.begin(), out.end(), inclusion_less);
  return out;
}

std::vector<BuildingElement> toric_style_order(std::span<const BuildingElement> building) {
  std::vector<BuildingElement> out = inclusion_refining_order(building);
  std::stable_partition(out.begin(), out.end(),
                        [](const BuildingElement& e) { return e.kind == ElementKind::kType2; });
  return out;
}

std::string to_string(const BuildingElement& e) {
  std::string out = e.kind == ElementKind::kType2 ? "M{" : "H{";
  bool first = true;
  for_each_vertex(e.block, [&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

}  // namespace wm
