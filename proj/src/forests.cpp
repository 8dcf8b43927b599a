#include "wm/forests.hpp"

#include <algorithm>
#include <map>

namespace wm {

namespace {

bool by_min_leaf(const AdmissibleTree& a, const AdmissibleTree& b) { return a.min_leaf() < b.min_leaf(); }

void collect_leaves(const AdmissibleTree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

// Calls fn(blocks) for every set partition of `items` (restricted growth order).
template <class Fn>
void for_each_set_partition(std::span<const int> items, Fn&& fn) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == items.size()) {
      fn(static_cast<const std::vector<std::vector<int>>&>(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(items[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({items[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

class TreeCatalog {
 public:
  const std::vector<AdmissibleTree>& trees(const std::vector<int>& labels) {
    auto it = cache_.find(labels);
    if (it != cache_.end()) return it->second;
    std::vector<AdmissibleTree> out;
    if (labels.size() == 1) {
      out.push_back(AdmissibleTree::make_leaf(labels[0]));
    } else if (labels.size() >= 3) {
      for_each_set_partition(labels, [&](const std::vector<std::vector<int>>& blocks) {
        const int k = static_cast<int>(blocks.size());
        if (k < 3) return;
        std::vector<const std::vector<AdmissibleTree>*> options;
        for (const auto& b : blocks) {
          const auto& sub = trees(b);
          if (sub.empty()) return;
          options.push_back(&sub);
        }
        product(options, [&](std::vector<AdmissibleTree> children) {
          for (int e = 1; e <= k - 2; ++e) out.push_back(AdmissibleTree::make_node(e, children));
        });
      });
    }
    return cache_.emplace(labels, std::move(out)).first->second;
  }

  template <class Fn>
  static void product(const std::vector<const std::vector<AdmissibleTree>*>& options, Fn&& fn) {
    std::vector<AdmissibleTree> pick;
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == options.size()) {
        fn(pick);
        return;
      }
      for (const auto& t : *options[i]) {
        pick.push_back(t);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }

 private:
  std::map<std::vector<int>, std::vector<AdmissibleTree>> cache_;
};

enum class Side { kFirst, kSecond, kMixed };

Side side_of(const AdmissibleTree& t, int n) {
  const auto leaves = t.leaves();
  if (leaves.front() >= 1 && leaves.back() <= n) return Side::kFirst;
  if (leaves.front() > n) return Side::kSecond;
  return Side::kMixed;
}

bool contains_leaf(const AdmissibleTree& t, int label) {
  if (t.is_leaf()) return t.leaf == label;
  return std::any_of(t.children.begin(), t.children.end(), [&](const auto& c) { return contains_leaf(c, label); });
}

AdmissibleTree shifted(const AdmissibleTree& t, int offset) {
  if (t.is_leaf()) return AdmissibleTree::make_leaf(t.leaf + offset);
  std::vector<AdmissibleTree> children;
  for (const auto& c : t.children) children.push_back(shifted(c, offset));
  return AdmissibleTree::make_node(t.exponent, std::move(children));
}

int leaf_count(const AdmissibleForest& f) { return static_cast<int>(forest_leaves(f).size()); }

}  // namespace

AdmissibleTree AdmissibleTree::make_leaf(int label) {
  AdmissibleTree t;
  t.leaf = label;
  return t;
}

AdmissibleTree AdmissibleTree::make_node(int exponent, std::vector<AdmissibleTree> children) {
  if (children.empty()) fail(ErrorKind::kInvalidArgument, "internal node without children");
  AdmissibleTree t;
  t.exponent = exponent;
  t.children = std::move(children);
  std::sort(t.children.begin(), t.children.end(), by_min_leaf);
  return t;
}

int AdmissibleTree::min_leaf() const { return is_leaf() ? leaf : children.front().min_leaf(); }

std::vector<int> AdmissibleTree::leaves() const {
  std::vector<int> out;
  collect_leaves(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

int AdmissibleTree::degree() const {
  int total = exponent;
  for (const auto& c : children) total += c.degree();
  return total;
}

AdmissibleForest canonical_forest(AdmissibleForest forest) {
  std::sort(forest.begin(), forest.end(), by_min_leaf);
  return forest;
}

int forest_degree(const AdmissibleForest& forest) {
  int total = 0;
  for (const auto& t : forest) total += t.degree();
  return total;
}

std::vector<int> forest_leaves(const AdmissibleForest& forest) {
  std::vector<int> out;
  for (const auto& t : forest) collect_leaves(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool admissible_shape(const AdmissibleTree& tree) {
  if (tree.is_leaf()) return true;
  const int k = static_cast<int>(tree.children.size());
  if (k < 3 || tree.exponent < 1 || tree.exponent > k - 2) return false;
  return std::all_of(tree.children.begin(), tree.children.end(), admissible_shape);
}

}  // namespace

bool is_admissible_tree(const AdmissibleTree& tree) {
  const auto leaves = tree.leaves();
  return std::adjacent_find(leaves.begin(), leaves.end()) == leaves.end() && admissible_shape(tree);
}

bool is_admissible_forest(const AdmissibleForest& forest, int n) {
  if (!std::all_of(forest.begin(), forest.end(), is_admissible_tree)) return false;
  const auto leaves = forest_leaves(forest);
  if (static_cast<int>(leaves.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (leaves[i] != i + 1) return false;
  return true;
}

std::vector<AdmissibleTree> enumerate_admissible_trees(std::span<const int> labels) {
  if (labels.empty()) fail(ErrorKind::kInvalidArgument, "a tree needs at least one leaf");
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::kInvalidArgument, "leaf labels must be distinct");
  TreeCatalog catalog;
  return catalog.trees(sorted);
}

std::vector<AdmissibleForest> enumerate_forests_on(std::span<const int> labels) {
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::kInvalidArgument, "leaf labels must be distinct");
  TreeCatalog catalog;
  std::vector<AdmissibleForest> out;
  for_each_set_partition(sorted, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<const std::vector<AdmissibleTree>*> options;
    for (const auto& b : blocks) {
      const auto& sub = catalog.trees(b);
      if (sub.empty()) return;
      options.push_back(&sub);
    }
    TreeCatalog::product(options, [&](const std::vector<AdmissibleTree>& trees) {
      out.push_back(canonical_forest(trees));
    });
  });
  return out;
}

std::vector<AdmissibleForest> enumerate_admissible_forests(int n) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "forest needs n >= 1");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return enumerate_forests_on(labels);
}

QPolynomial degree_series(std::span<const AdmissibleForest> forests) {
  std::vector<std::int64_t> counts;
  for (const auto& f : forests) {
    const auto d = static_cast<std::size_t>(forest_degree(f));
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return QPolynomial(std::move(counts));
}

AdmissibleForest forest_of_admissible_function(const AdmissibleFunction& f, VertexSet ground) {
  const auto& support = f.support;
  for (const auto& e : support)
    if (!is_subset(e.block, ground)) fail(ErrorKind::kInvalidArgument, "support element outside the ground");
  if (!is_nested(support)) fail(ErrorKind::kInvalidArgument, "support is not nested");

  // Maximal support elements strictly inside `block`.
  auto maximal_inside = [&](VertexSet block) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const VertexSet b = support[i].block;
      if (!is_proper_subset(b, block)) continue;
      const bool covered = std::any_of(support.begin(), support.end(), [&](const BuildingElement& o) {
        return is_proper_subset(b, o.block) && is_proper_subset(o.block, block);
      });
      if (!covered) out.push_back(i);
    }
    return out;
  };

  auto build_children = [&](auto& self, VertexSet block) -> std::vector<AdmissibleTree> {
    std::vector<AdmissibleTree> children;
    VertexSet covered = 0;
    for (std::size_t i : maximal_inside(block)) {
      covered |= support[i].block;
      children.push_back(AdmissibleTree::make_node(f.exponents[i], self(self, support[i].block)));
    }
    for_each_vertex(block & ~covered, [&](Vertex v) { children.push_back(AdmissibleTree::make_leaf(v)); });
    return children;
  };

  // A virtual block strictly above the ground collects the roots.
  AdmissibleForest roots;
  VertexSet covered = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const VertexSet b = support[i].block;
    const bool top = std::none_of(support.begin(), support.end(),
                                  [&](const BuildingElement& o) { return is_proper_subset(b, o.block); });
    if (!top) continue;
    covered |= b;
    roots.push_back(AdmissibleTree::make_node(f.exponents[i], build_children(build_children, b)));
  }
  for_each_vertex(ground & ~covered, [&](Vertex v) { roots.push_back(AdmissibleTree::make_leaf(v)); });
  return canonical_forest(std::move(roots));
}

bool is_special_forest(const AdmissibleForest& forest, int n, int m) {
  if (n < 1 || m < 1) return false;
  if (!std::all_of(forest.begin(), forest.end(), is_admissible_tree)) return false;
  const auto leaves = forest_leaves(forest);
  if (static_cast<int>(leaves.size()) != n + m + 1) return false;
  for (int i = 0; i <= n + m; ++i)
    if (leaves[i] != i) return false;

  for (const auto& t : forest) {
    if (!contains_leaf(t, 0)) {
      if (side_of(t, n) == Side::kMixed) return false;
      continue;
    }
    const AdmissibleTree* node = &t;
    while (!node->is_leaf()) {
      const AdmissibleTree* next = nullptr;
      for (const auto& c : node->children) {
        if (contains_leaf(c, 0)) {
          next = &c;
        } else if (side_of(c, n) == Side::kMixed) {
          return false;
        }
      }
      node = next;
    }
  }
  return true;
}

std::vector<SpecialForest> enumerate_special_forests(int n, int m) {
  if (n < 1 || m < 1) fail(ErrorKind::kInvalidArgument, "special forests need n, m >= 1");
  std::vector<int> labels;
  for (int i = 0; i <= n + m; ++i) labels.push_back(i);
  std::vector<SpecialForest> out;
  for (auto& f : enumerate_forests_on(labels))
    if (is_special_forest(f, n, m)) out.push_back({n, m, std::move(f)});
  return out;
}

int ForestTriple::degree() const { return forest_degree(f1) + forest_degree(f2) + lec(sigma); }

SpecialForest triple_to_special_forest(const ForestTriple& triple) {
  const int n = leaf_count(triple.f1);
  const int m = leaf_count(triple.f2);
  if (n < 1 || m < 1) fail(ErrorKind::kInvalidArgument, "both forests need at least one leaf");
  if (!is_admissible_forest(triple.f1, n) || !is_admissible_forest(triple.f2, m))
    fail(ErrorKind::kValidation, "triple forests must be admissible forests on 1..n and 1..m");

  // Preliminary step: tau_1..tau_l, F1 trees before F2 trees, each by minimum leaf.
  std::vector<AdmissibleTree> tau = canonical_forest(triple.f1);
  for (const auto& t : canonical_forest(triple.f2)) tau.push_back(shifted(t, n));
  const int l = static_cast<int>(tau.size());

  if (static_cast<int>(triple.sigma.size()) != l)
    fail(ErrorKind::kInvalidArgument, "permutation must have one entry per tree (" + std::to_string(l) + ")");
  NumberList sorted = triple.sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < l; ++i)
    if (sorted[i] != i + 1) fail(ErrorKind::kInvalidArgument, "sigma is not a permutation of 1..l");

  const HookFactorization hf = hook_factorization(triple.sigma);
  AdmissibleTree spine = AdmissibleTree::make_leaf(0);
  for (auto h = hf.hooks.rbegin(); h != hf.hooks.rend(); ++h) {
    std::vector<AdmissibleTree> children{std::move(spine)};
    for (int j : *h) children.push_back(tau[j - 1]);
    spine = AdmissibleTree::make_node(inversion_count(*h), std::move(children));
  }
  AdmissibleForest forest{std::move(spine)};
  for (int j : hf.prefix) forest.push_back(tau[j - 1]);
  return {n, m, canonical_forest(std::move(forest))};
}

ForestTriple special_forest_to_triple(const SpecialForest& special) {
  const int n = special.n;
  const int m = special.m;
  if (!is_special_forest(special.forest, n, m)) fail(ErrorKind::kValidation, "not a special admissible forest");

  std::vector<AdmissibleTree> detached;
  std::vector<std::pair<int, std::vector<AdmissibleTree>>> spine;  // outermost first
  for (const auto& t : special.forest) {
    if (!contains_leaf(t, 0)) {
      detached.push_back(t);
      continue;
    }
    const AdmissibleTree* node = &t;
    while (!node->is_leaf()) {
      const AdmissibleTree* next = nullptr;
      std::vector<AdmissibleTree> attached;
      for (const auto& c : node->children) {
        if (contains_leaf(c, 0)) {
          next = &c;
        } else {
          attached.push_back(c);
        }
      }
      spine.emplace_back(node->exponent, std::move(attached));
      node = next;
    }
  }

  ForestTriple out;
  auto place = [&](const AdmissibleTree& t) {
    if (side_of(t, n) == Side::kFirst) {
      out.f1.push_back(t);
    } else {
      out.f2.push_back(shifted(t, -n));
    }
  };
  for (const auto& t : detached) place(t);
  for (const auto& [e, attached] : spine)
    for (const auto& t : attached) place(t);
  out.f1 = canonical_forest(std::move(out.f1));
  out.f2 = canonical_forest(std::move(out.f2));

  // Index of each tree in the preliminary-step order.
  auto index_of = [&](const AdmissibleTree& t) {
    if (side_of(t, n) == Side::kFirst)
      return static_cast<int>(std::find(out.f1.begin(), out.f1.end(), t) - out.f1.begin()) + 1;
    const AdmissibleTree back = shifted(t, -n);
    return static_cast<int>(out.f1.size() + (std::find(out.f2.begin(), out.f2.end(), back) - out.f2.begin())) + 1;
  };

  for (const auto& t : detached) out.sigma.push_back(index_of(t));
  std::sort(out.sigma.begin(), out.sigma.end());
  for (const auto& [e, attached] : spine) {
    NumberList values;
    for (const auto& t : attached) values.push_back(index_of(t));
    std::sort(values.begin(), values.end());
    if (values.size() < 2 || e < 1 || e > static_cast<int>(values.size()) - 1)
      fail(ErrorKind::kValidation, "malformed spine node");
    const NumberList hook = hook_with_inversions(values, e);
    out.sigma.insert(out.sigma.end(), hook.begin(), hook.end());
  }
  return out;
}

}  // namespace wm
