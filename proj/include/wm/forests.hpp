#ifndef WM_FORESTS_HPP
#define WM_FORESTS_HPP

#include <span>
#include <vector>

#include "wm/cohomology.hpp"
#include "wm/permstats.hpp"
#include "wm/qpoly.hpp"

namespace wm {

/// Rooted leaf-labelled tree. A node without children is a leaf carrying
/// `leaf`; an internal node carries `exponent`. Children are unordered and
/// stored sorted by minimum leaf label, so structural equality is tree
/// equality.
struct AdmissibleTree {
  int leaf = 0;
  int exponent = 0;
  std::vector<AdmissibleTree> children;

  static AdmissibleTree make_leaf(int label);
  static AdmissibleTree make_node(int exponent, std::vector<AdmissibleTree> children);

  bool is_leaf() const { return children.empty(); }
  int min_leaf() const;
  std::vector<int> leaves() const;  // ascending
  int degree() const;

  friend bool operator==(const AdmissibleTree&, const AdmissibleTree&) = default;
};

/// Trees sorted by minimum leaf label.
using AdmissibleForest = std::vector<AdmissibleTree>;

AdmissibleForest canonical_forest(AdmissibleForest forest);
int forest_degree(const AdmissibleForest& forest);
std::vector<int> forest_leaves(const AdmissibleForest& forest);

/// Every internal vertex has k >= 3 children and exponent in 1..k-2.
bool is_admissible_tree(const AdmissibleTree& tree);

/// Admissible trees whose leaf labels are exactly 1..n.
bool is_admissible_forest(const AdmissibleForest& forest, int n);

std::vector<AdmissibleTree> enumerate_admissible_trees(std::span<const int> labels);
std::vector<AdmissibleForest> enumerate_forests_on(std::span<const int> labels);
std::vector<AdmissibleForest> enumerate_admissible_forests(int n);

/// Sum of q^deg over the given forests.
QPolynomial degree_series(std::span<const AdmissibleForest> forests);

/// Internal nodes are the support elements (block nesting is ancestry),
/// exponents are the function values and leaves are the ground vertices.
AdmissibleForest forest_of_admissible_function(const AdmissibleFunction& f, VertexSet ground);

/// Forest on leaves 0..n+m whose 0-free parts are one-sided.
struct SpecialForest {
  int n = 0;
  int m = 0;
  AdmissibleForest forest;

  friend bool operator==(const SpecialForest&, const SpecialForest&) = default;
};

bool is_special_forest(const AdmissibleForest& forest, int n, int m);
std::vector<SpecialForest> enumerate_special_forests(int n, int m);

/// F1 on 1..n, F2 on 1..m (shifted to n+1..n+m internally) and a
/// permutation of 1..(l1+l2), l_i the tree counts.
struct ForestTriple {
  AdmissibleForest f1;
  AdmissibleForest f2;
  NumberList sigma;

  int degree() const;
  friend bool operator==(const ForestTriple&, const ForestTriple&) = default;
};

/// Trees are ordered F1 before F2, then by minimum leaf. The hooks of sigma,
/// taken from the last one outward, become a chain of internal nodes above
/// leaf 0; each node gets the hook's trees as extra children and the hook's
/// inversion count as exponent. Trees of the increasing prefix stay apart.
SpecialForest triple_to_special_forest(const ForestTriple& triple);

/// Inverse of triple_to_special_forest.
ForestTriple special_forest_to_triple(const SpecialForest& special);

}  // namespace wm

#endif  // WM_FORESTS_HPP
