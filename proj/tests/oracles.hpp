// Independent brute-force oracles. They deliberately avoid the library's
// algorithms (pruned searches, allowance bookkeeping, recurrences) and use
// the plainest definitions instead, so agreement is evidence rather than
// tautology. Only basic value types (Graph, QPolynomial) are shared.

#ifndef WM_TESTS_ORACLES_HPP
#define WM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "wm/graph.hpp"
#include "wm/qpoly.hpp"

namespace oracle {

using Block = std::vector<int>;               // sorted labels
using SetPartition = std::vector<Block>;      // blocks sorted by first element
using Poly = std::vector<std::int64_t>;       // q-coefficients, untrimmed

inline wm::QPolynomial poly(Poly p) { return wm::QPolynomial(std::move(p)); }

inline void add_monomial(Poly& p, int degree, std::int64_t count = 1) {
  if (static_cast<int>(p.size()) <= degree) p.resize(static_cast<std::size_t>(degree) + 1, 0);
  p[static_cast<std::size_t>(degree)] += count;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline void add_into(Poly& a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

/// All set partitions of `items` (restricted growth strings).
inline std::vector<SetPartition> set_partitions(const std::vector<int>& items) {
  std::vector<SetPartition> out;
  const std::size_t k = items.size();
  std::vector<int> rgs(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
    if (i == k) {
      SetPartition p(static_cast<std::size_t>(max_label) + 1);
      for (std::size_t j = 0; j < k; ++j) p[static_cast<std::size_t>(rgs[j])].push_back(items[j]);
      out.push_back(p);
      return;
    }
    for (int b = 0; b <= max_label + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_label, b));
    }
  };
  if (k == 0) return {SetPartition{}};
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

/// Connectivity of the induced subgraph by breadth-first search over an
/// adjacency matrix built from the raw edge list.
inline bool block_connected(const wm::Graph& g, const Block& block) {
  if (block.empty()) return false;
  std::set<int> members(block.begin(), block.end());
  std::set<int> seen{block.front()};
  std::vector<int> queue{block.front()};
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (const auto& [a, b] : g.edges()) {
      int w = -1;
      if (a == v) w = b;
      if (b == v) w = a;
      if (w >= 0 && members.count(w) && !seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen.size() == block.size();
}

/// Π(Γ) by filtering all set partitions.
inline std::vector<SetPartition> connected_partitions(const wm::Graph& g) {
  std::vector<SetPartition> out;
  for (const auto& p : set_partitions(g.labels())) {
    bool ok = true;
    for (const auto& b : p) ok = ok && block_connected(g, b);
    if (ok) out.push_back(p);
  }
  return out;
}

/// Connected subsets of size >= 2 by scanning every subset.
inline std::vector<Block> connected_blocks(const wm::Graph& g) {
  std::vector<Block> out;
  const auto& labels = g.labels();
  const std::size_t k = labels.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Block b;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) b.push_back(labels[i]);
    if (b.size() >= 2 && block_connected(g, b)) out.push_back(b);
  }
  return out;
}

inline bool subset_of(const Block& a, const Block& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool disjoint(const Block& a, const Block& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

/// Number of blocks of the partition of `ground` generated by merging the
/// given blocks (plain union-find over labels).
inline int blocks_after_merging(const std::vector<int>& ground, const std::vector<Block>& merged) {
  std::map<int, int> parent;
  for (int v : ground) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& b : merged)
    for (std::size_t i = 1; i < b.size(); ++i) parent[find(b[i])] = find(b[0]);
  int count = 0;
  for (int v : ground) count += find(v) == v;
  return count;
}

/// A_l(q) by counting descents over every permutation.
inline Poly eulerian_by_sweep(int l) {
  if (l == 0) return {1};
  Poly p;
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int des = 0;
    for (int i = 0; i + 1 < l; ++i) des += perm[i] > perm[i + 1];
    add_monomial(p, des + 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

/// Poincaré polynomial straight from the definition of admissible functions:
/// nested sets are the pairwise-compatible families of connected blocks,
/// exponent bounds are dim M_f(A) - dim A computed by union-find, and the
/// toric side multiplies by A_k/q (descent sweep) with k the number of
/// blocks of the join of the whole support. For the hyperplane side pass
/// the cone graph.
inline Poly poincare_by_definition(const wm::Graph& g, bool toric) {
  const auto building = connected_blocks(g);
  const auto& ground = g.labels();
  const int n = toric ? g.order() : g.order() - 1;
  Poly total;
  std::vector<Poly> toric_factor;
  for (int k = 0; k <= n; ++k) {
    Poly a = eulerian_by_sweep(k);
    toric_factor.push_back(k == 0 ? Poly{} : Poly(a.begin() + 1, a.end()));
  }
  // Nested sets are exactly the sets of pairwise compatible blocks, so a
  // clique search over the compatibility relation lists all of them.
  auto compatible = [](const Block& x, const Block& y) {
    return subset_of(x, y) || subset_of(y, x) || disjoint(x, y);
  };
  std::vector<Block> support;
  std::function<void(std::size_t)> visit = [&](std::size_t start) {
    // Bound per element: codim(A) - codim(M_f(A)), M_f(A) spanned by the
    // support blocks strictly inside A.
    Poly term{1};
    for (const auto& a : support) {
      std::vector<Block> inside;
      for (const auto& b : support)
        if (b != a && subset_of(b, a)) inside.push_back(b);
      const int codim_a = static_cast<int>(a.size()) - 1;
      const int codim_m = static_cast<int>(ground.size()) - blocks_after_merging(ground, inside);
      Poly range;
      for (int e = 1; e < codim_a - codim_m; ++e) add_monomial(range, e);
      term = multiply(term, range);
    }
    if (toric) term = multiply(term, toric_factor[static_cast<std::size_t>(blocks_after_merging(ground, support))]);
    add_into(total, term);
    for (std::size_t i = start; i < building.size(); ++i) {
      bool ok = true;
      for (const auto& s : support) ok = ok && compatible(s, building[i]);
      if (!ok) continue;
      support.push_back(building[i]);
      visit(i + 1);
      support.pop_back();
    }
  };
  visit(0);
  return total;
}

/// Counting polynomial of admissible trees on k labelled leaves, by the
/// recursion over root partitions into j >= 3 subtrees (no tree objects).
inline std::vector<Poly> tree_counts(int max_k) {
  std::vector<Poly> t(static_cast<std::size_t>(max_k) + 1);
  if (max_k >= 1) t[1] = {1};
  for (int k = 3; k <= max_k; ++k) {
    std::vector<int> items(static_cast<std::size_t>(k));
    std::iota(items.begin(), items.end(), 1);
    Poly total;
    for (const auto& p : set_partitions(items)) {
      const int j = static_cast<int>(p.size());
      if (j < 3) continue;
      Poly term;
      for (int e = 1; e <= j - 2; ++e) add_monomial(term, e);
      for (const auto& b : p) term = multiply(term, t[b.size()]);
      add_into(total, term);
    }
    t[static_cast<std::size_t>(k)] = total;
  }
  return t;
}

/// lec by trying every way to cut the list into an increasing prefix and
/// hooks, checking the factorization is unique.
inline int lec_by_search(const std::vector<int>& list) {
  const int len = static_cast<int>(list.size());
  auto is_hook = [&](int b, int e) {  // [b, e)
    if (e - b < 2 || list[b] <= list[b + 1]) return false;
    for (int i = b + 2; i < e; ++i)
      if (list[i - 1] >= list[i]) return false;
    return true;
  };
  auto inversions = [&](int b, int e) {
    int c = 0;
    for (int i = b; i < e; ++i)
      for (int j = i + 1; j < e; ++j) c += list[i] > list[j];
    return c;
  };
  std::vector<int> values;
  std::function<void(int, int)> rec = [&](int start, int acc) {
    if (start == len) {
      values.push_back(acc);
      return;
    }
    for (int end = start + 2; end <= len; ++end)
      if (is_hook(start, end)) rec(end, acc + inversions(start, end));
  };
  for (int p = 0; p <= len; ++p) {
    bool increasing = true;
    for (int i = 1; i < p; ++i) increasing = increasing && list[i - 1] < list[i];
    if (increasing) rec(p, 0);
  }
  if (values.size() != 1) throw std::runtime_error("oracle: hook factorization not unique");
  return values.front();
}

}  // namespace oracle

#endif  // WM_TESTS_ORACLES_HPP
