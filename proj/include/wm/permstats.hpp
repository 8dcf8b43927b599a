#ifndef WM_PERMSTATS_HPP
#define WM_PERMSTATS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wm/qpoly.hpp"

namespace wm {

/// Ordered list of distinct positive integers; not necessarily a permutation.
using NumberList = std::vector<int>;

/// Increasing prefix followed by hooks; concatenation gives back the list.
struct HookFactorization {
  NumberList prefix;
  std::vector<NumberList> hooks;

  friend bool operator==(const HookFactorization&, const HookFactorization&) = default;
};

/// Throws unless the entries are distinct and positive.
void validate_number_list(std::span<const int> list);

/// Parses comma-separated one-line notation, e.g. "3,1,2".
NumberList parse_number_list(const std::string& text);
std::string format_number_list(std::span<const int> list);

/// Pairs (i,j), 1-based, with i < j and l_i > l_j.
std::vector<std::pair<int, int>> inversions(std::span<const int> list);
int inversion_count(std::span<const int> list);

int descent_count(std::span<const int> list);

/// [t1,...,th] with h >= 2, t1 > t2 and t2 < t3 < ... < th.
bool is_hook(std::span<const int> list);

HookFactorization hook_factorization(std::span<const int> list);

/// The unique hook on the given values with exactly i inversions:
/// [j_{i+1}, j_1, ..., j_i, j_{i+2}, ..., j_s].
NumberList hook_with_inversions(std::span<const int> values, int i);

int lec(std::span<const int> list);

/// A_l(q) = sum_k A(l,k) q^k with A(l,k) permutations having k-1 descents;
/// A_0 = 1. Computed from the standard recurrence.
QPolynomial eulerian_poly(int l);

/// Same polynomial by sweeping all permutations and counting descents.
QPolynomial eulerian_poly_by_descents(int l);

/// Sum over S_l of q^lec.
QPolynomial lec_distribution(int l);

/// Calls fn(perm) for every permutation of 1..l in lexicographic order.
template <class Fn>
void for_each_permutation(int l, Fn&& fn);

}  // namespace wm

#include <algorithm>
#include <numeric>

template <class Fn>
void wm::for_each_permutation(int l, Fn&& fn) {
  NumberList perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    fn(static_cast<const NumberList&>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

#endif  // WM_PERMSTATS_HPP
