#include "wm/permstats.hpp"

#include <charconv>
#include <set>

namespace wm {

void validate_number_list(std::span<const int> list) {
  std::set<int> seen;
  for (int x : list) {
    if (x <= 0) fail(ErrorKind::kValidation, "list entries must be positive");
    if (!seen.insert(x).second) fail(ErrorKind::kValidation, "list entries must be distinct");
  }
}

NumberList parse_number_list(const std::string& text) {
  NumberList out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string_view item(text.data() + pos, next - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      fail(ErrorKind::kParse, "bad list entry in '" + text + "'");
    out.push_back(value);
    pos = next + 1;
  }
  validate_number_list(out);
  return out;
}

std::string format_number_list(std::span<const int> list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(list[i]);
  }
  return out + "]";
}

std::vector<std::pair<int, int>> inversions(std::span<const int> list) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (list[i] > list[j]) out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return out;
}

int inversion_count(std::span<const int> list) {
  int count = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) count += list[i] > list[j];
  return count;
}

int descent_count(std::span<const int> list) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < list.size(); ++i) count += list[i] > list[i + 1];
  return count;
}

bool is_hook(std::span<const int> list) {
  if (list.size() < 2 || list[0] <= list[1]) return false;
  for (std::size_t i = 2; i < list.size(); ++i)
    if (list[i - 1] >= list[i]) return false;
  return true;
}

HookFactorization hook_factorization(std::span<const int> list) {
  validate_number_list(list);
  HookFactorization out;
  // The last hook starts at the rightmost descent; peel hooks off the right.
  std::size_t end = list.size();
  while (end > 0) {
    std::size_t d = end - 1;
    while (d > 0 && list[d - 1] < list[d]) --d;
    if (d == 0) break;
    out.hooks.emplace_back(list.begin() + static_cast<std::ptrdiff_t>(d - 1),
                           list.begin() + static_cast<std::ptrdiff_t>(end));
    end = d - 1;
  }
  out.prefix.assign(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(end));
  std::reverse(out.hooks.begin(), out.hooks.end());
  return out;
}

NumberList hook_with_inversions(std::span<const int> values, int i) {
  const int s = static_cast<int>(values.size());
  if (s < 2) fail(ErrorKind::kInvalidArgument, "a hook needs at least two values");
  if (i < 1 || i > s - 1) fail(ErrorKind::kInvalidArgument, "hook inversion count out of range");
  if (!std::is_sorted(values.begin(), values.end()) ||
      std::adjacent_find(values.begin(), values.end()) != values.end())
    fail(ErrorKind::kInvalidArgument, "hook values must be strictly increasing");
  NumberList out;
  out.push_back(values[i]);
  out.insert(out.end(), values.begin(), values.begin() + i);
  out.insert(out.end(), values.begin() + i + 1, values.end());
  return out;
}

int lec(std::span<const int> list) {
  int total = 0;
  for (const auto& h : hook_factorization(list).hooks) total += inversion_count(h);
  return total;
}

QPolynomial eulerian_poly(int l) {
  if (l < 0) fail(ErrorKind::kInvalidArgument, "negative Eulerian index");
  if (l == 0) return QPolynomial{1};
  // A(m,k) = k A(m-1,k) + (m-k+1) A(m-1,k-1)
  std::vector<std::int64_t> row{0, 1};
  for (int m = 2; m <= l; ++m) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 1; k <= m; ++k) {
      const std::int64_t same = k < static_cast<int>(row.size()) ? row[k] : 0;
      next[k] = k * same + (m - k + 1) * row[k - 1];
    }
    row = std::move(next);
  }
  return QPolynomial(std::move(row));
}

QPolynomial eulerian_poly_by_descents(int l) {
  if (l < 0) fail(ErrorKind::kInvalidArgument, "negative Eulerian index");
  if (l == 0) return QPolynomial{1};
  std::vector<std::int64_t> counts(static_cast<std::size_t>(l) + 1, 0);
  for_each_permutation(l, [&](const NumberList& p) { ++counts[descent_count(p) + 1]; });
  return QPolynomial(std::move(counts));
}

QPolynomial lec_distribution(int l) {
  if (l < 1) fail(ErrorKind::kInvalidArgument, "lec distribution needs l >= 1");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(l), 0);
  for_each_permutation(l, [&](const NumberList& p) { ++counts[lec(p)]; });
  return QPolynomial(std::move(counts));
}

}  // namespace wm
