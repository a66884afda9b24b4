#include "fishburn/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fishburn/checked.hpp"
#include "fishburn/matching.hpp"

namespace fishburn {

namespace {

int ascents(const std::vector<int>& entries, size_t upto) {
  int count = 0;
  for (size_t i = 1; i < upto; ++i)
    if (entries[i] > entries[i - 1]) ++count;
  return count;
}

}  // namespace

bool is_ascent_sequence(const std::vector<int>& entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) return false;
    if (entries[i] > (i == 0 ? 0 : 1 + ascents(entries, i))) return false;
  }
  return true;
}

namespace {

void ascent_rec(int n, std::vector<int>& prefix, int ascents_so_far, CapGuard& guard,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    guard.count();
    out.push_back(prefix);
    return;
  }
  const int bound = prefix.empty() ? 0 : 1 + ascents_so_far;
  for (int value = 0; value <= bound; ++value) {
    const int gained = !prefix.empty() && value > prefix.back() ? 1 : 0;
    prefix.push_back(value);
    ascent_rec(n, prefix, ascents_so_far + gained, guard, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> ascent_sequences(int n, Cap cap) {
  if (n < 0) throw std::invalid_argument("ascent_sequences: n must be >= 0");
  CapGuard guard(cap, "ascent sequences of length " + std::to_string(n));
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  ascent_rec(n, prefix, 0, guard, out);
  return out;
}

int zeros_statistic(const std::vector<int>& entries) {
  return static_cast<int>(std::count(entries.begin(), entries.end(), 0));
}

bool is_fishburn_permutation(const std::vector<int>& perm) {
  for (size_t i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i + 1] <= perm[i]) continue;  // the pattern needs an ascent here
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[j] == perm[i] - 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> fishburn_permutations(int n, Cap cap) {
  if (n < 0) throw std::invalid_argument("fishburn_permutations: n must be >= 0");
  require_within_cap(static_cast<std::uint64_t>(checked_factorial(n)), cap,
                     "permutations of length " + std::to_string(n));
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (is_fishburn_permutation(perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string TriangleTable::to_csv() const {
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

TriangleTable second_order_eulerian(int n_max) {
  if (n_max < 1) throw std::invalid_argument("second_order_eulerian: n_max must be >= 1");
  TriangleTable triangle;
  triangle.rows.push_back({1});
  for (int n = 2; n <= n_max; ++n) {
    const auto& prev = triangle.rows.back();
    std::vector<std::int64_t> row(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
      std::int64_t from_same = k <= n - 1 ? checked_mul(k, prev[static_cast<size_t>(k - 1)]) : 0;
      std::int64_t from_below =
          k >= 2 ? checked_mul(2 * n - k, prev[static_cast<size_t>(k - 2)]) : 0;
      row[static_cast<size_t>(k - 1)] = checked_add(from_same, from_below);
    }
    triangle.rows.push_back(std::move(row));
  }
  return triangle;
}

std::vector<std::int64_t> left_nesting_distribution(int n, DistributionMethod method, Cap cap) {
  if (n < 1) throw std::invalid_argument("left_nesting_distribution: n must be >= 1");
  if (method == DistributionMethod::Exhaustive) {
    std::vector<std::int64_t> row(static_cast<size_t>(n), 0);
    const NestingKind left = NestingKind::left();
    for_each_matching(
        n, [&](const Matching& x) { ++row[static_cast<size_t>(count_nestings(x, left))]; },
        cap);
    return row;
  }
  // L(n, j) = (n + j) L(n-1, j) + (n - j) L(n-1, j-1), L(1, 0) = 1
  std::vector<std::int64_t> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::int64_t> next(static_cast<size_t>(m), 0);
    for (int j = 0; j <= m - 1; ++j) {
      std::int64_t keep =
          j <= m - 2 ? checked_mul(m + j, row[static_cast<size_t>(j)]) : 0;
      std::int64_t raise =
          j >= 1 ? checked_mul(m - j, row[static_cast<size_t>(j - 1)]) : 0;
      next[static_cast<size_t>(j)] = checked_add(keep, raise);
    }
    row = std::move(next);
  }
  return row;
}

TriangleTable left_nesting_triangle(int n_max, DistributionMethod method, Cap cap) {
  if (n_max < 1) throw std::invalid_argument("left_nesting_triangle: n_max must be >= 1");
  TriangleTable triangle;
  for (int n = 1; n <= n_max; ++n)
    triangle.rows.push_back(left_nesting_distribution(n, method, cap));
  return triangle;
}

}  // namespace fishburn
