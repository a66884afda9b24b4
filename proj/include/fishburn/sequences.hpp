#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fishburn/enumeration.hpp"

namespace fishburn {

// Ascent sequences: x_1 = 0 and each later entry satisfies
// 0 <= x_i <= 1 + asc(x_1..x_{i-1}), where asc counts the j with x_j < x_{j+1}.
bool is_ascent_sequence(const std::vector<int>& entries);
std::vector<std::vector<int>> ascent_sequences(int n, Cap cap = {});

// Number of zero entries; on ascent sequences this is equidistributed with
// the d-statistic on cdf inversion tables of the same length.
int zeros_statistic(const std::vector<int>& entries);

// Permutations avoiding the Fishburn pattern: no positions i < j with
// pi_j = pi_i - 1 and pi_{i+1} > pi_i. `perm` is a permutation of 1..n.
bool is_fishburn_permutation(const std::vector<int>& perm);
std::vector<std::vector<int>> fishburn_permutations(int n, Cap cap = {});

// An integer triangle; rows.front() is the row for n = 1. Row lengths and
// inner indexing are documented per producer.
struct TriangleTable {
  std::vector<std::vector<std::int64_t>> rows;

  std::string to_csv() const;  // one comma-separated line per row

  friend bool operator==(const TriangleTable&, const TriangleTable&) = default;
};

// Second-order Eulerian triangle via
//   T(n, k) = k T(n-1, k) + (2n - k) T(n-1, k-1),  T(1, 1) = 1;
// row n holds k = 1..n. Row sums are (2n-1)!!.
TriangleTable second_order_eulerian(int n_max);

// Distribution of the left-nesting count over matchings on [2n]: row n holds
// L(n, j) for j = 0..n-1 (so L(n, 0) = n! counts the left-nesting-free ones).
enum class DistributionMethod {
  Recurrence,  // L(n,j) = (n+j) L(n-1,j) + (n-j) L(n-1,j-1)
  Exhaustive,  // count left-nestings over all (2n-1)!! matchings
};
std::vector<std::int64_t> left_nesting_distribution(int n, DistributionMethod method,
                                                    Cap cap = {});
TriangleTable left_nesting_triangle(int n_max, DistributionMethod method, Cap cap = {});

}  // namespace fishburn
