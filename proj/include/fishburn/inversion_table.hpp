#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/enumeration.hpp"
#include "fishburn/matching.hpp"

namespace fishburn {

// An inversion table a_1 ... a_n with 0 <= a_i <= i - 1.
class InversionTable {
 public:
  InversionTable() = default;  // length 0
  explicit InversionTable(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  // Digits joined ("00214") when every entry is <= 9, otherwise
  // comma-separated ("0,0,2,1,4"). parse accepts either form.
  std::string to_string() const;
  static InversionTable parse(std::string_view text);

  friend bool operator==(const InversionTable&, const InversionTable&) = default;
  friend auto operator<=>(const InversionTable&, const InversionTable&) = default;

 private:
  std::vector<int> entries_;
};

// The bijection from left-nesting-free matchings on [2n] to inversion tables:
// order the arcs by closer; a_i is the number of closers strictly left of the
// i-th arc's opener. Throws std::invalid_argument when x has a left-nesting.
InversionTable phi(const Matching& x);

// The inverse: build up the matching by inserting, for i = 1..n, the i-th
// rightmost-closing arc with its opener immediately before the (a_i + 1)-th
// closer of the partial matching.
Matching phi_inverse(const InversionTable& table);

// True when no two positions p < q have a_p = a_q + 1 (no later entry is one
// below an earlier one). These are the tables counted by the Fishburn numbers.
bool is_cdf(const InversionTable& table);

// Number of positions where the entry takes its maximum, a_i = i - 1.
int d_statistic(const InversionTable& table);

// All cdf tables of length n in lexicographic order, optionally restricted to
// a given d_statistic value.
std::vector<InversionTable> cdf_tables(int n, std::optional<int> d = std::nullopt,
                                       Cap cap = {});

// All n! inversion tables of length n in lexicographic order, optionally
// restricted to a given d_statistic value.
std::vector<InversionTable> all_inversion_tables(int n, std::optional<int> d = std::nullopt,
                                                 Cap cap = {});

}  // namespace fishburn
