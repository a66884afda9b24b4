#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/enumeration.hpp"
#include "fishburn/inversion_table.hpp"

namespace fishburn {

// A Fishburn diagram: a sequence of columns A_1, ..., A_k where each A_i is a
// nonempty subset of {0, ..., i-1} (dots at levels below the column index).
// n = total number of dots. Members are stored ascending within each column.
class FishburnDiagram {
 public:
  FishburnDiagram() = default;  // zero columns, zero dots
  explicit FishburnDiagram(std::vector<std::vector<int>> columns);

  int length() const { return static_cast<int>(columns_.size()); }  // k
  int dots() const;                                                 // n
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  std::string to_string() const;  // "0;1;0,2;0,1,2", "" for zero columns
  static FishburnDiagram parse(std::string_view text);

  friend bool operator==(const FishburnDiagram&, const FishburnDiagram&) = default;
  friend auto operator<=>(const FishburnDiagram&, const FishburnDiagram&) = default;

 private:
  std::vector<std::vector<int>> columns_;
};

// The smallest level j at which a diagram fails the fixed-point conditions of
// the sign-reversing involution, plus the columns the surgery operates on.
// Column indices are 1-based to match the diagram's A_1..A_k addressing.
//
// Scanning levels in increasing order and preferring ExtraDot at a tie makes
// the recorded data canonical: in the ExtraDot case `level` is the smallest
// member of the flagged column, and in the Descent case every column holding
// `level` is the singleton {level} and `level`+1 is the smallest member of
// column `upper`.
struct Violation {
  enum class Kind {
    ExtraDot,  // some column holds `level` along with a larger member
    Descent,   // `level`+1 appears in a column before a later column {level}
  };

  Kind kind = Kind::ExtraDot;
  int level = 0;  // j >= 0

  // ExtraDot: `column` is the first column containing `level` with more than
  // one member, and `rise` >= 1 is the gap from `level` to that column's
  // second-smallest member.
  int column = 0;
  int rise = 0;

  // Descent: `lower` is the last column containing `level` (necessarily the
  // singleton {level}); `upper` is the last column before `lower` containing
  // `level`+1.
  int upper = 0;
  int lower = 0;
};

// Find the minimal violation, or nullopt when the diagram is a fixed point
// (all columns singletons, and no level j has j+1 occurring before a later
// {j}). `descent_active`, when non-null, restricts the Descent condition to
// levels it accepts; the composition-paired involution uses this to ignore
// descents whose level still has dots available in the composition.
std::optional<Violation> minimal_violation(
    const FishburnDiagram& diagram,
    const std::function<bool(int)>& descent_active = nullptr);

// Apply the column surgery for one violation. ExtraDot splits the column,
// lengthening the diagram by one; Descent merges two columns, shortening it
// by one. Dot count, d-statistic, and the minimal violation level are all
// preserved, and the surgery at the image's minimal violation undoes this
// one. Throws std::logic_error if the construction breaks the diagram
// invariants (an implementation bug, not a data error).
FishburnDiagram apply_surgery(const FishburnDiagram& diagram, const Violation& violation);

// The sign-reversing involution on n-dot diagrams: apply the surgery at the
// minimal violation, or return the diagram unchanged when it has none.
FishburnDiagram psi(const FishburnDiagram& diagram);

// sign = (-1)^(n - k), degree = n.
struct SignedWeight {
  int sign = 1;
  int degree = 0;
  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};
SignedWeight signed_weight(const FishburnDiagram& diagram);

// Number of columns containing their maximal allowed level, i-1 in A_i.
int d_statistic(const FishburnDiagram& diagram);

// For a fixed point (all singletons {a_i} with the descent condition), the
// inversion table a_1 ... a_k. Throws std::invalid_argument otherwise. The
// image is exactly the set of cdf tables, with matching d-statistic.
InversionTable fixed_point_table(const FishburnDiagram& diagram);

// Stream all diagrams with n dots (n >= 1), optionally restricted to a given
// d-statistic; ordered by length, then column-wise lexicographically.
void for_each_diagram(int n, const std::function<void(const FishburnDiagram&)>& visit,
                      std::optional<int> d = std::nullopt, Cap cap = {});
std::vector<FishburnDiagram> all_diagrams(int n, std::optional<int> d = std::nullopt,
                                          Cap cap = {});

}  // namespace fishburn
