#include "fishburn/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_util.hpp"

namespace fishburn {

namespace {

// nullptr when the columns form a valid diagram, else a description. Columns
// must be nonempty, strictly increasing, and confined to 0..i-1.
const char* columns_defect(const std::vector<std::vector<int>>& columns) {
  for (size_t i = 0; i < columns.size(); ++i) {
    const auto& column = columns[i];
    if (column.empty()) return "empty column";
    if (column.front() < 0) return "negative level";
    if (column.back() > static_cast<int>(i)) return "level at or above the column index";
    for (size_t m = 1; m < column.size(); ++m)
      if (column[m] <= column[m - 1]) return "repeated level in a column";
  }
  return nullptr;
}

}  // namespace

FishburnDiagram::FishburnDiagram(std::vector<std::vector<int>> columns)
    : columns_(std::move(columns)) {
  for (auto& column : columns_) std::sort(column.begin(), column.end());
  if (const char* defect = columns_defect(columns_))
    throw std::invalid_argument(std::string("diagram: ") + defect);
}

int FishburnDiagram::dots() const {
  int total = 0;
  for (const auto& column : columns_) total += static_cast<int>(column.size());
  return total;
}

std::string FishburnDiagram::to_string() const {
  std::string out;
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (i > 0) out += ';';
    for (size_t m = 0; m < columns_[i].size(); ++m) {
      if (m > 0) out += ',';
      out += std::to_string(columns_[i][m]);
    }
  }
  return out;
}

FishburnDiagram FishburnDiagram::parse(std::string_view text) {
  text = detail::trim(text);
  std::vector<std::vector<int>> columns;
  for (std::string_view column_text : detail::split(text, ';')) {
    std::vector<int> column;
    for (std::string_view field : detail::split(column_text, ','))
      column.push_back(detail::parse_int(field, "diagram"));
    columns.push_back(std::move(column));
  }
  return FishburnDiagram(std::move(columns));
}

std::optional<Violation> minimal_violation(
    const FishburnDiagram& diagram, const std::function<bool(int)>& descent_active) {
  const auto& columns = diagram.columns();
  std::vector<int> levels;
  for (const auto& column : columns) levels.insert(levels.end(), column.begin(), column.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto contains = [](const std::vector<int>& column, int level) {
    return std::binary_search(column.begin(), column.end(), level);
  };

  for (int level : levels) {
    // A column holding `level` together with a larger member. Scanning levels
    // in increasing order guarantees `level` is that column's smallest
    // member, so its second member gives the rise.
    for (size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].size() > 1 && contains(columns[i], level)) {
        Violation v;
        v.kind = Violation::Kind::ExtraDot;
        v.level = level;
        v.column = static_cast<int>(i) + 1;
        v.rise = columns[i][1] - level;
        return v;
      }
    }
    // `level`+1 in some column before a later column holding `level`. By the
    // scan order every column holding `level` is now a singleton, and the
    // checked-first ExtraDot case makes `level`+1 the smallest member of the
    // column found here.
    if (descent_active && !descent_active(level)) continue;
    int last_with_level = -1;
    for (size_t i = 0; i < columns.size(); ++i)
      if (contains(columns[i], level)) last_with_level = static_cast<int>(i);
    for (int p = last_with_level - 1; p >= 0; --p) {
      if (contains(columns[static_cast<size_t>(p)], level + 1)) {
        Violation v;
        v.kind = Violation::Kind::Descent;
        v.level = level;
        v.upper = p + 1;
        v.lower = last_with_level + 1;
        return v;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Members below the threshold stay; members at or above it shift.
std::vector<int> shifted(const std::vector<int>& column, int threshold, int delta) {
  std::vector<int> out;
  out.reserve(column.size());
  for (int member : column) out.push_back(member >= threshold ? member + delta : member);
  return out;
}

// Split the flagged column apart: its members other than `level` jump back
// `rise` slots (dropping rise-1 levels so the smallest lands at level+1), a
// new singleton {level} takes the slot after the old column, and the columns
// the jump crossed slide right to make room.
std::vector<std::vector<int>> split_surgery(const std::vector<std::vector<int>>& columns,
                                            const Violation& v) {
  const int k = static_cast<int>(columns.size());
  const int split_at = v.column;  // I, 1-based
  const int rise = v.rise;        // R >= 1
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(k) + 1);
  // untouched prefix: columns 1 .. I-R
  for (int i = 1; i <= split_at - rise; ++i)
    out.push_back(columns[static_cast<size_t>(i - 1)]);
  // the flagged column, minus `level`, pulled back R-1 columns: each member
  // drops by rise-1 (all of them exceed level, so this keeps them distinct)
  {
    std::vector<int> moved;
    for (int member : columns[static_cast<size_t>(split_at - 1)])
      if (member != v.level) moved.push_back(member - rise + 1);
    out.push_back(std::move(moved));
  }
  // columns I-R+1 .. I-1 slide one slot right; members >= level+1 go up one
  for (int i = split_at - rise + 1; i <= split_at - 1; ++i)
    out.push_back(shifted(columns[static_cast<size_t>(i - 1)], v.level + 1, +1));
  // the new singleton at position I+1
  out.push_back({v.level});
  // the suffix keeps its columns; members >= level go up one
  for (int i = split_at + 1; i <= k; ++i)
    out.push_back(shifted(columns[static_cast<size_t>(i - 1)], v.level, +1));
  return out;
}

// Merge the singleton {level} back into the column holding level+1: that
// column jumps forward to just before the singleton's slot, its members keep
// their levels while `level` joins them, and the columns in between slide
// left (shedding the level the jump re-crossed).
std::vector<std::vector<int>> merge_surgery(const std::vector<std::vector<int>>& columns,
                                            const Violation& v) {
  const int k = static_cast<int>(columns.size());
  const int upper = v.upper;  // P, 1-based: last column before `lower` with level+1
  const int lower = v.lower;  // Q, 1-based: last column holding level, = {level}
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(k) - 1);
  // untouched prefix: columns 1 .. P-1
  for (int i = 1; i <= upper - 1; ++i) out.push_back(columns[static_cast<size_t>(i - 1)]);
  // columns P+1 .. Q-1 slide one slot left; members above level+1 drop one
  for (int i = upper + 1; i <= lower - 1; ++i) {
    std::vector<int> column;
    for (int member : columns[static_cast<size_t>(i - 1)])
      column.push_back(member > v.level + 1 ? member - 1 : member);
    out.push_back(std::move(column));
  }
  // the merged column at position Q-1: the jumping column's members advance
  // with it, and the absorbed dot sits at `level`
  {
    std::vector<int> merged;
    for (int member : columns[static_cast<size_t>(upper - 1)])
      merged.push_back(member + (lower - upper - 1));
    merged.push_back(v.level);
    std::sort(merged.begin(), merged.end());
    out.push_back(std::move(merged));
  }
  // the suffix slides one slot left; members above level drop one
  for (int i = lower + 1; i <= k; ++i) {
    std::vector<int> column;
    for (int member : columns[static_cast<size_t>(i - 1)])
      column.push_back(member > v.level ? member - 1 : member);
    out.push_back(std::move(column));
  }
  return out;
}

}  // namespace

FishburnDiagram apply_surgery(const FishburnDiagram& diagram, const Violation& violation) {
  const auto& columns = diagram.columns();
  std::vector<std::vector<int>> out = violation.kind == Violation::Kind::ExtraDot
                                          ? split_surgery(columns, violation)
                                          : merge_surgery(columns, violation);
  if (const char* defect = columns_defect(out))
    throw std::logic_error(std::string("surgery produced an invalid diagram (") + defect +
                           ") from " + diagram.to_string());
  return FishburnDiagram(std::move(out));
}

FishburnDiagram psi(const FishburnDiagram& diagram) {
  const auto violation = minimal_violation(diagram);
  return violation ? apply_surgery(diagram, *violation) : diagram;
}

SignedWeight signed_weight(const FishburnDiagram& diagram) {
  const int n = diagram.dots();
  const int k = diagram.length();
  return {(n - k) % 2 == 0 ? 1 : -1, n};
}

int d_statistic(const FishburnDiagram& diagram) {
  const auto& columns = diagram.columns();
  int count = 0;
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i].back() == static_cast<int>(i)) ++count;
  return count;
}

InversionTable fixed_point_table(const FishburnDiagram& diagram) {
  if (minimal_violation(diagram))
    throw std::invalid_argument("fixed_point_table: diagram is not a fixed point");
  // No violation forces every column to a singleton; reading them off gives
  // an inversion table, and the absent descent condition is exactly cdf.
  std::vector<int> entries;
  entries.reserve(diagram.columns().size());
  for (const auto& column : diagram.columns()) entries.push_back(column.front());
  return InversionTable(std::move(entries));
}

namespace {

struct DiagramStream {
  int n = 0;
  int k = 0;
  std::optional<int> d;
  const std::function<void(const FishburnDiagram&)>* visit = nullptr;
  CapGuard* guard = nullptr;
  std::vector<std::vector<int>> columns;
  std::vector<int> current;
  int placed = 0;

  // dots a full tail of columns i+1..k could still hold
  int tail_capacity(int i) const { return (k * (k + 1) - i * (i + 1)) / 2; }

  void place_column(int i) {
    // dots left for columns i+1..k once this column is accepted
    const int remaining = n - placed - static_cast<int>(current.size());
    if (remaining < (k - i) || remaining > tail_capacity(i)) return;
    columns.push_back(current);
    placed += static_cast<int>(current.size());
    if (i == k) {
      if (placed == n) {
        guard->count();  // a candidate reached, kept or not
        FishburnDiagram diagram(columns);
        if (!d || d_statistic(diagram) == *d) (*visit)(diagram);
      }
    } else {
      std::vector<int> saved;
      saved.swap(current);  // the next column starts from scratch
      extend_column(i + 1, 0);
      current.swap(saved);
    }
    placed -= static_cast<int>(current.size());
    columns.pop_back();
  }

  // Build column i's member set in lexicographic order on the ascending
  // member sequence: each subset is used as soon as it is formed, then grown.
  void extend_column(int i, int next_member) {
    for (int member = next_member; member <= i - 1; ++member) {
      current.push_back(member);
      place_column(i);
      extend_column(i, member + 1);
      current.pop_back();
    }
  }
};

}  // namespace

void for_each_diagram(int n, const std::function<void(const FishburnDiagram&)>& visit,
                      std::optional<int> d, Cap cap) {
  if (n < 1) throw std::invalid_argument("for_each_diagram: n must be >= 1");
  if (d && (*d < 1 || *d > n))
    throw std::invalid_argument("for_each_diagram: d outside 1.." + std::to_string(n));
  CapGuard guard(cap, "diagrams with " + std::to_string(n) + " dots");
  int k_min = 1;
  while (k_min * (k_min + 1) / 2 < n) ++k_min;
  for (int k = k_min; k <= n; ++k) {
    DiagramStream stream;
    stream.n = n;
    stream.k = k;
    stream.d = d;
    stream.visit = &visit;
    stream.guard = &guard;
    stream.extend_column(1, 0);
  }
}

std::vector<FishburnDiagram> all_diagrams(int n, std::optional<int> d, Cap cap) {
  std::vector<FishburnDiagram> out;
  for_each_diagram(n, [&](const FishburnDiagram& diagram) { out.push_back(diagram); }, d, cap);
  return out;
}

}  // namespace fishburn
