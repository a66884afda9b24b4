#include "fishburn/inversion_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_util.hpp"

namespace fishburn {

InversionTable::InversionTable(std::vector<int> entries) : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i))
      throw std::invalid_argument("inversion table: entry " + std::to_string(entries_[i]) +
                                  " at position " + std::to_string(i + 1) +
                                  " outside 0.." + std::to_string(i));
  }
}

std::string InversionTable::to_string() const {
  const bool digits = std::all_of(entries_.begin(), entries_.end(),
                                  [](int e) { return e <= 9; });
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

InversionTable InversionTable::parse(std::string_view text) {
  text = detail::trim(text);
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    for (std::string_view field : detail::split(text, ','))
      entries.push_back(detail::parse_int(field, "inversion table"));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("inversion table: expected digits, got \"" +
                                    std::string(text) + "\"");
      entries.push_back(c - '0');
    }
  }
  return InversionTable(std::move(entries));
}

InversionTable phi(const Matching& x) {
  if (count_nestings(x, NestingKind::left()) > 0)
    throw std::invalid_argument("phi: matching has a left-nesting");
  // Arcs ordered by closer; each entry counts the closers left of the opener.
  std::vector<Arc> by_closer = x.arcs();
  std::sort(by_closer.begin(), by_closer.end(),
            [](const Arc& a, const Arc& b) { return a.closer < b.closer; });
  const std::vector<int> closers = x.closers();
  std::vector<int> entries;
  entries.reserve(by_closer.size());
  for (const Arc& arc : by_closer) {
    auto below = std::lower_bound(closers.begin(), closers.end(), arc.opener);
    entries.push_back(static_cast<int>(below - closers.begin()));
  }
  return InversionTable(std::move(entries));
}

Matching phi_inverse(const InversionTable& table) {
  Matching x;
  for (int i = 1; i <= table.size(); ++i) {
    const int entry = table.entries()[static_cast<size_t>(i - 1)];
    const std::vector<int> closers = x.closers();
    // Place the new opener immediately before the (entry+1)-th closer of the
    // grown matching; past the last old closer that means before its own.
    const int slot = entry < static_cast<int>(closers.size())
                         ? closers[static_cast<size_t>(entry)]
                         : 2 * i - 1;
    x = insert_rightmost_arc(x, slot);
  }
  return x;
}

bool is_cdf(const InversionTable& table) {
  const auto& entries = table.entries();
  for (size_t q = 0; q < entries.size(); ++q)
    for (size_t p = 0; p < q; ++p)
      if (entries[p] == entries[q] + 1) return false;
  return true;
}

int d_statistic(const InversionTable& table) {
  int count = 0;
  for (size_t i = 0; i < table.entries().size(); ++i)
    if (table.entries()[i] == static_cast<int>(i)) ++count;
  return count;
}

namespace {

void cdf_rec(int n, std::optional<int> d, std::vector<int>& prefix, std::uint64_t seen_mask,
             CapGuard& guard, std::vector<InversionTable>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    guard.count();  // the work unit is a candidate table, filtered or not
    InversionTable table(prefix);
    if (!d || d_statistic(table) == *d) out.push_back(std::move(table));
    return;
  }
  const int position = static_cast<int>(prefix.size());  // next entry allows 0..position
  for (int value = 0; value <= position; ++value) {
    // appending `value` breaks the cdf condition iff value+1 appeared earlier
    if (value + 1 < 64 && (seen_mask >> (value + 1)) & 1) continue;
    prefix.push_back(value);
    cdf_rec(n, d, prefix, seen_mask | (1ull << value), guard, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<InversionTable> cdf_tables(int n, std::optional<int> d, Cap cap) {
  if (n < 0) throw std::invalid_argument("cdf_tables: n must be >= 0");
  if (n >= 64) throw std::invalid_argument("cdf_tables: n must be < 64");
  if (d && (*d < 0 || *d > n))
    throw std::invalid_argument("cdf_tables: d outside 0.." + std::to_string(n));
  std::vector<InversionTable> out;
  std::vector<int> prefix;
  CapGuard guard(cap, "cdf tables of length " + std::to_string(n));
  cdf_rec(n, d, prefix, 0, guard, out);
  return out;
}

std::vector<InversionTable> all_inversion_tables(int n, std::optional<int> d, Cap cap) {
  if (n < 0) throw std::invalid_argument("all_inversion_tables: n must be >= 0");
  if (d && (*d < 0 || *d > n))
    throw std::invalid_argument("all_inversion_tables: d outside 0.." + std::to_string(n));
  CapGuard guard(cap, "inversion tables of length " + std::to_string(n));
  std::vector<InversionTable> out;
  std::vector<int> entries(static_cast<size_t>(n), 0);
  while (true) {
    guard.count();
    InversionTable table(entries);
    if (!d || d_statistic(table) == *d) out.push_back(std::move(table));
    // odometer step in lexicographic order: bump the rightmost entry with room
    int position = n - 1;
    while (position >= 0 && entries[static_cast<size_t>(position)] == position) {
      entries[static_cast<size_t>(position)] = 0;
      --position;
    }
    if (position < 0) return out;
    ++entries[static_cast<size_t>(position)];
  }
}

}  // namespace fishburn
