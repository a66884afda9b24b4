#include "fishburn/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "fishburn/checked.hpp"
#include "text_util.hpp"

namespace fishburn {

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  const int two_n = 2 * static_cast<int>(arcs_.size());
  std::vector<char> seen(static_cast<size_t>(two_n) + 1, 0);
  for (const Arc& arc : arcs_) {
    if (arc.opener >= arc.closer)
      throw std::invalid_argument("matching: arc opener must precede its closer");
    for (int endpoint : {arc.opener, arc.closer}) {
      if (endpoint < 1 || endpoint > two_n)
        throw std::invalid_argument("matching: endpoint " + std::to_string(endpoint) +
                                    " outside 1.." + std::to_string(two_n));
      if (seen[static_cast<size_t>(endpoint)])
        throw std::invalid_argument("matching: endpoint " + std::to_string(endpoint) +
                                    " used twice");
      seen[static_cast<size_t>(endpoint)] = 1;
    }
  }
}

int Matching::partner(int endpoint) const {
  for (const Arc& arc : arcs_) {
    if (arc.opener == endpoint) return arc.closer;
    if (arc.closer == endpoint) return arc.opener;
  }
  throw std::invalid_argument("matching: no endpoint " + std::to_string(endpoint));
}

std::vector<int> Matching::closers() const {
  std::vector<int> out;
  out.reserve(arcs_.size());
  for (const Arc& arc : arcs_) out.push_back(arc.closer);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Matching::to_string() const {
  std::string out;
  for (const Arc& arc : arcs_) {
    out += '(';
    out += std::to_string(arc.opener);
    out += ',';
    out += std::to_string(arc.closer);
    out += ')';
  }
  return out;
}

Matching Matching::parse(std::string_view text) {
  std::vector<Arc> arcs;
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("matching: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
    ++pos;
  };
  auto read_int = [&]() -> int {
    skip_space();
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("matching: expected a number");
    return detail::parse_int(text.substr(start, pos - start), "matching");
  };
  skip_space();
  while (pos < text.size()) {
    expect('(');
    int opener = read_int();
    skip_space();
    expect(',');
    int closer = read_int();
    skip_space();
    expect(')');
    arcs.push_back({opener, closer});
    skip_space();
  }
  return Matching(std::move(arcs));
}

NestingKind NestingKind::k_nesting(int k) {
  if (k < 1) throw std::invalid_argument("k-nesting requires k >= 1");
  return {Variant::KNesting, k};
}

NestingKind NestingKind::parse(std::string_view text) {
  text = detail::trim(text);
  if (text == "nesting") return general();
  if (text == "left-nesting") return left();
  if (text == "right-nesting") return right();
  if (text == "neighbor-nesting") return neighbor();
  constexpr std::string_view suffix = "-nesting";
  if (text.size() > suffix.size() &&
      text.substr(text.size() - suffix.size()) == suffix) {
    int k = detail::parse_int(text.substr(0, text.size() - suffix.size()), "nesting kind");
    return k_nesting(k);
  }
  throw std::invalid_argument("unknown nesting kind \"" + std::string(text) + "\"");
}

std::string NestingKind::to_string() const {
  switch (variant_) {
    case Variant::General: return "nesting";
    case Variant::KNesting: return std::to_string(k_) + "-nesting";
    case Variant::Left: return "left-nesting";
    case Variant::Right: return "right-nesting";
    case Variant::Neighbor: return "neighbor-nesting";
  }
  throw std::logic_error("unreachable");
}

namespace {

// outer = (a,b), inner = (c,d) with a < c < d < b already established.
bool kind_admits(const NestingKind& kind, const Arc& outer, const Arc& inner) {
  switch (kind.variant()) {
    case NestingKind::Variant::General: return true;
    case NestingKind::Variant::KNesting: return inner.opener - outer.opener <= kind.k();
    case NestingKind::Variant::Left: return inner.opener == outer.opener + 1;
    case NestingKind::Variant::Right: return inner.closer == outer.closer - 1;
    case NestingKind::Variant::Neighbor:
      return inner.opener == outer.opener + 1 || inner.closer == outer.closer - 1;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int count_nestings(const Matching& x, const NestingKind& kind) {
  const auto& arcs = x.arcs();
  int total = 0;
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      // arcs are sorted by opener, so arcs[j] is nested in arcs[i] exactly
      // when it also closes earlier
      if (arcs[j].closer < arcs[i].closer && kind_admits(kind, arcs[i], arcs[j]))
        ++total;
    }
  }
  return total;
}

Matching insert_rightmost_arc(const Matching& x, int slot) {
  const int n_new = x.size() + 1;
  if (slot < 1 || slot > 2 * n_new - 1)
    throw std::out_of_range("insert_rightmost_arc: slot " + std::to_string(slot) +
                            " outside 1.." + std::to_string(2 * n_new - 1));
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(n_new));
  for (const Arc& arc : x.arcs())
    arcs.push_back({arc.opener >= slot ? arc.opener + 1 : arc.opener,
                    arc.closer >= slot ? arc.closer + 1 : arc.closer});
  arcs.push_back({slot, 2 * n_new});
  return Matching(std::move(arcs));
}

Matching remove_rightmost_arc(const Matching& x) {
  if (x.size() == 0)
    throw std::invalid_argument("remove_rightmost_arc: empty matching");
  const int top = x.points();
  const int opener = x.partner(top);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(x.size()) - 1);
  for (const Arc& arc : x.arcs()) {
    if (arc.closer == top) continue;
    arcs.push_back({arc.opener > opener ? arc.opener - 1 : arc.opener,
                    arc.closer > opener ? arc.closer - 1 : arc.closer});
  }
  return Matching(std::move(arcs));
}

InsertionCase classify_insertion(const Matching& x, int slot) {
  const int n_new = x.size() + 1;
  if (slot < 1 || slot > 2 * n_new - 1)
    throw std::out_of_range("classify_insertion: slot " + std::to_string(slot) +
                            " outside 1.." + std::to_string(2 * n_new - 1));
  // The endpoint following the new opener is its own closer 2n when the slot
  // is maximal, otherwise the old endpoint labeled `slot`.
  if (slot == 2 * n_new - 1) return InsertionCase::BeforeRightEndpoint;
  const int mate = x.partner(slot);
  if (mate < slot) return InsertionCase::BeforeRightEndpoint;
  // `slot` is an opener of x; it is the inner opener of a left-nesting
  // exactly when the previous point opens an arc closing beyond mate.
  if (slot >= 2 && !x.is_closer(slot - 1) && x.partner(slot - 1) > mate)
    return InsertionCase::BeforeInnerLeftEndpoint;
  return InsertionCase::BeforeFreeLeftEndpoint;
}

namespace {

void matchings_rec(int two_n, std::vector<int>& partner,
                   const std::function<void(const Matching&)>& visit) {
  int first = 0;
  for (int p = 1; p <= two_n; ++p) {
    if (partner[static_cast<size_t>(p)] == 0) {
      first = p;
      break;
    }
  }
  if (first == 0) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(two_n) / 2);
    for (int p = 1; p <= two_n; ++p)
      if (partner[static_cast<size_t>(p)] > p) arcs.push_back({p, partner[static_cast<size_t>(p)]});
    visit(Matching(std::move(arcs)));
    return;
  }
  for (int q = first + 1; q <= two_n; ++q) {
    if (partner[static_cast<size_t>(q)] != 0) continue;
    partner[static_cast<size_t>(first)] = q;
    partner[static_cast<size_t>(q)] = first;
    matchings_rec(two_n, partner, visit);
    partner[static_cast<size_t>(first)] = 0;
    partner[static_cast<size_t>(q)] = 0;
  }
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& visit, Cap cap) {
  if (n < 0) throw std::invalid_argument("for_each_matching: n must be >= 0");
  require_within_cap(static_cast<std::uint64_t>(odd_double_factorial(n)), cap,
                     "matchings on [" + std::to_string(2 * n) + "]");
  std::vector<int> partner(static_cast<size_t>(2 * n) + 1, 0);
  matchings_rec(2 * n, partner, visit);
}

std::vector<Matching> all_matchings(int n, Cap cap) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& x) { out.push_back(x); }, cap);
  return out;
}

std::vector<Matching> left_nesting_free_matchings(int n, Cap cap) {
  if (n < 0) throw std::invalid_argument("left_nesting_free_matchings: n must be >= 0");
  require_within_cap(static_cast<std::uint64_t>(checked_factorial(n)), cap,
                     "left-nesting-free matchings on [" + std::to_string(2 * n) + "]");
  // Grow by inserting the rightmost-closing arc immediately before a closer
  // (including its own); those are exactly the insertions that do not create
  // a left-nesting, and every left-nesting-free matching arises once.
  std::vector<Matching> current{Matching()};
  for (int m = 1; m <= n; ++m) {
    std::vector<Matching> next;
    next.reserve(current.size() * static_cast<size_t>(m));
    for (const Matching& x : current) {
      for (int closer : x.closers()) next.push_back(insert_rightmost_arc(x, closer));
      next.push_back(insert_rightmost_arc(x, 2 * m - 1));
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace fishburn
