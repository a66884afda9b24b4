#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/enumeration.hpp"

namespace fishburn {

// One arc of a matching; endpoints are 1-based point labels, opener < closer.
struct Arc {
  int opener = 0;
  int closer = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A perfect matching of {1, ..., 2n}: n disjoint arcs covering every point.
// Arcs are stored sorted by opener; comparing matchings arc-by-arc in that
// order coincides with comparing their partner sequences lexicographically,
// which is the canonical enumeration order.
class Matching {
 public:
  Matching() = default;  // the empty matching (n = 0)
  explicit Matching(std::vector<Arc> arcs);

  int size() const { return static_cast<int>(arcs_.size()); }  // n
  int points() const { return 2 * size(); }                    // 2n
  const std::vector<Arc>& arcs() const { return arcs_; }

  // The other endpoint of the arc through `endpoint` (1 <= endpoint <= 2n).
  int partner(int endpoint) const;
  bool is_closer(int endpoint) const { return partner(endpoint) < endpoint; }

  // All closers, in increasing order.
  std::vector<int> closers() const;

  std::string to_string() const;  // "(1,4)(2,9)(3,6)(5,10)(7,8)", "" for n = 0
  static Matching parse(std::string_view text);

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Arc> arcs_;
};

// Which extra constraint a nested pair (a,b), (c,d) with a < c < d < b must
// satisfy to be counted.
class NestingKind {
 public:
  enum class Variant { General, KNesting, Left, Right, Neighbor };

  static NestingKind general() { return {Variant::General, 0}; }
  static NestingKind k_nesting(int k);  // openers at distance <= k; k >= 1
  static NestingKind left() { return {Variant::Left, 0}; }      // c = a + 1
  static NestingKind right() { return {Variant::Right, 0}; }    // d = b - 1
  static NestingKind neighbor() { return {Variant::Neighbor, 0}; }  // either

  Variant variant() const { return variant_; }
  int k() const { return k_; }

  // Accepts "nesting", "left-nesting", "right-nesting", "neighbor-nesting",
  // or "<k>-nesting" with integer k >= 1 (so "1-nesting" means Left-adjacent
  // openers and "2-nesting" is the Fishburn condition).
  static NestingKind parse(std::string_view text);
  std::string to_string() const;

 private:
  NestingKind(Variant variant, int k) : variant_(variant), k_(k) {}
  Variant variant_;
  int k_;
};

// Number of unordered arc pairs of x that nest and satisfy the kind's
// constraint.
int count_nestings(const Matching& x, const NestingKind& kind);

// Where the opener of a newly inserted rightmost-closing arc lands, relative
// to the endpoint that follows it. The first two cases preserve the
// left-nesting count; the third increments it by one.
enum class InsertionCase {
  BeforeRightEndpoint,      // immediately before a closer (possibly its own)
  BeforeInnerLeftEndpoint,  // before the inner opener of a left-nesting of x
  BeforeFreeLeftEndpoint,   // before any other opener
};

// Insert the arc closing at the new maximum into a matching on [2n-2]:
// endpoints >= slot shift up by one and the arc (slot, 2n) is added. `slot`
// is the new opener's final label, 1 <= slot <= 2n-1 where n = x.size() + 1.
Matching insert_rightmost_arc(const Matching& x, int slot);

// Inverse of insert_rightmost_arc: delete the arc closing at 2n and close the
// label gap. Requires n >= 1.
Matching remove_rightmost_arc(const Matching& x);

// Classify where insert_rightmost_arc(x, slot) puts the new opener.
InsertionCase classify_insertion(const Matching& x, int slot);

// Stream the (2n-1)!! matchings on [2n] in canonical order.
void for_each_matching(int n, const std::function<void(const Matching&)>& visit,
                       Cap cap = {});
std::vector<Matching> all_matchings(int n, Cap cap = {});

// The n! matchings on [2n] with no left-nesting, in canonical order.
std::vector<Matching> left_nesting_free_matchings(int n, Cap cap = {});

}  // namespace fishburn
