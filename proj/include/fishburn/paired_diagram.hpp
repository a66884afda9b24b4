#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/diagram.hpp"
#include "fishburn/enumeration.hpp"

namespace fishburn {

// A composition with nonnegative parts and a positive first part,
// lambda_1, ..., lambda_m (m >= 1).
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int sum() const;

  std::string to_string() const;  // "1,2,0,3,0"
  static Composition parse(std::string_view text);

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// A pair (lambda, A) of a composition and a Fishburn diagram where lambda has
// exactly one more part than the diagram has columns. These refine the n-dot
// diagrams by the statistic d = sum(lambda): the pair stands for a diagram
// with n = d + dots(A) dots of which d sit at maximal levels.
class PairedDiagram {
 public:
  PairedDiagram(Composition lambda, FishburnDiagram diagram);

  const Composition& composition() const { return lambda_; }
  const FishburnDiagram& diagram() const { return diagram_; }

  int dots() const;           // n = sum(lambda) + dots of the diagram
  int d_statistic() const;    // d = sum(lambda)

  std::string to_string() const;  // "1,2,0,3,0|0;1;1,2;0,1,3"
  static PairedDiagram parse(std::string_view text);

  friend bool operator==(const PairedDiagram&, const PairedDiagram&) = default;
  friend auto operator<=>(const PairedDiagram&, const PairedDiagram&) = default;

 private:
  Composition lambda_;
  FishburnDiagram diagram_;
};

// Stream/collect all paired diagrams with n total dots and d-statistic d
// (1 <= d <= n), ordered by diagram length, then diagram, then composition.
std::vector<PairedDiagram> all_paired_diagrams(int n, int d, Cap cap = {});

// The composition-aware sign-reversing involution: the surgery of psi applied
// at the minimal violation whose Descent levels are filtered to those with an
// exhausted composition slot, with the composition gaining or losing the
// matching zero part.
PairedDiagram psi_tilde(const PairedDiagram& pair);

// sign = (-1)^((n-d) - k) where k is the diagram's column count — the sign of
// the underlying unpaired diagram; degree = n.
SignedWeight signed_weight(const PairedDiagram& pair);

// Injection of paired diagrams with parameters (n, d) into the n-dot diagrams
// with d-statistic d: lambda becomes runs of maximal-level columns separating
// the original columns, whose members move up into the free squares left by
// the inserted columns.
FishburnDiagram embed_paired(const PairedDiagram& pair);

// Image characterization: every column holding its maximal level i-1 is the
// singleton {i-1}, and level i-2 never reappears in a later column.
bool in_embedded_image(const FishburnDiagram& diagram);

// Inverse of embed_paired on its image; throws std::invalid_argument off it.
PairedDiagram extract_paired(const FishburnDiagram& diagram);

}  // namespace fishburn
