#include "fishburn/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fishburn/checked.hpp"
#include "fishburn/diagram.hpp"
#include "fishburn/inversion_table.hpp"
#include "fishburn/matching.hpp"
#include "fishburn/paired_diagram.hpp"
#include "fishburn/sequences.hpp"
#include "fishburn/series.hpp"

namespace fishburn {

namespace {

constexpr size_t kMaxReportedFailures = 25;

struct Checker {
  SuiteResult result;

  Checker(std::string suite, int n_max) {
    result.suite = std::move(suite);
    result.n_max = n_max;
    if (n_max < 1) throw std::invalid_argument(result.suite + ": n_max must be >= 1");
  }

  void require(bool ok, const std::string& description) {
    if (ok) return;
    result.pass = false;
    if (result.failures.size() < kMaxReportedFailures)
      result.failures.push_back(description);
  }

  void note(std::string text) { result.notes.push_back(std::move(text)); }
};

// All inversion tables of length n (an odometer over 0..i-1 per position).
void for_each_inversion_table(int n, Cap cap,
                              const std::function<void(const InversionTable&)>& visit) {
  require_within_cap(static_cast<std::uint64_t>(checked_factorial(n)), cap,
                     "inversion tables of length " + std::to_string(n));
  std::vector<int> entries(static_cast<size_t>(n), 0);
  while (true) {
    visit(InversionTable(entries));
    int position = n - 1;
    while (position >= 0 && entries[static_cast<size_t>(position)] == position) {
      entries[static_cast<size_t>(position)] = 0;
      --position;
    }
    if (position < 0) return;
    ++entries[static_cast<size_t>(position)];
  }
}

std::string at_n(int n) { return "n=" + std::to_string(n); }

}  // namespace

SuiteResult verify_involution(int n_max, Cap cap) {
  Checker checker("involution", n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t total = 0;
    std::int64_t fixed = 0;
    std::int64_t signed_sum = 0;
    for_each_diagram(
        n,
        [&](const FishburnDiagram& diagram) {
          ++total;
          ++checker.result.instances;
          const FishburnDiagram image = psi(diagram);
          checker.require(psi(image) == diagram,
                          at_n(n) + ": psi(psi(D)) != D for D=" + diagram.to_string());
          checker.require(image.dots() == n,
                          at_n(n) + ": psi changed the dot count of " + diagram.to_string());
          checker.require(d_statistic(image) == d_statistic(diagram),
                          at_n(n) + ": psi changed the d-statistic of " + diagram.to_string());
          const auto sign = signed_weight(diagram).sign;
          signed_sum += sign;
          if (image == diagram) {
            ++fixed;
            checker.require(sign == 1, at_n(n) + ": fixed point with negative sign: " +
                                           diagram.to_string());
          } else {
            const int delta = image.length() - diagram.length();
            checker.require(delta == 1 || delta == -1,
                            at_n(n) + ": psi changed the length by " + std::to_string(delta) +
                                " on " + diagram.to_string());
            checker.require(signed_weight(image).sign == -sign,
                            at_n(n) + ": psi failed to flip the sign of " + diagram.to_string());
            const auto before = minimal_violation(diagram);
            const auto after = minimal_violation(image);
            checker.require(before && after && before->level == after->level,
                            at_n(n) + ": psi changed the violation level of " +
                                diagram.to_string());
          }
        },
        std::nullopt, cap);
    const auto tables = cdf_tables(n, std::nullopt, cap);
    checker.require(signed_sum == fixed,
                    at_n(n) + ": signed sum " + std::to_string(signed_sum) +
                        " != fixed-point count " + std::to_string(fixed));
    checker.require(fixed == static_cast<std::int64_t>(tables.size()),
                    at_n(n) + ": " + std::to_string(fixed) + " fixed points vs " +
                        std::to_string(tables.size()) + " cdf tables");
    checker.note(at_n(n) + ": " + std::to_string(total) + " diagrams, " +
                 std::to_string(fixed) + " fixed");
  }
  return checker.result;
}

SuiteResult verify_involution_refined(int n_max, Cap cap) {
  Checker checker("involution-refined", n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t total = 0;
    for (int d = 1; d <= n; ++d) {
      std::int64_t fixed = 0;
      std::int64_t signed_sum = 0;
      const auto pairs = all_paired_diagrams(n, d, cap);
      total += static_cast<std::int64_t>(pairs.size());
      for (const PairedDiagram& pair : pairs) {
        ++checker.result.instances;
        const PairedDiagram image = psi_tilde(pair);
        checker.require(psi_tilde(image) == pair,
                        at_n(n) + ": psi~(psi~(P)) != P for P=" + pair.to_string());
        checker.require(image.dots() == n && image.d_statistic() == d,
                        at_n(n) + ": psi~ changed (n, d) on " + pair.to_string());
        const int sign = signed_weight(pair).sign;
        signed_sum += sign;
        if (image == pair) {
          ++fixed;
          checker.require(sign == 1,
                          at_n(n) + ": fixed pair with negative sign: " + pair.to_string());
        } else {
          const int delta = image.diagram().length() - pair.diagram().length();
          checker.require(delta == 1 || delta == -1,
                          at_n(n) + ": psi~ changed the length by " + std::to_string(delta) +
                              " on " + pair.to_string());
          checker.require(signed_weight(image).sign == -sign,
                          at_n(n) + ": psi~ failed to flip the sign of " + pair.to_string());
        }
      }
      const auto tables = cdf_tables(n, d, cap);
      checker.require(signed_sum == fixed,
                      at_n(n) + " d=" + std::to_string(d) + ": signed sum " +
                          std::to_string(signed_sum) + " != fixed count " +
                          std::to_string(fixed));
      checker.require(fixed == static_cast<std::int64_t>(tables.size()),
                      at_n(n) + " d=" + std::to_string(d) + ": " + std::to_string(fixed) +
                          " fixed pairs vs " + std::to_string(tables.size()) + " cdf tables");
    }
    checker.note(at_n(n) + ": " + std::to_string(total) + " paired diagrams across d=1.." +
                 std::to_string(n));
  }
  return checker.result;
}

SuiteResult verify_phi_roundtrip(int n_max, Cap cap) {
  Checker checker("phi-roundtrip", n_max);
  const NestingKind two_nesting = NestingKind::k_nesting(2);
  for (int n = 1; n <= n_max; ++n) {
    const auto lnf = left_nesting_free_matchings(n, cap);
    checker.require(static_cast<std::int64_t>(lnf.size()) == checked_factorial(n),
                    at_n(n) + ": expected n! left-nesting-free matchings, got " +
                        std::to_string(lnf.size()));
    std::set<std::string> images;
    std::int64_t cdf_image_count = 0;
    for (const Matching& x : lnf) {
      ++checker.result.instances;
      const InversionTable table = phi(x);
      checker.require(phi_inverse(table) == x,
                      at_n(n) + ": phi_inverse(phi(X)) != X for X=" + x.to_string());
      images.insert(table.to_string());
      const bool table_cdf = is_cdf(table);
      if (table_cdf) ++cdf_image_count;
      checker.require(table_cdf == (count_nestings(x, two_nesting) == 0),
                      at_n(n) + ": cdf/2-nesting-free mismatch at X=" + x.to_string());
    }
    checker.require(images.size() == lnf.size(),
                    at_n(n) + ": phi is not injective on the left-nesting-free matchings");
    std::int64_t tables_total = 0;
    for_each_inversion_table(n, cap, [&](const InversionTable& table) {
      ++tables_total;
      ++checker.result.instances;
      checker.require(phi(phi_inverse(table)) == table,
                      at_n(n) + ": phi(phi_inverse(T)) != T for T=" + table.to_string());
    });
    checker.require(tables_total == static_cast<std::int64_t>(images.size()),
                    at_n(n) + ": phi does not reach every inversion table");
    checker.note(at_n(n) + ": " + std::to_string(lnf.size()) + " matchings round-tripped, " +
                 std::to_string(cdf_image_count) + " cdf images");
  }
  return checker.result;
}

SuiteResult verify_series_identity(int n_max, Cap cap) {
  Checker checker("identity-eq1", n_max);
  const TruncatedPolynomial series = fishburn_series(n_max);
  checker.require(series.coefficient(0, 0) == 1, "constant term of the series is not 1");
  // Matchings are the most expensive route; (2*8-1)!! already saturates the
  // default cap, so this leg stops at n = 7 regardless of n_max.
  const int matching_limit = std::min(n_max, 7);
  const NestingKind two_nesting = NestingKind::k_nesting(2);
  const NestingKind neighbor = NestingKind::neighbor();
  for (int n = 1; n <= n_max; ++n) {
    const std::int64_t expected = series.coefficient(n, 0);

    const auto tables = cdf_tables(n, std::nullopt, cap);
    checker.result.instances += static_cast<std::int64_t>(tables.size());
    checker.require(static_cast<std::int64_t>(tables.size()) == expected,
                    at_n(n) + ": cdf tables " + std::to_string(tables.size()) + " vs t^" +
                        std::to_string(n) + " coefficient " + std::to_string(expected));

    std::int64_t fixed = 0;
    std::int64_t signed_sum = 0;
    for_each_diagram(
        n,
        [&](const FishburnDiagram& diagram) {
          ++checker.result.instances;
          signed_sum += signed_weight(diagram).sign;
          if (psi(diagram) == diagram) ++fixed;
        },
        std::nullopt, cap);
    checker.require(fixed == expected, at_n(n) + ": involution fixed points " +
                                           std::to_string(fixed) + " vs coefficient " +
                                           std::to_string(expected));
    checker.require(signed_sum == expected, at_n(n) + ": signed diagram sum " +
                                                std::to_string(signed_sum) +
                                                " vs coefficient " + std::to_string(expected));

    const auto ascents = ascent_sequences(n, cap);
    checker.result.instances += static_cast<std::int64_t>(ascents.size());
    checker.require(static_cast<std::int64_t>(ascents.size()) == expected,
                    at_n(n) + ": ascent sequences " + std::to_string(ascents.size()) +
                        " vs coefficient " + std::to_string(expected));

    const auto perms = fishburn_permutations(n, cap);
    checker.result.instances += static_cast<std::int64_t>(perms.size());
    checker.require(static_cast<std::int64_t>(perms.size()) == expected,
                    at_n(n) + ": pattern-avoiding permutations " + std::to_string(perms.size()) +
                        " vs coefficient " + std::to_string(expected));

    if (n <= matching_limit) {
      std::int64_t no_two = 0;
      std::int64_t no_neighbor = 0;
      for_each_matching(
          n,
          [&](const Matching& x) {
            ++checker.result.instances;
            if (count_nestings(x, two_nesting) == 0) ++no_two;
            if (count_nestings(x, neighbor) == 0) ++no_neighbor;
          },
          cap);
      checker.require(no_two == expected, at_n(n) + ": 2-nesting-free matchings " +
                                              std::to_string(no_two) + " vs coefficient " +
                                              std::to_string(expected));
      checker.require(no_neighbor == expected,
                      at_n(n) + ": neighbor-nesting-free matchings " +
                          std::to_string(no_neighbor) + " vs coefficient " +
                          std::to_string(expected));
    }
    checker.note(at_n(n) + ": coefficient " + std::to_string(expected) + " confirmed by " +
                 (n <= matching_limit ? std::string("7") : std::string("5")) +
                 " other routes");
  }
  return checker.result;
}

SuiteResult verify_refined_identity(int n_max, Cap cap) {
  Checker checker("identity-eq7-eq8", n_max);
  const TruncatedPolynomial simple = refined_series_simple(n_max);
  const TruncatedPolynomial rk = refined_series_rk(n_max);
  const TruncatedPolynomial univariate = fishburn_series(n_max);
  checker.require(simple == rk, "the two refined series disagree as polynomials");
  checker.require(simple.substitute_z_one() == univariate,
                  "the refined series does not collapse to the univariate series at z=1");
  for (const auto& [degrees, value] : rk.terms()) {
    (void)value;
    checker.require(degrees.second <= degrees.first,
                    "term t^" + std::to_string(degrees.first) + " z^" +
                        std::to_string(degrees.second) + " has z-degree above t-degree");
  }
  for (int n = 1; n <= n_max; ++n) {
    // zeros statistic over ascent sequences, gathered once per n
    std::map<int, std::int64_t> zeros_counts;
    for (const auto& sequence : ascent_sequences(n, cap)) ++zeros_counts[zeros_statistic(sequence)];
    std::int64_t slice_total = 0;
    for (int d = 1; d <= n; ++d) {
      const std::int64_t expected = rk.coefficient(n, d);
      slice_total += expected;

      const auto tables = cdf_tables(n, d, cap);
      checker.result.instances += static_cast<std::int64_t>(tables.size());
      checker.require(static_cast<std::int64_t>(tables.size()) == expected,
                      at_n(n) + " d=" + std::to_string(d) + ": cdf tables " +
                          std::to_string(tables.size()) + " vs coefficient " +
                          std::to_string(expected));

      checker.require(zeros_counts[d] == expected,
                      at_n(n) + " d=" + std::to_string(d) + ": ascent sequences with " +
                          std::to_string(d) + " zeros " + std::to_string(zeros_counts[d]) +
                          " vs coefficient " + std::to_string(expected));

      std::int64_t fixed = 0;
      std::int64_t signed_sum = 0;
      for (const PairedDiagram& pair : all_paired_diagrams(n, d, cap)) {
        ++checker.result.instances;
        signed_sum += signed_weight(pair).sign;
        if (psi_tilde(pair) == pair) ++fixed;
      }
      checker.require(fixed == expected,
                      at_n(n) + " d=" + std::to_string(d) + ": refined fixed points " +
                          std::to_string(fixed) + " vs coefficient " + std::to_string(expected));
      checker.require(signed_sum == expected,
                      at_n(n) + " d=" + std::to_string(d) + ": signed paired sum " +
                          std::to_string(signed_sum) + " vs coefficient " +
                          std::to_string(expected));
    }
    checker.require(rk.coefficient(n, 0) == 0,
                    at_n(n) + ": unexpected z-free term in the refined series");
    checker.require(slice_total == univariate.coefficient(n, 0),
                    at_n(n) + ": slice total " + std::to_string(slice_total) +
                        " != univariate coefficient");
    checker.note(at_n(n) + ": slice total " + std::to_string(slice_total) + " across d=1.." +
                 std::to_string(n));
  }
  return checker.result;
}

SuiteResult verify_embedding(int n_max, Cap cap) {
  Checker checker("embedding", n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t embedded_total = 0;
    for (int d = 1; d <= n; ++d) {
      const auto pairs = all_paired_diagrams(n, d, cap);
      std::set<std::string> images;
      for (const PairedDiagram& pair : pairs) {
        ++checker.result.instances;
        const FishburnDiagram image = embed_paired(pair);
        checker.require(image.dots() == n && d_statistic(image) == d,
                        at_n(n) + ": embedding changed (n, d) on " + pair.to_string());
        checker.require(in_embedded_image(image),
                        at_n(n) + ": embedded diagram fails its own image test: " +
                            pair.to_string());
        checker.require(extract_paired(image) == pair,
                        at_n(n) + ": extract(embed(P)) != P for P=" + pair.to_string());
        checker.require(signed_weight(image).sign == signed_weight(pair).sign,
                        at_n(n) + ": embedding changed the sign of " + pair.to_string());
        const bool pair_fixed = psi_tilde(pair) == pair;
        const bool image_fixed = psi(image) == image;
        checker.require(pair_fixed == image_fixed,
                        at_n(n) + ": fixed-point mismatch across the embedding at " +
                            pair.to_string());
        images.insert(image.to_string());
      }
      checker.require(images.size() == pairs.size(),
                      at_n(n) + " d=" + std::to_string(d) + ": embedding is not injective");
      // the characterized image, checked against the actual one
      std::int64_t characterized = 0;
      for_each_diagram(
          n,
          [&](const FishburnDiagram& diagram) {
            ++checker.result.instances;
            const bool claimed = in_embedded_image(diagram);
            if (claimed) ++characterized;
            checker.require(claimed == (images.count(diagram.to_string()) > 0),
                            at_n(n) + ": image characterization disagrees at " +
                                diagram.to_string());
          },
          d, cap);
      checker.require(characterized == static_cast<std::int64_t>(pairs.size()),
                      at_n(n) + " d=" + std::to_string(d) + ": characterized image size " +
                          std::to_string(characterized) + " vs " +
                          std::to_string(pairs.size()) + " pairs");
      embedded_total += static_cast<std::int64_t>(pairs.size());
    }
    checker.note(at_n(n) + ": " + std::to_string(embedded_total) +
                 " pairs embedded and recovered");
  }
  // Applying the unrefined involution to an embedded pair can leave the
  // image: the composition-aware map is a genuinely different involution,
  // not a conjugate of the plain one.
  {
    const PairedDiagram pair = PairedDiagram::parse("1,1,2,0,1|0;0;0,1;0");
    const FishburnDiagram pushed = psi(embed_paired(pair));
    checker.require(!in_embedded_image(pushed),
                    "expected psi to push the reference embedded pair off the image");
  }
  return checker.result;
}

SuiteResult verify_eulerian(int n_max, Cap cap) {
  Checker checker("eulerian", n_max);
  const TriangleTable recurrence =
      left_nesting_triangle(n_max, DistributionMethod::Recurrence, cap);
  const TriangleTable eulerian = second_order_eulerian(n_max);
  const int exhaustive_limit = std::min(n_max, 7);
  for (int n = 1; n <= n_max; ++n) {
    const auto& row = recurrence.rows[static_cast<size_t>(n - 1)];
    std::int64_t row_sum = 0;
    for (std::int64_t value : row) row_sum = checked_add(row_sum, value);
    checker.require(row_sum == odd_double_factorial(n),
                    at_n(n) + ": distribution row sums to " + std::to_string(row_sum) +
                        ", not (2n-1)!!");
    checker.require(row.front() == checked_factorial(n),
                    at_n(n) + ": left-nesting-free count " + std::to_string(row.front()) +
                        " != n!");
    const auto& eulerian_row = eulerian.rows[static_cast<size_t>(n - 1)];
    for (int k = 1; k <= n; ++k)
      checker.require(row[static_cast<size_t>(n - k)] == eulerian_row[static_cast<size_t>(k - 1)],
                      at_n(n) + ": L(n," + std::to_string(n - k) + ") != T(n," +
                          std::to_string(k) + ")");
    if (n <= exhaustive_limit) {
      const auto exhaustive =
          left_nesting_distribution(n, DistributionMethod::Exhaustive, cap);
      checker.result.instances += odd_double_factorial(n);
      checker.require(exhaustive == row,
                      at_n(n) + ": exhaustive distribution disagrees with the recurrence");
    }
    checker.note(at_n(n) + ": row sum " + std::to_string(row_sum) +
                 (n <= exhaustive_limit ? ", checked exhaustively" : ", recurrence only"));
  }
  return checker.result;
}

SuiteResult verify_insertion_cases(int n_max, Cap cap) {
  Checker checker("insertion-cases", n_max);
  const NestingKind left = NestingKind::left();
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t matchings = 0;
    for_each_matching(
        n - 1,
        [&](const Matching& x) {
          ++matchings;
          const int j = count_nestings(x, left);
          int preserving = 0;
          int incrementing = 0;
          for (int slot = 1; slot <= 2 * n - 1; ++slot) {
            ++checker.result.instances;
            const Matching grown = insert_rightmost_arc(x, slot);
            checker.require(remove_rightmost_arc(grown) == x,
                            at_n(n) + ": insertion round-trip failed at slot " +
                                std::to_string(slot) + " of " + x.to_string());
            const int delta = count_nestings(grown, left) - j;
            const InsertionCase kind = classify_insertion(x, slot);
            if (kind == InsertionCase::BeforeFreeLeftEndpoint) {
              ++incrementing;
              checker.require(delta == 1, at_n(n) + ": free-opener slot " +
                                              std::to_string(slot) + " of " + x.to_string() +
                                              " changed the count by " + std::to_string(delta));
            } else {
              ++preserving;
              checker.require(delta == 0, at_n(n) + ": preserving slot " +
                                              std::to_string(slot) + " of " + x.to_string() +
                                              " changed the count by " + std::to_string(delta));
            }
          }
          checker.require(preserving == n + j,
                          at_n(n) + ": expected " + std::to_string(n + j) +
                              " preserving slots on " + x.to_string() + ", found " +
                              std::to_string(preserving));
          checker.require(incrementing == n - 1 - j,
                          at_n(n) + ": expected " + std::to_string(n - 1 - j) +
                              " incrementing slots on " + x.to_string() + ", found " +
                              std::to_string(incrementing));
        },
        cap);
    checker.note(at_n(n) + ": " + std::to_string(matchings) + " matchings, " +
                 std::to_string(2 * n - 1) + " slots each");
  }
  return checker.result;
}

std::vector<std::string> suite_names() {
  return {"involution", "involution-refined", "phi-roundtrip",  "identity-eq1",
          "identity-eq7-eq8", "embedding", "eulerian", "insertion-cases"};
}

SuiteResult run_suite(std::string_view name, int n_max, Cap cap) {
  if (name == "involution") return verify_involution(n_max, cap);
  if (name == "involution-refined") return verify_involution_refined(n_max, cap);
  if (name == "phi-roundtrip") return verify_phi_roundtrip(n_max, cap);
  if (name == "identity-eq1") return verify_series_identity(n_max, cap);
  if (name == "identity-eq7-eq8") return verify_refined_identity(n_max, cap);
  if (name == "embedding") return verify_embedding(n_max, cap);
  if (name == "eulerian") return verify_eulerian(n_max, cap);
  if (name == "insertion-cases") return verify_insertion_cases(n_max, cap);
  throw std::invalid_argument("unknown verification suite \"" + std::string(name) + "\"");
}

}  // namespace fishburn
