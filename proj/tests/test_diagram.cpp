#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "fishburn/diagram.hpp"

using namespace fishburn;

namespace {

// |Y_n| for n = 1..8
constexpr std::int64_t kDiagramCounts[] = {1, 2, 7, 33, 197, 1419, 11966, 115575};

// the worked split/merge example: an 8-column diagram and its image
const char* const kWiden = "0;0;2;2,3;0;1,3,5;1,3,5,6;2,4,6";
const char* const kWidened = "0;0;2;2,3;2,4;0;1;2,4,6,7;3,5,7";

}  // namespace

// ===== text form =====

TEST_CASE("diagram text form round-trips") {
  const FishburnDiagram diagram = FishburnDiagram::parse("0;1;0,2;0,1,2");
  CHECK(diagram.length() == 4);
  CHECK(diagram.dots() == 7);
  CHECK(diagram.to_string() == "0;1;0,2;0,1,2");
  CHECK(FishburnDiagram::parse("0;1;2,0;2,1,0") == diagram);  // members sort
  CHECK(FishburnDiagram().to_string() == "");
  CHECK(FishburnDiagram::parse("") == FishburnDiagram());
  CHECK(FishburnDiagram::parse(" 0 ; 1 ") == FishburnDiagram::parse("0;1"));
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(FishburnDiagram::parse("1"), std::invalid_argument);      // level >= index
  CHECK_THROWS_AS(FishburnDiagram::parse("0;2"), std::invalid_argument);    // level 2 in column 2
  CHECK_THROWS_AS(FishburnDiagram::parse("0;;0"), std::invalid_argument);   // empty column
  CHECK_THROWS_AS(FishburnDiagram::parse("0;0,0"), std::invalid_argument);  // repeated level
  CHECK_THROWS_AS(FishburnDiagram::parse("0;-1"), std::invalid_argument);
}

// ===== statistics =====

TEST_CASE("signed weight") {
  CHECK(signed_weight(FishburnDiagram::parse("0;1;0,2;0,1,2")) == SignedWeight{-1, 7});
  CHECK(signed_weight(FishburnDiagram::parse("0;1;2")) == SignedWeight{1, 3});
  CHECK(signed_weight(FishburnDiagram::parse("0;0,1")) == SignedWeight{-1, 3});
  CHECK(signed_weight(FishburnDiagram::parse("0")) == SignedWeight{1, 1});
}

TEST_CASE("diagram d-statistic counts maximal-level columns") {
  CHECK(d_statistic(FishburnDiagram::parse("0;1;0,2;0,1,2")) == 3);
  CHECK(d_statistic(FishburnDiagram::parse("0;0;2")) == 2);
  CHECK(d_statistic(FishburnDiagram::parse("0;0;0")) == 1);
}

// ===== enumeration =====

TEST_CASE("diagrams with two dots, in order") {
  const auto diagrams = all_diagrams(2);
  REQUIRE(diagrams.size() == 2);
  CHECK(diagrams[0].to_string() == "0;0");
  CHECK(diagrams[1].to_string() == "0;1");
}

TEST_CASE("diagrams with three dots") {
  const auto diagrams = all_diagrams(3);
  REQUIRE(diagrams.size() == 7);
  std::set<std::string> texts;
  for (const auto& diagram : diagrams) texts.insert(diagram.to_string());
  // the lone two-column diagram plus the six all-singleton ones
  const std::set<std::string> expected = {"0;0,1", "0;0;0", "0;0;1", "0;0;2",
                                          "0;1;0", "0;1;1", "0;1;2"};
  CHECK(texts == expected);
}

TEST_CASE("diagram counts for n up to 6") {
  for (int n = 1; n <= 6; ++n) {
    std::int64_t count = 0;
    for_each_diagram(n, [&](const FishburnDiagram&) { ++count; });
    CHECK(count == kDiagramCounts[n - 1]);
  }
  CHECK_THROWS_AS(all_diagrams(0), std::invalid_argument);
}

TEST_CASE("diagram enumeration filtered by d-statistic") {
  // row n = 4: |Y_{4,d}| does not cover d... the filter picks diagrams whose
  // d-statistic is exactly d, and the d-values partition the 33 diagrams
  std::int64_t total = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto slice = all_diagrams(4, d);
    for (const auto& diagram : slice) CHECK(d_statistic(diagram) == d);
    total += static_cast<std::int64_t>(slice.size());
  }
  CHECK(total == kDiagramCounts[3]);
  CHECK_THROWS_AS(all_diagrams(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(all_diagrams(4, 5), std::invalid_argument);
}

TEST_CASE("diagram enumeration respects the cap") {
  CHECK_THROWS_AS(all_diagrams(7, std::nullopt, Cap{1000}), CapExceeded);
}

// ===== violations =====

TEST_CASE("minimal violation cases") {
  const auto extra = minimal_violation(FishburnDiagram::parse("0;0,1"));
  REQUIRE(extra.has_value());
  CHECK(extra->kind == Violation::Kind::ExtraDot);
  CHECK(extra->level == 0);
  CHECK(extra->column == 2);
  CHECK(extra->rise == 1);

  const auto descent = minimal_violation(FishburnDiagram::parse("0;1;0"));
  REQUIRE(descent.has_value());
  CHECK(descent->kind == Violation::Kind::Descent);
  CHECK(descent->level == 0);
  CHECK(descent->upper == 2);
  CHECK(descent->lower == 3);

  CHECK(!minimal_violation(FishburnDiagram::parse("0;1;2")));
  CHECK(!minimal_violation(FishburnDiagram::parse("0;0;2")));

  // ExtraDot wins a tie at the same level
  const auto tie = minimal_violation(FishburnDiagram::parse("0;1;0,1;0"));
  REQUIRE(tie.has_value());
  CHECK(tie->kind == Violation::Kind::ExtraDot);
  CHECK(tie->level == 0);
  CHECK(tie->column == 3);
}

TEST_CASE("descent filter can suppress a violation level") {
  const FishburnDiagram diagram = FishburnDiagram::parse("0;1;0");
  CHECK(!minimal_violation(diagram, [](int) { return false; }));
  const auto active = minimal_violation(diagram, [](int level) { return level == 0; });
  REQUIRE(active.has_value());
  CHECK(active->kind == Violation::Kind::Descent);
}

// ===== the involution =====

TEST_CASE("psi on the worked example, both directions") {
  CHECK(psi(FishburnDiagram::parse(kWiden)).to_string() == kWidened);
  CHECK(psi(FishburnDiagram::parse(kWidened)).to_string() == kWiden);
}

TEST_CASE("psi on small diagrams") {
  CHECK(psi(FishburnDiagram::parse("0;0,1")).to_string() == "0;1;0");
  CHECK(psi(FishburnDiagram::parse("0;1;0")).to_string() == "0;0,1");
  CHECK(psi(FishburnDiagram::parse("0;1;2")).to_string() == "0;1;2");  // fixed
  CHECK(psi(FishburnDiagram::parse("0")).to_string() == "0");
}

TEST_CASE("psi is a statistics-preserving involution") {
  for (int n = 1; n <= 6; ++n) {
    std::int64_t fixed = 0;
    std::int64_t signed_sum = 0;
    for_each_diagram(n, [&](const FishburnDiagram& diagram) {
      const FishburnDiagram image = psi(diagram);
      CHECK(psi(image) == diagram);
      CHECK(image.dots() == n);
      CHECK(d_statistic(image) == d_statistic(diagram));
      signed_sum += signed_weight(diagram).sign;
      if (image == diagram) {
        ++fixed;
      } else {
        const int delta = image.length() - diagram.length();
        CHECK((delta == 1 || delta == -1));
        CHECK(signed_weight(image).sign == -signed_weight(diagram).sign);
        CHECK(minimal_violation(image)->level == minimal_violation(diagram)->level);
      }
    });
    CHECK(signed_sum == fixed);
  }
}

// ===== fixed points =====

TEST_CASE("fixed points read off as cdf tables") {
  CHECK(fixed_point_table(FishburnDiagram::parse("0;0;2")).to_string() == "002");
  CHECK(fixed_point_table(FishburnDiagram::parse("0;1;2")).to_string() == "012");
  CHECK_THROWS_AS(fixed_point_table(FishburnDiagram::parse("0;0,1")), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_table(FishburnDiagram::parse("0;1;0")), std::invalid_argument);
}

TEST_CASE("fixed points biject with cdf tables") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> from_diagrams;
    for_each_diagram(n, [&](const FishburnDiagram& diagram) {
      if (psi(diagram) == diagram) {
        const InversionTable table = fixed_point_table(diagram);
        CHECK(is_cdf(table));
        CHECK(d_statistic(table) == d_statistic(diagram));
        from_diagrams.insert(table.to_string());
      }
    });
    std::set<std::string> from_tables;
    for (const auto& table : cdf_tables(n)) from_tables.insert(table.to_string());
    CHECK(from_diagrams == from_tables);
  }
}
