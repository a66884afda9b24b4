#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fishburn/checked.hpp"
#include "fishburn/inversion_table.hpp"

using namespace fishburn;

namespace {

// |T_n| for n = 0..8 (the Fishburn numbers)
constexpr std::int64_t kCdfCounts[] = {1, 1, 2, 5, 15, 53, 217, 1014, 5335};

}  // namespace

// ===== text form =====

TEST_CASE("inversion table text form round-trips") {
  const InversionTable table = InversionTable::parse("00214");
  CHECK(table.entries() == std::vector<int>{0, 0, 2, 1, 4});
  CHECK(table.to_string() == "00214");
  CHECK(InversionTable::parse("0,0,2,1,4") == table);  // comma form always accepted
  CHECK(InversionTable().to_string() == "");
  CHECK(InversionTable::parse("") == InversionTable());
}

TEST_CASE("large entries force the comma form") {
  std::vector<int> entries(11, 0);
  entries[10] = 10;
  const InversionTable table{entries};
  CHECK(table.to_string() == "0,0,0,0,0,0,0,0,0,0,10");
  CHECK(InversionTable::parse(table.to_string()) == table);
}

TEST_CASE("inversion table validation") {
  CHECK_THROWS_AS(InversionTable::parse("1"), std::invalid_argument);   // a_1 must be 0
  CHECK_THROWS_AS(InversionTable::parse("03"), std::invalid_argument);  // a_2 <= 1
  CHECK_THROWS_AS(InversionTable::parse("0x"), std::invalid_argument);
  CHECK_THROWS_AS(InversionTable::parse("0,-1"), std::invalid_argument);
  CHECK_THROWS_AS(InversionTable::parse("0,,1"), std::invalid_argument);
}

// ===== statistics =====

TEST_CASE("is_cdf spots decreasing consecutive pairs") {
  CHECK(is_cdf(InversionTable::parse("0")));
  CHECK(is_cdf(InversionTable()));
  CHECK(is_cdf(InversionTable::parse("011")));
  CHECK(!is_cdf(InversionTable::parse("010")));   // 1 then 0
  CHECK(!is_cdf(InversionTable::parse("0120")));  // 1 before the final 0
  CHECK(is_cdf(InversionTable::parse("0022")));
}

TEST_CASE("d_statistic counts maximal entries") {
  CHECK(d_statistic(InversionTable::parse("012")) == 3);
  CHECK(d_statistic(InversionTable::parse("000")) == 1);
  CHECK(d_statistic(InversionTable::parse("001")) == 1);
  CHECK(d_statistic(InversionTable::parse("00214")) == 3);  // positions 1, 3, 5
  CHECK(d_statistic(InversionTable()) == 0);
}

// ===== enumeration =====

TEST_CASE("cdf tables of length 3, in lexicographic order") {
  const auto tables = cdf_tables(3);
  REQUIRE(tables.size() == 5);
  CHECK(tables[0].to_string() == "000");
  CHECK(tables[1].to_string() == "001");
  CHECK(tables[2].to_string() == "002");
  CHECK(tables[3].to_string() == "011");
  CHECK(tables[4].to_string() == "012");
}

TEST_CASE("cdf table counts match the Fishburn numbers") {
  for (int n = 0; n <= 7; ++n)
    CHECK(static_cast<std::int64_t>(cdf_tables(n).size()) == kCdfCounts[n]);
}

TEST_CASE("cdf tables split by d-statistic") {
  // row n = 4 of the refinement
  const std::int64_t expected[] = {5, 6, 3, 1};
  std::int64_t total = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto tables = cdf_tables(4, d);
    for (const auto& table : tables) CHECK(d_statistic(table) == d);
    CHECK(static_cast<std::int64_t>(tables.size()) == expected[d - 1]);
    total += static_cast<std::int64_t>(tables.size());
  }
  CHECK(total == kCdfCounts[4]);
  CHECK_THROWS_AS(cdf_tables(4, 5), std::invalid_argument);
}

TEST_CASE("all inversion tables enumerate n! in lexicographic order") {
  const auto tables = all_inversion_tables(4);
  CHECK(static_cast<std::int64_t>(tables.size()) == checked_factorial(4));
  CHECK(tables.front().to_string() == "0000");
  CHECK(tables.back().to_string() == "0123");
  for (size_t i = 1; i < tables.size(); ++i) CHECK(tables[i - 1] < tables[i]);
}

TEST_CASE("table enumeration respects the cap") {
  CHECK_THROWS_AS(cdf_tables(5, std::nullopt, Cap{10}), CapExceeded);
  CHECK_THROWS_AS(all_inversion_tables(5, std::nullopt, Cap{10}), CapExceeded);
}

// ===== the bijection =====

TEST_CASE("phi on small matchings") {
  CHECK(phi(Matching::parse("(1,3)(2,4)")).to_string() == "00");
  CHECK(phi(Matching::parse("(1,2)(3,4)")).to_string() == "01");
  CHECK(phi(Matching::parse("(1,2)")).to_string() == "0");
  CHECK(phi(Matching()).to_string() == "");
  // a left-nesting makes phi undefined
  CHECK_THROWS_AS(phi(Matching::parse("(1,4)(2,3)")), std::invalid_argument);
  CHECK_THROWS_AS(phi(Matching::parse("(1,4)(2,9)(3,6)(5,10)(7,8)")), std::invalid_argument);
}

TEST_CASE("phi_inverse on small tables") {
  CHECK(phi_inverse(InversionTable::parse("00")).to_string() == "(1,3)(2,4)");
  CHECK(phi_inverse(InversionTable::parse("01")).to_string() == "(1,2)(3,4)");
  CHECK(phi_inverse(InversionTable()) == Matching());
}

TEST_CASE("phi round-trips in both directions") {
  const NestingKind left = NestingKind::left();
  for (int n = 0; n <= 5; ++n) {
    for (const Matching& x : left_nesting_free_matchings(n)) {
      const InversionTable table = phi(x);
      CHECK(count_nestings(x, left) == 0);
      CHECK(phi_inverse(table) == x);
    }
    for (const InversionTable& table : all_inversion_tables(n))
      CHECK(phi(phi_inverse(table)) == table);
  }
}

TEST_CASE("cdf tables correspond to 2-nesting-free matchings") {
  const NestingKind two = NestingKind::k_nesting(2);
  for (int n = 0; n <= 5; ++n)
    for (const Matching& x : left_nesting_free_matchings(n))
      CHECK(is_cdf(phi(x)) == (count_nestings(x, two) == 0));
}

TEST_CASE("the five tables with a common arc-deleted matching") {
  // 00214, 00213, ..., 00210 all extend the same matching on [8]: they are
  // pairwise distinct, left-nesting-free, and deleting the rightmost-closing
  // arc sends all five to phi_inverse(0021)
  const Matching core = phi_inverse(InversionTable::parse("0021"));
  std::set<std::string> seen;
  for (int last = 0; last <= 4; ++last) {
    std::vector<int> entries{0, 0, 2, 1, last};
    const InversionTable table{entries};
    const Matching x = phi_inverse(table);
    CHECK(count_nestings(x, NestingKind::left()) == 0);
    CHECK(phi(x) == table);
    CHECK(remove_rightmost_arc(x) == core);
    seen.insert(x.to_string());
  }
  CHECK(seen.size() == 5);
}
