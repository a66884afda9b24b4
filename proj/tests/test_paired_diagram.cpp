#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "fishburn/inversion_table.hpp"
#include "fishburn/paired_diagram.hpp"

using namespace fishburn;

namespace {

// |pairs with parameters (n, d)| for n = 1..6, d = 1..n
const std::vector<std::vector<std::int64_t>> kPairCounts = {
    {1}, {1, 1}, {2, 2, 1}, {7, 6, 3, 1}, {33, 27, 12, 4, 1}, {197, 156, 66, 20, 5, 1}};

// cdf tables with d-statistic d, n = 1..6, d = 1..n
const std::vector<std::vector<std::int64_t>> kCdfByD = {
    {1}, {1, 1}, {2, 2, 1}, {5, 6, 3, 1}, {15, 21, 12, 4, 1}, {53, 84, 54, 20, 5, 1}};

}  // namespace

// ===== text forms =====

TEST_CASE("composition text form") {
  const Composition lambda = Composition::parse("1,2,0,3,0");
  CHECK(lambda.size() == 5);
  CHECK(lambda.sum() == 6);
  CHECK(lambda.to_string() == "1,2,0,3,0");
  CHECK(Composition::parse("4").parts() == std::vector<int>{4});
  CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("0,1"), std::invalid_argument);   // first part zero
  CHECK_THROWS_AS(Composition::parse("1,-1"), std::invalid_argument);  // negative part
}

TEST_CASE("paired diagram text form") {
  const PairedDiagram pair = PairedDiagram::parse("1,2,0,3,0|0;1;1,2;0,1,3");
  CHECK(pair.composition().sum() == 6);
  CHECK(pair.diagram().length() == 4);
  CHECK(pair.dots() == 13);
  CHECK(pair.d_statistic() == 6);
  CHECK(pair.to_string() == "1,2,0,3,0|0;1;1,2;0,1,3");

  const PairedDiagram bare = PairedDiagram::parse("3|");
  CHECK(bare.dots() == 3);
  CHECK(bare.d_statistic() == 3);
  CHECK(bare.diagram().length() == 0);
  CHECK(bare.to_string() == "3|");

  // the composition needs exactly one more part than the diagram has columns
  CHECK_THROWS_AS(PairedDiagram::parse("1|0"), std::invalid_argument);
  CHECK_THROWS_AS(PairedDiagram::parse("1,0,0|0"), std::invalid_argument);
  CHECK_NOTHROW(PairedDiagram::parse("1,0|0"));
  CHECK_THROWS_AS(PairedDiagram::parse("no separator"), std::invalid_argument);
}

// ===== enumeration =====

TEST_CASE("paired diagram counts by (n, d)") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto pairs = all_paired_diagrams(n, d);
      CHECK(static_cast<std::int64_t>(pairs.size()) == kPairCounts[n - 1][d - 1]);
      std::set<std::string> texts;
      for (const auto& pair : pairs) {
        CHECK(pair.dots() == n);
        CHECK(pair.d_statistic() == d);
        texts.insert(pair.to_string());
      }
      CHECK(static_cast<std::int64_t>(texts.size()) == kPairCounts[n - 1][d - 1]);
    }
  }
}

TEST_CASE("paired diagrams for three dots with d = 2, in order") {
  const auto pairs = all_paired_diagrams(3, 2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].to_string() == "1,1|0");
  CHECK(pairs[1].to_string() == "2,0|0");
}

TEST_CASE("paired diagram enumeration validates and caps") {
  CHECK_THROWS_AS(all_paired_diagrams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(all_paired_diagrams(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(all_paired_diagrams(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(all_paired_diagrams(8, 1, Cap{1000}), CapExceeded);
}

// ===== the refined involution =====

TEST_CASE("psi tilde on the worked example, both directions") {
  const PairedDiagram before = PairedDiagram::parse("1,1,2,0,1|0;0;0,1;0");
  const PairedDiagram after = PairedDiagram::parse("1,0,1,2,0,1|0;0;1;0;1");
  CHECK(psi_tilde(before) == after);
  CHECK(psi_tilde(after) == before);
}

TEST_CASE("psi tilde fixes a pair whose descent slot is blocked") {
  // the underlying diagram has a descent at level 1, but the composition part
  // behind it is nonzero, so the pair is fixed
  const PairedDiagram pair = PairedDiagram::parse("1,0,1,2,0,1|0;0;2;0;1");
  CHECK(minimal_violation(pair.diagram()).has_value());
  CHECK(psi_tilde(pair) == pair);
}

TEST_CASE("psi tilde fixes the bare pairs") {
  for (int d = 1; d <= 4; ++d) {
    const PairedDiagram pair(Composition({d}), FishburnDiagram());
    CHECK(psi_tilde(pair) == pair);
  }
}

TEST_CASE("paired signed weight") {
  // sign depends on dots outside the composition versus column count
  CHECK(signed_weight(PairedDiagram::parse("1,1,2,0,1|0;0;0,1;0")) == SignedWeight{-1, 10});
  CHECK(signed_weight(PairedDiagram::parse("1,0,1,2,0,1|0;0;1;0;1")) == SignedWeight{1, 10});
  CHECK(signed_weight(PairedDiagram::parse("3|")) == SignedWeight{1, 3});
}

TEST_CASE("psi tilde is a statistics-preserving involution") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      std::int64_t fixed = 0;
      std::int64_t signed_sum = 0;
      for (const auto& pair : all_paired_diagrams(n, d)) {
        const PairedDiagram image = psi_tilde(pair);
        CHECK(psi_tilde(image) == pair);
        CHECK(image.dots() == n);
        CHECK(image.d_statistic() == d);
        signed_sum += signed_weight(pair).sign;
        if (image == pair) {
          ++fixed;
        } else {
          CHECK(signed_weight(image).sign == -signed_weight(pair).sign);
        }
      }
      CHECK(fixed == kCdfByD[n - 1][d - 1]);
      CHECK(signed_sum == fixed);
    }
  }
}

// ===== embedding =====

TEST_CASE("embedding worked example") {
  const FishburnDiagram image = embed_paired(PairedDiagram::parse("1,2,0,3,0|0;1;1,2;0,1,3"));
  CHECK(image.to_string() == "0;0;2;3;3;3,4;6;7;8;0,3,8");
}

TEST_CASE("embedding bare pairs gives staircases") {
  CHECK(embed_paired(PairedDiagram::parse("1|")).to_string() == "0");
  CHECK(embed_paired(PairedDiagram::parse("2|")).to_string() == "0;1");
  CHECK(embed_paired(PairedDiagram::parse("3|")).to_string() == "0;1;2");
}

TEST_CASE("image characterization and extraction") {
  const PairedDiagram pair = PairedDiagram::parse("1,1,2,0,1|0;0;0,1;0");
  const FishburnDiagram image = embed_paired(pair);
  CHECK(image.to_string() == "0;0;2;0;4;5;0,2;0;8");
  CHECK(in_embedded_image(image));
  CHECK(extract_paired(image) == pair);

  // applying the unrefined involution leaves the image set
  const FishburnDiagram moved = psi(image);
  CHECK(moved.to_string() == "0;0;2;0;4;1;6;0;1;9");
  CHECK(!in_embedded_image(moved));
  CHECK_THROWS_AS(extract_paired(moved), std::invalid_argument);

  CHECK(!in_embedded_image(FishburnDiagram::parse("0;0,1")));
  CHECK_THROWS_AS(extract_paired(FishburnDiagram::parse("0;0,1")), std::invalid_argument);
}

TEST_CASE("embedding preserves statistics and round-trips") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= n; ++d) {
      std::set<std::string> images;
      for (const auto& pair : all_paired_diagrams(n, d)) {
        const FishburnDiagram image = embed_paired(pair);
        CHECK(image.dots() == n);
        CHECK(d_statistic(image) == d);
        CHECK(signed_weight(image).sign == signed_weight(pair).sign);
        CHECK(in_embedded_image(image));
        CHECK(extract_paired(image) == pair);
        images.insert(image.to_string());
      }
      // injective, and exactly the characterized subset of the n-dot diagrams
      CHECK(images.size() == all_paired_diagrams(n, d).size());
      std::set<std::string> characterized;
      for_each_diagram(n, [&](const FishburnDiagram& diagram) {
        if (d_statistic(diagram) == d && in_embedded_image(diagram))
          characterized.insert(diagram.to_string());
      });
      CHECK(images == characterized);
    }
  }
}
