#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swapcodes/asymptotics.hpp"
#include "swapcodes/errors.hpp"
#include "swapcodes/metric.hpp"
#include "swapcodes/zero_error.hpp"

using namespace swapcodes;

TEST_CASE("alphabet partitions parse and validate") {
  const AlphabetPartition partition = AlphabetPartition::parse(4, "0,1|2,3");
  CHECK(partition.class_of(0) == 0);
  CHECK(partition.class_of(3) == 1);
  CHECK(AlphabetPartition::halves(5).class0() == std::vector<int>({0, 1}));
  CHECK_THROWS_AS(AlphabetPartition::parse(3, "0,1|1,2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlphabetPartition::parse(3, "0|1"), std::invalid_argument);
  CHECK_THROWS_AS(AlphabetPartition::parse(2, "0,1|"), std::invalid_argument);
}

TEST_CASE("the length-6 binary codebook is exactly the frozen list") {
  const ZeroErrorCodebook book(6, AlphabetPartition::halves(2));
  std::set<std::string> got;
  for (const QaryString& w : book.enumerate()) got.insert(w.to_string());
  std::set<std::string> expected(oracles::kZeroErrorLength6.begin(),
                                 oracles::kZeroErrorLength6.end());
  CHECK(got == expected);
  CHECK(book.contains(QaryString::parse(2, "0,0,0,1,1,1")));
  CHECK(!book.contains(QaryString::parse(2, "0,1,0,1,0,1")));
}

TEST_CASE("codeword counts follow the frozen table") {
  for (const auto& [n, expected] : oracles::kZeroErrorBinaryCounts)
    CHECK(count_codewords(1, 1, n) == expected);
  CHECK(count_codewords(1, 2, 9) == oracles::kZeroErrorTernaryN9);
  CHECK(count_codewords(2, 2, 15) == oracles::kZeroErrorQuaternaryN15);
}

TEST_CASE("counts match enumeration at small lengths") {
  for (int q : {2, 3, 4}) {
    for (int n = 1; n <= 10; ++n) {
      const ZeroErrorCodebook book(n, AlphabetPartition::halves(q));
      CHECK(book.count() == BigInt(book.enumerate().size()));
    }
  }
}

TEST_CASE("distinct codewords never meet under swaps") {
  const ZeroErrorCodebook book(9, AlphabetPartition::halves(2));
  const auto words = book.enumerate();
  REQUIRE(words.size() >= 2);
  const Code code(2, 9, words);
  CHECK(min_distance(code, DistanceKind::kStandard) == Distance::infinity());
}

TEST_CASE("decoding recovers from saturated swap patterns") {
  const ZeroErrorCodebook book(9, AlphabetPartition::halves(2));
  const ZeroErrorDecoder decoder(book);
  for (const QaryString& x : book.enumerate())
    for (const QaryString& y : ball_disjoint(x, 4)) CHECK(decoder.decode(y) == x);
}

TEST_CASE("decoding repairs a crossed block boundary over a larger alphabet") {
  const ZeroErrorCodebook book(6, AlphabetPartition::parse(4, "0,1|2,3"));
  const QaryString x = QaryString::parse(4, "0,0,0,1,1,1");
  REQUIRE(book.contains(x));
  const ZeroErrorDecoder decoder(book);
  const QaryString y =
      apply_disjoint(x, TranspositionPattern::disjoint({3}));
  CHECK(decoder.decode(y) == x);
}

TEST_CASE("unreachable strings are rejected") {
  const ZeroErrorCodebook book(6, AlphabetPartition::halves(2));
  const ZeroErrorDecoder decoder(book);
  std::set<QaryString> reachable;
  for (const QaryString& x : book.enumerate())
    for (const QaryString& y : ball_disjoint(x, 3)) reachable.insert(y);
  bool checked = false;
  for_each_symbol_vector(2, 6, [&](const std::vector<int>& symbols) {
    if (checked) return;
    const QaryString y(2, symbols);
    if (reachable.count(y) > 0) return;
    CHECK_THROWS_AS(decoder.decode(y), UncorrectableInput);
    checked = true;
  });
  CHECK(checked);
}

TEST_CASE("growth constants") {
  CHECK(std::abs(growth_root(2) - oracles::kBinaryGrowthRoot) <= 1e-3);
  CHECK(std::abs(zero_error_rate(2) - oracles::kBinaryGrowthRate) <= 1e-3);
  CHECK(growth_root(4) > 2.0);
  CHECK(growth_root(4) < 2.1);
  for (int q : {2, 3, 4}) CHECK(zero_error_rate(q) > half_log_rate(q));
  for (int q : {5, 6, 7, 8}) CHECK(zero_error_rate(q) < half_log_rate(q));
}

TEST_CASE("rate convergence toward the growth root") {
  const double rate = log2_big(count_codewords(1, 1, 600)) / 600.0;
  CHECK(std::abs(rate - zero_error_rate(2)) <= 0.02);
}
