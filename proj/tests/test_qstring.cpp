#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swapcodes/qstring.hpp"

using namespace swapcodes;

TEST_CASE("strings parse, print, and validate") {
  const QaryString x = QaryString::parse(4, "0,1,1,3,0");
  CHECK(x.length() == 5);
  CHECK(x.symbol(3) == 3);
  CHECK(x.to_string() == "0,1,1,3,0");
  CHECK(QaryString::parse(2, " 1 , 0 ") == QaryString(2, {1, 0}));
  CHECK_THROWS_AS(QaryString::parse(2, "0,2,0"), std::invalid_argument);
  CHECK_THROWS_AS(QaryString::parse(2, "0,x"), std::invalid_argument);
  CHECK_THROWS_AS(QaryString(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(QaryString(3, {0, -1}), std::invalid_argument);
}

TEST_CASE("disjoint pattern application matches the worked example") {
  const QaryString x = QaryString::parse(4, oracles::kChannelInput);
  const auto pattern = TranspositionPattern::disjoint({1, 4, 9});
  CHECK(apply_disjoint(x, pattern).to_string() ==
        oracles::kChannelDisjointOutput);
  CHECK(apply_pattern(x, pattern).to_string() ==
        oracles::kChannelDisjointOutput);
}

TEST_CASE("successive pattern application matches the worked example") {
  const QaryString x = QaryString::parse(4, oracles::kChannelInput);
  const auto pattern = TranspositionPattern::successive({3, 4, 9});
  CHECK(apply_successive(x, pattern).to_string() ==
        oracles::kChannelSuccessiveOutput);
}

TEST_CASE("pattern validation") {
  CHECK_THROWS_AS(TranspositionPattern::disjoint({2, 3}),
                  std::invalid_argument);  // gap below 2
  CHECK_THROWS_AS(TranspositionPattern::disjoint({0}), std::invalid_argument);
  CHECK_NOTHROW(TranspositionPattern::successive({3, 3, 2}));
  const QaryString x(2, {0, 1, 0});
  CHECK_THROWS_AS(apply_disjoint(x, TranspositionPattern::disjoint({3})),
                  std::invalid_argument);  // beyond n - 1
}

TEST_CASE("single swaps agree between the two models") {
  const QaryString x(2, {1, 0, 0});
  CHECK(apply_disjoint(x, TranspositionPattern::disjoint({2})) ==
        apply_successive(x, TranspositionPattern::successive({2})));
  CHECK(apply_successive(x, TranspositionPattern::successive({1, 2})) ==
        QaryString(2, {0, 0, 1}));
}

TEST_CASE("run counting") {
  CHECK(run_count(QaryString::parse(4, "0,3,3,3,0,0,1,2,2")) == 5);
  CHECK(run_count(QaryString(2, {0, 0, 0, 0})) == 1);
  CHECK(run_count(QaryString(2, {0, 1, 0, 1})) == 4);
  CHECK_THROWS_AS(run_count(QaryString(2, {})), std::invalid_argument);
}

TEST_CASE("disjoint pattern enumeration and census") {
  std::vector<std::vector<int>> seen;
  for_each_disjoint_pattern(
      5, -1, [&](const std::vector<int>& locations) { seen.push_back(locations); });
  // n = 5: empty set, {1},{2},{3},{4}, and {1,3},{1,4},{2,4}.
  CHECK(seen.size() == 8);
  CHECK(seen.front().empty());
  CHECK(disjoint_pattern_count(5, 0) == 1);
  CHECK(disjoint_pattern_count(5, 1) == 4);
  CHECK(disjoint_pattern_count(5, 2) == 3);
  CHECK(disjoint_pattern_count(4, 2) == 1);
}

TEST_CASE("random patterns are deterministic and valid") {
  const auto a = random_pattern(10, 3, ChannelModel::kDisjoint, 42);
  const auto b = random_pattern(10, 3, ChannelModel::kDisjoint, 42);
  CHECK(a.locations() == b.locations());
  CHECK(a.count() == 3);
  for (std::size_t i = 1; i < a.locations().size(); ++i)
    CHECK(a.locations()[i] - a.locations()[i - 1] >= 2);
  CHECK(random_pattern(10, 0, ChannelModel::kSuccessive, 1).count() == 0);
  CHECK_THROWS_AS(random_pattern(5, 3, ChannelModel::kDisjoint, 1),
                  std::invalid_argument);
}
