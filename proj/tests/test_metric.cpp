#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swapcodes/metric.hpp"
#include "swapcodes/qstring.hpp"

using namespace swapcodes;

namespace {
QaryString parse2(const char* text) { return QaryString::parse(2, text); }
}  // namespace

TEST_CASE("distance values compare with an unreachable top element") {
  CHECK(Distance::infinity() > Distance::of(100));
  CHECK(Distance::of(2) < Distance::of(3));
  CHECK(Distance::infinity().to_string() == "inf");
  CHECK(Distance::of(4).to_string() == "4");
  CHECK(Distance::infinity().exceeds(1000000));
  CHECK_THROWS_AS(Distance::infinity().steps(), std::logic_error);
}

TEST_CASE("the distance is not a metric: frozen counterexample") {
  const QaryString x = parse2(oracles::kTriangleX);
  const QaryString y = parse2(oracles::kTriangleY);
  const QaryString z = parse2(oracles::kTriangleZ);
  CHECK(distance(x, y) == Distance::infinity());
  CHECK(distance(x, z) == Distance::of(2));
  CHECK(distance(z, y) == Distance::of(1));
}

TEST_CASE("extremal pairs reach distance n - 1") {
  CHECK(distance(parse2(oracles::kWitnessN5.first),
                 parse2(oracles::kWitnessN5.second)) == Distance::of(4));
  CHECK(distance(parse2(oracles::kWitnessN6.first),
                 parse2(oracles::kWitnessN6.second)) == Distance::of(5));
  CHECK(max_finite_distance(2, 4) == 3);
}

TEST_CASE("descendant map tracks minimal swap counts") {
  const DescendantMap map = DescendantMap::build(parse2("1,0,1,0"));
  CHECK(map.swaps_to(parse2("1,0,1,0")) == 0);
  CHECK(map.swaps_to(parse2("0,1,1,0")) == 1);
  CHECK(map.swaps_to(parse2("0,1,0,1")) == 2);
  CHECK(!map.swaps_to(parse2("1,1,1,1")).has_value());
}

TEST_CASE("balls of radius one are the run boundaries") {
  const auto ball = ball_disjoint(parse2("0,1"), 1);
  REQUIRE(ball.size() == 2);
  CHECK(ball[0] == parse2("0,1"));
  CHECK(ball[1] == parse2("1,0"));
  CHECK(ball_disjoint(parse2("0,0,0"), 1).size() == 1);
  CHECK(ball_disjoint(parse2("0,1,0,1"), 0).size() == 1);
}

TEST_CASE("ball flavors nest") {
  const QaryString x = parse2("1,0,1,0,0,1");
  for (int t = 1; t <= 3; ++t) {
    const auto disjoint = ball_disjoint(x, t);
    const auto metric = ball_distance(x, t);
    const auto successive = ball_successive(x, t);
    CHECK(disjoint.size() <= metric.size());
    CHECK(metric.size() <= successive.size());
  }
}

TEST_CASE("successive distance is a shortest swap path") {
  CHECK(distance_successive(parse2(oracles::kOverlappingPair.first),
                            parse2(oracles::kOverlappingPair.second)) ==
        Distance::of(2));
  CHECK(distance_successive(parse2("0,1"), parse2("1,0")) == Distance::of(1));
  CHECK(distance_successive(parse2("0,0,1"), parse2("0,0,1")) ==
        Distance::of(0));
  // Different multisets never meet.
  CHECK(distance_successive(parse2("0,0,1"), parse2("1,1,0")) ==
        Distance::infinity());
}

TEST_CASE("codes validate their codewords") {
  const Code empty(2, 2, {});
  CHECK(empty.size() == 0);
  CHECK(min_distance(empty, DistanceKind::kStandard) == Distance::infinity());
  CHECK(corrects(empty, 1, ChannelModel::kDisjoint));
  CHECK_THROWS_AS(Code(2, 2, {parse2("0,1"), parse2("0,1")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Code(2, 2, {parse2("0,1"), parse2("0,1,1")}),
                  std::invalid_argument);
}

TEST_CASE("distance six suffices for three swaps") {
  const Code code(2, 10,
                  {parse2(oracles::kDistanceSixPair.first),
                   parse2(oracles::kDistanceSixPair.second)});
  CHECK(min_distance(code, DistanceKind::kStandard) == Distance::of(6));
  CHECK(corrects(code, 3, ChannelModel::kDisjoint));
}

TEST_CASE("overlapping balls defeat single-swap correction") {
  const Code code(2, 3,
                  {parse2(oracles::kOverlappingPair.first),
                   parse2(oracles::kOverlappingPair.second)});
  CHECK(!corrects(code, 1, ChannelModel::kDisjoint));
}

TEST_CASE("constant words are mutually unreachable") {
  const Code code(2, 3, {parse2("0,0,0"), parse2("1,1,1")});
  CHECK(min_distance(code, DistanceKind::kStandard) == Distance::infinity());
  CHECK(corrects(code, 1, ChannelModel::kSuccessive));
}

TEST_CASE("exhaustive search finds small optima") {
  const OptimalCodeResult result =
      optimal_code_search(2, 2, 1, ChannelModel::kDisjoint);
  CHECK(result.max_size == 3);
  CHECK(result.witness.size() == 3);
  CHECK(corrects(result.witness, 1, ChannelModel::kDisjoint));
  CHECK(optimal_code_search(2, 3, 0, ChannelModel::kDisjoint).max_size == 8);
}
