#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "swapcodes/asymptotics.hpp"
#include "swapcodes/bigint.hpp"

using namespace swapcodes;

TEST_CASE("entropy functions") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(std::abs(binary_entropy(0.5) - 1.0) <= 1e-15);
  CHECK(std::abs(entropy_q(3, 2.0 / 3.0) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(entropy_q(3, 1.5), std::invalid_argument);
}

TEST_CASE("run-class counting") {
  CHECK(count_strings_with_runs(2, 3, 2) == oracles::kTwoRunTriples);
  CHECK(count_strings_with_runs(3, 1, 1) == 3);
  CHECK(count_strings_with_runs(2, 5, 6) == 0);
  BigInt total = 0;
  for (int r = 1; r <= 9; ++r) total += count_strings_with_runs(3, 9, r);
  CHECK(total == big_pow(3, 9));
}

TEST_CASE("exact pair counts: recursion, closed form, frozen values") {
  CHECK(total_exact_count(2, 2, 1) == oracles::kEffectivePairsN2);
  CHECK(total_exact_count(2, 3, 1) == oracles::kEffectivePairsN3);
  for (int n = 1; n <= 9; ++n)
    for (int r = 0; 2 * r <= n; ++r)
      CHECK(total_exact_count(3, n, r) == total_exact_count_closed(3, n, r));
  CHECK(total_exact_count(4, 6, 0) == big_pow(4, 6));
}

TEST_CASE("ball size bounds at radius one collapse to n") {
  for (int n = 1; n <= 16; ++n) {
    CHECK(ball_upper_bound(n, 1) == n);
    CHECK(bbar_upper_bound(n, 1) == n);
  }
  // A single-run string has a trivial ball; the lower bound degrades to 0
  // there but must stay nonnegative and below the true size.
  CHECK(ball_lower_bound(1, 3) == 0);
  CHECK(ball_lower_bound(10, 1) >= 1);
}

TEST_CASE("totals nest") {
  const BigInt exact = total_ball_count(2, 8, 2);
  const BigInt metric = total_metric_ball_count(2, 8, 2);
  CHECK(metric >= exact);
  CHECK(total_ball_count(2, 8, 0) == 256);
}

TEST_CASE("exponent curve and its maximum") {
  CHECK(alpha(2, 0.0) == 1.0);
  CHECK(alpha(4, 0.0) == 2.0);
  CHECK(std::abs(alpha(2, 0.5) - 0.5) <= 1e-12);
  CHECK(std::abs(rho_star(2) - oracles::kBinaryArgmax) <= 1e-12);
  CHECK(std::abs(rho_star(2) - alpha_numeric_argmax(2)) <= 1e-6);
  CHECK_THROWS_AS(alpha(2, 0.6), std::invalid_argument);
}

TEST_CASE("log-gamma exponent agrees with the curve at large n") {
  const double exponent = exact_count_exponent_at(2, 10000, 2000);
  CHECK(std::abs(exponent - alpha(2, 0.2)) <= 0.01);
}

TEST_CASE("run-class total exponent saturates at one") {
  CHECK(std::abs(runs_total_exponent_at(2, 5000, 0.9) - 1.0) <= 0.01);
  CHECK(std::abs(runs_total_exponent_at(3, 5000, 0.2) - entropy_q(3, 0.2)) <=
        0.01);
}

TEST_CASE("rate floors and crossover") {
  CHECK(gv_rate(4, 0.0) == 2.0);
  CHECK(gv_rate(2, 0.0) == 1.0);
  CHECK(half_log_rate(4) == 1.0);
  const auto crossover = crossover_delta0(4);
  REQUIRE(crossover.has_value());
  CHECK(std::abs(*crossover - oracles::kQuaternaryCrossover) <= 5e-3);
}

TEST_CASE("combined curve dominates its parts") {
  const auto curve = rate_curve(2, 0.0, 1.0, 0.01);
  CHECK(curve.size() == 101);
  for (const RateCurvePoint& point : curve) {
    CHECK(point.r_combined >= point.r_gv);
    CHECK(point.r_combined >= point.r_zero_error);
    CHECK(point.r_combined >= point.r_half_log);
  }
}

TEST_CASE("cardinality envelopes at radius one") {
  const CardinalityBounds bounds = cardinality_bounds_t1(2, 8);
  CHECK(std::abs(bounds.lower - 32.0) <= 1e-9);
  CHECK(std::abs(bounds.upper - 64.0) <= 1e-9);
  const CardinalityBounds ternary = cardinality_bounds_t1(3, 6);
  CHECK(ternary.lower < ternary.upper);
}
