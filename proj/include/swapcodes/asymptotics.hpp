#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapcodes/bigint.hpp"
#include "swapcodes/errors.hpp"

namespace swapcodes {

// Binary entropy in bits; 0 log 0 = 0.
double binary_entropy(double x);

// q-ary entropy: x log_q(q-1) - x log_q x - (1-x) log_q(1-x).
double entropy_q(int q, double x);

// Number of strings in Z_q^n with exactly r runs:
// C(n-1, r-1) q (q-1)^{r-1}; zero outside 1 <= r <= n.
BigInt count_strings_with_runs(int q, int n, int r);

// Lower bound on the number of strings reachable with at most t disjoint
// swaps, as a function of the run count of the center:
// sum_u C(floor(runs/2), u) C(floor(runs/2) - 2u - 1, t - u).
// Out-of-range binomials are zero.
BigInt ball_lower_bound(int runs, int t);

// Upper bound on the same quantity: sum_{s<=t} C(n-s, s), the number of
// admissible location sets with at most t swaps.
BigInt ball_upper_bound(int n, int t);

// Upper bound on the size of a distance ball of radius t:
// sum_{v=0}^{floor(2t/3)} C(2(t-v), v) * ball_upper_bound(n, t-v).
BigInt bbar_upper_bound(int n, int t);

// Same bound in its max form, (2t/3 + 1) max_v C(2(t-v), v) *
// ball_upper_bound(n, t-v); the multiplier is fractional, hence a double.
double bbar_upper_bound_max_form(int n, int t);

// Asymptotic envelopes for the maximum size of a code correcting one swap
// (respectively t swaps). These are n -> infinity shapes evaluated at
// finite n, not exact inequalities.
struct CardinalityBounds {
  double lower;
  double upper;
};
CardinalityBounds cardinality_bounds_t1(int q, int n);
CardinalityBounds cardinality_bounds_t(int q, int n, int t);

// Number of (string, effective pattern) pairs with exactly r swaps of
// unequal symbols at disjoint locations, summed over all of Z_q^n. Computed
// by the linear recursion of the generating function
// 1 / (1 - qz - q(q-1) z^2 u).
BigInt total_exact_count(int q, int n, int r);

// The same quantity in closed form: C(n-r, r) q^{n-r} (q-1)^r.
BigInt total_exact_count_closed(int q, int n, int r);

// sum over x of |ball_disjoint(x, r)|, by enumeration (space budget).
BigInt total_ball_count(int q, int n, int r,
                        std::uint64_t budget = limits::kDefaultBudget);

// sum over x of |ball_distance(x, r)|, by enumeration (ball budget).
BigInt total_metric_ball_count(int q, int n, int r, bool force = false);

// Growth exponent of total_exact_count along r = rho n, rho in [0, 1/2]:
// (1-rho) H(rho/(1-rho)) + (1-rho) log2 q + rho log2(q-1).
double alpha(int q, double rho);

// Argmax of alpha: (1 - sqrt(q/(5q-4))) / 2.
double rho_star(int q);

// Argmax of alpha located numerically (derivative sign bisection on central
// differences), for cross-checking rho_star without the closed form.
double alpha_numeric_argmax(int q);

// Growth exponent of total_ball_count: alpha capped at its maximum,
// alpha(q, min(rho, rho_star)).
double beta(int q, double rho);

// Upper bound on the growth exponent of total_metric_ball_count:
// max over lambda in [rho/3, rho] of 2 lambda H((rho-lambda)/(2 lambda)) +
// beta(q, lambda). Grid search plus golden-section refinement to 1e-9.
double beta_bar_upper(int q, double rho);

// Achievable-rate bound at relative distance delta:
// 2 log2 q - beta_bar_upper(q, delta).
double gv_rate(int q, double delta);

// Rate of the floor/ceiling alphabet-split construction:
// log2(floor(q/2) ceil(q/2)) / 2.
double half_log_rate(int q);

struct RateCurvePoint {
  double delta;
  double r_gv;
  double r_zero_error;
  double r_half_log;
  double r_combined;
};

// All lower bounds at one delta; r_combined is their maximum.
RateCurvePoint combined_rate(int q, double delta);

// Uniform sweep over [delta_min, delta_max] with the given step.
std::vector<RateCurvePoint> rate_curve(int q, double delta_min,
                                       double delta_max, double step);

// The delta where gv_rate falls to the best distance-free rate
// max(log2 growth root, half_log_rate), by bisection to 1e-6; nullopt when
// the curves do not cross in (0, 1).
std::optional<double> crossover_delta0(int q);

// log2 C(n, k) via log-gamma, for sizes where exact arithmetic is wasteful.
double log2_binomial_lgamma(double n, double k);

// (1/n) log2 total_exact_count_closed(q, n, r) via log-gamma.
double exact_count_exponent_at(int q, long long n, long long r);

// (1/n) log_q sum_{r <= rho n} count_strings_with_runs(q, n, r) via
// log-gamma (log-sum-exp over r).
double runs_total_exponent_at(int q, long long n, double rho);

}  // namespace swapcodes
