#include "swapcodes/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swapcodes/metric.hpp"
#include "swapcodes/qstring.hpp"
#include "swapcodes/zero_error.hpp"

namespace swapcodes {

namespace {

void require_fraction(double x, double lo, double hi, const char* who) {
  if (!(x >= lo && x <= hi))
    throw std::invalid_argument(std::string(who) + ": argument outside domain");
}

// Maximizes fn on [lo, hi]: dense grid pass, then golden-section refinement
// around the winning cell down to an interval of width 1e-9.
template <typename Fn>
double maximize(Fn&& fn, double lo, double hi, double grid_step) {
  if (hi <= lo) return fn(lo);
  const int cells = std::max(2, static_cast<int>(std::ceil((hi - lo) / grid_step)));
  double best_arg = lo;
  double best_val = fn(lo);
  for (int i = 1; i <= cells; ++i) {
    const double x = lo + (hi - lo) * i / cells;
    const double v = fn(x);
    if (v > best_val) {
      best_val = v;
      best_arg = x;
    }
  }
  double a = std::max(lo, best_arg - (hi - lo) / cells);
  double b = std::min(hi, best_arg + (hi - lo) / cells);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (b - a > 1e-9) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
    }
  }
  const double mid = (a + b) / 2;
  const double vm = fn(mid);
  return std::max(vm, best_val);
}

}  // namespace

double binary_entropy(double x) {
  require_fraction(x, 0.0, 1.0, "binary_entropy");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double entropy_q(int q, double x) {
  if (q < 2) throw std::invalid_argument("entropy_q: q must be >= 2");
  require_fraction(x, 0.0, 1.0, "entropy_q");
  const double lnq = std::log(static_cast<double>(q));
  double h = x * std::log(static_cast<double>(q - 1)) / lnq;
  if (x > 0.0) h -= x * std::log(x) / lnq;
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lnq;
  return h;
}

BigInt count_strings_with_runs(int q, int n, int r) {
  if (q < 2) throw std::invalid_argument("count_strings_with_runs: q must be >= 2");
  if (n < 1 || r < 1 || r > n) return 0;
  return binomial(n - 1, r - 1) * q * big_pow(q - 1, static_cast<unsigned>(r - 1));
}

BigInt ball_lower_bound(int runs, int t) {
  if (t < 0) throw std::invalid_argument("ball_lower_bound: negative t");
  const long long half = runs / 2;
  BigInt total = 0;
  for (int u = 0; u <= t; ++u)
    total += binomial(half, u) * binomial(half - 2 * u - 1, t - u);
  return total;
}

BigInt ball_upper_bound(int n, int t) {
  if (t < 0) throw std::invalid_argument("ball_upper_bound: negative t");
  BigInt total = 0;
  for (int s = 0; s <= t; ++s) total += binomial(n - s, s);
  return total;
}

BigInt bbar_upper_bound(int n, int t) {
  if (t < 1) throw std::invalid_argument("bbar_upper_bound: t must be >= 1");
  BigInt total = 0;
  for (int v = 0; v <= 2 * t / 3; ++v)
    total += binomial(2 * (t - v), v) * ball_upper_bound(n, t - v);
  return total;
}

double bbar_upper_bound_max_form(int n, int t) {
  if (t < 1)
    throw std::invalid_argument("bbar_upper_bound_max_form: t must be >= 1");
  BigInt best = 0;
  for (int v = 0; v <= 2 * t / 3; ++v)
    best = std::max(best, binomial(2 * (t - v), v) * ball_upper_bound(n, t - v));
  return (2.0 * t / 3.0 + 1.0) * best.convert_to<double>();
}

CardinalityBounds cardinality_bounds_t1(int q, int n) {
  if (q < 2 || n < 1)
    throw std::invalid_argument("cardinality_bounds_t1: q >= 2 and n >= 1 required");
  const double log2q = std::log2(static_cast<double>(q));
  const double lower =
      q == 2 ? std::exp2(n - std::log2(static_cast<double>(n)))
             : std::exp2(n * log2q -
                         std::log2(static_cast<double>(2 * q - 1) * n));
  const double upper = std::exp2(
      (n + 1) * log2q - std::log2(static_cast<double>(q - 1) * n));
  return {lower, upper};
}

CardinalityBounds cardinality_bounds_t(int q, int n, int t) {
  if (q < 2 || n < 1 || t < 1)
    throw std::invalid_argument("cardinality_bounds_t: q >= 2, n >= 1, t >= 1 required");
  const double log2q = std::log2(static_cast<double>(q));
  double log2_lower;
  if (q == 2) {
    // c_t 2^{n+t} / n^t with c_1 = 1/2, c_2 = 1/3, c_t = 1/(2t+1) beyond.
    const double ct = t == 1 ? 0.5 : (t == 2 ? 1.0 / 3.0 : 1.0 / (2 * t + 1));
    log2_lower = std::log2(ct) + (n + t) - t * std::log2(static_cast<double>(n));
  } else {
    double log2_fact = 0.0;  // log2 (2t)!
    for (int i = 2; i <= 2 * t; ++i) log2_fact += std::log2(static_cast<double>(i));
    log2_lower = log2_fact + n * log2q - std::log2(4.0 * t / 3.0 + 1.0) -
                 2.0 * t * std::log2(static_cast<double>(n));
  }
  double log2_tfact = 0.0;
  for (int i = 2; i <= t; ++i) log2_tfact += std::log2(static_cast<double>(i));
  const double log2_upper = log2_tfact + (n + t) * log2q -
                            t * std::log2(static_cast<double>(q - 1)) -
                            t * std::log2(static_cast<double>(n));
  return {std::exp2(log2_lower), std::exp2(log2_upper)};
}

BigInt total_exact_count(int q, int n, int r) {
  if (q < 2) throw std::invalid_argument("total_exact_count: q must be >= 2");
  if (n < 0 || r < 0) return 0;
  // P(n; r) = q P(n-1; r) + q(q-1) P(n-2; r-1), P(0; 0) = 1: the last two
  // symbols are either untouched or swapped as an unequal pair.
  std::vector<std::vector<BigInt>> table(
      static_cast<std::size_t>(n) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(r) + 1, 0));
  table[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= r; ++j) {
      BigInt value = q * table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      if (i >= 2 && j >= 1)
        value += BigInt(q) * (q - 1) *
                 table[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)];
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

BigInt total_exact_count_closed(int q, int n, int r) {
  if (q < 2)
    throw std::invalid_argument("total_exact_count_closed: q must be >= 2");
  if (n < 0 || r < 0) return 0;
  if (r > n - r) return 0;
  return binomial(n - r, r) * big_pow(q, static_cast<unsigned>(n - r)) *
         big_pow(q - 1, static_cast<unsigned>(r));
}

BigInt total_ball_count(int q, int n, int r, std::uint64_t budget) {
  require_space_budget(q, n, budget, "total_ball_count");
  if (r < 0) throw std::invalid_argument("total_ball_count: negative radius");
  BigInt total = 0;
  for_each_symbol_vector(q, n, [&](const std::vector<int>& symbols) {
    total += ball_disjoint(QaryString(q, symbols), r).size();
  });
  return total;
}

BigInt total_metric_ball_count(int q, int n, int r, bool force) {
  require_ball_budget(q, n, force, "total_metric_ball_count");
  if (r < 0)
    throw std::invalid_argument("total_metric_ball_count: negative radius");
  BigInt total = 0;
  for_each_symbol_vector(q, n, [&](const std::vector<int>& symbols) {
    total += ball_distance(QaryString(q, symbols), r).size();
  });
  return total;
}

double alpha(int q, double rho) {
  if (q < 2) throw std::invalid_argument("alpha: q must be >= 2");
  require_fraction(rho, 0.0, 0.5, "alpha");
  if (rho == 0.0) return std::log2(static_cast<double>(q));
  const double stretched = rho / (1.0 - rho);
  return (1.0 - rho) * binary_entropy(stretched) +
         (1.0 - rho) * std::log2(static_cast<double>(q)) +
         rho * std::log2(static_cast<double>(q - 1));
}

double rho_star(int q) {
  if (q < 2) throw std::invalid_argument("rho_star: q must be >= 2");
  return 0.5 * (1.0 - std::sqrt(static_cast<double>(q) / (5.0 * q - 4.0)));
}

double alpha_numeric_argmax(int q) {
  // Bisection on the sign of the central-difference derivative.
  const double h = 1e-6;
  double lo = h;
  double hi = 0.5 - h;
  auto slope = [&](double rho) { return alpha(q, rho + h) - alpha(q, rho - h); };
  for (int iter = 0; iter < 80 && hi - lo > 1e-12; ++iter) {
    const double mid = (lo + hi) / 2;
    (slope(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double beta(int q, double rho) {
  if (rho < 0.0) throw std::invalid_argument("beta: rho must be >= 0");
  return alpha(q, std::min(rho, rho_star(q)));
}

double beta_bar_upper(int q, double rho) {
  if (q < 2) throw std::invalid_argument("beta_bar_upper: q must be >= 2");
  require_fraction(rho, 0.0, 1.0, "beta_bar_upper");
  if (rho == 0.0) return beta(q, 0.0);
  const auto objective = [&](double lambda) {
    const double arg = std::clamp((rho - lambda) / (2.0 * lambda), 0.0, 1.0);
    return 2.0 * lambda * binary_entropy(arg) + beta(q, lambda);
  };
  return maximize(objective, rho / 3.0, rho, 1e-4);
}

double gv_rate(int q, double delta) {
  require_fraction(delta, 0.0, 1.0, "gv_rate");
  return 2.0 * std::log2(static_cast<double>(q)) - beta_bar_upper(q, delta);
}

double half_log_rate(int q) {
  if (q < 2) throw std::invalid_argument("half_log_rate: q must be >= 2");
  return 0.5 * std::log2(static_cast<double>(q / 2) * ((q + 1) / 2));
}

RateCurvePoint combined_rate(int q, double delta) {
  RateCurvePoint point;
  point.delta = delta;
  point.r_gv = gv_rate(q, delta);
  point.r_zero_error = zero_error_rate(q);
  point.r_half_log = half_log_rate(q);
  point.r_combined =
      std::max(point.r_gv, std::max(point.r_zero_error, point.r_half_log));
  return point;
}

std::vector<RateCurvePoint> rate_curve(int q, double delta_min,
                                       double delta_max, double step) {
  if (step <= 0.0) throw std::invalid_argument("rate_curve: step must be positive");
  if (delta_min < 0.0 || delta_max > 1.0 || delta_min > delta_max)
    throw std::invalid_argument("rate_curve: bad delta range");
  std::vector<RateCurvePoint> points;
  const int count = static_cast<int>(std::floor((delta_max - delta_min) / step + 1e-9));
  for (int i = 0; i <= count; ++i) {
    // i * step can round a hair past delta_max; keep the point in range.
    points.push_back(combined_rate(q, std::min(delta_min + i * step, delta_max)));
  }
  return points;
}

std::optional<double> crossover_delta0(int q) {
  const double floor_rate =
      std::max(zero_error_rate(q), half_log_rate(q));
  const auto excess = [&](double delta) { return gv_rate(q, delta) - floor_rate; };
  if (excess(0.0) <= 0.0 || excess(1.0) >= 0.0) return std::nullopt;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-6) {
    const double mid = (lo + hi) / 2;
    (excess(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double log2_binomial_lgamma(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  constexpr double kLn2 = 0.6931471805599453;
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / kLn2;
}

double exact_count_exponent_at(int q, long long n, long long r) {
  if (q < 2 || n < 1 || r < 0 || 2 * r > n)
    throw std::invalid_argument("exact_count_exponent_at: bad arguments");
  const double nn = static_cast<double>(n);
  const double rr = static_cast<double>(r);
  const double value = log2_binomial_lgamma(nn - rr, rr) +
                       (nn - rr) * std::log2(static_cast<double>(q)) +
                       rr * std::log2(static_cast<double>(q - 1));
  return value / nn;
}

double runs_total_exponent_at(int q, long long n, double rho) {
  if (q < 2 || n < 1) throw std::invalid_argument("runs_total_exponent_at: bad arguments");
  require_fraction(rho, 0.0, 1.0, "runs_total_exponent_at");
  const long long cap = std::min<long long>(n, static_cast<long long>(rho * n));
  if (cap < 1)
    throw std::invalid_argument("runs_total_exponent_at: empty run range");
  // log-sum-exp over ln S_q(n, r) = ln C(n-1, r-1) + ln q + (r-1) ln(q-1).
  const double lnq = std::log(static_cast<double>(q));
  const double lnq1 = std::log(static_cast<double>(q - 1));
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(cap));
  double peak = -std::numeric_limits<double>::infinity();
  for (long long r = 1; r <= cap; ++r) {
    const double nn = static_cast<double>(n - 1);
    const double kk = static_cast<double>(r - 1);
    const double term = std::lgamma(nn + 1) - std::lgamma(kk + 1) -
                        std::lgamma(nn - kk + 1) + lnq + kk * lnq1;
    terms.push_back(term);
    peak = std::max(peak, term);
  }
  double sum = 0.0;
  for (double term : terms) sum += std::exp(term - peak);
  const double ln_total = peak + std::log(sum);
  return ln_total / (static_cast<double>(n) * lnq);
}

}  // namespace swapcodes
