#include "swapcodes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "swapcodes/asymptotics.hpp"
#include "swapcodes/bigint.hpp"
#include "swapcodes/errors.hpp"
#include "swapcodes/metric.hpp"
#include "swapcodes/prng.hpp"
#include "swapcodes/qstring.hpp"
#include "swapcodes/single_codes.hpp"
#include "swapcodes/zero_error.hpp"

namespace swapcodes::verify {
namespace {

// Accumulates one property verdict. The witness callback runs only for the
// first failing instance, so hot loops pay nothing on the passing path.
class PropertyCheck {
 public:
  explicit PropertyCheck(std::string name) { result_.property = std::move(name); }

  template <typename Witness>
  bool check(bool condition, Witness&& witness) {
    ++result_.instances;
    if (!condition && result_.passed) {
      result_.passed = false;
      result_.detail = witness();
    }
    return condition;
  }

  bool check(bool condition, const char* detail) {
    return check(condition, [detail] { return std::string(detail); });
  }

  void tally(long long count = 1) { result_.instances += count; }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

template <typename Exception, typename Fn>
bool throws(Fn&& fn) {
  try {
    fn();
  } catch (const Exception&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

std::vector<int> alphabets(const SuiteCaps& caps, std::vector<int> defaults) {
  if (caps.q != 0) return {caps.q};
  return defaults;
}

int cap_or(const SuiteCaps& caps, int fallback) {
  return caps.max_n != 0 ? caps.max_n : fallback;
}

std::uint64_t budget_of(const SuiteCaps& caps) {
  return caps.force ? std::numeric_limits<std::uint64_t>::max()
                    : limits::kDefaultBudget;
}

std::vector<QaryString> all_strings(int q, int n) {
  std::vector<QaryString> out;
  out.reserve(space_size(q, n));
  for_each_symbol_vector(
      q, n, [&](const std::vector<int>& symbols) { out.emplace_back(q, symbols); });
  return out;
}

std::string locations_text(const std::vector<int>& locations) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (i > 0) os << ",";
    os << locations[i];
  }
  os << "}";
  return os.str();
}

bool sorted_subset(const std::vector<QaryString>& inner,
                   const std::vector<QaryString>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool sorted_member(const std::vector<QaryString>& sorted, const QaryString& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// ---------------------------------------------------------------------------
// balls suite
// ---------------------------------------------------------------------------

PropertyResult swap_involution(const SuiteCaps& caps) {
  PropertyCheck c("swap_involution");
  for (int q : alphabets(caps, {2, 3})) {
    const int ncap = cap_or(caps, 7);
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify swap_involution");
      const auto xs = all_strings(q, n);
      for_each_disjoint_pattern(n, -1, [&](const std::vector<int>& locations) {
        const auto p = TranspositionPattern::disjoint(locations);
        for (const QaryString& x : xs) {
          const QaryString y = apply_disjoint(x, p);
          c.check(apply_disjoint(y, p) == x, [&] {
            return "q=" + std::to_string(q) + " x=" + x.to_string() +
                   " locations " + locations_text(locations);
          });
        }
      });
    }
  }
  return c.take();
}

PropertyResult swap_preserves_multiset(const SuiteCaps& caps) {
  PropertyCheck c("swap_preserves_multiset");
  for (int q : alphabets(caps, {2, 3})) {
    const int ncap = cap_or(caps, 7);
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify swap_preserves_multiset");
      const auto xs = all_strings(q, n);
      for_each_disjoint_pattern(n, -1, [&](const std::vector<int>& locations) {
        const auto p = TranspositionPattern::disjoint(locations);
        for (const QaryString& x : xs) {
          std::vector<int> before = x.symbols();
          std::vector<int> after = apply_disjoint(x, p).symbols();
          std::sort(before.begin(), before.end());
          std::sort(after.begin(), after.end());
          c.check(before == after, [&] {
            return "q=" + std::to_string(q) + " x=" + x.to_string() +
                   " locations " + locations_text(locations);
          });
        }
      });
    }
  }
  return c.take();
}

PropertyResult disjoint_pattern_census(const SuiteCaps& caps) {
  PropertyCheck c("disjoint_pattern_census");
  const int ncap = cap_or(caps, 8);
  if (ncap > 30)
    throw InstanceTooLarge(
        "verify disjoint_pattern_census: pattern census limited to n <= 30");
  for (int n = 1; n <= ncap; ++n) {
    std::map<int, std::uint64_t> by_size;
    std::uint64_t total = 0;
    for_each_disjoint_pattern(n, -1, [&](const std::vector<int>& locations) {
      ++by_size[static_cast<int>(locations.size())];
      ++total;
    });
    std::uint64_t expected_total = 0;
    for (int s = 0; 2 * s <= n; ++s) {
      const std::uint64_t expected = disjoint_pattern_count(n, s);
      expected_total += expected;
      c.check(by_size[s] == expected, [&] {
        return "n=" + std::to_string(n) + " s=" + std::to_string(s) +
               ": enumerated " + std::to_string(by_size[s]) + ", expected " +
               std::to_string(expected);
      });
      c.check(BigInt(expected) == binomial(n - s, s), [&] {
        return "n=" + std::to_string(n) + " s=" + std::to_string(s) +
               ": count does not match C(n-s,s)";
      });
    }
    c.check(total == expected_total, [&] {
      return "n=" + std::to_string(n) + ": total census mismatch";
    });
  }
  return c.take();
}

PropertyResult run_count_basic(const SuiteCaps& caps) {
  PropertyCheck c("run_count_basic");
  c.check(throws<std::invalid_argument>(
              [] { run_count(QaryString(2, {})); }),
          "empty string must be rejected");
  for (int q : alphabets(caps, {2, 3})) {
    const int ncap = cap_or(caps, 6);
    std::vector<std::vector<int>> permutations;
    {
      std::vector<int> perm(static_cast<std::size_t>(q));
      for (int i = 0; i < q; ++i) perm[static_cast<std::size_t>(i)] = i;
      if (q <= 4) {
        do {
          permutations.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        std::mt19937_64 rng(7);
        for (int rep = 0; rep < 10; ++rep) {
          for (int i = q - 1; i > 0; --i) {
            const int j = static_cast<int>(
                uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(j)]);
          }
          permutations.push_back(perm);
        }
      }
    }
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify run_count_basic");
      for (const QaryString& x : all_strings(q, n)) {
        const int runs = run_count(x);
        c.check(runs >= 1 && runs <= n, [&] {
          return "x=" + x.to_string() + ": run count " + std::to_string(runs);
        });
        for (const auto& perm : permutations) {
          std::vector<int> relabeled(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i)
            relabeled[static_cast<std::size_t>(i)] =
                perm[static_cast<std::size_t>(x.symbol(i))];
          c.check(run_count(QaryString(q, relabeled)) == runs, [&] {
            return "x=" + x.to_string() + ": run count changed under relabeling";
          });
        }
      }
    }
  }
  return c.take();
}

PropertyResult ball_size_run_count(const SuiteCaps& caps) {
  PropertyCheck c("ball_size_run_count");
  {
    const QaryString five_runs(4, {0, 3, 3, 3, 0, 0, 1, 2, 2});
    c.check(run_count(five_runs) == 5, "run count of the 5-run string");
    c.check(ball_disjoint(five_runs, 1).size() == 5,
            "|ball(x;1)| of the 5-run string");
  }
  for (int q : alphabets(caps, {2, 3, 4})) {
    const int ncap = cap_or(caps, 8);
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify ball_size_run_count");
      for (const QaryString& x : all_strings(q, n)) {
        const auto ball = ball_disjoint(x, 1);
        c.check(static_cast<int>(ball.size()) == run_count(x), [&] {
          return "q=" + std::to_string(q) + " x=" + x.to_string() + ": |ball|=" +
                 std::to_string(ball.size()) + " runs=" +
                 std::to_string(run_count(x));
        });
        c.check(std::is_sorted(ball.begin(), ball.end()) &&
                    std::adjacent_find(ball.begin(), ball.end()) == ball.end(),
                "ball must be sorted and duplicate-free");
      }
    }
  }
  return c.take();
}

PropertyResult ball_containment_chain(const SuiteCaps& caps) {
  PropertyCheck c("ball_containment_chain");
  {
    const QaryString pair(2, {0, 1});
    const auto ball = ball_disjoint(pair, 1);
    c.check(ball.size() == 2 && ball[0] == QaryString(2, {0, 1}) &&
                ball[1] == QaryString(2, {1, 0}),
            "ball((0,1);1) must be {(0,1),(1,0)}");
  }
  for (int q : alphabets(caps, {2})) {
    const int ncap = cap_or(caps, 8);
    const int tcap = 3;
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify ball_containment_chain");
      for (const QaryString& x : all_strings(q, n)) {
        const auto zero = ball_disjoint(x, 0);
        c.check(zero.size() == 1 && zero[0] == x, "radius 0 ball must be {x}");
        for (int t = 1; t <= tcap; ++t) {
          const auto disjoint = ball_disjoint(x, t);
          const auto metric = ball_distance(x, t);
          const auto successive = ball_successive(x, t);
          c.check(sorted_member(disjoint, x), "x must lie in its own ball");
          c.check(sorted_subset(disjoint, metric), [&] {
            return "x=" + x.to_string() + " t=" + std::to_string(t) +
                   ": pattern ball not inside distance ball";
          });
          c.check(sorted_subset(metric, successive), [&] {
            return "x=" + x.to_string() + " t=" + std::to_string(t) +
                   ": distance ball not inside successive ball";
          });
        }
      }
    }
  }
  return c.take();
}

PropertyResult ball_sandwich_runs(const SuiteCaps& caps) {
  PropertyCheck c("ball_sandwich_runs");
  for (int n = 1; n <= 20; ++n)
    c.check(ball_upper_bound(n, 1) == n, "upper bound at t=1 must equal n");
  for (int q : alphabets(caps, {2, 3})) {
    const int ncap = cap_or(caps, q == 2 ? 12 : 8);
    const int tcap = q == 2 ? 3 : 2;
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify ball_sandwich_runs");
      for (const QaryString& x : all_strings(q, n)) {
        const int runs = run_count(x);
        for (int t = 0; t <= tcap; ++t) {
          const BigInt size(ball_disjoint(x, t).size());
          c.check(ball_lower_bound(runs, t) <= size, [&] {
            return "q=" + std::to_string(q) + " x=" + x.to_string() +
                   " t=" + std::to_string(t) + ": lower bound exceeds |ball|";
          });
          c.check(size <= ball_upper_bound(n, t), [&] {
            return "q=" + std::to_string(q) + " x=" + x.to_string() +
                   " t=" + std::to_string(t) + ": |ball| exceeds upper bound";
          });
        }
      }
    }
  }
  return c.take();
}

PropertyResult metric_ball_bound(const SuiteCaps& caps) {
  PropertyCheck c("metric_ball_bound");
  for (int n = 1; n <= 20; ++n)
    c.check(bbar_upper_bound(n, 1) == ball_upper_bound(n, 1),
            "t=1 distance-ball bound must reduce to the pattern-ball bound");
  for (int q : alphabets(caps, {2, 3})) {
    const int ncap = cap_or(caps, q == 2 ? 12 : 8);
    const int tcap = q == 2 ? 3 : 2;
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify metric_ball_bound");
      for (const QaryString& x : all_strings(q, n)) {
        for (int t = 1; t <= tcap; ++t) {
          const std::size_t size = ball_distance(x, t).size();
          c.check(BigInt(size) <= bbar_upper_bound(n, t), [&] {
            return "q=" + std::to_string(q) + " x=" + x.to_string() +
                   " t=" + std::to_string(t) + ": |distance ball| " +
                   std::to_string(size) + " exceeds the sum bound";
          });
          c.check(static_cast<double>(size) <=
                      bbar_upper_bound_max_form(n, t) + 1e-6,
                  [&] {
                    return "q=" + std::to_string(q) + " x=" + x.to_string() +
                           " t=" + std::to_string(t) +
                           ": |distance ball| exceeds the max-form bound";
                  });
        }
      }
    }
  }
  return c.take();
}

PropertyResult random_pattern_contract(const SuiteCaps& caps) {
  PropertyCheck c("random_pattern_contract");
  (void)caps;
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
      for (int t = 0; 2 * t <= n; ++t) {
        const auto p = random_pattern(n, t, ChannelModel::kDisjoint, seed);
        const auto again = random_pattern(n, t, ChannelModel::kDisjoint, seed);
        c.check(p.locations() == again.locations(),
                "disjoint draw must be deterministic in the seed");
        c.check(p.count() == t, "disjoint draw must have exactly t locations");
        bool valid = true;
        for (std::size_t i = 0; i < p.locations().size(); ++i) {
          const int k = p.locations()[i];
          if (k < 1 || k > n - 1) valid = false;
          if (i > 0 && k < p.locations()[i - 1] + 2) valid = false;
        }
        c.check(valid, [&] {
          return "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                 ": invalid disjoint draw " + locations_text(p.locations());
        });
      }
      for (int t = 0; t <= 4; ++t) {
        const auto p = random_pattern(n, t, ChannelModel::kSuccessive, seed);
        const auto again = random_pattern(n, t, ChannelModel::kSuccessive, seed);
        c.check(p.locations() == again.locations(),
                "successive draw must be deterministic in the seed");
        c.check(p.count() == t, "successive draw must have exactly t locations");
        for (int k : p.locations())
          c.check(k >= 1 && k <= n - 1, "successive location out of range");
      }
    }
  }
  c.check(random_pattern(2, 1, ChannelModel::kDisjoint, 99).locations() ==
              std::vector<int>{1},
          "n=2, t=1 has a single admissible pattern");
  c.check(random_pattern(9, 0, ChannelModel::kDisjoint, 5).count() == 0,
          "t=0 must give the empty pattern");
  c.check(throws<std::invalid_argument>([] {
            random_pattern(5, 3, ChannelModel::kDisjoint, 1);
          }),
          "infeasible disjoint t must be rejected");
  {
    // All three admissible patterns for n=5, t=2 should show up.
    std::map<std::vector<int>, int> seen;
    for (std::uint64_t seed = 0; seed < 300; ++seed)
      ++seen[random_pattern(5, 2, ChannelModel::kDisjoint, seed).locations()];
    c.check(seen.size() == 3, "n=5, t=2 must eventually sample all 3 patterns");
    for (const auto& [locations, count] : seen)
      c.check(count >= 50, [&] {
        return "pattern " + locations_text(locations) + " sampled only " +
               std::to_string(count) + " times out of 300";
      });
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// distances suite
// ---------------------------------------------------------------------------

PropertyResult distance_axioms(const SuiteCaps& caps) {
  PropertyCheck c("distance_axioms");
  c.check(throws<std::invalid_argument>([] {
            distance(QaryString(2, {0, 1}), QaryString(2, {0, 1, 0}));
          }),
          "length mismatch must be rejected");
  for (int q : alphabets(caps, {2})) {
    const int ncap = cap_or(caps, 6);
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify distance_axioms");
      const auto xs = all_strings(q, n);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i; j < xs.size(); ++j) {
          const Distance forward = distance(xs[i], xs[j]);
          const Distance backward = distance(xs[j], xs[i]);
          c.check(forward == backward, [&] {
            return "asymmetry at " + xs[i].to_string() + " / " +
                   xs[j].to_string();
          });
          c.check((forward == Distance::of(0)) == (i == j), [&] {
            return "zero-distance mismatch at " + xs[i].to_string() + " / " +
                   xs[j].to_string();
          });
        }
      }
    }
  }
  return c.take();
}

PropertyResult triangle_counterexample(const SuiteCaps&) {
  PropertyCheck c("triangle_counterexample");
  const QaryString x(2, {1, 0, 0, 0});
  const QaryString y(2, {0, 0, 0, 1});
  const QaryString z(2, {0, 0, 1, 0});
  c.check(distance(x, y) == Distance::infinity(), "d(x,y) must be infinite");
  c.check(distance(x, z) == Distance::of(2), "d(x,z) must equal 2");
  c.check(distance(z, y) == Distance::of(1), "d(z,y) must equal 1");
  return c.take();
}

PropertyResult successive_metric_axioms(const SuiteCaps& caps) {
  PropertyCheck c("successive_metric_axioms");
  for (int q : alphabets(caps, {2})) {
    const int ncap = cap_or(caps, 5);
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify successive_metric_axioms");
      const auto xs = all_strings(q, n);
      const std::size_t count = xs.size();
      std::vector<std::vector<std::optional<int>>> dist(
          count, std::vector<std::optional<int>>(count));
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          const Distance d = distance_successive(xs[i], xs[j]);
          dist[i][j] = d.is_finite() ? std::optional<int>(d.steps()) : std::nullopt;
        }
      }
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          c.check(dist[i][j] == dist[j][i], [&] {
            return "asymmetry at " + xs[i].to_string() + " / " + xs[j].to_string();
          });
          c.check((dist[i][j] == std::optional<int>(0)) == (i == j),
                  "zero iff equal");
        }
      }
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
          if (!dist[i][j]) continue;
          for (std::size_t k = 0; k < count; ++k) {
            if (!dist[j][k]) continue;
            c.check(dist[i][k] &&
                        *dist[i][k] <= *dist[i][j] + *dist[j][k],
                    [&] {
                      return "triangle violation at " + xs[i].to_string() +
                             " / " + xs[j].to_string() + " / " +
                             xs[k].to_string();
                    });
          }
        }
    }
  }
  return c.take();
}

PropertyResult max_distance_bound(const SuiteCaps& caps) {
  PropertyCheck c("max_distance_bound");
  std::vector<std::pair<int, int>> configs;
  if (caps.q != 0) {
    configs.emplace_back(caps.q, cap_or(caps, caps.q == 2 ? 8 : 6));
  } else {
    configs.emplace_back(2, cap_or(caps, 8));
    configs.emplace_back(3, cap_or(caps, 6));
  }
  for (const auto& [q, ncap] : configs) {
    for (int n = 1; n <= ncap; ++n) {
      const int got = max_finite_distance(q, n, budget_of(caps));
      const int expected = n >= 2 ? n - 1 : 0;
      c.check(got == expected, [&] {
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
               ": max finite distance " + std::to_string(got) + ", expected " +
               std::to_string(expected);
      });
    }
  }
  return c.take();
}

PropertyResult max_distance_witnesses(const SuiteCaps&) {
  PropertyCheck c("max_distance_witnesses");
  c.check(distance(QaryString(2, {1, 0, 1, 0, 0}), QaryString(2, {0, 0, 1, 0, 1})) ==
              Distance::of(4),
          "n=5 witness pair must have distance 4");
  c.check(distance(QaryString(2, {1, 0, 1, 0, 1, 0}),
                   QaryString(2, {0, 0, 1, 0, 1, 1})) == Distance::of(5),
          "n=6 witness pair must have distance 5");
  return c.take();
}

PropertyResult min_distance_examples(const SuiteCaps&) {
  PropertyCheck c("min_distance_examples");
  {
    const Code wide(2, 10,
                    {QaryString(2, {1, 0, 1, 0, 0, 0, 1, 0, 1, 0}),
                     QaryString(2, {0, 0, 1, 1, 0, 0, 0, 0, 1, 1})});
    c.check(min_distance(wide, DistanceKind::kStandard) == Distance::of(6),
            "two-codeword example must have distance 6");
    c.check(corrects(wide, 3, ChannelModel::kDisjoint),
            "distance-6 example must correct 3 swaps");
  }
  {
    const Code constants(2, 3, {QaryString(2, {0, 0, 0}), QaryString(2, {1, 1, 1})});
    c.check(min_distance(constants, DistanceKind::kStandard) ==
                Distance::infinity(),
            "{000,111} must have infinite distance");
  }
  {
    const Code overlapping(2, 3, {QaryString(2, {1, 0, 0}), QaryString(2, {0, 0, 1})});
    c.check(!corrects(overlapping, 1, ChannelModel::kDisjoint),
            "the (1,0,0)/(0,0,1) code must fail at t=1");
    c.check(!min_distance(overlapping, DistanceKind::kStandard).exceeds(2),
            "its distance must not exceed 2");
  }
  c.check(throws<std::invalid_argument>([] {
            Code(2, 2, {QaryString(2, {0, 1}), QaryString(2, {0, 1})});
          }),
          "duplicate codewords must be rejected");
  c.check(min_distance(Code(2, 3, {QaryString(2, {0, 1, 0})}),
                       DistanceKind::kStandard) == Distance::infinity(),
          "singleton codes report the infinite convention");
  return c.take();
}

PropertyResult distance_correction_sufficiency(const SuiteCaps& caps) {
  PropertyCheck c("distance_correction_sufficiency");
  (void)caps;
  std::mt19937_64 rng(20240815);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 4));
    const std::size_t size = 2 + uniform_below(rng, 3);
    std::set<std::vector<int>> sampled;
    while (sampled.size() < size) {
      std::vector<int> symbols(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        symbols[static_cast<std::size_t>(i)] =
            static_cast<int>(uniform_below(rng, 2));
      sampled.insert(std::move(symbols));
    }
    std::vector<QaryString> words;
    for (const auto& symbols : sampled) words.emplace_back(2, symbols);
    const Code code(2, n, std::move(words));
    const Distance dmin = min_distance(code, DistanceKind::kStandard);
    for (int t = 1; t <= 2; ++t) {
      if (!dmin.exceeds(2 * t)) continue;
      c.check(corrects(code, t, ChannelModel::kDisjoint), [&] {
        return "n=" + std::to_string(n) + " t=" + std::to_string(t) +
               ": min distance " + dmin.to_string() +
               " > 2t yet correction fails";
      });
    }
  }
  return c.take();
}

PropertyResult successive_correction_iff(const SuiteCaps& caps) {
  PropertyCheck c("successive_correction_iff");
  for (int q : alphabets(caps, {2})) {
    const int ncap = cap_or(caps, 6);
    for (int n = 2; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify successive_correction_iff");
      const auto xs = all_strings(q, n);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          const Code pair(q, n, {xs[i], xs[j]});
          const Distance d = distance_successive(xs[i], xs[j]);
          for (int t = 1; t <= 2; ++t) {
            c.check(corrects(pair, t, ChannelModel::kSuccessive) ==
                        d.exceeds(2 * t),
                    [&] {
                      return "pair " + xs[i].to_string() + " / " +
                             xs[j].to_string() + " t=" + std::to_string(t) +
                             ": successive correction and distance disagree";
                    });
          }
        }
      }
    }
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// single_codes suite
// ---------------------------------------------------------------------------

bool plain_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

PropertyResult prime_selection(const SuiteCaps&) {
  PropertyCheck c("prime_selection");
  c.check(smallest_valid_prime(2, 5) == 5, "q=2, n=5 must choose 5");
  c.check(smallest_valid_prime(4, 4) == 5, "q=4, n=4 must choose 5");
  c.check(smallest_valid_prime(2, 14) == 17, "q=2, n=14 must choose 17");
  c.check(smallest_valid_prime(2, 1) == 3, "tiny instances must choose 3");
  for (int q = 2; q <= 8; ++q) {
    for (int n = 1; n <= 60; ++n) {
      const int p = smallest_valid_prime(q, n);
      const int floor = std::max(q, n);
      bool minimal = p >= floor && p % 2 == 1 && plain_prime(p);
      for (int candidate = std::max(floor, 3); minimal && candidate < p;
           ++candidate)
        if (candidate % 2 == 1 && plain_prime(candidate)) minimal = false;
      c.check(minimal, [&] {
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
               ": selected " + std::to_string(p);
      });
    }
  }
  return c.take();
}

PropertyResult syndrome_partition(const SuiteCaps& caps) {
  PropertyCheck c("syndrome_partition");
  for (int q : alphabets(caps, {2, 3, 4})) {
    const int ncap = cap_or(caps, 5);
    for (int n = 1; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps), "verify syndrome_partition");
      const int p = smallest_valid_prime(q, n);
      std::uint64_t total = 0;
      std::uint64_t best = 0;
      for (int s1 = 0; s1 < 2 * q - 1; ++s1) {
        for (int s2 = 0; s2 < p; ++s2) {
          const QarySyndromeCode params(q, n, s1, s2);
          std::uint64_t size = 0;
          for_each_symbol_vector(q, n, [&](const std::vector<int>& symbols) {
            if (is_codeword(QaryString(q, symbols), params)) ++size;
          });
          total += size;
          best = std::max(best, size);
        }
      }
      const std::uint64_t space = space_size(q, n);
      c.check(total == space, [&] {
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
               ": offset classes cover " + std::to_string(total) + " of " +
               std::to_string(space) + " strings";
      });
      c.check(best * static_cast<std::uint64_t>(2 * q - 1) *
                      static_cast<std::uint64_t>(p) >=
                  space,
              [&] {
                return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                       ": best class size " + std::to_string(best) +
                       " below the pigeonhole bound";
              });
    }
  }
  return c.take();
}

// Exhaustive teeth of the two decoder properties: correction predicate plus
// decode round-trips over every codeword and swap location.
template <typename CodeParams>
void roundtrip_all_swaps(PropertyCheck& c, const Code& codebook,
                         const CodeParams& params, const std::string& label) {
  c.check(corrects(codebook, 1, ChannelModel::kDisjoint), [&] {
    return label + ": radius-1 balls intersect";
  });
  c.check(corrects(codebook, 1, ChannelModel::kSuccessive), [&] {
    return label + ": radius-1 successive balls intersect";
  });
  const int n = codebook.n();
  for (const QaryString& x : codebook.codewords()) {
    c.check(decode_one_swap(x, params) == x, [&] {
      return label + ": codeword " + x.to_string() + " not decoded to itself";
    });
    for (int k = 1; k <= n - 1; ++k) {
      std::vector<int> symbols = x.symbols();
      std::swap(symbols[static_cast<std::size_t>(k - 1)],
                symbols[static_cast<std::size_t>(k)]);
      const QaryString y(codebook.q(), std::move(symbols));
      bool ok = false;
      std::string note;
      try {
        ok = decode_one_swap(y, params) == x;
        if (!ok) note = "decoded to a different codeword";
      } catch (const UncorrectableInput& error) {
        note = error.what();
      }
      c.check(ok, [&] {
        return label + ": x=" + x.to_string() + " k=" + std::to_string(k) +
               ": " + note;
      });
    }
  }
}

template <typename CodeParams>
void garbage_rejection(PropertyCheck& c, const Code& codebook,
                       const CodeParams& params, const std::string& label) {
  std::set<QaryString> reachable;
  for (const QaryString& x : codebook.codewords())
    for (const QaryString& y : ball_disjoint(x, 1)) reachable.insert(y);
  bool found = false;
  for_each_symbol_vector(
      codebook.q(), codebook.n(), [&](const std::vector<int>& symbols) {
        if (found) return;
        const QaryString y(codebook.q(), symbols);
        if (reachable.count(y) > 0) return;
        found = true;
        c.check(throws<UncorrectableInput>([&] { decode_one_swap(y, params); }),
                [&] {
                  return label + ": " + y.to_string() +
                         " is outside every ball yet decoded";
                });
      });
}

PropertyResult syndrome_corrects_roundtrip(const SuiteCaps& caps) {
  PropertyCheck c("syndrome_corrects_roundtrip");
  std::vector<std::pair<int, int>> configs;
  if (caps.q != 0) {
    const int fallback = caps.q == 2 ? 8 : caps.q == 3 ? 7 : 6;
    configs.emplace_back(caps.q, cap_or(caps, fallback));
  } else {
    configs.emplace_back(2, cap_or(caps, 8));
    configs.emplace_back(3, cap_or(caps, 7));
    configs.emplace_back(4, cap_or(caps, 6));
  }
  for (const auto& [q, ncap] : configs) {
    for (int n = 2; n <= ncap; ++n) {
      require_space_budget(q, n, budget_of(caps),
                           "verify syndrome_corrects_roundtrip");
      const int p = smallest_valid_prime(q, n);
      for (int s1 = 0; s1 < 2 * q - 1; ++s1) {
        for (int s2 = 0; s2 < p; ++s2) {
          const QarySyndromeCode params(q, n, s1, s2);
          const Code codebook = enumerate_codewords(params, budget_of(caps));
          if (codebook.size() == 0) {
            c.tally();
            continue;
          }
          std::ostringstream label;
          label << "q=" << q << " n=" << n << " s1=" << s1 << " s2=" << s2;
          roundtrip_all_swaps(c, codebook, params, label.str());
        }
      }
    }
  }
  {
    const QarySyndromeCode params(2, 4, 0, 0);
    garbage_rejection(c, enumerate_codewords(params), params, "q=2 n=4 garbage");
  }
  return c.take();
}

Code enumerate_nonempty(const BinarySyndromeCode& params, std::uint64_t budget) {
  return enumerate_codewords(params, budget);
}

PropertyResult binary_corrects_roundtrip(const SuiteCaps& caps) {
  PropertyCheck c("binary_corrects_roundtrip");
  const int ncap = cap_or(caps, 10);
  for (int n : {6, 8, 10}) {
    if (n > ncap) continue;
    const int half = n / 2;
    for (int s = 0; s <= 1; ++s) {
      for (const bool repetition : {true, false}) {
        const InnerCode inner = repetition ? InnerCode::repetition(half)
                                           : InnerCode::shortened_hamming(half);
        const BinarySyndromeCode params(n, s, inner);
        const Code codebook = enumerate_nonempty(params, budget_of(caps));
        std::ostringstream label;
        label << "n=" << n << " s=" << s
              << (repetition ? " repetition" : " shortened-hamming");
        roundtrip_all_swaps(c, codebook, params, label.str());
      }
    }
  }
  {
    const BinarySyndromeCode params(6, 1, InnerCode::repetition(3));
    garbage_rejection(c, enumerate_codewords(params), params, "n=6 garbage");
    c.check(is_codeword(QaryString(2, {1, 0, 0, 0, 0, 0}), params),
            "(1,0,0,0,0,0) must satisfy the n=6, s=1 instance");
    c.check(decode_one_swap(QaryString(2, {0, 1, 0, 0, 0, 0}), params) ==
                QaryString(2, {1, 0, 0, 0, 0, 0}),
            "the n=6 worked example must decode to (1,0,0,0,0,0)");
  }
  return c.take();
}

PropertyResult binary_cardinality_bound(const SuiteCaps& caps) {
  PropertyCheck c("binary_cardinality_bound");
  const int ncap = cap_or(caps, 10);
  for (int n : {6, 8, 10}) {
    if (n > ncap) continue;
    const InnerCode inner = InnerCode::standard(n / 2);
    std::uint64_t total = 0;
    std::uint64_t best = 0;
    for (int s = 0; s <= 1; ++s) {
      const Code codebook =
          enumerate_codewords(BinarySyndromeCode(n, s, inner), budget_of(caps));
      total += codebook.size();
      best = std::max<std::uint64_t>(best, codebook.size());
    }
    const std::uint64_t strings_with_inner_even =
        inner.cardinality() << (n / 2);
    c.check(total == strings_with_inner_even, [&] {
      return "n=" + std::to_string(n) + ": the two parity classes cover " +
             std::to_string(total) + " strings, expected " +
             std::to_string(strings_with_inner_even);
    });
    c.check(2 * best >= strings_with_inner_even, [&] {
      return "n=" + std::to_string(n) + ": best class " + std::to_string(best) +
             " below half of " + std::to_string(strings_with_inner_even);
    });
  }
  return c.take();
}

int hamming_weight_distance(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

PropertyResult inner_code_contract(const SuiteCaps& caps) {
  PropertyCheck c("inner_code_contract");
  (void)caps;
  for (int m = 1; m <= 9; ++m) {
    const InnerCode repetition = InnerCode::repetition(m);
    const auto rep_words = repetition.enumerate();
    c.check(rep_words.size() == 2 && rep_words.size() == repetition.cardinality(),
            "repetition code must have the two constant words");
    c.check(hamming_weight_distance(rep_words.front(), rep_words.back()) == m,
            "repetition distance must equal the length");
    const InnerCode standard = InnerCode::standard(m);
    c.check(standard.kind() == (m < 3 ? InnerCode::Kind::kRepetition
                                      : InnerCode::Kind::kShortenedHamming),
            "standard choice must switch at length 3");
    if (m < 3) continue;
    const InnerCode hamming = InnerCode::shortened_hamming(m);
    const auto words = hamming.enumerate();
    c.check(words.size() == hamming.cardinality(), [&] {
      return "m=" + std::to_string(m) + ": enumerated " +
             std::to_string(words.size()) + " words, cardinality says " +
             std::to_string(hamming.cardinality());
    });
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        c.check(hamming_weight_distance(words[i], words[j]) >= 3, [&] {
          return "m=" + std::to_string(m) + ": pair at Hamming distance < 3";
        });
    for (const auto& word : words) {
      c.check(hamming.contains(word), "member must test as member");
      const auto same = hamming.correct(word);
      c.check(same && *same == word, "clean word must correct to itself");
      for (int bit = 0; bit < m; ++bit) {
        std::vector<int> flipped = word;
        flipped[static_cast<std::size_t>(bit)] ^= 1;
        const auto fixed = hamming.correct(flipped);
        c.check(fixed && *fixed == word, [&] {
          return "m=" + std::to_string(m) + ": flip at " + std::to_string(bit) +
                 " not corrected";
        });
      }
    }
    if (m == 3)
      c.check(words == std::vector<std::vector<int>>({{0, 0, 0}, {1, 1, 1}}),
              "length-3 instance must be the repetition words");
    if (m == 7)
      c.check(words.size() == 16, "length-7 instance must have 16 words");
  }
  return c.take();
}

PropertyResult syndrome_custom_modulus(const SuiteCaps& caps) {
  PropertyCheck c("syndrome_custom_modulus");
  c.check(throws<std::invalid_argument>([] { QarySyndromeCode(4, 5, 0, 0, 9); }),
          "modulus sharing a factor with an alphabet difference must be rejected");
  c.check(throws<std::invalid_argument>([] { QarySyndromeCode(4, 5, 0, 0, 8); }),
          "even modulus must be rejected");
  c.check(throws<std::invalid_argument>([] { QarySyndromeCode(4, 5, 0, 0, 3); }),
          "modulus below the length must be rejected");
  const int q = 4;
  const int n = 5;
  const int modulus = 7;
  require_space_budget(q, n, budget_of(caps), "verify syndrome_custom_modulus");
  for (int s1 = 0; s1 < 2 * q - 1; ++s1) {
    for (int s2 = 0; s2 < modulus; ++s2) {
      const QarySyndromeCode params(q, n, s1, s2, modulus);
      const Code codebook = enumerate_codewords(params, budget_of(caps));
      if (codebook.size() == 0) {
        c.tally();
        continue;
      }
      std::ostringstream label;
      label << "q=4 n=5 m=7 s1=" << s1 << " s2=" << s2;
      roundtrip_all_swaps(c, codebook, params, label.str());
    }
  }
  {
    // Prime powers work as long as they are odd and coprime with the
    // alphabet differences.
    const QarySyndromeCode params(5, 5, 0, 0, 25);
    const Code codebook = enumerate_codewords(params, budget_of(caps));
    if (codebook.size() > 0)
      roundtrip_all_swaps(c, codebook, params, "q=5 n=5 m=25");
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// zero_error suite
// ---------------------------------------------------------------------------

PropertyResult codebook_examples(const SuiteCaps&) {
  PropertyCheck c("codebook_examples");
  const AlphabetPartition binary = AlphabetPartition::halves(2);
  {
    const ZeroErrorCodebook book(6, binary);
    const auto words = book.enumerate();
    std::vector<QaryString> expected;
    for (const char* text :
         {"0,0,0,0,0,0", "0,0,0,1,1,1", "0,0,1,1,1,1", "1,1,0,0,0,0",
          "1,1,1,0,0,0", "1,1,1,1,1,1"})
      expected.push_back(QaryString::parse(2, text));
    std::sort(expected.begin(), expected.end());
    c.check(words == expected, "the six length-6 binary codewords");
    c.check(book.count() == 6, "count must agree");
  }
  c.check(ZeroErrorCodebook(1, binary).enumerate().empty(),
          "length 1 admits no block decomposition");
  {
    const auto words = ZeroErrorCodebook(3, binary).enumerate();
    c.check(words.size() == 2 && words.front() == QaryString(2, {0, 0, 0}) &&
                words.back() == QaryString(2, {1, 1, 1}),
            "length 3 must give the two constant words");
  }
  c.check(count_codewords(1, 1, 0) == 1, "empty concatenation counts once");
  c.check(count_codewords(1, 1, 5) == 0, "length 5 has no decomposition");
  return c.take();
}

PropertyResult zero_error_distance(const SuiteCaps& caps) {
  PropertyCheck c("zero_error_distance");
  std::vector<std::pair<int, int>> configs;
  if (caps.q != 0) {
    configs.emplace_back(caps.q, cap_or(caps, caps.q == 2 ? 12 : 9));
  } else {
    configs.emplace_back(2, cap_or(caps, 12));
    configs.emplace_back(3, cap_or(caps, 9));
  }
  for (const auto& [q, ncap] : configs) {
    for (int n = 3; n <= ncap; ++n) {
      const ZeroErrorCodebook book(n, AlphabetPartition::halves(q));
      const auto words = book.enumerate(budget_of(caps));
      if (words.size() < 2) {
        c.tally();
        continue;
      }
      const Code code(q, n, words);
      c.check(min_distance(code, DistanceKind::kStandard) == Distance::infinity(),
              [&] {
                return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                       ": two codewords share a descendant";
              });
    }
  }
  return c.take();
}

PropertyResult decoder_full_recovery(const SuiteCaps& caps) {
  PropertyCheck c("decoder_full_recovery");
  std::vector<std::pair<int, int>> configs;
  if (caps.q != 0) {
    configs.emplace_back(caps.q, cap_or(caps, caps.q == 2 ? 12 : 9));
  } else {
    configs.emplace_back(2, cap_or(caps, 12));
    configs.emplace_back(3, cap_or(caps, 9));
  }
  for (const auto& [q, ncap] : configs) {
    for (int n = 3; n <= ncap; ++n) {
      const ZeroErrorCodebook book(n, AlphabetPartition::halves(q));
      if (book.enumerate(budget_of(caps)).empty()) {
        c.tally();
        continue;
      }
      const ZeroErrorDecoder decoder(book, caps.force);
      for (const QaryString& x : book.enumerate(budget_of(caps))) {
        for (const QaryString& y : ball_disjoint(x, n / 2)) {
          bool ok = false;
          std::string note;
          try {
            ok = decoder.decode(y) == x;
            if (!ok) note = "decoded to a different codeword";
          } catch (const UncorrectableInput& error) {
            note = error.what();
          }
          c.check(ok, [&] {
            return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                   " x=" + x.to_string() + " y=" + y.to_string() + ": " + note;
          });
        }
      }
    }
  }
  {
    // Full sweep at q=2, n=6: everything outside the descendant sets must be
    // rejected, everything inside must decode to its unique source.
    const ZeroErrorCodebook book(6, AlphabetPartition::halves(2));
    const ZeroErrorDecoder decoder(book, false);
    std::map<QaryString, QaryString> owner;
    for (const QaryString& x : book.enumerate())
      for (const QaryString& y : ball_disjoint(x, 3)) owner.emplace(y, x);
    for_each_symbol_vector(2, 6, [&](const std::vector<int>& symbols) {
      const QaryString y(2, symbols);
      const auto it = owner.find(y);
      if (it == owner.end()) {
        c.check(throws<UncorrectableInput>([&] { decoder.decode(y); }), [&] {
          return y.to_string() + " is unreachable yet decoded";
        });
      } else {
        bool ok = false;
        try {
          ok = decoder.decode(y) == it->second;
        } catch (const UncorrectableInput&) {
        }
        c.check(ok, [&] { return y.to_string() + " failed to decode"; });
      }
    });
  }
  return c.take();
}

PropertyResult indicator_matches_binary(const SuiteCaps& caps) {
  PropertyCheck c("indicator_matches_binary");
  for (int q : alphabets(caps, {3, 4})) {
    const int ncap = cap_or(caps, 9);
    const AlphabetPartition partition = AlphabetPartition::halves(q);
    for (int n = 3; n <= ncap; ++n) {
      std::set<std::vector<int>> images;
      for (const QaryString& x :
           ZeroErrorCodebook(n, partition).enumerate(budget_of(caps))) {
        std::vector<int> indicator(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          indicator[static_cast<std::size_t>(i)] = partition.class_of(x.symbol(i));
        images.insert(std::move(indicator));
      }
      std::set<std::vector<int>> binary;
      for (const QaryString& x :
           ZeroErrorCodebook(n, AlphabetPartition::halves(2))
               .enumerate(budget_of(caps)))
        binary.insert(x.symbols());
      c.check(images == binary, [&] {
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
               ": indicator images differ from the binary codebook";
      });
    }
  }
  return c.take();
}

PropertyResult count_matches_enumeration(const SuiteCaps& caps) {
  PropertyCheck c("count_matches_enumeration");
  for (int q : alphabets(caps, {2, 3, 4})) {
    const int ncap = cap_or(caps, 15);
    for (int n = 1; n <= ncap; ++n) {
      const ZeroErrorCodebook book(n, AlphabetPartition::halves(q));
      const auto words = book.enumerate(budget_of(caps));
      c.check(book.count() == BigInt(words.size()), [&] {
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
               ": recurrence count does not match enumeration";
      });
      for (const QaryString& w : words)
        c.check(book.contains(w), [&] {
          return "q=" + std::to_string(q) + " n=" + std::to_string(n) + " " +
                 w.to_string() + ": enumerated word fails membership";
        });
    }
  }
  return c.take();
}

PropertyResult growth_convergence(const SuiteCaps& caps) {
  PropertyCheck c("growth_convergence");
  for (int q : alphabets(caps, {2, 3, 4})) {
    const int s0 = q / 2;
    const int s1 = q - s0;
    const int n = 600;
    const BigInt count = count_codewords(s0, s1, n);
    const double rate = log2_big(count) / n;
    c.check(std::abs(rate - zero_error_rate(q)) <= 0.02, [&] {
      std::ostringstream os;
      os << "q=" << q << ": rate at n=600 is " << rate << ", limit "
         << zero_error_rate(q);
      return os.str();
    });
  }
  return c.take();
}

PropertyResult lambda_contract(const SuiteCaps&) {
  PropertyCheck c("lambda_contract");
  for (int q = 2; q <= 8; ++q) {
    const double s0 = q / 2;
    const double s1 = q - q / 2;
    const double root = growth_root(q);
    const double residual = std::pow(root, 6) - q * std::pow(root, 3) -
                            2 * s0 * s1 * root * root - 2 * s0 * s1;
    c.check(std::abs(residual) <= 1e-9, [&] {
      std::ostringstream os;
      os << "q=" << q << ": polynomial residual " << residual;
      return os.str();
    });
    c.check(root > 1.0 && root < q + 1.0, "root must lie in (1, q+1)");
  }
  c.check(std::abs(growth_root(2) - 1.561) <= 1e-3, "binary root near 1.561");
  c.check(std::abs(zero_error_rate(2) - 0.643) <= 1e-3, "binary rate near 0.643");
  c.check(growth_root(4) > 2.0 && growth_root(4) < 2.1,
          "q=4 root must lie in (2.0, 2.1)");
  c.check(zero_error_rate(3) > 0.5, "q=3 rate must beat half a bit");
  c.check(zero_error_rate(8) < 2.0, "q=8 rate must stay below 2 bits");
  for (int q : {2, 3, 4})
    c.check(zero_error_rate(q) > half_log_rate(q), [&] {
      return "q=" + std::to_string(q) + ": block rate must beat the split rate";
    });
  for (int q : {5, 6, 7, 8})
    c.check(zero_error_rate(q) < half_log_rate(q), [&] {
      return "q=" + std::to_string(q) +
             ": split rate must beat the block rate";
    });
  return c.take();
}

PropertyResult decode_example(const SuiteCaps&) {
  PropertyCheck c("decode_example");
  const AlphabetPartition partition = AlphabetPartition::parse(4, "0,1|2,3");
  const ZeroErrorCodebook book(6, partition);
  const QaryString x(4, {0, 0, 0, 1, 1, 1});
  c.check(book.contains(x), "(0,0,0,1,1,1) must be a codeword");
  const ZeroErrorDecoder decoder(book, false);
  const QaryString y =
      apply_disjoint(x, TranspositionPattern::disjoint({3}));
  c.check(y == QaryString(4, {0, 0, 1, 0, 1, 1}), "swap at 3 must give 001011");
  c.check(decoder.decode(y) == x, "the crossed block boundary must be repaired");
  return c.take();
}

PropertyResult partition_validation(const SuiteCaps&) {
  PropertyCheck c("partition_validation");
  {
    const AlphabetPartition partition = AlphabetPartition::parse(4, "0,1|2,3");
    c.check(partition.class0() == std::vector<int>({0, 1}) &&
                partition.class1() == std::vector<int>({2, 3}),
            "parse must preserve the two classes");
    c.check(partition.class_of(1) == 0 && partition.class_of(2) == 1,
            "class lookup");
  }
  c.check(throws<std::invalid_argument>(
              [] { AlphabetPartition::parse(3, "0,1|1,2"); }),
          "overlapping classes must be rejected");
  c.check(throws<std::invalid_argument>(
              [] { AlphabetPartition::parse(3, "0|1"); }),
          "missing symbols must be rejected");
  c.check(throws<std::invalid_argument>(
              [] { AlphabetPartition::parse(2, "0,1|"); }),
          "an empty class must be rejected");
  {
    const AlphabetPartition halves = AlphabetPartition::halves(5);
    c.check(halves.class0().size() == 2 && halves.class1().size() == 3,
            "halves must split floor/ceil");
  }
  {
    const AlphabetPartition skew = AlphabetPartition::parse(4, "0|1,2,3");
    for (int n = 1; n <= 10; ++n) {
      const ZeroErrorCodebook book(n, skew);
      c.check(book.count() == BigInt(book.enumerate().size()), [&] {
        return "skew partition n=" + std::to_string(n) +
               ": count does not match enumeration";
      });
    }
  }
  return c.take();
}

PropertyResult joint2_dominance(const SuiteCaps&) {
  PropertyCheck c("joint2_dominance");
  for (int q = 2; q <= 6; ++q) {
    for (int i = 0; i <= 100; ++i) {
      const double delta = i / 100.0;
      const RateCurvePoint point = combined_rate(q, delta);
      const double expected =
          std::max({point.r_gv, point.r_zero_error, point.r_half_log});
      c.check(point.r_combined == expected, [&] {
        std::ostringstream os;
        os << "q=" << q << " delta=" << delta
           << ": combined is not the maximum of its parts";
        return os.str();
      });
      c.check(point.r_combined >= point.r_gv &&
                  point.r_combined >= point.r_zero_error &&
                  point.r_combined >= point.r_half_log,
              "combined must dominate each component");
    }
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// counts suite
// ---------------------------------------------------------------------------

PropertyResult runs_census(const SuiteCaps& caps) {
  PropertyCheck c("runs_census");
  c.check(count_strings_with_runs(2, 3, 2) == 4, "two-run binary triples");
  for (int q : alphabets(caps, {2, 3, 4})) {
    const int ncap = cap_or(caps, 12);
    for (int n = 1; n <= ncap; ++n) {
      BigInt total = 0;
      for (int r = 1; r <= n; ++r) total += count_strings_with_runs(q, n, r);
      c.check(total == big_pow(q, static_cast<unsigned>(n)), [&] {
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
               ": run counts do not partition the space";
      });
      c.check(count_strings_with_runs(q, n, 1) == q, "one-run strings");
      c.check(count_strings_with_runs(q, n, 0) == 0 &&
                  count_strings_with_runs(q, n, n + 1) == 0,
              "out-of-range run counts must be zero");
    }
    const int brute_cap = std::min(cap_or(caps, 7), 7);
    if (q <= 3) {
      for (int n = 1; n <= brute_cap; ++n) {
        require_space_budget(q, n, budget_of(caps), "verify runs_census");
        std::map<int, long long> bucket;
        for (const QaryString& x : all_strings(q, n)) ++bucket[run_count(x)];
        for (int r = 1; r <= n; ++r)
          c.check(count_strings_with_runs(q, n, r) == BigInt(bucket[r]), [&] {
            return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                   " r=" + std::to_string(r) + ": formula disagrees with census";
          });
      }
    }
  }
  return c.take();
}

PropertyResult pattern_pairs_match(const SuiteCaps& caps) {
  PropertyCheck c("pattern_pairs_match");
  c.check(total_exact_count(2, 2, 1) == 2, "two binary pairs at n=2");
  c.check(total_exact_count(2, 3, 1) == 8, "eight binary pairs at n=3");
  for (int q : alphabets(caps, {2, 3, 4})) {
    const int ncap = cap_or(caps, 10);
    for (int n = 1; n <= ncap; ++n) {
      for (int r = 0; 2 * r <= n; ++r) {
        c.check(total_exact_count(q, n, r) == total_exact_count_closed(q, n, r),
                [&] {
                  return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r) +
                         ": recursion and closed form differ";
                });
      }
      c.check(total_exact_count(q, n, 0) == big_pow(q, static_cast<unsigned>(n)),
              "r=0 must count every string once");
      // Brute-force oracle: per string, count the admissible location sets
      // whose swaps all change the string (pairwise gaps >= 2), via a DP
      // over the effective locations.
      require_space_budget(q, n, budget_of(caps), "verify pattern_pairs_match");
      const int rmax = n / 2;
      std::vector<BigInt> by_count(static_cast<std::size_t>(rmax) + 1, 0);
      std::vector<std::vector<std::uint64_t>> table(
          static_cast<std::size_t>(n) + 1,
          std::vector<std::uint64_t>(static_cast<std::size_t>(rmax) + 1, 0));
      for_each_symbol_vector(q, n, [&](const std::vector<int>& symbols) {
        for (auto& row : table) std::fill(row.begin(), row.end(), 0);
        table[0][0] = 1;
        for (int i = 1; i <= n - 1; ++i) {
          const bool effective =
              symbols[static_cast<std::size_t>(i - 1)] !=
              symbols[static_cast<std::size_t>(i)];
          const auto& skip = table[static_cast<std::size_t>(i - 1)];
          const auto& take =
              table[static_cast<std::size_t>(std::max(i - 2, 0))];
          auto& row = table[static_cast<std::size_t>(i)];
          row[0] = 1;
          for (int j = 1; j <= rmax; ++j) {
            row[static_cast<std::size_t>(j)] =
                skip[static_cast<std::size_t>(j)] +
                (effective ? take[static_cast<std::size_t>(j - 1)] : 0);
          }
        }
        const auto& last = table[static_cast<std::size_t>(std::max(n - 1, 0))];
        for (int j = 0; j <= rmax; ++j)
          by_count[static_cast<std::size_t>(j)] +=
              last[static_cast<std::size_t>(j)];
      });
      for (int r = 0; r <= rmax; ++r)
        c.check(by_count[static_cast<std::size_t>(r)] ==
                    total_exact_count(q, n, r),
                [&] {
                  return "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r) +
                         ": effective-swap oracle disagrees";
                });
    }
  }
  return c.take();
}

PropertyResult total_ball_sandwich(const SuiteCaps& caps) {
  PropertyCheck c("total_ball_sandwich");
  for (int q : alphabets(caps, {2, 3})) {
    const int ncap = cap_or(caps, 8);
    for (int n = 1; n <= ncap; ++n) {
      for (int r = 0; 2 * r <= n; ++r) {
        const BigInt total = total_ball_count(q, n, r, budget_of(caps));
        if (r == 0)
          c.check(total == big_pow(q, static_cast<unsigned>(n)),
                  "radius 0 total must be the space size");
        BigInt max_term = 0;
        BigInt sum = 0;
        for (int rp = 0; rp <= r; ++rp) {
          const BigInt term = total_exact_count(q, n, rp);
          max_term = std::max(max_term, term);
          sum += term;
        }
        c.check(max_term <= total && total <= sum, [&] {
          std::ostringstream os;
          os << "q=" << q << " n=" << n << " r=" << r << ": total " << total
             << " outside [" << max_term << ", " << sum << "]";
          return os.str();
        });
      }
    }
  }
  return c.take();
}

PropertyResult metric_total_dominates(const SuiteCaps& caps) {
  PropertyCheck c("metric_total_dominates");
  const int q = caps.q != 0 ? caps.q : 2;
  const int ncap = cap_or(caps, 8);
  for (int n = 1; n <= ncap; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const BigInt plain = total_ball_count(q, n, r, budget_of(caps));
      const BigInt metric = total_metric_ball_count(q, n, r, caps.force);
      c.check(metric >= plain, [&] {
        std::ostringstream os;
        os << "q=" << q << " n=" << n << " r=" << r << ": metric total "
           << metric << " below pattern total " << plain;
        return os.str();
      });
    }
  }
  return c.take();
}

PropertyResult run_count_exponent(const SuiteCaps& caps) {
  PropertyCheck c("run_count_exponent");
  for (int q : alphabets(caps, {2, 3, 4})) {
    const long long n = 5000;
    for (const double rho : {0.2, 1.0 - 1.0 / q, 0.9}) {
      const double got = runs_total_exponent_at(q, n, rho);
      const double want = rho < 1.0 - 1.0 / q ? entropy_q(q, rho) : 1.0;
      c.check(std::abs(got - want) <= 0.01, [&] {
        std::ostringstream os;
        os << "q=" << q << " rho=" << rho << ": exponent " << got
           << ", expected " << want;
        return os.str();
      });
    }
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// bounds suite
// ---------------------------------------------------------------------------

PropertyResult entropy_values(const SuiteCaps&) {
  PropertyCheck c("entropy_values");
  c.check(binary_entropy(0.0) == 0.0 && binary_entropy(1.0) == 0.0,
          "entropy endpoints");
  c.check(std::abs(binary_entropy(0.5) - 1.0) <= 1e-15, "entropy peak");
  for (int q = 2; q <= 6; ++q) {
    c.check(entropy_q(q, 0.0) == 0.0, "q-ary entropy at zero");
    c.check(std::abs(entropy_q(q, 1.0 - 1.0 / q) - 1.0) <= 1e-12,
            "q-ary entropy peak must equal one");
  }
  c.check(throws<std::invalid_argument>([] { entropy_q(3, -0.1); }) &&
              throws<std::invalid_argument>([] { entropy_q(3, 1.1); }),
          "q-ary entropy domain");
  return c.take();
}

PropertyResult alpha_contract(const SuiteCaps&) {
  PropertyCheck c("alpha_contract");
  for (int q = 2; q <= 4; ++q)
    c.check(alpha(q, 0.0) == std::log2(static_cast<double>(q)),
            "alpha(0) must be exactly log2 q");
  c.check(std::abs(alpha(2, 0.5) - 0.5) <= 1e-12, "alpha(2, 1/2) must be 1/2");
  c.check(throws<std::invalid_argument>([] { alpha(2, -0.01); }) &&
              throws<std::invalid_argument>([] { alpha(2, 0.51); }),
          "alpha domain");
  for (int q = 2; q <= 4; ++q) {
    const double h = 1e-3;
    double previous = alpha(q, 0.0);
    double current = alpha(q, h);
    for (int i = 2; i * h <= 0.5 + 1e-12; ++i) {
      const double next = alpha(q, std::min(i * h, 0.5));
      c.check(next - 2 * current + previous <= 1e-9, [&] {
        std::ostringstream os;
        os << "q=" << q << " rho=" << i * h << ": positive second difference";
        return os.str();
      });
      previous = current;
      current = next;
    }
    const double peak = rho_star(q);
    c.check(alpha(q, peak - 1e-4) < alpha(q, peak) &&
                alpha(q, peak + 1e-4) < alpha(q, peak),
            "alpha must peak at rho_star");
  }
  return c.take();
}

PropertyResult rho_star_contract(const SuiteCaps&) {
  PropertyCheck c("rho_star_contract");
  c.check(std::abs(rho_star(2) - 0.21132486540518713) <= 1e-12,
          "binary argmax value");
  c.check(std::abs(rho_star(1 << 30) - 0.27639320225002106) <= 1e-4,
          "large-alphabet limit");
  for (int q = 2; q <= 4; ++q) {
    const double numeric = alpha_numeric_argmax(q);
    c.check(std::abs(rho_star(q) - numeric) <= 1e-9, [&] {
      std::ostringstream os;
      os << "q=" << q << ": closed form " << rho_star(q) << " vs numeric "
         << numeric;
      return os.str();
    });
  }
  return c.take();
}

PropertyResult alpha_exponent_consistency(const SuiteCaps&) {
  PropertyCheck c("alpha_exponent_consistency");
  for (int q = 2; q <= 4; ++q) {
    for (const double rho : {0.1, 0.2, 0.3}) {
      const long long n = 10000;
      const long long r = static_cast<long long>(rho * n);
      const double exponent = exact_count_exponent_at(q, n, r);
      c.check(std::abs(exponent - alpha(q, rho)) <= 0.01, [&] {
        std::ostringstream os;
        os << "q=" << q << " rho=" << rho << ": exponent " << exponent
           << " vs alpha " << alpha(q, rho);
        return os.str();
      });
    }
  }
  return c.take();
}

PropertyResult beta_contract(const SuiteCaps&) {
  PropertyCheck c("beta_contract");
  for (int q = 2; q <= 4; ++q) {
    c.check(beta(q, 0.0) == std::log2(static_cast<double>(q)),
            "beta(0) must be exactly log2 q");
    c.check(beta(q, 0.5) == alpha(q, rho_star(q)),
            "beta must plateau at the alpha maximum");
    double previous = beta(q, 0.0);
    for (int i = 1; i <= 1000; ++i) {
      const double value = beta(q, i / 1000.0);
      c.check(value + 1e-12 >= previous, "beta must be nondecreasing");
      c.check(std::abs(value - previous) <= 0.05,
              "beta must move continuously on the grid");
      previous = value;
    }
  }
  return c.take();
}

PropertyResult beta_bar_contract(const SuiteCaps& caps) {
  PropertyCheck c("beta_bar_contract");
  for (int q = 2; q <= 4; ++q) {
    c.check(beta_bar_upper(q, 0.0) == std::log2(static_cast<double>(q)),
            "beta_bar(0) must be exactly log2 q");
    for (int i = 0; i <= 100; ++i) {
      const double rho = i / 100.0;
      c.check(beta_bar_upper(q, rho) >= beta(q, rho) - 1e-9, [&] {
        std::ostringstream os;
        os << "q=" << q << " rho=" << rho << ": upper bound below beta";
        return os.str();
      });
    }
  }
  for (const double rho : {0.25, 0.5}) {
    const int n = 8;
    const int r = static_cast<int>(rho * n);
    const BigInt total = total_metric_ball_count(2, n, r, caps.force);
    const double exponent = log2_big(total) / n;
    c.check(exponent <= beta_bar_upper(2, rho) + 0.15, [&] {
      std::ostringstream os;
      os << "rho=" << rho << ": finite-n exponent " << exponent
         << " above the bound plus slack";
      return os.str();
    });
  }
  return c.take();
}

PropertyResult gv_contract(const SuiteCaps&) {
  PropertyCheck c("gv_contract");
  for (int q = 2; q <= 8; ++q)
    c.check(gv_rate(q, 0.0) == std::log2(static_cast<double>(q)),
            "gv(0) must be exactly log2 q");
  c.check(gv_rate(2, 0.0) == 1.0, "gv(2, 0) must be exactly one bit");
  c.check(gv_rate(4, 0.0) == 2.0, "gv(4, 0) must be exactly two bits");
  for (int q : {2, 4}) {
    double previous = gv_rate(q, 0.0);
    for (int i = 1; i <= 200; ++i) {
      const double value = gv_rate(q, i / 200.0);
      c.check(value <= previous + 1e-9, [&] {
        std::ostringstream os;
        os << "q=" << q << " delta=" << i / 200.0 << ": rate increased";
        return os.str();
      });
      previous = value;
    }
  }
  return c.take();
}

PropertyResult combined_curve_contract(const SuiteCaps&) {
  PropertyCheck c("combined_curve_contract");
  for (int q : {2, 4}) {
    const auto curve = rate_curve(q, 0.0, 1.0, 0.001);
    c.check(curve.size() == 1001, "the unit grid must hold 1001 points");
    for (const RateCurvePoint& point : curve) {
      c.check(point.r_combined ==
                  std::max({point.r_gv, point.r_zero_error, point.r_half_log}),
              "every emitted point must take the maximum");
    }
    for (std::size_t i = 1; i < curve.size(); ++i)
      c.check(curve[i].delta > curve[i - 1].delta, "grid must increase");
  }
  c.check(combined_rate(4, 1.0).r_combined == zero_error_rate(4) &&
              zero_error_rate(4) > 1.0,
          "q=4 tail must follow the block construction above one bit");
  c.check(std::abs(combined_rate(2, 1.0).r_combined - 0.643) <= 1e-3,
          "q=2 tail near 0.643");
  c.check(std::abs(combined_rate(8, 1.0).r_combined - 2.0) <= 1e-12,
          "q=8 tail must be the split rate of two bits");
  return c.take();
}

// The bisection localizes the crossover delta to 1e-6, so the rate residual
// there is bounded by the local slope times that width.
double crossover_rate_tolerance(int q, double delta) {
  const double h = 1e-4;
  const double slope = (gv_rate(q, delta + h) - gv_rate(q, delta - h)) / (2 * h);
  return std::abs(slope) * 1e-6 + 1e-12;
}

PropertyResult crossover_contract(const SuiteCaps&) {
  PropertyCheck c("crossover_contract");
  const std::optional<double> c4 = crossover_delta0(4);
  c.check(c4.has_value(), "q=4 crossover must exist");
  if (c4) {
    const double floor4 = std::max(zero_error_rate(4), half_log_rate(4));
    c.check(std::abs(*c4 - 0.343) <= 0.005, [&] {
      std::ostringstream os;
      os << "q=4 crossover at " << *c4;
      return os.str();
    });
    c.check(gv_rate(4, *c4 - 0.01) > floor4 && gv_rate(4, *c4 + 0.01) < floor4,
            "crossover must be bracketed");
    c.check(std::abs(gv_rate(4, *c4) - floor4) <=
                crossover_rate_tolerance(4, *c4),
            "rates must agree at the crossover");
  }
  const std::optional<double> c2 = crossover_delta0(2);
  c.check(c2.has_value() && *c2 > 0.0 && *c2 < 1.0,
          "q=2 crossover must exist inside (0,1)");
  if (c2) {
    const double floor2 = std::max(zero_error_rate(2), half_log_rate(2));
    c.check(std::abs(gv_rate(2, *c2) - floor2) <=
                crossover_rate_tolerance(2, *c2),
            "q=2 rates must agree at the crossover");
  }
  return c.take();
}

PropertyResult cardinality_envelope(const SuiteCaps&) {
  PropertyCheck c("cardinality_envelope");
  for (int q = 2; q <= 5; ++q) {
    for (int n : {4, 8, 16, 32}) {
      const CardinalityBounds t1 = cardinality_bounds_t1(q, n);
      const double qn = std::pow(static_cast<double>(q), n);
      const double expected_lower =
          q == 2 ? qn / n : qn / ((2.0 * q - 1.0) * n);
      const double expected_upper =
          qn * q / ((q - 1.0) * n);
      c.check(std::abs(t1.lower - expected_lower) <=
                  1e-9 * std::abs(expected_lower),
              [&] {
                std::ostringstream os;
                os << "q=" << q << " n=" << n << ": t=1 lower " << t1.lower
                   << " vs " << expected_lower;
                return os.str();
              });
      c.check(std::abs(t1.upper - expected_upper) <=
                  1e-9 * std::abs(expected_upper),
              [&] {
                std::ostringstream os;
                os << "q=" << q << " n=" << n << ": t=1 upper " << t1.upper
                   << " vs " << expected_upper;
                return os.str();
              });
      const CardinalityBounds general = cardinality_bounds_t(q, n, 1);
      c.check(std::abs(general.upper - t1.upper) <= 1e-12 * t1.upper,
              "the general upper bound at t=1 must match the special case");
      for (int t = 1; t <= 3; ++t) {
        if (n < 4 * t) continue;
        const CardinalityBounds bounds = cardinality_bounds_t(q, n, t);
        c.check(bounds.lower <= bounds.upper, [&] {
          std::ostringstream os;
          os << "q=" << q << " n=" << n << " t=" << t
             << ": lower exceeds upper";
          return os.str();
        });
        if (q == 2) {
          const double ct = t == 1 ? 0.5 : t == 2 ? 1.0 / 3.0 : 1.0 / (2 * t + 1);
          const double expected =
              ct * std::pow(2.0, n + t) / std::pow(static_cast<double>(n), t);
          c.check(std::abs(bounds.lower - expected) <= 1e-9 * expected,
                  "binary greedy constant must match");
        }
      }
    }
  }
  return c.take();
}

PropertyResult search_vs_envelope(const SuiteCaps& caps) {
  PropertyCheck c("search_vs_envelope");
  c.check(optimal_code_search(2, 3, 0, ChannelModel::kDisjoint).max_size == 8,
          "t=0 admits the whole space");
  c.check(optimal_code_search(2, 2, 1, ChannelModel::kDisjoint).max_size == 3,
          "n=2 search must find 3 words");
  const int ncap = cap_or(caps, 6);
  for (int n = 2; n <= ncap; ++n) {
    const OptimalCodeResult result =
        optimal_code_search(2, n, 1, ChannelModel::kDisjoint, caps.force);
    c.check(corrects(result.witness, 1, ChannelModel::kDisjoint),
            "search witness must correct one swap");
    c.check(result.witness.size() == result.max_size,
            "witness must attain the optimum");
    const int p = smallest_valid_prime(2, n);
    std::size_t best = 0;
    for (int s1 = 0; s1 < 3; ++s1)
      for (int s2 = 0; s2 < p; ++s2)
        best = std::max(best,
                        enumerate_codewords(QarySyndromeCode(2, n, s1, s2),
                                            budget_of(caps))
                            .size());
    c.check(best <= result.max_size, [&] {
      return "n=" + std::to_string(n) + ": constructed code of size " +
             std::to_string(best) + " beats the exhaustive optimum " +
             std::to_string(result.max_size);
    });
    c.check(static_cast<double>(result.max_size) <=
                static_cast<double>(space_size(2, n)),
            "optimum cannot exceed the space");
  }
  return c.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "balls", "distances", "single_codes", "zero_error", "counts", "bounds"};
  return names;
}

std::vector<PropertyResult> run_balls_suite(const SuiteCaps& caps) {
  std::vector<PropertyResult> results;
  results.push_back(swap_involution(caps));
  results.push_back(swap_preserves_multiset(caps));
  results.push_back(disjoint_pattern_census(caps));
  results.push_back(run_count_basic(caps));
  results.push_back(ball_size_run_count(caps));
  results.push_back(ball_containment_chain(caps));
  results.push_back(ball_sandwich_runs(caps));
  results.push_back(metric_ball_bound(caps));
  results.push_back(random_pattern_contract(caps));
  return results;
}

std::vector<PropertyResult> run_distances_suite(const SuiteCaps& caps) {
  std::vector<PropertyResult> results;
  results.push_back(distance_axioms(caps));
  results.push_back(triangle_counterexample(caps));
  results.push_back(successive_metric_axioms(caps));
  results.push_back(max_distance_bound(caps));
  results.push_back(max_distance_witnesses(caps));
  results.push_back(min_distance_examples(caps));
  results.push_back(distance_correction_sufficiency(caps));
  results.push_back(successive_correction_iff(caps));
  return results;
}

std::vector<PropertyResult> run_single_codes_suite(const SuiteCaps& caps) {
  std::vector<PropertyResult> results;
  results.push_back(prime_selection(caps));
  results.push_back(syndrome_partition(caps));
  results.push_back(syndrome_corrects_roundtrip(caps));
  results.push_back(syndrome_custom_modulus(caps));
  results.push_back(binary_corrects_roundtrip(caps));
  results.push_back(binary_cardinality_bound(caps));
  results.push_back(inner_code_contract(caps));
  return results;
}

std::vector<PropertyResult> run_zero_error_suite(const SuiteCaps& caps) {
  std::vector<PropertyResult> results;
  results.push_back(codebook_examples(caps));
  results.push_back(zero_error_distance(caps));
  results.push_back(decoder_full_recovery(caps));
  results.push_back(indicator_matches_binary(caps));
  results.push_back(count_matches_enumeration(caps));
  results.push_back(growth_convergence(caps));
  results.push_back(lambda_contract(caps));
  results.push_back(decode_example(caps));
  results.push_back(partition_validation(caps));
  results.push_back(joint2_dominance(caps));
  return results;
}

std::vector<PropertyResult> run_counts_suite(const SuiteCaps& caps) {
  std::vector<PropertyResult> results;
  results.push_back(runs_census(caps));
  results.push_back(pattern_pairs_match(caps));
  results.push_back(total_ball_sandwich(caps));
  results.push_back(metric_total_dominates(caps));
  results.push_back(run_count_exponent(caps));
  return results;
}

std::vector<PropertyResult> run_bounds_suite(const SuiteCaps& caps) {
  std::vector<PropertyResult> results;
  results.push_back(entropy_values(caps));
  results.push_back(alpha_contract(caps));
  results.push_back(rho_star_contract(caps));
  results.push_back(alpha_exponent_consistency(caps));
  results.push_back(beta_contract(caps));
  results.push_back(beta_bar_contract(caps));
  results.push_back(gv_contract(caps));
  results.push_back(combined_curve_contract(caps));
  results.push_back(crossover_contract(caps));
  results.push_back(cardinality_envelope(caps));
  results.push_back(search_vs_envelope(caps));
  return results;
}

std::vector<PropertyResult> run_suite(const std::string& suite,
                                      const SuiteCaps& caps) {
  if (suite == "balls") return run_balls_suite(caps);
  if (suite == "distances") return run_distances_suite(caps);
  if (suite == "single_codes") return run_single_codes_suite(caps);
  if (suite == "zero_error") return run_zero_error_suite(caps);
  if (suite == "counts") return run_counts_suite(caps);
  if (suite == "bounds") return run_bounds_suite(caps);
  throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
}

}  // namespace swapcodes::verify
