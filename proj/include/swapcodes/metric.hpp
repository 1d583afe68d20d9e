#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swapcodes/errors.hpp"
#include "swapcodes/qstring.hpp"

namespace swapcodes {

// Number of swaps separating two strings. The value may be infinite: two
// strings need not have a common descendant even when one can be sorted
// into the other. Arithmetic is deliberately not provided; compare, test
// finiteness, or extract the finite step count.
class Distance {
 public:
  static Distance infinity() { return Distance(std::nullopt); }
  static Distance of(int steps);

  bool is_finite() const { return steps_.has_value(); }
  int steps() const;  // throws std::logic_error on the infinite value

  // True when the distance is strictly greater than bound (always true for
  // the infinite value); this is the test "d > 2t" used for correction.
  bool exceeds(int bound) const { return !steps_ || *steps_ > bound; }

  std::string to_string() const;  // decimal, or "inf"

  friend bool operator==(const Distance&, const Distance&) = default;
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);

 private:
  explicit Distance(std::optional<int> steps) : steps_(steps) {}
  std::optional<int> steps_;
};

// Block code over Z_q^n: a sorted duplicate-free list of equal-length
// strings over a common alphabet. May be empty (some syndrome classes are).
class Code {
 public:
  Code(int q, int n, std::vector<QaryString> codewords);

  int q() const { return q_; }
  int n() const { return n_; }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<QaryString>& codewords() const { return codewords_; }

 private:
  int q_;
  int n_;
  std::vector<QaryString> codewords_;
};

// Every string reachable from the origin by one pattern of disjoint swaps,
// keyed to the minimal number of swaps that reaches it.
class DescendantMap {
 public:
  // max_swaps < 0 removes the cutoff (full closure; at most n/2 swaps can
  // ever apply).
  static DescendantMap build(const QaryString& origin, int max_swaps = -1);

  const QaryString& origin() const { return origin_; }
  const std::map<QaryString, int>& entries() const { return entries_; }
  std::optional<int> swaps_to(const QaryString& target) const;

 private:
  DescendantMap(QaryString origin, std::map<QaryString, int> entries)
      : origin_(std::move(origin)), entries_(std::move(entries)) {}

  QaryString origin_;
  std::map<QaryString, int> entries_;
};

// Strings reachable from x by one pattern of at most t disjoint swaps,
// in lexicographic order.
std::vector<QaryString> ball_disjoint(const QaryString& x, int t);

// Strings reachable from x by at most t successive swaps, in lexicographic
// order.
std::vector<QaryString> ball_successive(const QaryString& x, int t);

// Strings y with distance(x, y) <= t, in lexicographic order.
std::vector<QaryString> ball_distance(const QaryString& x, int t);

// Smallest t + s such that some string is reachable from x by t disjoint
// swaps and from y by s disjoint swaps; infinite when the descendant sets
// never meet. Symmetric, but not a metric: the triangle inequality fails.
Distance distance(const QaryString& x, const QaryString& y);

// Minimal number of successive swaps turning x into y; infinite when x and
// y are not rearrangements of each other. This one is a metric.
Distance distance_successive(const QaryString& x, const QaryString& y);

enum class DistanceKind { kStandard, kSuccessive };

// Minimum pairwise distance of the code; infinity for fewer than two
// codewords or when all pairs are incomparable.
Distance min_distance(const Code& code, DistanceKind kind);

// True when the order-t balls around the codewords are pairwise disjoint,
// i.e. every pattern of at most t errors can be undone unambiguously.
bool corrects(const Code& code, int t, ChannelModel model);

// Largest finite distance over all pairs in Z_q^n (0 when every pair is
// either equal or incomparable). Exhaustive; guarded by the space budget.
int max_finite_distance(int q, int n,
                        std::uint64_t budget = limits::kDefaultBudget);

struct OptimalCodeResult {
  std::size_t max_size;
  Code witness;
};

// Exact maximum size of a code in Z_q^n correcting t errors under the given
// model, with one witness attaining it. Exhaustive search (maximum
// independent set in the ball-conflict graph); guarded by the ball budget
// unless force is set.
OptimalCodeResult optimal_code_search(int q, int n, int t, ChannelModel model,
                                      bool force = false);

}  // namespace swapcodes
