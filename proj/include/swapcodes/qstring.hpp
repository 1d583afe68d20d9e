#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "swapcodes/errors.hpp"

namespace swapcodes {

// Immutable string over the alphabet {0, ..., q-1}. Symbol indexing is
// 0-based; swap locations (see TranspositionPattern) are 1-based.
class QaryString {
 public:
  QaryString(int q, std::vector<int> symbols);

  // Parses "0,1,1,3,0" style text (comma-separated decimal symbols).
  static QaryString parse(int q, std::string_view text);

  int q() const { return q_; }
  int length() const { return static_cast<int>(symbols_.size()); }
  int symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& symbols() const { return symbols_; }

  std::string to_string() const;

  friend bool operator==(const QaryString&, const QaryString&) = default;
  friend auto operator<=>(const QaryString&, const QaryString&) = default;

 private:
  int q_;
  std::vector<int> symbols_;
};

enum class ChannelModel {
  kDisjoint,    // simultaneous swaps at locations pairwise >= 2 apart
  kSuccessive,  // swaps applied one after another, repeats allowed
};

// Error pattern of the transposition channel. Location k (1-based,
// 1 <= k <= n-1) swaps the symbols at positions k and k+1.
class TranspositionPattern {
 public:
  // Locations must be strictly increasing with gaps >= 2.
  static TranspositionPattern disjoint(std::vector<int> locations);

  // Locations are applied in the given order; repeats are allowed.
  static TranspositionPattern successive(std::vector<int> locations);

  ChannelModel model() const { return model_; }
  const std::vector<int>& locations() const { return locations_; }
  int count() const { return static_cast<int>(locations_.size()); }

 private:
  TranspositionPattern(ChannelModel model, std::vector<int> locations)
      : model_(model), locations_(std::move(locations)) {}

  ChannelModel model_;
  std::vector<int> locations_;
};

// Number of maximal runs of equal symbols; rejects the empty string (the
// count is undefined there).
int run_count(const QaryString& x);

// Applies a disjoint pattern; every location must satisfy 1 <= k <= n-1.
QaryString apply_disjoint(const QaryString& x, const TranspositionPattern& p);

// Applies a successive pattern in order.
QaryString apply_successive(const QaryString& x, const TranspositionPattern& p);

// Applies the pattern under its own model.
QaryString apply_pattern(const QaryString& x, const TranspositionPattern& p);

// Uniformly random pattern with exactly t locations valid for length n.
// Disjoint patterns are drawn uniformly over all C(n-t, t) admissible
// location sets; successive patterns draw t independent locations.
TranspositionPattern random_pattern(int n, int t, ChannelModel model,
                                    std::uint64_t seed);

// Visits every disjoint location set with at most max_locations swaps that
// is admissible for length n (the empty set included), in lexicographic
// order of the location lists.
void for_each_disjoint_pattern(
    int n, int max_locations,
    const std::function<void(const std::vector<int>&)>& visit);

// Number of admissible disjoint location sets with exactly s locations for
// length n: C(n-s, s).
std::uint64_t disjoint_pattern_count(int n, int s);

// Visits all q^n symbol vectors of length n in lexicographic order. The
// buffer passed to the callback is reused between calls.
void for_each_symbol_vector(
    int q, int n, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace swapcodes
