#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "swapcodes/bigint.hpp"
#include "swapcodes/errors.hpp"
#include "swapcodes/qstring.hpp"

namespace swapcodes {

// Split of the alphabet {0, ..., q-1} into two nonempty classes.
class AlphabetPartition {
 public:
  AlphabetPartition(int q, std::vector<int> class0, std::vector<int> class1);

  // {0, ..., floor(q/2)-1} and the rest.
  static AlphabetPartition halves(int q);

  // Parses "0,1|2,3" style text.
  static AlphabetPartition parse(int q, std::string_view text);

  int q() const { return q_; }
  const std::vector<int>& class0() const { return class0_; }
  const std::vector<int>& class1() const { return class1_; }
  int class_of(int symbol) const;

 private:
  int q_;
  std::vector<int> class0_;
  std::vector<int> class1_;
  std::vector<int> lookup_;
};

// Codebook of block concatenations immune to adjacent swaps: distinct
// codewords have no common descendant, whatever patterns are applied.
// Blocks over classes A = class0, B = class1 (u in A, v in B, runs of one
// symbol): uuu, vvv, uvvv, vuuu, uuvvvv, vvuuuu.
class ZeroErrorCodebook {
 public:
  ZeroErrorCodebook(int n, AlphabetPartition partition);

  int n() const { return n_; }
  int q() const { return partition_.q(); }
  const AlphabetPartition& partition() const { return partition_; }

  // Membership by block parsing; works at any length.
  bool contains(const QaryString& x) const;

  // All codewords in lexicographic order (possibly none: some lengths have
  // no block decomposition). Guarded by the enumeration budget.
  std::vector<QaryString> enumerate(
      std::uint64_t budget = limits::kDefaultBudget) const;

  BigInt count() const;

 private:
  int n_;
  AlphabetPartition partition_;
};

// Number of codewords of ZeroErrorCodebook(n, partition) via the block
// recurrence; class sizes are enough to determine it.
BigInt count_codewords(int class0_size, int class1_size, int n);

// Recovers the transmitted codeword from a string hit by any admissible
// pattern of disjoint swaps. Table construction happens here once; decode
// itself is pure. Guarded by the ball budget unless force is set.
class ZeroErrorDecoder {
 public:
  explicit ZeroErrorDecoder(const ZeroErrorCodebook& codebook,
                            bool force = false);

  QaryString decode(const QaryString& y) const;

 private:
  int n_;
  AlphabetPartition partition_;
  // Binary images of the codebook under the class indicator, the block
  // spans of each image, and the owner of every reachable indicator string.
  std::vector<std::vector<int>> indicator_words_;
  std::vector<std::vector<std::pair<int, int>>> spans_;
  std::map<std::vector<int>, int> owner_;
};

// Unique positive root of x^6 - (s0+s1) x^3 - 2 s0 s1 x^2 - 2 s0 s1, the
// growth rate of count_codewords(s0, s1, n)^{1/n}.
double growth_root(int class0_size, int class1_size);

// growth_root for the default halves partition of Z_q.
double growth_root(int q);

// log2 of the default growth root: the rate of the construction.
double zero_error_rate(int q);

}  // namespace swapcodes
