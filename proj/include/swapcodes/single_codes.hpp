#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapcodes/errors.hpp"
#include "swapcodes/metric.hpp"
#include "swapcodes/qstring.hpp"

namespace swapcodes {

// Smallest odd prime >= max(q, n).
int smallest_valid_prime(int q, int n);

// Q-ary code correcting one adjacent swap: all strings with
//   sum i * x_i = s1 (mod 2q-1) and sum i^2 * x_i = s2 (mod m),
// positions i being 1-based. The second modulus m defaults to the smallest
// odd prime >= max(q, n); any custom m >= max(n, 3) that is odd and coprime
// with 2, ..., q-1 is accepted.
class QarySyndromeCode {
 public:
  QarySyndromeCode(int q, int n, int s1, int s2);
  QarySyndromeCode(int q, int n, int s1, int s2, int modulus);

  int q() const { return q_; }
  int n() const { return n_; }
  int s1() const { return s1_; }
  int s2() const { return s2_; }
  int modulus() const { return modulus_; }

 private:
  int q_;
  int n_;
  int s1_;
  int s2_;
  int modulus_;
};

bool is_codeword(const QaryString& x, const QarySyndromeCode& code);

// All codewords, guarded by the space budget.
Code enumerate_codewords(const QarySyndromeCode& code,
                         std::uint64_t budget = limits::kDefaultBudget);

// Recovers the sent codeword from a string hit by at most one adjacent
// swap. Throws UncorrectableInput when no codeword explains the input.
QaryString decode_one_swap(const QaryString& y, const QarySyndromeCode& code);

// Binary code with Hamming distance >= 3 serving as the inner component of
// the even-subword construction below.
class InnerCode {
 public:
  enum class Kind { kRepetition, kShortenedHamming };

  // {0^m, 1^m}; Hamming distance m.
  static InnerCode repetition(int m);

  // First m positions of the Hamming code of length 2^r - 1 with r minimal
  // such that 2^r - 1 >= m; Hamming distance >= 3 for every m >= 3.
  static InnerCode shortened_hamming(int m);

  // Default choice: repetition below length 3 (degenerate: distance < 3),
  // shortened Hamming otherwise.
  static InnerCode standard(int m);

  Kind kind() const { return kind_; }
  int length() const { return length_; }

  bool contains(const std::vector<int>& bits) const;

  // Corrects at most one flipped bit; nullopt when no codeword lies within
  // Hamming distance 1.
  std::optional<std::vector<int>> correct(const std::vector<int>& bits) const;

  std::vector<std::vector<int>> enumerate() const;
  std::uint64_t cardinality() const;

 private:
  InnerCode(Kind kind, int length, int parity_bits)
      : kind_(kind), length_(length), parity_bits_(parity_bits) {}

  Kind kind_;
  int length_;
  int parity_bits_;  // r for shortened Hamming, unused for repetition
};

// Binary code correcting one adjacent swap: strings whose even-indexed
// subword (x_2, x_4, ..., x_n) lies in the inner code and whose pair
// checksum sum i * (x_{2i} - x_{2i-1}) is s modulo 2.
class BinarySyndromeCode {
 public:
  BinarySyndromeCode(int n, int s, InnerCode inner);

  int n() const { return n_; }
  int s() const { return s_; }
  const InnerCode& inner() const { return inner_; }

 private:
  int n_;
  int s_;
  InnerCode inner_;
};

bool is_codeword(const QaryString& x, const BinarySyndromeCode& code);

Code enumerate_codewords(const BinarySyndromeCode& code,
                         std::uint64_t budget = limits::kDefaultBudget);

QaryString decode_one_swap(const QaryString& y, const BinarySyndromeCode& code);

}  // namespace swapcodes
