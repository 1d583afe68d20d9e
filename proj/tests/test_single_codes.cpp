#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swapcodes/errors.hpp"
#include "swapcodes/single_codes.hpp"

using namespace swapcodes;

TEST_CASE("modulus selection picks the least valid odd prime") {
  CHECK(smallest_valid_prime(2, 5) == 5);
  CHECK(smallest_valid_prime(4, 4) == 5);
  CHECK(smallest_valid_prime(2, 14) == 17);
  CHECK(smallest_valid_prime(2, 2) == 3);
  CHECK(smallest_valid_prime(8, 3) == 11);  // >= q and odd
}

TEST_CASE("syndrome membership on the worked instance") {
  const QarySyndromeCode code(2, 5, 1, 3, 5);
  CHECK(code.modulus() == 5);
  CHECK(is_codeword(QaryString::parse(2, oracles::kSyndromeCodeword), code));
  CHECK(!is_codeword(QaryString::parse(2, oracles::kSyndromeReceived), code));
  const QarySyndromeCode zero(2, 5, 0, 0);
  CHECK(is_codeword(QaryString::parse(2, "0,0,0,0,0"), zero));
}

TEST_CASE("syndrome decoding undoes one swap") {
  const QarySyndromeCode code(2, 5, 1, 3, 5);
  const QaryString sent = QaryString::parse(2, oracles::kSyndromeCodeword);
  CHECK(decode_one_swap(QaryString::parse(2, oracles::kSyndromeReceived),
                        code) == sent);
  CHECK(decode_one_swap(sent, code) == sent);
}

TEST_CASE("syndrome decoding rejects unexplained inputs") {
  const QarySyndromeCode code(2, 4, 0, 0);
  const Code codebook = enumerate_codewords(code);
  std::vector<QaryString> reachable;
  for (const QaryString& x : codebook.codewords())
    for (const QaryString& y : ball_disjoint(x, 1)) reachable.push_back(y);
  std::sort(reachable.begin(), reachable.end());
  bool checked = false;
  for_each_symbol_vector(2, 4, [&](const std::vector<int>& symbols) {
    if (checked) return;
    const QaryString y(2, symbols);
    if (std::binary_search(reachable.begin(), reachable.end(), y)) return;
    CHECK_THROWS_AS(decode_one_swap(y, code), UncorrectableInput);
    checked = true;
  });
  CHECK(checked);
}

TEST_CASE("custom second modulus") {
  CHECK(QarySyndromeCode(4, 5, 0, 0, 7).modulus() == 7);
  CHECK_THROWS_AS(QarySyndromeCode(4, 5, 0, 0, 9),
                  std::invalid_argument);  // shares a factor with 3
  CHECK_THROWS_AS(QarySyndromeCode(4, 5, 0, 0, 8), std::invalid_argument);
  CHECK_THROWS_AS(QarySyndromeCode(4, 5, 0, 0, 3), std::invalid_argument);
}

TEST_CASE("codebook enumeration respects the space budget") {
  CHECK_THROWS_AS(enumerate_codewords(QarySyndromeCode(2, 30, 0, 0)),
                  InstanceTooLarge);
  const Code small = enumerate_codewords(QarySyndromeCode(2, 5, 1, 3, 5));
  CHECK(small.size() > 0);
  for (const QaryString& w : small.codewords())
    CHECK(is_codeword(w, QarySyndromeCode(2, 5, 1, 3, 5)));
}

TEST_CASE("inner codes expose length, membership, and correction") {
  const InnerCode repetition = InnerCode::repetition(3);
  CHECK(repetition.cardinality() == 2);
  CHECK(repetition.contains({1, 1, 1}));
  CHECK(!repetition.contains({1, 0, 1}));
  CHECK(repetition.correct({1, 0, 1}) == std::vector<int>({1, 1, 1}));

  const InnerCode hamming7 = InnerCode::shortened_hamming(7);
  CHECK(hamming7.cardinality() == 16);
  const auto words = hamming7.enumerate();
  CHECK(words.size() == 16);
  std::vector<int> flipped = words[5];
  flipped[2] ^= 1;
  CHECK(hamming7.correct(flipped) == words[5]);

  const InnerCode hamming4 = InnerCode::shortened_hamming(4);
  CHECK(hamming4.cardinality() == 2);

  CHECK(InnerCode::standard(2).kind() == InnerCode::Kind::kRepetition);
  CHECK(InnerCode::standard(3).kind() == InnerCode::Kind::kShortenedHamming);
}

TEST_CASE("binary construction membership and decoding") {
  const BinarySyndromeCode code(6, 1, InnerCode::repetition(3));
  const QaryString sent = QaryString::parse(2, oracles::kBinaryCodeword);
  CHECK(is_codeword(sent, code));
  CHECK(decode_one_swap(QaryString::parse(2, oracles::kBinaryReceived), code) ==
        sent);
  CHECK(decode_one_swap(sent, code) == sent);
  CHECK_THROWS_AS(
      decode_one_swap(QaryString::parse(2, oracles::kBinaryGarbage), code),
      UncorrectableInput);
  CHECK_THROWS_AS(BinarySyndromeCode(7, 0, InnerCode::repetition(3)),
                  std::invalid_argument);
}

TEST_CASE("binary parity classes split the inner-constrained strings") {
  std::size_t total = 0;
  for (int s = 0; s <= 1; ++s)
    total +=
        enumerate_codewords(BinarySyndromeCode(8, s, InnerCode::standard(4)))
            .size();
  // Inner cardinality 2 at length 4, free odd positions contribute 2^4.
  CHECK(total == 32);
}
