#include "swapcodes/single_codes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace swapcodes {

namespace {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

// x^{-1} mod m for gcd(x, m) = 1, via the extended Euclid scheme.
long long mod_inverse(long long x, long long m) {
  long long r0 = m, r1 = ((x % m) + m) % m;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long quot = r0 / r1;
    r0 -= quot * r1;
    std::swap(r0, r1);
    t0 -= quot * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw std::logic_error("mod_inverse: arguments not coprime");
  return ((t0 % m) + m) % m;
}

long long weighted_sum_mod(const QaryString& x, bool squared, long long m) {
  long long total = 0;
  for (int i = 1; i <= x.length(); ++i) {
    const long long weight = squared ? (1LL * i * i) % m : i % m;
    total = (total + weight * x.symbol(i - 1)) % m;
  }
  return total;
}

}  // namespace

int smallest_valid_prime(int q, int n) {
  int candidate = std::max(std::max(q, n), 3);
  while (!is_prime(candidate) || candidate % 2 == 0) ++candidate;
  return candidate;
}

QarySyndromeCode::QarySyndromeCode(int q, int n, int s1, int s2)
    : QarySyndromeCode(q, n, s1, s2, smallest_valid_prime(q, n)) {}

QarySyndromeCode::QarySyndromeCode(int q, int n, int s1, int s2, int modulus)
    : q_(q), n_(n), s1_(s1), s2_(s2), modulus_(modulus) {
  if (q < 2) throw std::invalid_argument("QarySyndromeCode: q must be >= 2");
  if (n < 1) throw std::invalid_argument("QarySyndromeCode: n must be >= 1");
  if (s1 < 0 || s1 >= 2 * q - 1)
    throw std::invalid_argument("QarySyndromeCode: s1 outside [0, 2q-1)");
  if (modulus < std::max(n, 3) || modulus % 2 == 0)
    throw std::invalid_argument(
        "QarySyndromeCode: modulus must be odd and >= max(n, 3)");
  for (int j = 2; j <= q - 1; ++j)
    if (std::gcd(modulus, j) != 1)
      throw std::invalid_argument(
          "QarySyndromeCode: modulus must be coprime with 2, ..., q-1");
  if (s2 < 0 || s2 >= modulus)
    throw std::invalid_argument("QarySyndromeCode: s2 outside [0, modulus)");
}

bool is_codeword(const QaryString& x, const QarySyndromeCode& code) {
  if (x.q() != code.q() || x.length() != code.n())
    throw std::invalid_argument("is_codeword: string does not match code parameters");
  return weighted_sum_mod(x, false, 2 * code.q() - 1) == code.s1() &&
         weighted_sum_mod(x, true, code.modulus()) == code.s2();
}

Code enumerate_codewords(const QarySyndromeCode& code, std::uint64_t budget) {
  require_space_budget(code.q(), code.n(), budget, "enumerate_codewords");
  std::vector<QaryString> words;
  for_each_symbol_vector(code.q(), code.n(), [&](const std::vector<int>& symbols) {
    QaryString x(code.q(), symbols);
    if (is_codeword(x, code)) words.push_back(std::move(x));
  });
  return Code(code.q(), code.n(), std::move(words));
}

QaryString decode_one_swap(const QaryString& y, const QarySyndromeCode& code) {
  if (y.q() != code.q() || y.length() != code.n())
    throw std::invalid_argument("decode_one_swap: string does not match code parameters");
  const int q = code.q();
  const long long m1 = 2 * q - 1;
  const long long m2 = code.modulus();
  // A swap at location k replacing (a, b) by (b, a) shifts the linear
  // checksum by a - b and the squared one by (2k + 1)(a - b).
  const long long u1 =
      ((code.s1() - weighted_sum_mod(y, false, m1)) % m1 + m1) % m1;
  const long long u2 =
      ((code.s2() - weighted_sum_mod(y, true, m2)) % m2 + m2) % m2;
  if (u1 == 0) {
    if (u2 != 0)
      throw UncorrectableInput(
          "decode_one_swap: checksums disagree on whether a swap occurred");
    return y;
  }
  // u1 = -(a - b) mod 2q-1 identifies the symbol difference: residues
  // 1..q-1 mean b - a = u1, residues q..2q-2 mean b - a = u1 - (2q-1).
  const long long diff = u1 <= q - 1 ? u1 : u1 - m1;  // b - a
  const long long delta = ((-diff) % m2 + m2) % m2;   // a - b mod m2
  // u2 = -(2k+1)(a-b) mod m2, so 2k+1 = -u2 / delta.
  const long long odd_pos =
      ((m2 - u2) % m2) * mod_inverse(delta, m2) % m2;
  const long long k =
      (odd_pos + m2 - 1) % m2 * mod_inverse(2, m2) % m2;
  if (k < 1 || k > code.n() - 1)
    throw UncorrectableInput("decode_one_swap: recovered location out of range");
  std::vector<int> symbols = y.symbols();
  std::swap(symbols[static_cast<std::size_t>(k - 1)],
            symbols[static_cast<std::size_t>(k)]);
  QaryString decoded(y.q(), std::move(symbols));
  if (!is_codeword(decoded, code))
    throw UncorrectableInput("decode_one_swap: no codeword within one swap");
  return decoded;
}

InnerCode InnerCode::repetition(int m) {
  if (m < 1) throw std::invalid_argument("InnerCode::repetition: m must be >= 1");
  return InnerCode(Kind::kRepetition, m, 0);
}

InnerCode InnerCode::shortened_hamming(int m) {
  if (m < 1)
    throw std::invalid_argument("InnerCode::shortened_hamming: m must be >= 1");
  int parity_bits = 1;
  while ((1 << parity_bits) - 1 < m) ++parity_bits;
  return InnerCode(Kind::kShortenedHamming, m, parity_bits);
}

InnerCode InnerCode::standard(int m) {
  return m < 3 ? repetition(m) : shortened_hamming(m);
}

namespace {

void require_bits(const std::vector<int>& bits, int length, const char* who) {
  if (static_cast<int>(bits.size()) != length)
    throw std::invalid_argument(std::string(who) + ": wrong word length");
  for (int b : bits)
    if (b != 0 && b != 1)
      throw std::invalid_argument(std::string(who) + ": word must be binary");
}

int hamming_syndrome(const std::vector<int>& bits) {
  int syndrome = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] != 0) syndrome ^= static_cast<int>(i) + 1;
  return syndrome;
}

}  // namespace

bool InnerCode::contains(const std::vector<int>& bits) const {
  require_bits(bits, length_, "InnerCode::contains");
  if (kind_ == Kind::kRepetition) {
    return std::all_of(bits.begin(), bits.end(),
                       [&](int b) { return b == bits.front(); });
  }
  return hamming_syndrome(bits) == 0;
}

std::optional<std::vector<int>> InnerCode::correct(
    const std::vector<int>& bits) const {
  require_bits(bits, length_, "InnerCode::correct");
  if (kind_ == Kind::kRepetition) {
    const int ones =
        static_cast<int>(std::count(bits.begin(), bits.end(), 1));
    const int zeros = length_ - ones;
    if (ones == 0 || zeros == 0) return bits;
    if (std::min(ones, zeros) > 1 || ones == zeros) return std::nullopt;
    return std::vector<int>(static_cast<std::size_t>(length_),
                            ones > zeros ? 1 : 0);
  }
  const int syndrome = hamming_syndrome(bits);
  if (syndrome == 0) return bits;
  if (syndrome > length_) return std::nullopt;
  std::vector<int> fixed = bits;
  fixed[static_cast<std::size_t>(syndrome - 1)] ^= 1;
  return fixed;
}

std::vector<std::vector<int>> InnerCode::enumerate() const {
  require_space_budget(2, length_, limits::kDefaultBudget, "InnerCode::enumerate");
  std::vector<std::vector<int>> words;
  for_each_symbol_vector(2, length_, [&](const std::vector<int>& bits) {
    if (contains(bits)) words.push_back(bits);
  });
  return words;
}

std::uint64_t InnerCode::cardinality() const {
  if (kind_ == Kind::kRepetition) return 2;
  return std::uint64_t{1} << (length_ - parity_bits_);
}

BinarySyndromeCode::BinarySyndromeCode(int n, int s, InnerCode inner)
    : n_(n), s_(s), inner_(inner) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("BinarySyndromeCode: n must be even and >= 2");
  if (s != 0 && s != 1)
    throw std::invalid_argument("BinarySyndromeCode: s must be 0 or 1");
  if (inner_.length() != n / 2)
    throw std::invalid_argument("BinarySyndromeCode: inner length must be n/2");
}

namespace {

std::vector<int> even_subword(const QaryString& x) {
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(x.length() / 2));
  for (int i = 2; i <= x.length(); i += 2) bits.push_back(x.symbol(i - 1));
  return bits;
}

int pair_checksum(const QaryString& x) {
  int total = 0;
  for (int i = 1; i <= x.length() / 2; ++i)
    total += i * (x.symbol(2 * i - 1) - x.symbol(2 * i - 2));
  return ((total % 2) + 2) % 2;
}

}  // namespace

bool is_codeword(const QaryString& x, const BinarySyndromeCode& code) {
  if (x.q() != 2 || x.length() != code.n())
    throw std::invalid_argument("is_codeword: string does not match code parameters");
  return code.inner().contains(even_subword(x)) && pair_checksum(x) == code.s();
}

Code enumerate_codewords(const BinarySyndromeCode& code, std::uint64_t budget) {
  const int half = code.n() / 2;
  // Candidate count: inner words times free odd-position bits. Saturate
  // instead of shifting into overflow for long blocks.
  const std::uint64_t work =
      half < 31 ? code.inner().cardinality() << half
                : std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t effective =
      budget == limits::kDefaultBudget ? limits::kSpaceBudget : budget;
  if (work > effective) {
    std::ostringstream msg;
    msg << "enumerate_codewords: " << work
        << " candidate strings, above the enumeration budget of " << effective;
    throw InstanceTooLarge(msg.str());
  }
  std::vector<QaryString> words;
  for (const std::vector<int>& inner_word : code.inner().enumerate()) {
    for_each_symbol_vector(2, half, [&](const std::vector<int>& odd_bits) {
      std::vector<int> symbols(static_cast<std::size_t>(code.n()));
      for (int i = 0; i < half; ++i) {
        symbols[static_cast<std::size_t>(2 * i)] = odd_bits[static_cast<std::size_t>(i)];
        symbols[static_cast<std::size_t>(2 * i + 1)] =
            inner_word[static_cast<std::size_t>(i)];
      }
      QaryString x(2, std::move(symbols));
      if (pair_checksum(x) == code.s()) words.push_back(std::move(x));
    });
  }
  return Code(2, code.n(), std::move(words));
}

QaryString decode_one_swap(const QaryString& y, const BinarySyndromeCode& code) {
  if (y.q() != 2 || y.length() != code.n())
    throw std::invalid_argument("decode_one_swap: string does not match code parameters");
  const std::vector<int> received_inner = even_subword(y);
  if (code.inner().contains(received_inner)) {
    // An effective swap always flips one even-indexed bit, which the inner
    // distance >= 3 would expose; the string must be untouched.
    if (pair_checksum(y) != code.s())
      throw UncorrectableInput(
          "decode_one_swap: checksum fails although the inner word is intact");
    return y;
  }
  const auto corrected = code.inner().correct(received_inner);
  if (!corrected)
    throw UncorrectableInput("decode_one_swap: inner word too damaged");
  int flipped = -1;
  for (int i = 0; i < code.n() / 2; ++i) {
    if ((*corrected)[static_cast<std::size_t>(i)] !=
        received_inner[static_cast<std::size_t>(i)]) {
      flipped = i + 1;  // pair index j, 1-based
      break;
    }
  }
  if (flipped < 0)
    throw UncorrectableInput("decode_one_swap: inner correction made no change");
  // A swap at the odd location 2j-1 keeps the checksum, a swap at the even
  // location 2j flips it; the parity of the deficit selects the location.
  const int parity = ((code.s() - pair_checksum(y)) % 2 + 2) % 2;
  const long long k = 2LL * flipped - 1 + parity;
  if (k < 1 || k > code.n() - 1)
    throw UncorrectableInput("decode_one_swap: recovered location out of range");
  std::vector<int> symbols = y.symbols();
  std::swap(symbols[static_cast<std::size_t>(k - 1)],
            symbols[static_cast<std::size_t>(k)]);
  QaryString decoded(2, std::move(symbols));
  if (!is_codeword(decoded, code))
    throw UncorrectableInput("decode_one_swap: no codeword within one swap");
  return decoded;
}

}  // namespace swapcodes
