#include <cmath>
#include <sstream>
#include <stdexcept>

#include "swapcodes/bigint.hpp"
#include "swapcodes/errors.hpp"

namespace swapcodes {

std::uint64_t space_size(int q, int n) {
  const std::uint64_t cap = std::uint64_t{1} << 63;
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > cap / static_cast<std::uint64_t>(q)) return cap;
    size *= static_cast<std::uint64_t>(q);
  }
  return size;
}

void require_space_budget(int q, int n, std::uint64_t budget,
                          const std::string& context) {
  const std::uint64_t effective =
      budget == limits::kDefaultBudget ? limits::kSpaceBudget : budget;
  const std::uint64_t size = space_size(q, n);
  if (size > effective) {
    std::ostringstream msg;
    msg << context << ": instance has q^n = " << q << "^" << n;
    if (size == (std::uint64_t{1} << 63))
      msg << " > 2^63";
    else
      msg << " = " << size;
    msg << " strings, above the enumeration budget of " << effective;
    throw InstanceTooLarge(msg.str());
  }
}

void require_ball_budget(int q, int n, bool force, const std::string& context) {
  if (force) return;
  const double scaled = n * std::log2(static_cast<double>(q));
  if (scaled > static_cast<double>(limits::kBallLengthBudget)) {
    std::ostringstream msg;
    msg << context << ": length " << n << " over alphabet size " << q
        << " exceeds the ball enumeration budget (n * log2(q) <= "
        << limits::kBallLengthBudget << "); pass force to override";
    throw InstanceTooLarge(msg.str());
  }
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt factor = base;
  for (; exp != 0; exp >>= 1) {
    if (exp & 1u) result *= factor;
    if (exp > 1) factor *= factor;
  }
  return result;
}

double log2_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2_big: value must be positive");
  const unsigned top = boost::multiprecision::msb(value);
  if (top < 63) return std::log2(value.convert_to<double>());
  const unsigned shift = top - 52;
  const BigInt head = value >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace swapcodes
