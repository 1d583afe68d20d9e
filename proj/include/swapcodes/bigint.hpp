#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace swapcodes {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// base^exp for non-negative exponents.
BigInt big_pow(const BigInt& base, unsigned exp);

// log2 of a positive BigInt, accurate to double precision even when the
// value does not fit in a double.
double log2_big(const BigInt& value);

}  // namespace swapcodes
