#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swapcodes {

// Thrown by decoders when the received string cannot be explained as any
// codeword hit by a correctable error pattern.
class UncorrectableInput : public std::runtime_error {
 public:
  explicit UncorrectableInput(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown by exhaustive routines when the instance exceeds the enumeration
// budget and the caller did not override the guard.
class InstanceTooLarge : public std::runtime_error {
 public:
  explicit InstanceTooLarge(const std::string& what)
      : std::runtime_error(what) {}
};

namespace limits {

// Full-space enumeration is refused once q^n exceeds this.
inline constexpr std::uint64_t kSpaceBudget = std::uint64_t{1} << 22;

// Ball enumeration over binary strings is refused beyond this length
// (scaled down by log2(q) for larger alphabets).
inline constexpr int kBallLengthBudget = 14;

// Sentinel meaning "no override": use the default budget.
inline constexpr std::uint64_t kDefaultBudget = 0;

}  // namespace limits

// q^n, saturating at 2^63 instead of overflowing.
std::uint64_t space_size(int q, int n);

// Throws InstanceTooLarge when q^n exceeds the budget. budget == 0 selects
// limits::kSpaceBudget; pass UINT64_MAX to force the computation.
void require_space_budget(int q, int n, std::uint64_t budget,
                          const std::string& context);

// Throws InstanceTooLarge when n * log2(q) exceeds the ball-length budget.
void require_ball_budget(int q, int n, bool force, const std::string& context);

}  // namespace swapcodes
