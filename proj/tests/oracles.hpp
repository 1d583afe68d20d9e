// Frozen reference values used by both the unit tests and the acceptance
// gate. Everything here was fixed independently of the library code: worked
// channel examples, hand-enumerated codebooks, and small counting tables.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

// --- Channel worked example (q = 4, n = 10) -------------------------------
inline const char* kChannelInput = "0,1,1,3,0,0,2,2,2,1";
// Disjoint swaps at locations {1, 4, 9}.
inline const char* kChannelDisjointOutput = "1,0,1,0,3,0,2,2,1,2";
// Successive swaps applied in the order 3, 4, 9.
inline const char* kChannelSuccessiveOutput = "0,1,3,0,1,0,2,2,1,2";

// --- Extremal-distance witness pairs --------------------------------------
inline const std::pair<const char*, const char*> kWitnessN5 = {"1,0,1,0,0",
                                                               "0,0,1,0,1"};
inline const std::pair<const char*, const char*> kWitnessN6 = {
    "1,0,1,0,1,0", "0,0,1,0,1,1"};

// Two length-10 words at distance exactly 6 that still correct 3 swaps.
inline const std::pair<const char*, const char*> kDistanceSixPair = {
    "1,0,1,0,0,0,1,0,1,0", "0,0,1,1,0,0,0,0,1,1"};

// Non-metric witness: d(x,y) = inf yet d(x,z) = 2 and d(z,y) = 1.
inline const char* kTriangleX = "1,0,0,0";
inline const char* kTriangleY = "0,0,0,1";
inline const char* kTriangleZ = "0,0,1,0";

// Two words whose radius-1 balls share (0,1,0): no code containing both
// corrects a single swap.
inline const std::pair<const char*, const char*> kOverlappingPair = {"1,0,0",
                                                                     "0,0,1"};

// --- Single-swap syndrome code worked example ------------------------------
// q = 2, n = 5, modulus 5, offsets (1, 3).
inline const char* kSyndromeCodeword = "0,1,1,0,1";
inline const char* kSyndromeReceived = "1,0,1,0,1";  // swap at location 1

// For the binary construction with n = 6, s = 1, repetition inner code:
// (1,0,0,0,0,0) is a codeword and the swap at location 1 yields the word
// below. The all-ones string satisfies the inner constraint but neither
// parity class explains it after one swap.
inline const char* kBinaryCodeword = "1,0,0,0,0,0";
inline const char* kBinaryReceived = "0,1,0,0,0,0";
inline const char* kBinaryGarbage = "1,1,1,1,1,1";

// --- Zero-error codebooks ---------------------------------------------------
// All six binary codewords of length 6, hand-parsed from the block shapes.
inline const std::vector<std::string> kZeroErrorLength6 = {
    "0,0,0,0,0,0", "0,0,0,1,1,1", "0,0,1,1,1,1",
    "1,1,0,0,0,0", "1,1,1,0,0,0", "1,1,1,1,1,1"};

// |D_2(n)| for n = 0..12 from the block recurrence evaluated by hand:
// D(n) = 2 D(n-3) + 2 (D(n-4) + D(n-6)), D(0) = 1, D(<0) = 0.
inline const std::map<int, long long> kZeroErrorBinaryCounts = {
    {0, 1}, {1, 0}, {2, 0}, {3, 2},  {4, 2},  {5, 0},  {6, 6},
    {7, 8}, {8, 4}, {9, 16}, {10, 32}, {11, 24}, {12, 52}};

// Ternary and quaternary spot values of the same recurrence
// (s0 s1 = 2 for q = 3, s0 s1 = 4 for q = 4).
inline const long long kZeroErrorTernaryN9 = 51;
inline const long long kZeroErrorQuaternaryN15 = 12032;

// --- Counting spot values ---------------------------------------------------
// Strings of length 3 over {0,1} with exactly 2 runs: 001, 011, 100, 110.
inline const long long kTwoRunTriples = 4;
// Ordered pairs (x, y) with y one effective swap from x: n = 2 gives
// (01,10), (10,01); n = 3 gives 8 such pairs.
inline const long long kEffectivePairsN2 = 2;
inline const long long kEffectivePairsN3 = 8;

// --- Growth and curve constants --------------------------------------------
inline const double kBinaryGrowthRoot = 1.561;     // +- 1e-3
inline const double kBinaryGrowthRate = 0.643;     // +- 1e-3
inline const double kQuaternaryCrossover = 0.343;  // +- 5e-3
// Argmax of the binary exponent curve: (1 - sqrt(1/3)) / 2.
inline const double kBinaryArgmax = 0.21132486540518713;

}  // namespace oracles
