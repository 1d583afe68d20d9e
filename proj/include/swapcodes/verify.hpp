#pragma once

#include <string>
#include <vector>

namespace swapcodes::verify {

// Outcome of one verified property: how many instances were checked and,
// on failure, a witness describing the first violation found.
struct PropertyResult {
  std::string property;
  long long instances = 0;
  bool passed = true;
  std::string detail;
};

// Size overrides for a suite run. Zero fields keep the suite defaults;
// larger caps are honored up to the enumeration budgets unless force is
// set, in which case the guards are bypassed.
struct SuiteCaps {
  int q = 0;
  int max_n = 0;
  bool force = false;
};

// Names accepted by run_suite, in canonical report order.
const std::vector<std::string>& suite_names();

// Runs every property of one suite. Throws std::invalid_argument for an
// unknown suite name and InstanceTooLarge when the requested caps exceed
// the enumeration budgets.
std::vector<PropertyResult> run_suite(const std::string& suite,
                                      const SuiteCaps& caps);

// Individual suites, exposed for targeted use by tests and tools.
std::vector<PropertyResult> run_balls_suite(const SuiteCaps& caps);
std::vector<PropertyResult> run_distances_suite(const SuiteCaps& caps);
std::vector<PropertyResult> run_single_codes_suite(const SuiteCaps& caps);
std::vector<PropertyResult> run_zero_error_suite(const SuiteCaps& caps);
std::vector<PropertyResult> run_counts_suite(const SuiteCaps& caps);
std::vector<PropertyResult> run_bounds_suite(const SuiteCaps& caps);

}  // namespace swapcodes::verify
