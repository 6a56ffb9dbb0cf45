#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace props {

struct SuiteResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
};

SuiteResult recurrence_soundness(std::uint64_t n, std::uint64_t rng_seed);
SuiteResult report_minimality(std::uint64_t n, std::uint64_t rng_seed);
SuiteResult period_bound(std::uint64_t n, std::uint64_t rng_seed);
SuiteResult linearity_interleaving(std::uint64_t n, std::uint64_t rng_seed);
SuiteResult pure_periodicity(std::uint64_t n, std::uint64_t rng_seed);
SuiteResult pair_periods(std::uint64_t n, std::uint64_t rng_seed);
SuiteResult extension_soundness(std::uint64_t n, std::uint64_t rng_seed);

struct Suite {
  std::string name;
  std::function<SuiteResult(std::uint64_t, std::uint64_t)> run;
};

// The suites in a fixed order; the first five are the required ones.
const std::vector<Suite>& all_suites();

}  // namespace props
