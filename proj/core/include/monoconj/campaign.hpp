#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "monoconj/oracle.hpp"
#include "monoconj/semigroup.hpp"

namespace monoconj {

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::uint64_t count = 1000;
  int max_g = 5;
  std::uint64_t max_gen = 1'000'000;
  // Delta is expanded densely when mu is at most this.
  std::uint64_t dense_mu_limit = 5000;
  EnumerationBudget budget;
};

struct CheckFailure {
  std::vector<BigInt> gens;
  std::string check;
  std::string message;
};

struct CrossCheckStats {
  bool dense = false;  // degree verified by dense expansion
  std::uint64_t digit_checks = 0;
};

// Runs every cross-check on one semigroup; an empty result means all passed.
std::vector<CheckFailure> cross_check(const PlaneSemigroup& sg, const FuzzOptions& opts, CrossCheckStats* stats = nullptr);

// Deterministic instance `index` of the campaign with the given seed.
PlaneSemigroup fuzz_instance(const FuzzOptions& opts, std::uint64_t index);

struct FuzzSummary {
  std::uint64_t instances = 0;
  std::uint64_t dense_checked = 0;
  std::uint64_t digit_checks = 0;
  std::vector<CheckFailure> failures;
};

FuzzSummary run_fuzz(const FuzzOptions& opts,
                     const std::function<void(std::uint64_t, const PlaneSemigroup&)>& on_instance = {});

struct OracleGridOptions {
  EnumerationBudget budget;
  std::uint64_t draws = 3;
  std::uint64_t seed = 7;
  bool covering = true;
  std::uint64_t covering_max_K = 12;
};

struct OracleSummary {
  std::uint64_t types = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t covering_cases = 0;
  std::vector<std::string> discrepancies;
};

OracleSummary run_oracle_grid(const OracleGridOptions& opts);

}  // namespace monoconj
