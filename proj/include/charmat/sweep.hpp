#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "charmat/report.hpp"
#include "charmat/verifier.hpp"

namespace charmat {

struct SweepConfig {
  uint64_t q_min = 3;
  uint64_t q_max = 512;
  // nullopt means every k dividing q-1
  std::optional<std::vector<uint64_t>> k_list;
  bool include_part_i = true;
  bool include_part_ii = true;
  bool include_part_iii = true;
  unsigned jobs = 1;  // 0 picks hardware concurrency
  ReportFormat format = ReportFormat::text;
  uint64_t seed = 0;
  bool timing = false;
  uint64_t eigen_q_limit = 200;
};

struct SweepSummary {
  uint64_t total = 0;
  uint64_t passed = 0;
  uint64_t failed = 0;
  uint64_t degenerate = 0;
};

// q = p^s for an odd prime p, or nothing
std::optional<std::pair<uint64_t, uint32_t>> factor_prime_power(uint64_t q);

std::vector<uint64_t> odd_prime_powers(uint64_t lo, uint64_t hi);

std::vector<uint64_t> divisors_of(uint64_t m);

// runs every admissible (q, k) pair, streaming reports to os in (q, k)
// order; collect, when given, receives the reports in the same order
SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& os,
                       std::vector<VerificationReport>* collect = nullptr);

}  // namespace charmat
