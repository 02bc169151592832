/* Apache License, Version 2.0 */

/* Parallel verification of every non 2-divisible component over a genus
 * range. Output does not depend on the number of workers. */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "enriques/record.hpp"

namespace enriques {

struct SweepFailure {
  FundamentalCoefficients coefficients;
  std::int64_t genus = 0;
  std::string case_id;
  std::vector<CheckItem> failed;
};

struct SweepSummary {
  std::int64_t genus_min = 0;
  std::int64_t genus_max = 0;
  std::int64_t components = 0;
  std::int64_t verified = 0;
  /* (case id, count) in case order */
  std::vector<std::pair<std::string, std::int64_t>> by_case;
  std::vector<SweepFailure> failures;
};

/* Applies fn to 0..count-1 on `jobs` threads (0 = hardware concurrency). */
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &fn);

SweepSummary verify_range(std::int64_t genus_min, std::int64_t genus_max, unsigned jobs);

/* All records of a genus range, in genus then coefficient order. */
std::vector<ComponentRecord> enumerate_records(std::int64_t genus_min,
                                               std::int64_t genus_max,
                                               EnumFilter filter,
                                               bool with_plans,
                                               unsigned jobs);

std::string summary_json(const SweepSummary &s);

}  // namespace enriques
