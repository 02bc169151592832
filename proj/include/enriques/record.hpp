/* Apache License, Version 2.0 */

/* Serializable summary of one moduli component: its classification and,
 * when the component is covered, the limit plan with its checklist. */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/degeneration.hpp"
#include "enriques/moduli.hpp"

namespace enriques {

struct LimitBundle {
  std::string r_model;
  std::string p_model;
  std::string r_class;
  std::string p_class;
  std::string iso_expr;
  std::vector<int> r_labels;
  std::vector<int> p_labels;

  friend bool operator==(const LimitBundle &, const LimitBundle &) = default;
};

struct PlanDetail {
  std::string lp0;
  std::string lpp0;
  std::vector<std::string> c_list;
  std::vector<std::string> d_list;
  std::vector<std::string> extra_d;
  /* "c<slot>" -> "a<index>" */
  std::vector<std::pair<std::string, std::string>> renamed;
  std::optional<Ledger> ledger;

  friend bool operator==(const PlanDetail &, const PlanDetail &) = default;
};

struct ComponentRecord {
  std::int64_t genus = 0;
  FundamentalCoefficients coefficients;
  bool two_divisible = false;
  std::vector<std::string> violations;
  std::optional<std::string> trichotomy;
  /* CASE_I witness (i, k, l, m) */
  std::optional<std::array<int, 4>> witness;
  std::optional<std::string> case_id;
  std::vector<CheckItem> checklist;
  std::optional<LimitBundle> limit_bundle;
  std::optional<std::int64_t> m;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<int> k;
  std::optional<bool> verified;
  std::optional<PlanDetail> plan;
  std::optional<std::string> note;

  friend bool operator==(const ComponentRecord &, const ComponentRecord &) = default;
};

/* Validation, 2-divisibility and trichotomy only. */
ComponentRecord classify_record(const FundamentalCoefficients &fc);
/* classify_record plus the limit plan when the tuple is in range. */
ComponentRecord plan_record(const FundamentalCoefficients &fc);

/* One JSON object, no trailing newline. */
std::string to_json(const ComponentRecord &r);
ComponentRecord record_from_json(const std::string &text);

inline constexpr const char *kTsvHeader = "# enriques-severi v1";
/* Column names line, tab separated. */
std::string tsv_columns();
std::string to_tsv(const ComponentRecord &r);

}  // namespace enriques
