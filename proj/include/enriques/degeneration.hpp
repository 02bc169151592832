/* Apache License, Version 2.0 */

/* Limit polarizations on the degenerate surface X = R ∪_T P for each
 * non 2-divisible component, together with the numerical hypotheses that
 * make the limit curve deform to a rigid nodal elliptic curve. */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/lattice.hpp"
#include "enriques/moduli.hpp"

namespace enriques {

enum class CaseId { S71, S721, S722, S73, S74_L34, S74_L2, S75_C70, S75_C7P, S76 };

const char *case_name(CaseId id);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CheckItem &, const CheckItem &) = default;
};

struct Ledger {
  std::int64_t C0_sq = 0;
  std::int64_t D0_sq = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 0;
  std::int64_t gamma0 = 0;
  std::int64_t delta0 = 0;
  std::int64_t pa_Y = 0;
  std::int64_t dim_linear_system = 0;
  /* m - 1 + gamma0 + gamma + delta0 + delta */
  std::int64_t node_budget = 0;
  bool parity_ok = false;

  friend bool operator==(const Ledger &, const Ledger &) = default;
};

/* Node bookkeeping for a limit curve C ∪_T D whose components C0, D0 meet T
 * in mx + k resp. mx + l further points. */
Ledger ledger(std::int64_t C0_sq,
              std::int64_t D0_sq,
              std::int64_t m,
              std::int64_t k,
              std::int64_t l,
              std::int64_t gamma,
              std::int64_t delta);

struct LimitPlan {
  FundamentalCoefficients source;
  CaseId case_id = CaseId::S71;
  std::int64_t genus = 0;
  int s = 0;
  int t = 0;
  int k = 0;
  /* (c-slot, index of the fundamental coefficient placed there) */
  std::vector<std::pair<int, int>> renamed;
  std::vector<std::int64_t> c;  // c0..c10, unused slots are 0

  IsoExpr L_iso;
  std::vector<int> r_labels;  // exceptional labels kept on R
  std::vector<int> p_labels;  // exceptional labels kept on P
  DivClass Lp;
  DivClass Lpp;
  /* Present for every case except S71 and S721. */
  std::optional<DivClass> Lp0;
  std::optional<DivClass> Lpp0;
  std::vector<DivClass> C_list;
  std::vector<DivClass> D_list;
  std::vector<DivClass> extra_D;
  std::optional<std::int64_t> m;
  std::optional<Ledger> ledger;

  std::vector<CheckItem> checklist;

  bool verified() const;
  /* Label of the exceptional at position i (1-based) of Lp or Lpp. */
  int r_label(int i) const { return r_labels.at(static_cast<std::size_t>(i - 1)); }
  int p_label(int i) const { return p_labels.at(static_cast<std::size_t>(i - 1)); }
};

/* Builds the plan and evaluates its full checklist. Rejects invalid,
 * eps = 1 and 2-divisible tuples. */
LimitPlan dispatch(const FundamentalCoefficients &fc);

/* Hypotheses (i)-(v) of the k-matching construction, plus m >= 1. */
std::vector<CheckItem> verify_metodo1(const LimitPlan &plan);
/* Hypotheses (i)-(iv) of the s = 4, t = 5 construction. */
std::vector<CheckItem> verify_metodo2(const LimitPlan &plan);

std::int64_t severi_regular_dim(std::int64_t g, std::int64_t delta);

struct LogSeveriDims {
  /* g - 1 + LT - sum m_i, defined when LT > sum m_i */
  std::optional<std::int64_t> fixed_points;
  std::int64_t moving_point = 0;   // g + LT - m
  std::int64_t elliptic_on_r = 0;  // LT - m + 1
  std::int64_t rational_on_p = 0;  // LT - m
};

/* tangency holds the orders m_1..m_l at fixed points; the moving-point,
 * elliptic and rational values use m = tangency.front(). */
LogSeveriDims log_severi_dims(std::int64_t g, std::int64_t LT, const std::vector<std::int64_t> &tangency);

}  // namespace enriques
