/* Apache License, Version 2.0 */

/* Numerical positivity on the blown-up models: oddness and condition (*)
 * on R(n), (-1)-classes and nef/big tests on P(n) for n <= 8.
 *
 * The nef test assumes the blown-up points are in general position, so
 * that the (-1)-classes generate the dual of the nef cone. */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

inline constexpr int kMaxDelPezzoPoints = 8;

struct StarReport {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool cond_iv = false;
  std::int64_t minus_L_dot_K = 0;
  bool holds = false;
};

/* c.f is odd; R(n) only. */
bool is_odd(const DivClass &c);

StarReport condition_star(const DivClass &c);

/* All classes d l - sum m_i e_i with square -1 and K-degree -1, sorted by
 * degree then multiplicities. The list is cached per n. */
const std::vector<DivClass> &minus_one_classes(int n);

/* c^2 = -1 and c.K = -1, on R(n) or P(n). */
bool is_minus_one(const DivClass &c);

bool is_nef_p(const DivClass &c);
bool is_big_and_nef_p(const DivClass &c);

/* All pairwise products vanish. */
bool are_pairwise_disjoint(std::span<const DivClass> cs);

}  // namespace enriques
