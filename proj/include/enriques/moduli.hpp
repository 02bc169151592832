/* Apache License, Version 2.0 */

/* Fundamental coefficient tuples (a0, a1..a7, a9, a10, eps) labelling the
 * components of the moduli space of polarized Enriques surfaces. */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

struct FundamentalCoefficients {
  std::int64_t a0 = 0;
  std::array<std::int64_t, 7> a{};  // a1..a7
  std::int64_t a9 = 0;
  std::int64_t a10 = 0;
  int eps = 0;

  /* a(i) for i in {0, 1..7, 9, 10}. */
  std::int64_t at(int i) const;
  /* The eleven values in the order a0, a1..a7, a9, a10, eps. */
  std::array<std::int64_t, 11> flat() const;
  static FundamentalCoefficients from_flat(const std::array<std::int64_t, 11> &v);

  friend auto operator<=>(const FundamentalCoefficients &, const FundamentalCoefficients &) = default;
};

/* Comma separated a0,a1,..,a7,a9,a10,eps. */
FundamentalCoefficients parse_coefficients(const std::string &text);
std::string format_coefficients(const FundamentalCoefficients &fc);

/* Human readable list of violated constraints; empty when valid. */
std::vector<std::string> validate(const FundamentalCoefficients &fc);

std::int64_t square(const FundamentalCoefficients &fc);
std::int64_t genus(const FundamentalCoefficients &fc);
IsoExpr to_iso_expr(const FundamentalCoefficients &fc);
bool is_two_divisible(const FundamentalCoefficients &fc);

enum class Trichotomy { CaseI, CaseII, CaseIII };

struct TrichotomyCase {
  Trichotomy tag = Trichotomy::CaseI;
  /* Only meaningful for CaseI: witness i in {9, 10} and k < l < m in 1..7. */
  int i = 0;
  std::array<int, 3> klm{};

  std::string name() const;
};

/* Requires a valid, non 2-divisible tuple with eps = 0. Cases are tried in
 * the order I, II, III. */
TrichotomyCase trichotomy(const FundamentalCoefficients &fc);

enum class EnumFilter { All, NonTwoDivisible };

/* Every valid tuple of genus g, sorted by flat(). */
std::vector<FundamentalCoefficients> enumerate_components(std::int64_t g, EnumFilter filter);

}  // namespace enriques
