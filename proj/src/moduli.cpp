/* Apache License, Version 2.0 */

#include "enriques/moduli.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

namespace enriques {

std::int64_t FundamentalCoefficients::at(int i) const
{
  if (i == 0) {
    return a0;
  }
  if (i >= 1 && i <= 7) {
    return a[static_cast<std::size_t>(i - 1)];
  }
  if (i == 9) {
    return a9;
  }
  if (i == 10) {
    return a10;
  }
  throw Error(ErrorCode::InvalidArgument, "no fundamental coefficient a" + std::to_string(i));
}

std::array<std::int64_t, 11> FundamentalCoefficients::flat() const
{
  return {a0, a[0], a[1], a[2], a[3], a[4], a[5], a[6], a9, a10, eps};
}

FundamentalCoefficients FundamentalCoefficients::from_flat(const std::array<std::int64_t, 11> &v)
{
  FundamentalCoefficients fc;
  fc.a0 = v[0];
  for (std::size_t i = 0; i < 7; i++) {
    fc.a[i] = v[i + 1];
  }
  fc.a9 = v[8];
  fc.a10 = v[9];
  if (v[10] != 0 && v[10] != 1) {
    throw Error(ErrorCode::InvalidArgument, "eps must be 0 or 1");
  }
  fc.eps = static_cast<int>(v[10]);
  return fc;
}

FundamentalCoefficients parse_coefficients(const std::string &text)
{
  std::array<std::int64_t, 11> v{};
  std::size_t pos = 0;
  for (std::size_t field = 0; field < v.size(); field++) {
    while (pos < text.size() && text[pos] == ' ') {
      pos++;
    }
    const char *begin = text.data() + pos;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v[field]);
    if (ec != std::errc() || ptr == begin) {
      throw ParseError(pos, "expected an integer coefficient");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') {
      pos++;
    }
    if (field + 1 < v.size()) {
      if (pos >= text.size() || text[pos] != ',') {
        throw ParseError(pos, "expected ',' (11 values: a0,a1..a7,a9,a10,eps)");
      }
      pos++;
    }
  }
  if (pos != text.size()) {
    throw ParseError(pos, "trailing input after 11 coefficients");
  }
  if (v[10] != 0 && v[10] != 1) {
    throw ParseError(text.rfind(',') + 1, "eps must be 0 or 1");
  }
  return FundamentalCoefficients::from_flat(v);
}

std::string format_coefficients(const FundamentalCoefficients &fc)
{
  std::string out;
  for (std::int64_t v : fc.flat()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(v);
  }
  return out;
}

static bool all_even(const FundamentalCoefficients &fc)
{
  for (int i : {0, 1, 2, 3, 4, 5, 6, 7, 9, 10}) {
    if (fc.at(i) % 2 != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> validate(const FundamentalCoefficients &fc)
{
  std::vector<std::string> out;
  for (int i : {0, 1, 2, 3, 4, 5, 6, 7, 9, 10}) {
    if (fc.at(i) < 0) {
      out.push_back("a" + std::to_string(i) + " >= 0");
    }
  }
  for (int i = 1; i < 7; i++) {
    if (fc.at(i) < fc.at(i + 1)) {
      out.push_back("a" + std::to_string(i) + " >= a" + std::to_string(i + 1));
    }
  }
  if (fc.a9 + fc.a10 < fc.a0) {
    out.push_back("a9 + a10 >= a0");
  }
  if (fc.a0 < fc.a9) {
    out.push_back("a0 >= a9");
  }
  if (fc.a9 < fc.a10) {
    out.push_back("a9 >= a10");
  }
  if (fc.eps != 0 && fc.eps != 1) {
    out.push_back("eps in {0, 1}");
  }
  else if (fc.eps == 1 && !all_even(fc)) {
    out.push_back("eps = 0 when some a_i is odd");
  }
  if (out.empty() && square(fc) <= 0) {
    out.push_back("L^2 > 0");
  }
  return out;
}

std::int64_t square(const FundamentalCoefficients &fc)
{
  const std::array<std::int64_t, 9> s{fc.a[0], fc.a[1], fc.a[2], fc.a[3], fc.a[4], fc.a[5], fc.a[6], fc.a9, fc.a10};
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < s.size(); i++) {
    for (std::size_t j = i + 1; j < s.size(); j++) {
      pairs = checked::add(pairs, checked::mul(s[i], s[j]));
    }
  }
  std::int64_t with_a0 = 0;
  for (std::int64_t v : fc.a) {
    with_a0 = checked::add(with_a0, v);
  }
  with_a0 = checked::add(with_a0, checked::mul(2, checked::add(fc.a9, fc.a10)));
  return checked::add(checked::mul(2, pairs), checked::mul(2, checked::mul(fc.a0, with_a0)));
}

std::int64_t genus(const FundamentalCoefficients &fc)
{
  return square(fc) / 2 + 1;
}

IsoExpr to_iso_expr(const FundamentalCoefficients &fc)
{
  IsoExpr e;
  for (int i = 1; i <= 7; i++) {
    e.set(iso_index(i), fc.at(i));
  }
  e.set(iso_index(9), fc.a9);
  e.set(iso_index(10), fc.a10);
  e.set(iso_index(9, 10), fc.a0);
  return e;
}

bool is_two_divisible(const FundamentalCoefficients &fc)
{
  return all_even(fc);
}

std::string TrichotomyCase::name() const
{
  switch (tag) {
    case Trichotomy::CaseI:
      return "CASE_I";
    case Trichotomy::CaseII:
      return "CASE_II";
    case Trichotomy::CaseIII:
      return "CASE_III";
  }
  return "?";
}

TrichotomyCase trichotomy(const FundamentalCoefficients &fc)
{
  const auto violations = validate(fc);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidArgument, "invalid coefficients: " + violations.front());
  }
  if (fc.eps != 0 || is_two_divisible(fc)) {
    throw Error(ErrorCode::OutOfTheorem, "2-divisible components (or eps = 1) are excluded");
  }

  bool found = false;
  TrichotomyCase best;
  std::tuple<std::int64_t, std::int64_t> best_key{};
  for (int k = 1; k <= 7; k++) {
    for (int l = k + 1; l <= 7; l++) {
      for (int m = l + 1; m <= 7; m++) {
        const std::int64_t klm = fc.at(k) + fc.at(l) + fc.at(m);
        for (int i : {9, 10}) {
          const std::int64_t total = fc.at(i) + klm;
          if (total % 2 == 0) {
            continue;
          }
          const std::tuple<std::int64_t, std::int64_t> key{klm, total};
          const bool better = !found || key < best_key ||
                              (key == best_key && std::tuple(i, k, l, m) <
                                                      std::tuple(best.i, best.klm[0], best.klm[1], best.klm[2]));
          if (better) {
            found = true;
            best_key = key;
            best.tag = Trichotomy::CaseI;
            best.i = i;
            best.klm = {k, l, m};
          }
        }
      }
    }
  }
  if (found) {
    return best;
  }

  bool others_even = true;
  bool others_odd = true;
  for (int i : {1, 2, 3, 4, 5, 6, 7, 9, 10}) {
    if (fc.at(i) % 2 == 0) {
      others_odd = false;
    }
    else {
      others_even = false;
    }
  }
  if (fc.a0 > 0 && fc.a0 % 2 != 0 && others_even) {
    return {Trichotomy::CaseII, 0, {}};
  }
  if (fc.a0 > 0 && others_odd) {
    return {Trichotomy::CaseIII, 0, {}};
  }
  throw Error(ErrorCode::InvariantViolation, "no case of the trichotomy applies to " + format_coefficients(fc));
}

namespace {

struct Enumerator {
  std::int64_t target;
  EnumFilter filter;
  std::vector<FundamentalCoefficients> out;
  FundamentalCoefficients cur;

  void emit()
  {
    if (all_even(cur)) {
      if (filter == EnumFilter::All) {
        cur.eps = 0;
        out.push_back(cur);
        cur.eps = 1;
        out.push_back(cur);
        cur.eps = 0;
      }
      return;
    }
    out.push_back(cur);
  }

  /* sq: square of the assigned part; sum_s: sum of the assigned entries
   * among a1..a7, a9, a10. */
  void fill(int slot, std::int64_t upper, std::int64_t sq, std::int64_t sum_s)
  {
    if (slot == 7) {
      if (sq == target) {
        emit();
      }
      return;
    }
    for (std::int64_t x = 0; x <= upper; x++) {
      const std::int64_t next = sq + 2 * x * sum_s + 2 * cur.a0 * x;
      if (next > target) {
        break;
      }
      cur.a[static_cast<std::size_t>(slot)] = x;
      fill(slot + 1, x, next, sum_s + x);
    }
    cur.a[static_cast<std::size_t>(slot)] = 0;
  }

  void run()
  {
    const std::int64_t bound = target / 2;
    for (std::int64_t a9 = 0; a9 <= bound; a9++) {
      for (std::int64_t a10 = 0; a10 <= a9; a10++) {
        const std::int64_t base = 2 * a9 * a10;
        if (base > target) {
          break;
        }
        for (std::int64_t a0 = a9; a0 <= a9 + a10; a0++) {
          const std::int64_t sq = base + 4 * a0 * (a9 + a10);
          if (sq > target) {
            break;
          }
          cur.a9 = a9;
          cur.a10 = a10;
          cur.a0 = a0;
          fill(0, bound, sq, a9 + a10);
        }
      }
    }
  }
};

}  // namespace

std::vector<FundamentalCoefficients> enumerate_components(std::int64_t g, EnumFilter filter)
{
  if (g < 2) {
    throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  }
  if (g > 1'000'000) {
    throw Error(ErrorCode::InvalidArgument, "genus too large to enumerate");
  }
  Enumerator e{2 * g - 2, filter, {}, {}};
  e.run();
  std::sort(e.out.begin(), e.out.end(), [](const auto &x, const auto &y) { return x.flat() < y.flat(); });
  return e.out;
}

}  // namespace enriques
