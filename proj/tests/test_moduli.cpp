/* Apache License, Version 2.0 */

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "enriques/moduli.hpp"

using namespace enriques;

namespace {

FundamentalCoefficients fc_of(std::array<std::int64_t, 11> v)
{
  return FundamentalCoefficients::from_flat(v);
}

bool contains(const std::vector<std::string> &v, const std::string &s)
{
  return std::find(v.begin(), v.end(), s) != v.end();
}

/* L^2 from the Gram rules, one generator pair at a time. Index 8 stands for
 * E_{9,10}; the others are E_1..E_7, E_9, E_10. */
std::int64_t naive_square(const std::array<std::int64_t, 11> &v)
{
  const int labels[10] = {1, 2, 3, 4, 5, 6, 7, 9, 10, 0};
  const std::int64_t coeff[10] = {v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[0]};
  std::int64_t total = 0;
  for (int x = 0; x < 10; x++) {
    for (int y = 0; y < 10; y++) {
      if (x == y) {
        continue;
      }
      std::int64_t g = 1;
      if (labels[x] == 0 || labels[y] == 0) {
        const int other = labels[x] == 0 ? labels[y] : labels[x];
        g = (other == 9 || other == 10) ? 2 : 1;
      }
      total += coeff[x] * coeff[y] * g;
    }
  }
  return total;
}

/* Every valid tuple with all entries <= bound, grouped by genus. */
std::map<std::int64_t, std::set<std::array<std::int64_t, 11>>> naive_enumeration(std::int64_t bound, std::int64_t max_genus)
{
  std::map<std::int64_t, std::set<std::array<std::int64_t, 11>>> out;
  std::array<std::int64_t, 11> v{};
  const auto emit = [&] {
    const std::int64_t sq = naive_square(v);
    if (sq <= 0 || sq % 2 != 0) {
      return;
    }
    const std::int64_t g = sq / 2 + 1;
    if (g > max_genus) {
      return;
    }
    bool all_even = true;
    for (int i = 0; i < 10; i++) {
      all_even = all_even && v[static_cast<std::size_t>(i)] % 2 == 0;
    }
    v[10] = 0;
    out[g].insert(v);
    if (all_even) {
      v[10] = 1;
      out[g].insert(v);
      v[10] = 0;
    }
  };
  for (v[1] = 0; v[1] <= bound; v[1]++)
    for (v[2] = 0; v[2] <= v[1]; v[2]++)
      for (v[3] = 0; v[3] <= v[2]; v[3]++)
        for (v[4] = 0; v[4] <= v[3]; v[4]++)
          for (v[5] = 0; v[5] <= v[4]; v[5]++)
            for (v[6] = 0; v[6] <= v[5]; v[6]++)
              for (v[7] = 0; v[7] <= v[6]; v[7]++)
                for (v[9] = 0; v[9] <= bound; v[9]++)
                  for (v[8] = v[9]; v[8] <= bound; v[8]++)
                    for (v[0] = v[8]; v[0] <= std::min(bound, v[8] + v[9]); v[0]++)
                      emit();
  return out;
}

}  // namespace

TEST_CASE("parse and format coefficients")
{
  const auto fc = parse_coefficients("1,1,1,0,0,0,0,0,1,1,0");
  CHECK(fc.a0 == 1);
  CHECK(fc.at(1) == 1);
  CHECK(fc.at(3) == 0);
  CHECK(fc.a9 == 1);
  CHECK(fc.a10 == 1);
  CHECK(format_coefficients(fc) == "1,1,1,0,0,0,0,0,1,1,0");
  CHECK(parse_coefficients(" 3, 0,0,0,0,0,0,0,3,0,0") == fc_of({3, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0}));
  CHECK_THROWS_AS(parse_coefficients("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_coefficients("1,1,1,0,0,0,0,0,1,1,0,7"), ParseError);
  CHECK_THROWS_AS(parse_coefficients("1,1,x,0,0,0,0,0,1,1,0"), ParseError);
  try {
    (void)parse_coefficients("1,1,x,0,0,0,0,0,1,1,0");
  }
  catch (const ParseError &e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(fc.at(8), Error);
}

TEST_CASE("validation")
{
  CHECK(validate(fc_of({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0})).empty());
  CHECK(contains(validate(fc_of({2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})), "a9 + a10 >= a0"));
  CHECK(contains(validate(fc_of({0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0})), "a1 >= a2"));
  CHECK(contains(validate(fc_of({0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1})), "eps = 0 when some a_i is odd"));
  CHECK(contains(validate(fc_of({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})), "L^2 > 0"));
  CHECK(contains(validate(fc_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0})), "a9 >= a10"));
  CHECK(contains(validate(fc_of({0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0})), "a0 >= a9"));
  CHECK(contains(validate(fc_of({0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0})), "a1 >= 0"));
  /* all violations are listed */
  CHECK(validate(fc_of({0, 1, 2, 0, 0, 0, 0, 0, 1, 0, 1})).size() >= 3);
}

TEST_CASE("square and genus")
{
  const auto s71 = fc_of({0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(square(s71) == 2);
  CHECK(genus(s71) == 2);
  const auto s721 = fc_of({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0});
  CHECK(square(s721) == 4);
  CHECK(genus(s721) == 3);
  const auto big = fc_of({3, 2, 2, 2, 0, 0, 0, 0, 2, 2, 0});
  CHECK(square(big) == 164);
  CHECK(genus(big) == 83);
  CHECK(square(big) == iso_pair(to_iso_expr(big), to_iso_expr(big)));
}

TEST_CASE("to_iso_expr")
{
  CHECK(to_iso_expr(fc_of({0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0})) == IsoExpr::e(9));
  const auto d = fc_of({1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0});
  CHECK(to_iso_expr(d) == IsoExpr::e(9, 10) + IsoExpr::e(9) + IsoExpr::e(10));
  CHECK(square(d) == 10);
  CHECK(!validate(fc_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})).empty());
}

TEST_CASE("two-divisibility")
{
  CHECK(is_two_divisible(fc_of({0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0})));
  CHECK_FALSE(is_two_divisible(fc_of({0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0})));
  CHECK(is_two_divisible(fc_of({2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0})));
  CHECK_FALSE(is_two_divisible(fc_of({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0})));
}

TEST_CASE("trichotomy examples")
{
  const auto a = trichotomy(fc_of({0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0}));
  CHECK(a.tag == Trichotomy::CaseI);
  CHECK(a.name() == "CASE_I");
  CHECK((fc_of({0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0}).at(a.i) + 3) % 2 == 1);

  CHECK(trichotomy(fc_of({3, 2, 0, 0, 0, 0, 0, 0, 2, 2, 0})).tag == Trichotomy::CaseII);
  CHECK(trichotomy(fc_of({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0})).tag == Trichotomy::CaseIII);
  CHECK(trichotomy(fc_of({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0})).name() == "CASE_III");

  /* a1 = a2 = 1 and a9 = a10 = 1: a9 + a3 + a4 + a5 = 1 is odd */
  const auto w = trichotomy(fc_of({1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0}));
  CHECK(w.tag == Trichotomy::CaseI);
  CHECK(w.i == 9);
  CHECK(w.klm == std::array<int, 3>{3, 4, 5});

  CHECK_THROWS_AS(trichotomy(fc_of({2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0})), Error);
  CHECK_THROWS_AS(trichotomy(fc_of({2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1})), Error);
}

TEST_CASE("trichotomy witness is minimal")
{
  for (std::int64_t g = 2; g <= 30; g++) {
    for (const auto &fc : enumerate_components(g, EnumFilter::NonTwoDivisible)) {
      const auto t = trichotomy(fc);
      if (t.tag != Trichotomy::CaseI) {
        continue;
      }
      const auto klm_sum = [&](int k, int l, int m) { return fc.at(k) + fc.at(l) + fc.at(m); };
      const std::int64_t best = klm_sum(t.klm[0], t.klm[1], t.klm[2]);
      CHECK((fc.at(t.i) + best) % 2 == 1);
      for (int i : {9, 10}) {
        for (int k = 1; k <= 7; k++) {
          for (int l = k + 1; l <= 7; l++) {
            for (int m = l + 1; m <= 7; m++) {
              if ((fc.at(i) + klm_sum(k, l, m)) % 2 == 1) {
                CHECK(klm_sum(k, l, m) >= best);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration matches the naive oracle with doubled bounds")
{
  constexpr std::int64_t kMaxGenus = 6;
  const auto oracle = naive_enumeration(2 * (kMaxGenus - 1), kMaxGenus);
  for (std::int64_t g = 2; g <= kMaxGenus; g++) {
    std::set<std::array<std::int64_t, 11>> have;
    for (const auto &fc : enumerate_components(g, EnumFilter::All)) {
      have.insert(fc.flat());
    }
    const auto it = oracle.find(g);
    REQUIRE(it != oracle.end());
    CHECK_MESSAGE(have == it->second, "genus " << g);
  }
}

TEST_CASE("enumeration examples")
{
  const auto g2 = enumerate_components(2, EnumFilter::All);
  CHECK(std::find(g2.begin(), g2.end(), fc_of({0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0})) != g2.end());
  const auto g3 = enumerate_components(3, EnumFilter::All);
  CHECK(std::find(g3.begin(), g3.end(), fc_of({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0})) != g3.end());
  CHECK_THROWS_AS(enumerate_components(1, EnumFilter::All), Error);
}

TEST_CASE("enumeration post-conditions up to genus 50")
{
  for (std::int64_t g = 2; g <= 50; g++) {
    const auto all = enumerate_components(g, EnumFilter::All);
    const auto odd = enumerate_components(g, EnumFilter::NonTwoDivisible);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto &x, const auto &y) { return x.flat() < y.flat(); }));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(enumerate_components(g, EnumFilter::All) == all);

    std::size_t even = 0;
    for (const auto &fc : all) {
      REQUIRE(validate(fc).empty());
      CHECK(square(fc) == 2 * g - 2);
      CHECK(square(fc) == iso_pair(to_iso_expr(fc), to_iso_expr(fc)));

      bool all_even = true;
      for (std::size_t i = 0; i < 10; i++) {
        all_even = all_even && fc.flat()[i] % 2 == 0;
      }
      bool even_pairing = true;
      for (int i = 1; i <= 10; i++) {
        even_pairing = even_pairing && iso_pair(to_iso_expr(fc), IsoExpr::e(i)) % 2 == 0;
      }
      CHECK(is_two_divisible(fc) == all_even);
      CHECK(is_two_divisible(fc) == even_pairing);
      even += is_two_divisible(fc) ? 1 : 0;
    }
    CHECK(odd.size() + even == all.size());
    for (const auto &fc : odd) {
      CHECK_FALSE(is_two_divisible(fc));
      CHECK(fc.eps == 0);
      CHECK_NOTHROW(trichotomy(fc));
    }
  }
}
