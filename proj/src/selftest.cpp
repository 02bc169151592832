/* Apache License, Version 2.0 */

#include "enriques/selftest.hpp"

#include <set>

#include "enriques/positivity.hpp"

namespace enriques {

std::vector<CheckItem> run_selftest()
{
  std::vector<CheckItem> out;

  /* Gram relations, restated from the definitions of E_i and E_{i,j} */
  int gram_bad = 0;
  int pairs = 0;
  for (int g = 0; g < kIsoGenerators; g++) {
    for (int h = g; h < kIsoGenerators; h++) {
      pairs++;
      const auto a = iso_label(g);
      const auto b = iso_label(h);
      std::set<int> sa{a[0]};
      std::set<int> sb{b[0]};
      if (a[1]) {
        sa.insert(a[1]);
      }
      if (b[1]) {
        sb.insert(b[1]);
      }
      int meet = 0;
      for (int x : sa) {
        meet += static_cast<int>(sb.count(x));
      }
      std::int64_t want = 0;
      if (g == h) {
        want = 0;
      }
      else if (sa.size() == 1 && sb.size() == 1) {
        want = 1;
      }
      else if (sa.size() == 2 && sb.size() == 2) {
        want = meet ? 1 : 2;
      }
      else {
        want = meet ? 2 : 1;
      }
      if (iso_gram(g, h) != want) {
        gram_bad++;
      }
    }
  }
  out.push_back({"gram.relations", gram_bad == 0 && pairs == 1540,
                 std::to_string(pairs) + " pairs, " + std::to_string(gram_bad) + " mismatches"});

  /* 3 E_{i,j} = sum E_k - 3 E_i - 3 E_j, compared against every generator */
  int relation_bad = 0;
  IsoExpr total;
  for (int i = 1; i <= 10; i++) {
    total += IsoExpr::e(i);
  }
  for (int i = 1; i <= 10; i++) {
    for (int j = i + 1; j <= 10; j++) {
      const IsoExpr three_d = 3 * (IsoExpr::e(i) + IsoExpr::e(j) + IsoExpr::e(i, j));
      for (int g = 0; g < kIsoGenerators; g++) {
        IsoExpr gen;
        gen.set(g, 1);
        if (iso_pair(three_d, gen) != iso_pair(total, gen)) {
          relation_bad++;
        }
      }
    }
  }
  out.push_back({"gram.three_d", relation_bad == 0, std::to_string(relation_bad) + " mismatches"});

  const auto gens = restrictable_generators();
  int iso_bad = 0;
  int cartier_bad = 0;
  for (int g : gens) {
    IsoExpr a;
    a.set(g, 1);
    const XClass ra = restrict(a);
    if (!is_cartier(ra)) {
      cartier_bad++;
    }
    for (int h : gens) {
      IsoExpr b;
      b.set(h, 1);
      if (pair(ra, restrict(b)) != iso_gram(g, h)) {
        iso_bad++;
      }
    }
  }
  out.push_back({"restriction.isometry", iso_bad == 0 && gens.size() == 12,
                 std::to_string(gens.size()) + " generators, " + std::to_string(iso_bad) + " mismatches"});
  out.push_back({"restriction.cartier", cartier_bad == 0, std::to_string(cartier_bad) + " non-Cartier"});

  for (int n = 0; n <= kMaxDelPezzoPoints; n++) {
    const auto &list = minus_one_classes(n);
    bool ok = static_cast<int>(list.size()) == kMinusOneCensus[n];
    for (const DivClass &c : list) {
      ok = ok && is_minus_one(c);
    }
    out.push_back({"minus_one.P" + std::to_string(n), ok,
                   std::to_string(list.size()) + " classes, expected " + std::to_string(kMinusOneCensus[n])});
  }
  return out;
}

}  // namespace enriques
