/* Apache License, Version 2.0 */

#include <doctest.h>

#include <random>
#include <string>

#include "enriques/divexpr.hpp"

using namespace enriques;

namespace {

std::size_t parse_offset(std::string_view text, const SurfaceModel &m)
{
  try {
    (void)parse_any(text, m);
  }
  catch (const ParseError &e) {
    return e.offset();
  }
  FAIL("accepted: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse examples")
{
  CHECK(parse_divisor("2s-f-e1-e2-e3-e4", SurfaceModel::R(4)) == t_class(SurfaceModel::R(4)));
  CHECK(parse_divisor("3l", SurfaceModel::P(0)) == -canonical_class(SurfaceModel::P(0)));
  const IsoExpr e = parse_iso("E9.10+E9");
  CHECK(e == IsoExpr::e(9, 10) + IsoExpr::e(9));
  CHECK(iso_pair(e, e) == 4);
  CHECK(parse_divisor(" 2 s +  3f - 2 e2 ", SurfaceModel::R(2)) == DivClass(SurfaceModel::R(2), {2, 3, 0, 2}));
  CHECK(parse_divisor("-l+e1", SurfaceModel::P(1)) == DivClass(SurfaceModel::P(1), {-1, -1}));
  CHECK(parse_divisor("0", SurfaceModel::P(3)).is_zero());
  CHECK(parse_divisor("s+s", SurfaceModel::R(0)) == DivClass(SurfaceModel::R(0), {2, 0}));
}

TEST_CASE("pairing through the text syntax")
{
  const auto iso = SurfaceModel::enriques_iso();
  CHECK(pair_any(parse_any("E1", iso), parse_any("E9.10", iso)) == 1);
  CHECK(pair_any(parse_any("E9", iso), parse_any("E9.10", iso)) == 2);
  const auto p2 = SurfaceModel::P(2);
  CHECK(pair_any(parse_any("l-e1", p2), parse_any("l-e2", p2)) == 1);
  CHECK_THROWS_AS(pair_any(parse_any("l", p2), parse_any("E1", iso)), Error);
}

TEST_CASE("parse errors carry byte offsets")
{
  CHECK(parse_offset("s+q", SurfaceModel::R(2)) == 2);
  CHECK(parse_offset("s+e3", SurfaceModel::R(2)) == 2);
  CHECK(parse_offset("l", SurfaceModel::R(2)) == 0);
  CHECK(parse_offset("s", SurfaceModel::P(2)) == 0);
  CHECK(parse_offset("E1", SurfaceModel::P(2)) == 0);
  CHECK(parse_offset("E11", SurfaceModel::enriques_iso()) == 0);
  CHECK(parse_offset("E3.3", SurfaceModel::enriques_iso()) == 0);
  CHECK(parse_offset("s++f", SurfaceModel::R(0)) == 2);
  CHECK(parse_offset("", SurfaceModel::R(0)) == 0);
  CHECK(parse_offset("2s 3f", SurfaceModel::R(0)) == 3);
  CHECK(parse_offset("e0", SurfaceModel::P(2)) == 0);
}

TEST_CASE("canonical printing")
{
  CHECK(format_divisor(t_class(SurfaceModel::R(4))) == "2s-f-e1-e2-e3-e4");
  CHECK(format_divisor(DivClass(SurfaceModel::P(3), {6, 3, 3, 3})) == "6l-3e1-3e2-3e3");
  CHECK(format_divisor(DivClass(SurfaceModel::P(1), {0, -1})) == "e1");
  CHECK(format_divisor(DivClass::zero(SurfaceModel::R(2))) == "0");
  CHECK(format_iso(IsoExpr::e(9) + IsoExpr::e(9, 10)) == "E9+E9.10");
  CHECK(format_iso(IsoExpr()) == "0");
  CHECK(format_any(parse_any("-e4 - f + 2s -e1-e2-e3", SurfaceModel::R(4))) == "2s-f-e1-e2-e3-e4");
}

TEST_CASE("print and parse are inverse on canonical forms")
{
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 3000; trial++) {
    const int n = trial % 9;
    const SurfaceModel m = trial % 3 == 0 ? SurfaceModel::R(n) : SurfaceModel::P(n);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n) + (m.kind == SurfaceKind::R ? 2 : 1));
    for (auto &x : v) {
      x = coeff(rng) * (trial % 4 == 0 ? 0 : 1);
    }
    const DivClass c(m, v);
    const std::string text = format_divisor(c);
    CHECK(parse_divisor(text, m) == c);
    CHECK(format_divisor(parse_divisor(text, m)) == text);
  }
  for (int trial = 0; trial < 1000; trial++) {
    IsoExpr e;
    for (int g = 0; g < kIsoGenerators; g++) {
      if (rng() % 6 == 0) {
        e.set(g, coeff(rng));
      }
    }
    const std::string text = format_iso(e);
    CHECK(parse_iso(text) == e);
    CHECK(format_iso(parse_iso(text)) == text);
  }
}
