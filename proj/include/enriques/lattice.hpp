/* Apache License, Version 2.0 */

/* Exact intersection arithmetic on the lattice models used by the
 * degeneration argument:
 *
 *   R(n)  blow-up of Sym^2(E) at n points of T, basis s, f, e_1..e_n
 *   P(n)  blow-up of the plane at n points of T, basis l, e_1..e_n
 *   X     the glued surface, classes are Cartier pairs (R-class, P-class)
 *   E     the abstract lattice spanned by an isotropic 10-sequence
 *         E_1..E_10 together with the classes E_{i,j}
 *
 * All values are immutable integers; everything here is a pure function. */

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "enriques/error.hpp"

namespace enriques {

enum class SurfaceKind { R, P, X, EnriquesIso };

struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::R;
  int n = 0;
  int n_r = 0;
  int n_p = 0;

  static SurfaceModel R(int n);
  static SurfaceModel P(int n);
  static SurfaceModel X(int n_r, int n_p);
  static SurfaceModel enriques_iso();

  /* Nine blown-up points in total, as required for a semistable limit. */
  bool semistable() const;
  /* "R4", "P5", "X4,5", "E". */
  std::string name() const;

  friend auto operator<=>(const SurfaceModel &, const SurfaceModel &) = default;
};

/* Parses the output of SurfaceModel::name(). */
SurfaceModel parse_model(const std::string &text);

/* An integer class on R(n) or P(n).
 *
 * Coefficients are stored the way the classes are written by hand:
 *   R(n): (alpha, beta, gamma_1..gamma_n)  for  alpha s + beta f - sum gamma_i e_i
 *   P(n): (d, m_1..m_n)                    for  d l - sum m_i e_i */
class DivClass {
 public:
  DivClass() = default;
  DivClass(SurfaceModel model, std::vector<std::int64_t> coeffs);

  static DivClass zero(SurfaceModel model);
  static DivClass section(int n);
  static DivClass fiber(int n);
  static DivClass line(int n);
  /* The exceptional curve e_i (1-based) as a class, i.e. gamma_i = -1. */
  static DivClass exceptional(SurfaceModel model, int i);

  const SurfaceModel &model() const { return model_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  int num_exceptionals() const { return model_.n; }
  bool is_zero() const;

  std::int64_t alpha() const;
  std::int64_t beta() const;
  std::int64_t gamma(int i) const;
  std::int64_t degree() const;
  std::int64_t multiplicity(int i) const;

  DivClass operator+(const DivClass &other) const;
  DivClass operator-(const DivClass &other) const;
  DivClass operator-() const;
  DivClass &operator+=(const DivClass &other);
  DivClass &operator-=(const DivClass &other);
  friend DivClass operator*(std::int64_t k, const DivClass &c);

  friend bool operator==(const DivClass &, const DivClass &) = default;
  friend auto operator<=>(const DivClass &, const DivClass &) = default;

 private:
  void require_same_model(const DivClass &other) const;

  SurfaceModel model_{};
  std::vector<std::int64_t> coeffs_;
};

/* Symmetric bilinear intersection pairing; throws ModelMismatch. */
std::int64_t pair(const DivClass &a, const DivClass &b);
std::int64_t square(const DivClass &a);

/* K on R(n) is -2s + f + sum e_i, on P(n) it is -3l + sum e_i. */
DivClass canonical_class(const SurfaceModel &model);
/* Numerical class of T: 2s - f - sum e_i on R(n), 3l - sum e_i on P(n). */
DivClass t_class(const SurfaceModel &model);

/* Restriction to the exceptionals listed in `keep` (1-based, in order).
 * Coefficients on dropped exceptionals must vanish. */
DivClass select_exceptionals(const DivClass &c, std::span<const int> keep);

/* A Cartier pair on X(n_r, n_p). `torsion` marks the numerically trivial
 * class K_X, which is the only nonzero torsion element. */
struct XClass {
  DivClass r_part;
  DivClass p_part;
  bool torsion = false;

  SurfaceModel model() const;
  XClass operator+(const XClass &other) const;
  XClass operator-(const XClass &other) const;
  friend XClass operator*(std::int64_t k, const XClass &c);
  friend bool operator==(const XClass &, const XClass &) = default;
};

XClass make_xclass(DivClass r_part, DivClass p_part);
std::int64_t pair(const XClass &a, const XClass &b);
std::int64_t square(const XClass &a);
/* r_part . T_R == p_part . T_P */
bool is_cartier(const XClass &a);
XClass canonical_class_x(const SurfaceModel &model);
/* (T_R, -T_P); its square vanishes exactly for semistable models. */
XClass xi_class(const SurfaceModel &model);

/* p_a = L.(L+K)/2 + 1; on X the canonical class is numerically trivial. */
std::int64_t arithmetic_genus(const DivClass &c);
std::int64_t arithmetic_genus(const XClass &c);

/* Isotropic generators: E_1..E_10 occupy indices 0..9, the 45 classes
 * E_{i,j} (i < j) follow in lexicographic order. */
inline constexpr int kIsoGenerators = 55;

int iso_index(int i);
int iso_index(int i, int j);
/* Inverse of iso_index: {i, 0} for E_i, {i, j} for E_{i,j}. */
std::array<int, 2> iso_label(int index);
std::int64_t iso_gram(int g, int h);

class IsoExpr {
 public:
  IsoExpr() { coeffs_.fill(0); }

  static IsoExpr e(int i);
  static IsoExpr e(int i, int j);

  std::int64_t coeff(int index) const { return coeffs_.at(index); }
  std::int64_t coeff_e(int i) const { return coeffs_.at(iso_index(i)); }
  std::int64_t coeff_e(int i, int j) const { return coeffs_.at(iso_index(i, j)); }
  void set(int index, std::int64_t value) { coeffs_.at(index) = value; }
  const std::array<std::int64_t, kIsoGenerators> &coeffs() const { return coeffs_; }
  bool is_zero() const;

  IsoExpr operator+(const IsoExpr &other) const;
  IsoExpr operator-(const IsoExpr &other) const;
  IsoExpr &operator+=(const IsoExpr &other);
  friend IsoExpr operator*(std::int64_t k, const IsoExpr &c);
  friend bool operator==(const IsoExpr &, const IsoExpr &) = default;

 private:
  std::array<std::int64_t, kIsoGenerators> coeffs_;
};

std::int64_t iso_pair(const IsoExpr &a, const IsoExpr &b);

/* Generators with a known restriction to the limit surface X(4,5). */
bool has_restriction(int index);
std::vector<int> restrictable_generators();

/* Restriction to X(4,5): R-exceptionals e_1..e_4, P-exceptionals
 * e_5..e_9 stored at positions 1..5 of P(5). Throws UnsupportedGenerator
 * if e involves an E_{i,j} other than E_{9,10} or E_{5,6}. */
XClass restrict(const IsoExpr &e);

}  // namespace enriques
