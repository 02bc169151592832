/* Apache License, Version 2.0 */

#include "enriques/lattice.hpp"

#include <charconv>

namespace enriques {

const char *error_code_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "invalid_argument";
    case ErrorCode::ModelMismatch:
      return "model_mismatch";
    case ErrorCode::Unsupported:
      return "unsupported";
    case ErrorCode::UnsupportedGenerator:
      return "unsupported_generator";
    case ErrorCode::Parse:
      return "parse_error";
    case ErrorCode::OutOfTheorem:
      return "out_of_theorem";
    case ErrorCode::Overflow:
      return "overflow";
    case ErrorCode::InvariantViolation:
      return "invariant_violation";
  }
  return "unknown";
}

/* -------------------------------------------------------------------- */
/* Surface models */

SurfaceModel SurfaceModel::R(int n)
{
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative number of blown-up points");
  }
  return {SurfaceKind::R, n, 0, 0};
}

SurfaceModel SurfaceModel::P(int n)
{
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative number of blown-up points");
  }
  return {SurfaceKind::P, n, 0, 0};
}

SurfaceModel SurfaceModel::X(int n_r, int n_p)
{
  if (n_r < 0 || n_p < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative number of blown-up points");
  }
  return {SurfaceKind::X, 0, n_r, n_p};
}

SurfaceModel SurfaceModel::enriques_iso()
{
  return {SurfaceKind::EnriquesIso, 0, 0, 0};
}

bool SurfaceModel::semistable() const
{
  return kind == SurfaceKind::X && n_r + n_p == 9;
}

std::string SurfaceModel::name() const
{
  switch (kind) {
    case SurfaceKind::R:
      return "R" + std::to_string(n);
    case SurfaceKind::P:
      return "P" + std::to_string(n);
    case SurfaceKind::X:
      return "X" + std::to_string(n_r) + "," + std::to_string(n_p);
    case SurfaceKind::EnriquesIso:
      return "E";
  }
  return "?";
}

static int parse_count(const std::string &text, std::size_t begin, std::size_t end)
{
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
  if (ec != std::errc() || ptr != text.data() + end || begin == end) {
    throw ParseError(begin, "expected a point count in model '" + text + "'");
  }
  return value;
}

SurfaceModel parse_model(const std::string &text)
{
  if (text == "E") {
    return SurfaceModel::enriques_iso();
  }
  if (text.empty()) {
    throw ParseError(0, "empty model name");
  }
  switch (text[0]) {
    case 'R':
      return SurfaceModel::R(parse_count(text, 1, text.size()));
    case 'P':
      return SurfaceModel::P(parse_count(text, 1, text.size()));
    case 'X': {
      const std::size_t comma = text.find(',');
      if (comma == std::string::npos) {
        throw ParseError(text.size(), "expected 'X<r>,<p>'");
      }
      return SurfaceModel::X(parse_count(text, 1, comma), parse_count(text, comma + 1, text.size()));
    }
    default:
      throw ParseError(0, "unknown model '" + text + "' (expected R<n>, P<n>, X<r>,<p> or E)");
  }
}

/* -------------------------------------------------------------------- */
/* Classes on R(n) and P(n) */

static std::size_t basis_size(const SurfaceModel &model)
{
  switch (model.kind) {
    case SurfaceKind::R:
      return 2 + static_cast<std::size_t>(model.n);
    case SurfaceKind::P:
      return 1 + static_cast<std::size_t>(model.n);
    default:
      throw Error(ErrorCode::ModelMismatch, "divisor classes live on R(n) or P(n), not " + model.name());
  }
}

DivClass::DivClass(SurfaceModel model, std::vector<std::int64_t> coeffs)
    : model_(model), coeffs_(std::move(coeffs))
{
  if (coeffs_.size() != basis_size(model_)) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(basis_size(model_)) + " coefficients for " + model_.name());
  }
}

DivClass DivClass::zero(SurfaceModel model)
{
  return DivClass(model, std::vector<std::int64_t>(basis_size(model), 0));
}

DivClass DivClass::section(int n)
{
  DivClass c = zero(SurfaceModel::R(n));
  c.coeffs_[0] = 1;
  return c;
}

DivClass DivClass::fiber(int n)
{
  DivClass c = zero(SurfaceModel::R(n));
  c.coeffs_[1] = 1;
  return c;
}

DivClass DivClass::line(int n)
{
  DivClass c = zero(SurfaceModel::P(n));
  c.coeffs_[0] = 1;
  return c;
}

DivClass DivClass::exceptional(SurfaceModel model, int i)
{
  DivClass c = zero(model);
  if (i < 1 || i > model.n) {
    throw Error(ErrorCode::InvalidArgument,
                "exceptional index " + std::to_string(i) + " out of range for " + model.name());
  }
  const std::size_t offset = model.kind == SurfaceKind::R ? 1 : 0;
  c.coeffs_[offset + static_cast<std::size_t>(i)] = -1;
  return c;
}

bool DivClass::is_zero() const
{
  for (std::int64_t v : coeffs_) {
    if (v != 0) {
      return false;
    }
  }
  return true;
}

std::int64_t DivClass::alpha() const
{
  if (model_.kind != SurfaceKind::R) {
    throw Error(ErrorCode::ModelMismatch, "alpha is only defined on R(n)");
  }
  return coeffs_[0];
}

std::int64_t DivClass::beta() const
{
  if (model_.kind != SurfaceKind::R) {
    throw Error(ErrorCode::ModelMismatch, "beta is only defined on R(n)");
  }
  return coeffs_[1];
}

std::int64_t DivClass::gamma(int i) const
{
  if (model_.kind != SurfaceKind::R || i < 1 || i > model_.n) {
    throw Error(ErrorCode::InvalidArgument, "gamma index out of range");
  }
  return coeffs_[1 + static_cast<std::size_t>(i)];
}

std::int64_t DivClass::degree() const
{
  if (model_.kind != SurfaceKind::P) {
    throw Error(ErrorCode::ModelMismatch, "degree is only defined on P(n)");
  }
  return coeffs_[0];
}

std::int64_t DivClass::multiplicity(int i) const
{
  if (model_.kind != SurfaceKind::P || i < 1 || i > model_.n) {
    throw Error(ErrorCode::InvalidArgument, "multiplicity index out of range");
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

void DivClass::require_same_model(const DivClass &other) const
{
  if (!(model_ == other.model_)) {
    throw Error(ErrorCode::ModelMismatch,
                "classes live on different models: " + model_.name() + " vs " + other.model_.name());
  }
}

DivClass DivClass::operator+(const DivClass &other) const
{
  DivClass r = *this;
  r += other;
  return r;
}

DivClass DivClass::operator-(const DivClass &other) const
{
  DivClass r = *this;
  r -= other;
  return r;
}

DivClass DivClass::operator-() const
{
  return DivClass::zero(model_) - *this;
}

DivClass &DivClass::operator+=(const DivClass &other)
{
  require_same_model(other);
  for (std::size_t i = 0; i < coeffs_.size(); i++) {
    coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

DivClass &DivClass::operator-=(const DivClass &other)
{
  require_same_model(other);
  for (std::size_t i = 0; i < coeffs_.size(); i++) {
    coeffs_[i] = checked::sub(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

DivClass operator*(std::int64_t k, const DivClass &c)
{
  DivClass r = c;
  for (std::int64_t &v : r.coeffs_) {
    v = checked::mul(k, v);
  }
  return r;
}

std::int64_t pair(const DivClass &a, const DivClass &b)
{
  if (!(a.model() == b.model())) {
    throw Error(ErrorCode::ModelMismatch,
                "cannot pair classes on " + a.model().name() + " and " + b.model().name());
  }
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  std::int64_t sum = 0;
  std::size_t first_exceptional = 0;
  if (a.model().kind == SurfaceKind::R) {
    /* s^2 = 1, s.f = 1, f^2 = 0 */
    sum = checked::mul(x[0], y[0]);
    sum = checked::add(sum, checked::mul(x[0], y[1]));
    sum = checked::add(sum, checked::mul(x[1], y[0]));
    first_exceptional = 2;
  }
  else {
    sum = checked::mul(x[0], y[0]);
    first_exceptional = 1;
  }
  /* (-g e).(-g' e) = -g g' since e^2 = -1 */
  for (std::size_t i = first_exceptional; i < x.size(); i++) {
    sum = checked::sub(sum, checked::mul(x[i], y[i]));
  }
  return sum;
}

std::int64_t square(const DivClass &a)
{
  return pair(a, a);
}

DivClass canonical_class(const SurfaceModel &model)
{
  switch (model.kind) {
    case SurfaceKind::R: {
      std::vector<std::int64_t> c(basis_size(model), -1);
      c[0] = -2;
      c[1] = 1;
      return DivClass(model, std::move(c));
    }
    case SurfaceKind::P: {
      std::vector<std::int64_t> c(basis_size(model), -1);
      c[0] = -3;
      return DivClass(model, std::move(c));
    }
    case SurfaceKind::X:
      throw Error(ErrorCode::InvalidArgument, "use canonical_class_x for the glued surface");
    case SurfaceKind::EnriquesIso:
      break;
  }
  throw Error(ErrorCode::Unsupported, "K_S is torsion on an Enriques surface; only the numerical model is available");
}

DivClass t_class(const SurfaceModel &model)
{
  if (model.kind != SurfaceKind::R && model.kind != SurfaceKind::P) {
    throw Error(ErrorCode::ModelMismatch, "T is a class on R(n) or P(n)");
  }
  return -canonical_class(model);
}

DivClass select_exceptionals(const DivClass &c, std::span<const int> keep)
{
  const SurfaceModel &from = c.model();
  const std::size_t offset = from.kind == SurfaceKind::R ? 2 : 1;
  std::vector<bool> kept(static_cast<std::size_t>(from.n) + 1, false);
  std::vector<std::int64_t> coeffs(c.coeffs().begin(), c.coeffs().begin() + static_cast<std::ptrdiff_t>(offset));
  for (int i : keep) {
    if (i < 1 || i > from.n || kept[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::InvalidArgument, "bad exceptional selection on " + from.name());
    }
    kept[static_cast<std::size_t>(i)] = true;
    coeffs.push_back(c.coeffs()[offset + static_cast<std::size_t>(i) - 1]);
  }
  for (int i = 1; i <= from.n; i++) {
    if (!kept[static_cast<std::size_t>(i)] && c.coeffs()[offset + static_cast<std::size_t>(i) - 1] != 0) {
      throw Error(ErrorCode::InvariantViolation,
                  "class has a nonzero coefficient on dropped exceptional e" + std::to_string(i));
    }
  }
  const int n = static_cast<int>(keep.size());
  const SurfaceModel to = from.kind == SurfaceKind::R ? SurfaceModel::R(n) : SurfaceModel::P(n);
  return DivClass(to, std::move(coeffs));
}

/* -------------------------------------------------------------------- */
/* Glued surface */

SurfaceModel XClass::model() const
{
  return SurfaceModel::X(r_part.model().n, p_part.model().n);
}

XClass XClass::operator+(const XClass &other) const
{
  return {r_part + other.r_part, p_part + other.p_part, torsion != other.torsion};
}

XClass XClass::operator-(const XClass &other) const
{
  return {r_part - other.r_part, p_part - other.p_part, torsion != other.torsion};
}

XClass operator*(std::int64_t k, const XClass &c)
{
  return {k * c.r_part, k * c.p_part, c.torsion && (k % 2 != 0)};
}

XClass make_xclass(DivClass r_part, DivClass p_part)
{
  if (r_part.model().kind != SurfaceKind::R || p_part.model().kind != SurfaceKind::P) {
    throw Error(ErrorCode::ModelMismatch, "a Cartier pair is (R-class, P-class)");
  }
  return {std::move(r_part), std::move(p_part), false};
}

std::int64_t pair(const XClass &a, const XClass &b)
{
  return checked::add(pair(a.r_part, b.r_part), pair(a.p_part, b.p_part));
}

std::int64_t square(const XClass &a)
{
  return pair(a, a);
}

bool is_cartier(const XClass &a)
{
  return pair(a.r_part, t_class(a.r_part.model())) == pair(a.p_part, t_class(a.p_part.model()));
}

XClass canonical_class_x(const SurfaceModel &model)
{
  if (model.kind != SurfaceKind::X) {
    throw Error(ErrorCode::ModelMismatch, "canonical_class_x expects a glued model");
  }
  /* K_X = (f_eta - f_e0, 0) is numerically trivial but not zero */
  return {DivClass::zero(SurfaceModel::R(model.n_r)), DivClass::zero(SurfaceModel::P(model.n_p)), true};
}

XClass xi_class(const SurfaceModel &model)
{
  if (model.kind != SurfaceKind::X) {
    throw Error(ErrorCode::ModelMismatch, "xi lives on a glued model");
  }
  return make_xclass(t_class(SurfaceModel::R(model.n_r)), -t_class(SurfaceModel::P(model.n_p)));
}

std::int64_t arithmetic_genus(const DivClass &c)
{
  const std::int64_t twice = pair(c, c + canonical_class(c.model()));
  if (twice % 2 != 0) {
    throw Error(ErrorCode::InvariantViolation, "L.(L+K) is odd");
  }
  return twice / 2 + 1;
}

std::int64_t arithmetic_genus(const XClass &c)
{
  const std::int64_t sq = square(c);
  if (sq % 2 != 0) {
    throw Error(ErrorCode::InvariantViolation, "odd square on the glued surface");
  }
  return sq / 2 + 1;
}

/* -------------------------------------------------------------------- */
/* Isotropic lattice */

int iso_index(int i)
{
  if (i < 1 || i > 10) {
    throw Error(ErrorCode::InvalidArgument, "isotropic index " + std::to_string(i) + " out of range 1..10");
  }
  return i - 1;
}

int iso_index(int i, int j)
{
  if (i > j) {
    std::swap(i, j);
  }
  if (i < 1 || j > 10 || i == j) {
    throw Error(ErrorCode::InvalidArgument,
                "E_{" + std::to_string(i) + "," + std::to_string(j) + "} needs 1 <= i < j <= 10");
  }
  /* pairs (1,2)..(1,10) come first, then (2,3)..(2,10), ... */
  int index = 10;
  for (int a = 1; a < i; a++) {
    index += 10 - a;
  }
  return index + (j - i - 1);
}

std::array<int, 2> iso_label(int index)
{
  if (index < 0 || index >= kIsoGenerators) {
    throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  }
  if (index < 10) {
    return {index + 1, 0};
  }
  int rest = index - 10;
  for (int i = 1; i <= 9; i++) {
    if (rest < 10 - i) {
      return {i, i + 1 + rest};
    }
    rest -= 10 - i;
  }
  return {0, 0};
}

namespace {

struct GramTable {
  std::array<std::array<std::int8_t, kIsoGenerators>, kIsoGenerators> entries{};

  GramTable()
  {
    for (int g = 0; g < kIsoGenerators; g++) {
      for (int h = 0; h < kIsoGenerators; h++) {
        entries[g][h] = static_cast<std::int8_t>(compute(iso_label(g), iso_label(h)));
      }
    }
  }

  static int compute(std::array<int, 2> a, std::array<int, 2> b)
  {
    const bool a_pair = a[1] != 0;
    const bool b_pair = b[1] != 0;
    if (!a_pair && !b_pair) {
      return a[0] == b[0] ? 0 : 1;
    }
    if (a_pair && b_pair) {
      if (a == b) {
        return 0;
      }
      const bool meet = a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
      return meet ? 1 : 2;
    }
    const auto &single = a_pair ? b : a;
    const auto &two = a_pair ? a : b;
    return (single[0] == two[0] || single[0] == two[1]) ? 2 : 1;
  }
};

const GramTable &gram_table()
{
  static const GramTable table;
  return table;
}

}  // namespace

std::int64_t iso_gram(int g, int h)
{
  if (g < 0 || g >= kIsoGenerators || h < 0 || h >= kIsoGenerators) {
    throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  }
  return gram_table().entries[g][h];
}

IsoExpr IsoExpr::e(int i)
{
  IsoExpr r;
  r.coeffs_[iso_index(i)] = 1;
  return r;
}

IsoExpr IsoExpr::e(int i, int j)
{
  IsoExpr r;
  r.coeffs_[iso_index(i, j)] = 1;
  return r;
}

bool IsoExpr::is_zero() const
{
  for (std::int64_t v : coeffs_) {
    if (v != 0) {
      return false;
    }
  }
  return true;
}

IsoExpr IsoExpr::operator+(const IsoExpr &other) const
{
  IsoExpr r = *this;
  r += other;
  return r;
}

IsoExpr IsoExpr::operator-(const IsoExpr &other) const
{
  IsoExpr r = *this;
  for (int g = 0; g < kIsoGenerators; g++) {
    r.coeffs_[g] = checked::sub(r.coeffs_[g], other.coeffs_[g]);
  }
  return r;
}

IsoExpr &IsoExpr::operator+=(const IsoExpr &other)
{
  for (int g = 0; g < kIsoGenerators; g++) {
    coeffs_[g] = checked::add(coeffs_[g], other.coeffs_[g]);
  }
  return *this;
}

IsoExpr operator*(std::int64_t k, const IsoExpr &c)
{
  IsoExpr r = c;
  for (std::int64_t &v : r.coeffs_) {
    v = checked::mul(k, v);
  }
  return r;
}

std::int64_t iso_pair(const IsoExpr &a, const IsoExpr &b)
{
  const GramTable &table = gram_table();
  std::int64_t sum = 0;
  for (int g = 0; g < kIsoGenerators; g++) {
    if (a.coeff(g) == 0) {
      continue;
    }
    std::int64_t row = 0;
    for (int h = 0; h < kIsoGenerators; h++) {
      if (b.coeff(h) != 0) {
        row = checked::add(row, checked::mul(table.entries[g][h], b.coeff(h)));
      }
    }
    sum = checked::add(sum, checked::mul(a.coeff(g), row));
  }
  return sum;
}

/* -------------------------------------------------------------------- */
/* Restriction of the isotropic generators to X(4,5) */

namespace {

constexpr int kRN = 4;
constexpr int kPN = 5;

/* P-side exceptional with label 5..9 sits at position label - 4. */
DivClass p_exc(int label)
{
  return DivClass::exceptional(SurfaceModel::P(kPN), label - 4);
}

DivClass r_exc(int label)
{
  return DivClass::exceptional(SurfaceModel::R(kRN), label);
}

XClass generator_restriction(int index)
{
  const DivClass s = DivClass::section(kRN);
  const DivClass f = DivClass::fiber(kRN);
  const DivClass l = DivClass::line(kPN);
  const DivClass r0 = DivClass::zero(SurfaceModel::R(kRN));
  const DivClass p0 = DivClass::zero(SurfaceModel::P(kPN));
  const auto [i, j] = iso_label(index);
  if (j == 0) {
    if (i <= 4) {
      return make_xclass(s - r_exc(i), p0);
    }
    if (i <= 8) {
      return make_xclass(f, l - p_exc(i));
    }
    if (i == 9) {
      return make_xclass(s, p_exc(9));
    }
    return make_xclass(f, 2 * l - p_exc(5) - p_exc(6) - p_exc(7) - p_exc(8));
  }
  if (i == 9 && j == 10) {
    return make_xclass(f, l - p_exc(9));
  }
  if (i == 5 && j == 6) {
    return make_xclass(s, l - p_exc(7) - p_exc(8));
  }
  throw Error(ErrorCode::UnsupportedGenerator,
              "no restriction known for E" + std::to_string(i) + "." + std::to_string(j));
}

}  // namespace

bool has_restriction(int index)
{
  if (index < 10) {
    return index >= 0;
  }
  return index == iso_index(9, 10) || index == iso_index(5, 6);
}

std::vector<int> restrictable_generators()
{
  std::vector<int> out;
  for (int g = 0; g < kIsoGenerators; g++) {
    if (has_restriction(g)) {
      out.push_back(g);
    }
  }
  return out;
}

XClass restrict(const IsoExpr &e)
{
  XClass sum = make_xclass(DivClass::zero(SurfaceModel::R(kRN)), DivClass::zero(SurfaceModel::P(kPN)));
  for (int g = 0; g < kIsoGenerators; g++) {
    if (e.coeff(g) != 0) {
      sum = sum + e.coeff(g) * generator_restriction(g);
    }
  }
  return sum;
}

}  // namespace enriques
