/* Apache License, Version 2.0 */

#include "enriques/divexpr.hpp"

#include <charconv>
#include <limits>

namespace enriques {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space()
  {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      pos_++;
    }
  }
  bool at_end()
  {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }
  void advance() { pos_++; }

  bool at_digit()
  {
    skip_space();
    return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
  }

  std::int64_t number()
  {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(start, "number out of range");
    }
    if (ec != std::errc() || ptr == text_.data() + pos_) {
      throw ParseError(start, "expected a number");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/* A generator read from the text, before it is placed in a model. */
struct Generator {
  char kind = 0;  // 's', 'f', 'l', 'e', 'E'
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::size_t offset = 0;
};

template<typename Sink> void parse_terms(std::string_view text, Sink &&sink)
{
  Lexer lex(text);
  if (lex.at_end()) {
    throw ParseError(0, "empty expression");
  }
  bool first = true;
  while (!lex.at_end()) {
    std::int64_t sign = 1;
    const char c = lex.peek();
    if (c == '+' || c == '-') {
      if (first && c == '+') {
        throw ParseError(lex.pos(), "unexpected '+'");
      }
      sign = c == '-' ? -1 : 1;
      lex.advance();
    }
    else if (!first) {
      throw ParseError(lex.pos(), "expected '+' or '-'");
    }
    first = false;

    std::int64_t coeff = 1;
    const std::size_t coeff_pos = lex.pos();
    bool has_coeff = false;
    if (lex.at_digit()) {
      coeff = lex.number();
      has_coeff = true;
    }
    Generator g;
    g.offset = lex.pos();
    const char head = lex.peek();
    if (head == '\0' || head == '+' || head == '-') {
      if (has_coeff && coeff == 0) {
        continue;
      }
      throw ParseError(g.offset, "expected a generator");
    }
    switch (head) {
      case 's':
      case 'f':
      case 'l':
        g.kind = head;
        lex.advance();
        break;
      case 'e':
        g.kind = 'e';
        lex.advance();
        g.i = lex.number();
        break;
      case 'E':
        g.kind = 'E';
        lex.advance();
        g.i = lex.number();
        if (lex.peek() == '.') {
          lex.advance();
          g.j = lex.number();
        }
        break;
      default:
        throw ParseError(g.offset, std::string("unknown generator '") + head + "'");
    }
    if (coeff > std::numeric_limits<std::int64_t>::max() / 2) {
      throw ParseError(coeff_pos, "coefficient too large");
    }
    sink(g, sign * coeff);
  }
}

void join_term(std::string &out, std::int64_t coeff, const std::string &gen)
{
  if (coeff == 0) {
    return;
  }
  if (coeff < 0) {
    out += '-';
  }
  else if (!out.empty()) {
    out += '+';
  }
  const std::int64_t mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) {
    out += std::to_string(mag);
  }
  out += gen;
}

}  // namespace

DivClass parse_divisor(std::string_view text, const SurfaceModel &model)
{
  if (model.kind != SurfaceKind::R && model.kind != SurfaceKind::P) {
    throw Error(ErrorCode::Unsupported, "divisor expressions are parsed on R(n) or P(n), not " + model.name());
  }
  DivClass result = DivClass::zero(model);
  std::vector<std::int64_t> coeffs(result.coeffs().begin(), result.coeffs().end());
  const bool on_r = model.kind == SurfaceKind::R;
  parse_terms(text, [&](const Generator &g, std::int64_t coeff) {
    std::size_t index = 0;
    switch (g.kind) {
      case 's':
      case 'f':
        if (!on_r) {
          throw ParseError(g.offset, std::string("'") + g.kind + "' is not a generator on " + model.name());
        }
        index = g.kind == 's' ? 0 : 1;
        coeffs[index] = checked::add(coeffs[index], coeff);
        return;
      case 'l':
        if (on_r) {
          throw ParseError(g.offset, "'l' is not a generator on " + model.name());
        }
        coeffs[0] = checked::add(coeffs[0], coeff);
        return;
      case 'e':
        if (g.i < 1 || g.i > model.n) {
          throw ParseError(g.offset, "e" + std::to_string(g.i) + " out of range for " + model.name());
        }
        index = static_cast<std::size_t>(g.i) + (on_r ? 1 : 0);
        coeffs[index] = checked::sub(coeffs[index], coeff);
        return;
      default:
        throw ParseError(g.offset, "isotropic generators need model E");
    }
  });
  return DivClass(model, std::move(coeffs));
}

IsoExpr parse_iso(std::string_view text)
{
  IsoExpr result;
  parse_terms(text, [&](const Generator &g, std::int64_t coeff) {
    if (g.kind != 'E') {
      throw ParseError(g.offset, std::string("'") + g.kind + "' is not a generator on E");
    }
    int index = 0;
    if (g.i < 1 || g.i > 10 || (g.j != 0 && (g.j < 1 || g.j > 10 || g.j == g.i))) {
      throw ParseError(g.offset, "isotropic generator index out of range");
    }
    index = g.j == 0 ? iso_index(static_cast<int>(g.i)) : iso_index(static_cast<int>(g.i), static_cast<int>(g.j));
    result.set(index, checked::add(result.coeff(index), coeff));
  });
  return result;
}

AnyClass parse_any(std::string_view text, const SurfaceModel &model)
{
  if (model.kind == SurfaceKind::EnriquesIso) {
    return parse_iso(text);
  }
  return parse_divisor(text, model);
}

std::string format_divisor(const DivClass &c)
{
  std::string out;
  const auto v = c.coeffs();
  std::size_t first = 1;
  if (c.model().kind == SurfaceKind::R) {
    join_term(out, v[0], "s");
    join_term(out, v[1], "f");
    first = 2;
  }
  else {
    join_term(out, v[0], "l");
  }
  for (std::size_t i = first; i < v.size(); i++) {
    join_term(out, -v[i], "e" + std::to_string(i - first + 1));
  }
  return out.empty() ? "0" : out;
}

std::string format_iso(const IsoExpr &e)
{
  std::string out;
  for (int g = 0; g < kIsoGenerators; g++) {
    const auto [i, j] = iso_label(g);
    const std::string name = j == 0 ? "E" + std::to_string(i) : "E" + std::to_string(i) + "." + std::to_string(j);
    join_term(out, e.coeff(g), name);
  }
  return out.empty() ? "0" : out;
}

std::string format_any(const AnyClass &c)
{
  if (const auto *d = std::get_if<DivClass>(&c)) {
    return format_divisor(*d);
  }
  return format_iso(std::get<IsoExpr>(c));
}

std::int64_t pair_any(const AnyClass &a, const AnyClass &b)
{
  if (a.index() != b.index()) {
    throw Error(ErrorCode::ModelMismatch, "cannot pair a divisor class with an isotropic expression");
  }
  if (const auto *d = std::get_if<DivClass>(&a)) {
    return pair(*d, std::get<DivClass>(b));
  }
  return iso_pair(std::get<IsoExpr>(a), std::get<IsoExpr>(b));
}

}  // namespace enriques
