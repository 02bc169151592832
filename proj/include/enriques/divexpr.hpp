/* Apache License, Version 2.0 */

/* Text syntax for divisor classes.
 *
 *   expr := ['-'] term (('+' | '-') term)*
 *   term := [uint] gen | '0'
 *   gen  := 's' | 'f' | 'l' | 'e' uint | 'E' uint | 'E' uint '.' uint
 *
 * 's', 'f', 'e<i>' belong to R(n); 'l', 'e<i>' to P(n); 'E<i>' and
 * 'E<i>.<j>' to the isotropic lattice. Whitespace is ignored. */

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "enriques/lattice.hpp"

namespace enriques {

DivClass parse_divisor(std::string_view text, const SurfaceModel &model);
IsoExpr parse_iso(std::string_view text);

using AnyClass = std::variant<DivClass, IsoExpr>;
AnyClass parse_any(std::string_view text, const SurfaceModel &model);

/* Canonical form: generators in basis order, unit coefficients omitted,
 * "0" for the zero class. */
std::string format_divisor(const DivClass &c);
std::string format_iso(const IsoExpr &e);
std::string format_any(const AnyClass &c);

std::int64_t pair_any(const AnyClass &a, const AnyClass &b);

}  // namespace enriques
