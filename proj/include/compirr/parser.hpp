#pragma once

#include <cstddef>
#include <string_view>
#include <variant>

#include "compirr/bipoly.hpp"
#include "compirr/multipoly.hpp"

namespace compirr {

// Grammar (whitespace is insignificant, implicit multiplication rejected):
//
//   expr        := ['+' | '-'] term (('+' | '-') term)*
//   term        := factor ('*' factor)*
//   factor      := base ('^' uint)?
//   base        := coefficient | variable | '(' expr ')'
//   coefficient := int | int '/' uint        (fractions over Q only)
//   variable    := 'X' | 'Y' | 'X' uint
//
// Arity 1 reads X (or X1); arity 2 reads X, Y or X1, X2 but not a mix of
// the two styles; arity r >= 3 reads X1..Xr.

/// Parses into r = arity variables. Errors are ParseError with SyntaxError,
/// UnknownVariable or MixedArity and 1-based positions.
MultiPoly parse_multi(std::string_view text, FieldRef const & field, std::size_t arity);

UniPoly parse_uni(std::string_view text, FieldRef const & field);
BiPoly parse_bi(std::string_view text, FieldRef const & field);

using AnyPoly = std::variant<UniPoly, BiPoly, MultiPoly>;
/// UniPoly for arity 1, BiPoly for arity 2, MultiPoly otherwise.
AnyPoly parse_poly(std::string_view text, FieldRef const & field, std::size_t arity);

/// Largest variable index mentioned (Y counts as 2), 0 if none. Used to
/// infer the arity of r-variate inputs.
std::size_t max_variable_index(std::string_view text);

}  // namespace compirr
