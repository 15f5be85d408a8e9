// Recursive-descent parser and canonical printer for germ expressions.
//
// Grammar (whitespace-insensitive):
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := coeff | var ("^" nat)? | "(" expr ")"
//   coeff  := int ("/" posint)?
//   var    := letter (letter|digit|"_")*
//
// Implicit multiplication is not supported: "x*y", never "xy" (which reads
// as a single identifier). Unary minus is accepted at the head of an
// expression and immediately after "(".
#ifndef GERM_PARSER_HPP
#define GERM_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "germ/germ.hpp"

namespace germ {

// When vars is absent, the variables are the identifiers encountered in the
// text, sorted lexicographically. When present, unknown identifiers are
// rejected.
Germ parse_germ(std::string_view text,
                const std::optional<VarSet>& vars = std::nullopt);

// Comma-separated variable list, e.g. "x,y,z".
VarSet parse_varlist(std::string_view text);

// Deterministic canonical form; parse_germ(to_string(f), f.vars()) == f.
std::string to_string(const Germ& f);

}  // namespace germ

#endif
