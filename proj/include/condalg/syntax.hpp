#pragma once

// Concrete syntax for terms:
//
//   term    := 'T' | 'F' | atom | cond
//   cond    := operand '<|' operand '|>' operand
//   operand := 'T' | 'F' | atom | '(' cond ')'
//   atom    := [a-z][a-z0-9_]* | '"' any-non-quote-chars '"'
//
// Whitespace between tokens is ignored.

#include <string>
#include <string_view>

#include "condalg/term.hpp"

namespace condalg {

/// Throws ParseError on malformed or empty input.
Term parse_term(std::string_view text);

/// Canonical text: one space around `<|` and `|>`, nested conditionals
/// parenthesized, atoms quoted only when they are not plain identifiers.
std::string render_term(const Term &t);

std::string render_atom(const Atom &a);

/// True if `name` can be written without quotes.
bool is_plain_identifier(std::string_view name);

/// Parses an atom sequence. Without commas or quotes every character is an
/// atom (`ab` is a then b); otherwise the text is a comma-separated list of
/// atoms in term syntax (`foo,"(n==2)"`). Empty text is the empty sequence.
/// Throws ParseError on malformed text and SigmaError on repeated atoms.
Sigma parse_sigma(std::string_view text);

std::string render_sigma(const Sigma &sigma);

} // namespace condalg
