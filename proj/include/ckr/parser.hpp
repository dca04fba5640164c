// DSL front end: line-oriented, '.'-terminated statements, '%' comments.
#pragma once

#include <string>

#include "ckr/ast.hpp"

namespace ckr {

// Parses the surface syntax into an Sckr. Symbols are declared implicitly by
// first use; categories are inferred from syntactic position. Throws
// ParseError (with line/column) on syntax errors, conflicting symbol
// categories, duplicate relation names or unknown relation tags.
Sckr parse_sckr(const std::string& text);

// Canonical pretty-printer: relation declarations, context declarations,
// edges, then per-context axioms, each in declaration order.
// parse_sckr(print_sckr(k)) structurally equals k for every valid k.
std::string print_sckr(const Sckr& k);

// Renders one axiom in surface syntax (without the trailing '.').
std::string print_axiom(const NormalAxiom& a);

}  // namespace ckr
