#pragma once

// Concrete syntax for terms over Fin(n):
//
//   term := abs | app
//   abs  := ("\" | "lam") "." term
//   app  := atom { atom }
//   atom := nat | "(" term ")" | flat | generic
//   flat := "flat" "{" term "|" [ term { "," term } ] "}"
//   generic := "#" nat "(" [ term { "," term } ] ")"
//            | "#" nat "{" term "|" [ term { "," term } ] "}"
//
// Numerals are de Bruijn indices. Inside a flat skeleton, indices past the
// local binders name env entries positionally. `#i` writes a node of arity i
// for arities with no dedicated notation; argument j is read under k_j
// binders.

#include <cstdint>
#include <string>
#include <string_view>

#include "hss/report.hpp"
#include "hss/signature.hpp"
#include "hss/syntax.hpp"

namespace hss {

// Throws ParseError on malformed text and ScopeError on unbound indices.
Term parse_term(std::string_view text, const Signature& sig, std::size_t scope);

// Canonical text. Env entries are collected in order of first occurrence
// and deduplicated. Boxed leaves at a TmOver root print as `[term]`, which
// the parser does not accept.
std::string print_term(const Term& t, const Signature& sig);
// Same, after checking t over ctx.
std::string print_term(const Term& t, const Signature& sig, const Ctx& ctx);

// parse(print(t)) == t on random terms over Fin(0..3).
LawReport check_roundtrip(const Signature& sig, std::size_t samples, std::uint64_t seed,
                          std::size_t budget = 20);

}  // namespace hss
