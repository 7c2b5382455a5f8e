#pragma once

#include "hss/context.hpp"
#include "hss/signature.hpp"
#include "hss/syntax.hpp"

namespace hss {

// Scope-validity of t over c relative to sig; boxed leaves are checked
// against the same signature.
bool validate(const Signature& sig, const Ctx& c, const Term& t);
// Throws ScopeError naming `what` when validate fails.
void require_valid(const Signature& sig, const Ctx& c, const Term& t, const char* what);

// Functorial action of T on leaf maps. Validates t over g.source.
Term map_leaves(const Signature& sig, const LeafMap& g, const Term& t);

// Context of argument `i` of a node of arity `a` living over c.
Ctx arg_ctx(const Arity& a, std::size_t i, const Ctx& c);

// Arity-preserving inclusion is the identity on representations; this checks
// that t uses only arities shared by both signatures.
bool uses_only(const Signature& sig, const Signature& sub, const Term& t);

namespace raw {
// No precondition check; callers guarantee t lives over g.source. Used where
// leaves carry terms of a different signature than the trunk.
Term map_leaves(const Signature& sig, const LeafMap& g, const Term& t);
}  // namespace raw

}  // namespace hss
