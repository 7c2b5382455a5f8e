#pragma once

// Per-arity strengths theta at X = T: how precomposition with a pointed
// endofunctor is pushed inside a constructor's arguments.

#include <vector>

#include "hss/context.hpp"
#include "hss/signature.hpp"

namespace hss {

// Argument i over Ext^{k_i}(Z c) becomes an argument over Z(Ext^{k_i} c) via
// dist_map; arguments with k_i = 0 are returned unchanged.
std::vector<Term> strength_binding(const Signature& sig, const std::vector<std::size_t>& binders,
                                   const PointedEndo& z, std::span<const Term> args,
                                   const Ctx& c);

// u over TmOver(Z c) becomes a term over Z(TmOver(Z c)) by mapping every
// leaf through Z's point at TmOver(Z c).
Term strength_flat(const Signature& sig, const PointedEndo& z, const Term& u, const Ctx& c);

// Dispatch on the arity of `node_args`' constructor.
std::vector<Term> strength(const Signature& sig, std::size_t arity, const PointedEndo& z,
                           std::span<const Term> args, const Ctx& c);

namespace raw {
std::vector<Term> strength(const Signature& sig, std::size_t arity, const PointedEndo& z,
                           std::span<const Term> args, const Ctx& c);
}  // namespace raw

}  // namespace hss
