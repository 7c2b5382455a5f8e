#include "hss/strength.hpp"

#include "hss/errors.hpp"
#include "hss/term.hpp"

namespace hss {

namespace raw {

std::vector<Term> strength(const Signature& sig, std::size_t arity, const PointedEndo& z,
                           std::span<const Term> args, const Ctx& c) {
  const Arity& a = sig[arity];
  if (a.is_flattening()) {
    Ctx zc = z.on_ctx(c);
    return {raw::map_leaves(sig, z.point(Ctx::tm_over(zc)), args[0])};
  }
  std::vector<Term> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::size_t k = a.binders[i];
    out.push_back(k == 0 ? args[i] : raw::map_leaves(sig, dist_map(z, c, k), args[i]));
  }
  return out;
}

}  // namespace raw

std::vector<Term> strength_binding(const Signature& sig, const std::vector<std::size_t>& binders,
                                   const PointedEndo& z, std::span<const Term> args,
                                   const Ctx& c) {
  if (args.size() != binders.size())
    throw ScopeError("strength_binding: expected " + std::to_string(binders.size()) +
                     " arguments");
  Ctx zc = z.on_ctx(c);
  std::vector<Term> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    require_valid(sig, Ctx::ext_n(zc, binders[i]), args[i], "strength_binding");
    std::size_t k = binders[i];
    out.push_back(k == 0 ? args[i] : raw::map_leaves(sig, dist_map(z, c, k), args[i]));
  }
  return out;
}

Term strength_flat(const Signature& sig, const PointedEndo& z, const Term& u, const Ctx& c) {
  Ctx over = Ctx::tm_over(z.on_ctx(c));
  require_valid(sig, over, u, "strength_flat");
  return raw::map_leaves(sig, z.point(over), u);
}

std::vector<Term> strength(const Signature& sig, std::size_t arity, const PointedEndo& z,
                           std::span<const Term> args, const Ctx& c) {
  const Arity& a = sig[arity];
  if (a.is_flattening()) {
    if (args.size() != 1) throw ScopeError("strength: flattening takes one argument");
    return {strength_flat(sig, z, args[0], c)};
  }
  return strength_binding(sig, a.binders, z, args, c);
}

}  // namespace hss
