#include "hss/term.hpp"

#include "hss/errors.hpp"

namespace hss {

Ctx arg_ctx(const Arity& a, std::size_t i, const Ctx& c) {
  if (a.is_flattening()) return Ctx::tm_over(c);
  return Ctx::ext_n(c, a.binders.at(i));
}

bool validate(const Signature& sig, const Ctx& c, const Term& t) {
  if (t.is_var()) return leaf_is_wf(t.leaf(), c, sig);
  if (t.arity() >= sig.size()) return false;
  const Arity& a = sig[t.arity()];
  if (t.args().size() != a.arg_count()) return false;
  for (std::size_t i = 0; i < t.args().size(); ++i)
    if (!validate(sig, arg_ctx(a, i, c), t.args()[i])) return false;
  return true;
}

void require_valid(const Signature& sig, const Ctx& c, const Term& t, const char* what) {
  if (!validate(sig, c, t))
    throw ScopeError(std::string(what) + ": " + debug_string(t) + " is not scope-valid over " +
                     debug_string(c));
}

namespace raw {

Term map_leaves(const Signature& sig, const LeafMap& g, const Term& t) {
  if (t.is_var()) return Term::var(g(t.leaf()));
  const Arity& a = sig[t.arity()];
  std::vector<Term> args;
  args.reserve(t.args().size());
  if (a.is_flattening()) {
    args.push_back(raw::map_leaves(sig, box_map(sig, g), t.args()[0]));
  } else {
    for (std::size_t i = 0; i < t.args().size(); ++i)
      args.push_back(raw::map_leaves(sig, lift_map_n(g, a.binders[i]), t.args()[i]));
  }
  return Term::node(t.arity(), std::move(args));
}

}  // namespace raw

Term map_leaves(const Signature& sig, const LeafMap& g, const Term& t) {
  require_valid(sig, g.source, t, "map_leaves");
  return raw::map_leaves(sig, g, t);
}

bool uses_only(const Signature& sig, const Signature& sub, const Term& t) {
  if (t.is_var()) {
    const Leaf* l = &t.leaf();
    while (l->kind() == Leaf::Kind::old) l = &l->inner();
    return l->kind() != Leaf::Kind::boxed || uses_only(sig, sub, l->term());
  }
  if (t.arity() >= sub.size() || t.arity() >= sig.size() || !(sig[t.arity()] == sub[t.arity()]))
    return false;
  for (const Term& a : t.args())
    if (!uses_only(sig, sub, a)) return false;
  return true;
}

}  // namespace hss
