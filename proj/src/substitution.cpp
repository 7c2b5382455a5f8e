#include "hss/substitution.hpp"

#include "hss/errors.hpp"
#include "hss/random.hpp"
#include "hss/strength.hpp"
#include "hss/term.hpp"

namespace hss {

namespace {

// TmOver(from) -> TmOver(to), Boxed(w) |-> Boxed(each(w)).
template <class Fn>
LeafMap boxed_through(const Ctx& from, const Ctx& to, Fn each) {
  return {Ctx::tm_over(from), Ctx::tm_over(to), [each](const Leaf& l) {
            if (l.kind() != Leaf::Kind::boxed)
              throw ScopeError("expected a boxed leaf, got " + debug_string(l));
            return Leaf::boxed(each(l.term()));
          }};
}

// Shared shape of the recursive clauses; `rec(d, x)` is the bracket at d.
template <class Rec>
Term layer(const Signature& sig, const PointedEndo& z, std::size_t arity,
           std::span<const Term> args, const Ctx& c, const Rec& rec) {
  const Arity& a = sig[arity];
  std::vector<Term> theta = raw::strength(sig, arity, z, args, c);
  if (a.is_flattening()) {
    Ctx over = Ctx::tm_over(z.on_ctx(c));
    Term inner = rec(over, theta[0]);
    LeafMap outer = boxed_through(z.on_ctx(c), c, [&](const Term& w) { return rec(c, w); });
    return Term::node(arity, {raw::map_leaves(sig, outer, inner)});
  }
  std::vector<Term> out;
  out.reserve(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i)
    out.push_back(rec(Ctx::ext_n(c, a.binders[i]), theta[i]));
  return Term::node(arity, std::move(out));
}

}  // namespace

namespace raw {

Term bracket(const Signature& sig, const PointedMorphism& f, const Term& t, const Ctx& c) {
  if (t.is_var()) return f(c, t.leaf());
  const Arity& a = sig[t.arity()];
  if (a.is_flattening()) {
    LeafMap each = boxed_through(f.z.on_ctx(c), c,
                                 [&](const Term& w) { return raw::bracket(sig, f, w, c); });
    return Term::node(t.arity(), {raw::map_leaves(sig, each, t.args()[0])});
  }
  std::vector<Term> out;
  out.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::size_t k = a.binders[i];
    Term moved = k == 0 ? t.args()[i] : raw::map_leaves(sig, dist_map(f.z, c, k), t.args()[i]);
    out.push_back(raw::bracket(sig, f, moved, Ctx::ext_n(c, k)));
  }
  return Term::node(t.arity(), std::move(out));
}

Term mu(const Signature& sig, const Term& t, const Ctx& c) {
  return raw::bracket(sig, ptd::identity_on_term(sig), t, c);
}

Term bracket_layer(const Signature& sig, const PointedMorphism& f, std::size_t arity,
                   std::span<const Term> args, const Ctx& c) {
  return layer(sig, f.z, arity, args, c,
               [&](const Ctx& d, const Term& x) { return raw::bracket(sig, f, x, d); });
}

}  // namespace raw

Term bracket(const Signature& sig, const PointedMorphism& f, const Term& t, const Ctx& c) {
  require_valid(sig, f.z.on_ctx(c), t, "bracket");
  return raw::bracket(sig, f, t, c);
}

Term mu(const Signature& sig, const Term& t, const Ctx& c) {
  require_valid(sig, Ctx::tm_over(c), t, "mu");
  return raw::mu(sig, t, c);
}

Term bracket_layer(const Signature& sig, const PointedMorphism& f, std::size_t arity,
                   std::span<const Term> args, const Ctx& c) {
  if (arity >= sig.size()) throw ScopeError("bracket_layer: unknown arity");
  require_valid(sig, f.z.on_ctx(c), Term::node(arity, {args.begin(), args.end()}),
                "bracket_layer");
  return raw::bracket_layer(sig, f, arity, args, c);
}

StepBundle<Term> bracket_steps(const Signature& sig, const PointedMorphism& f) {
  StepBundle<Term> psi;
  psi.name = "bracket/" + f.name;
  psi.var = [f](const Ctx& c, const Leaf& l) { return f(c, l); };
  psi.node = [sig, z = f.z](const Ctx& c, std::size_t arity, std::span<const Term> args,
                            const FoldHandle<Term>& rec) {
    return layer(sig, z, arity, args, c, rec);
  };
  return psi;
}

std::vector<Leaf> enumerate_leaves(const Ctx& c) {
  switch (c.kind()) {
    case Ctx::Kind::fin: {
      std::vector<Leaf> out;
      for (std::size_t i = 0; i < c.count(); ++i) out.push_back(Leaf::idx(i));
      return out;
    }
    case Ctx::Kind::ext: {
      std::vector<Leaf> out{Leaf::fresh()};
      for (Leaf& l : enumerate_leaves(c.inner())) out.push_back(Leaf::old(std::move(l)));
      return out;
    }
    case Ctx::Kind::tm_over: break;
  }
  throw ScopeError("leaves of " + debug_string(c) + " cannot be enumerated");
}

SubstRule::SubstRule(const Signature& sig, Ctx source, Ctx target,
                     std::vector<std::pair<Leaf, Term>> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  std::vector<Leaf> leaves = enumerate_leaves(source_);
  if (leaves.size() != assignment_.size())
    throw ScopeError("substitution rule must assign each of the " +
                     std::to_string(leaves.size()) + " source leaves once");
  for (const Leaf& l : leaves) {
    std::size_t hits = 0;
    for (const auto& [k, v] : assignment_)
      if (k == l) ++hits;
    if (hits != 1) throw ScopeError("leaf " + debug_string(l) + " assigned " +
                                    std::to_string(hits) + " times");
  }
  for (const auto& [k, v] : assignment_) require_valid(sig, target_, v, "substitution rule");
}

SubstRule SubstRule::from_fin(const Signature& sig, std::size_t n, Ctx target,
                              std::vector<Term> images) {
  if (images.size() != n) throw ScopeError("substitution rule needs one image per index");
  std::vector<std::pair<Leaf, Term>> a;
  for (std::size_t i = 0; i < n; ++i) a.emplace_back(Leaf::idx(i), std::move(images[i]));
  return SubstRule(sig, Ctx::fin(n), std::move(target), std::move(a));
}

SubstRule SubstRule::identity(const Signature& sig, const Ctx& c) {
  std::vector<std::pair<Leaf, Term>> a;
  for (Leaf& l : enumerate_leaves(c)) a.emplace_back(l, Term::var(l));
  return SubstRule(sig, c, c, std::move(a));
}

const Term& SubstRule::operator()(const Leaf& l) const {
  for (const auto& [k, v] : assignment_)
    if (k == l) return v;
  throw ScopeError("substitution rule has no image for " + debug_string(l));
}

Term subst(const Signature& sig, const SubstRule& r, const Term& t) {
  require_valid(sig, r.source(), t, "subst");
  LeafMap boxed{r.source(), Ctx::tm_over(r.target()),
                [&r](const Leaf& l) { return Leaf::boxed(r(l)); }};
  return raw::mu(sig, raw::map_leaves(sig, boxed, t), r.target());
}

Term subst1(const Signature& sig, const Term& t, const Term& u, const Ctx& c) {
  require_valid(sig, Ctx::ext(c), t, "subst1");
  require_valid(sig, c, u, "subst1");
  LeafMap boxed{Ctx::ext(c), Ctx::tm_over(c), [&u](const Leaf& l) {
                  if (l.kind() == Leaf::Kind::fresh) return Leaf::boxed(u);
                  return Leaf::boxed(Term::var(l.inner()));
                }};
  return raw::mu(sig, raw::map_leaves(sig, boxed, t), c);
}

std::vector<ShippedMorphism> shipped_morphisms(const Signature& sig) {
  std::vector<ShippedMorphism> out;
  PointedMorphism id = ptd::identity_on_term(sig);
  ShippedMorphism identity{id, {ptd_map::point_of(id.z), ptd_map::identity(id.z)}};
  PointedMorphism eta = ptd::eta();
  ShippedMorphism unit{eta, {ptd_map::point_of(eta.z), ptd_map::identity(eta.z)}};

  if (!inhabited(sig, Ctx::fin(0))) {
    out.push_back(std::move(identity));
    out.push_back(std::move(unit));
    return out;
  }
  Term closed = minimal_term(sig, Ctx::fin(0));
  identity.precomposable.push_back(ptd_map::const_boxed(sig, closed));
  PointedMorphism cc = ptd::const_closed(closed);
  ShippedMorphism constant{cc, {ptd_map::point_of(cc.z), ptd_map::identity(cc.z)}};
  out.push_back(std::move(identity));
  out.push_back(std::move(unit));
  out.push_back(std::move(constant));
  return out;
}

}  // namespace hss
