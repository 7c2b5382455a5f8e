#pragma once

// The bracket operation {f} of the initial term algebra, the monad it
// induces, and parallel substitution derived from it.

#include <utility>
#include <vector>

#include "hss/context.hpp"
#include "hss/mendler.hpp"
#include "hss/signature.hpp"
#include "hss/syntax.hpp"

namespace hss {

// {f} : T.Z -> T at context c. t must be scope-valid over f.z.on_ctx(c).
//   Var(l)            |-> f(c, l)
//   binding node      |-> same node, argument i bracketed at Ext^{k_i}(c)
//                         after transport by the strength
//   flattening node u |-> flattening node with every Boxed(w) in u replaced
//                         by Boxed({f}(w))
// The last clause is tau . H{f} . theta with the inner bracket over
// theta-transported leaves collapsed by pointedness of f; bracket_layer
// evaluates the uncollapsed composite.
Term bracket(const Signature& sig, const PointedMorphism& f, const Term& t, const Ctx& c);

// Monad multiplication {identity on T}: t over TmOver(c) to a term over c.
Term mu(const Signature& sig, const Term& t, const Ctx& c);

// Leaf-wise assignment over a context without TmOver layers.
class SubstRule {
 public:
  // Throws ScopeError unless every leaf of `source` is assigned exactly once
  // and every assigned term validates over `target`.
  SubstRule(const Signature& sig, Ctx source, Ctx target,
            std::vector<std::pair<Leaf, Term>> assignment);
  // Index i |-> images[i].
  static SubstRule from_fin(const Signature& sig, std::size_t n, Ctx target,
                            std::vector<Term> images);
  static SubstRule identity(const Signature& sig, const Ctx& c);

  const Ctx& source() const { return source_; }
  const Ctx& target() const { return target_; }
  const Term& operator()(const Leaf& l) const;

 private:
  Ctx source_;
  Ctx target_;
  std::vector<std::pair<Leaf, Term>> assignment_;
};

// All leaves of a context built from Fin and Ext. Throws ScopeError on TmOver.
std::vector<Leaf> enumerate_leaves(const Ctx& c);

// mu . T(r): parallel substitution.
Term subst(const Signature& sig, const SubstRule& r, const Term& t);
// t over Ext(c): New |-> u, Old(l) |-> Var(l).
Term subst1(const Signature& sig, const Term& t, const Term& u, const Ctx& c);

// tau . H{f} . theta on one node layer over f.z.on_ctx(c), with the inner
// brackets computed by `bracket`. This is the right-hand side of the square
// that defines {f}.
Term bracket_layer(const Signature& sig, const PointedMorphism& f, std::size_t arity,
                   std::span<const Term> args, const Ctx& c);

// Psi_f(h) = [f, tau] . (id + H h) . (id + theta), for mendler_gfold.
StepBundle<Term> bracket_steps(const Signature& sig, const PointedMorphism& f);

// A pointed morphism together with pointed maps g into its Z, used to test
// {f . g} = {f} . T(g).
struct ShippedMorphism {
  PointedMorphism f;
  std::vector<PointedMap> precomposable;
};

// identity-on-T, eta, and const-closed with the minimal closed term (the
// last only when sig has closed terms).
std::vector<ShippedMorphism> shipped_morphisms(const Signature& sig);

namespace raw {
Term bracket(const Signature& sig, const PointedMorphism& f, const Term& t, const Ctx& c);
Term mu(const Signature& sig, const Term& t, const Ctx& c);
Term bracket_layer(const Signature& sig, const PointedMorphism& f, std::size_t arity,
                   std::span<const Term> args, const Ctx& c);
}  // namespace raw

}  // namespace hss
