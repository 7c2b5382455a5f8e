#pragma once

// Variable supplies and the maps between them: leaf maps, pointed
// endofunctors (Z, e) acting on contexts, and pointed morphisms
// f : (Z, e) -> (T, eta) into the term functor.

#include <functional>
#include <string>

#include "hss/signature.hpp"
#include "hss/syntax.hpp"

namespace hss {

// A map between leaf domains with declared endpoints. Applying it to a leaf
// of the wrong shape throws ScopeError.
struct LeafMap {
  Ctx source;
  Ctx target;
  std::function<Leaf(const Leaf&)> fn;

  Leaf operator()(const Leaf& l) const { return fn(l); }
};

LeafMap id_map(const Ctx& c);
// g after h. Throws ContextMismatch unless h.target == g.source.
LeafMap compose_map(const LeafMap& g, const LeafMap& h);
// c -> Ext(c), l |-> Old(l).
LeafMap weaken_map(const Ctx& c);
// Ext(g.source) -> Ext(g.target); New is fixed, Old(l) |-> Old(g(l)).
LeafMap lift_map(const LeafMap& g);
LeafMap lift_map_n(const LeafMap& g, std::size_t k);
// c -> TmOver(c), l |-> Boxed(Var(l)).
LeafMap eta_wrap_map(const Ctx& c);
// TmOver(g.source) -> TmOver(g.target), Boxed(u) |-> Boxed(map_leaves(g, u)).
LeafMap box_map(const Signature& sig, const LeafMap& g);
// Finite table over a Fin source; entry i is the image of index i.
LeafMap tabulated_map(std::size_t n, const Ctx& target, std::vector<Leaf> images);

// Pointed endofunctor on contexts. on_map must transport source and target
// through on_ctx; point(c) : c -> on_ctx(c).
struct PointedEndo {
  std::string name;
  std::function<Ctx(const Ctx&)> on_ctx;
  std::function<LeafMap(const LeafMap&)> on_map;
  std::function<LeafMap(const Ctx&)> point;
};

namespace endo {
PointedEndo identity();
PointedEndo ext();
PointedEndo term(const Signature& sig);
// (outer . inner) with point outer.point(inner(c)) . inner.point(c).
PointedEndo compose(const PointedEndo& outer, const PointedEndo& inner);
}  // namespace endo

// Ext^k(Z c) -> Z(Ext^k c). One step sends New to point(Ext c)(New) and
// Old(l) to Z(weaken c)(l); k steps compose single steps.
LeafMap dist_map(const PointedEndo& z, const Ctx& c, std::size_t k);

// f : (Z, e) -> (T, eta). component(c, l) takes a leaf of Z(c) to a term
// over c; it must satisfy component(c, point(c)(l)) == Var(l) and be natural
// in c.
struct PointedMorphism {
  std::string name;
  PointedEndo z;
  std::function<Term(const Ctx&, const Leaf&)> component;

  Term operator()(const Ctx& c, const Leaf& l) const { return component(c, l); }
};

namespace ptd {
// Z = TmZ(sig), Boxed(t) |-> t.
PointedMorphism identity_on_term(const Signature& sig);
// Z = IdZ, l |-> Var(l).
PointedMorphism eta();
// Z = ExtZ, New |-> closed, Old(l) |-> Var(l). `closed` must have no free
// leaves so that it lives over every context.
PointedMorphism const_closed(const Term& closed);
}  // namespace ptd

// A morphism of pointed endofunctors g : (Z2, e2) -> (Z, e), used to
// precompose pointed morphisms.
struct PointedMap {
  std::string name;
  PointedEndo source;
  PointedEndo target;
  std::function<LeafMap(const Ctx&)> component;
};

// f . g as a pointed morphism out of g.source.
PointedMorphism precompose(const PointedMorphism& f, const PointedMap& g);

namespace ptd_map {
// The point itself, (IdZ, id) -> (Z, e).
PointedMap point_of(const PointedEndo& z);
PointedMap identity(const PointedEndo& z);
// (ExtZ, Old) -> (TmZ, eta), New |-> Boxed(closed), Old(l) |-> Boxed(Var l).
PointedMap const_boxed(const Signature& sig, const Term& closed);
}  // namespace ptd_map

bool leaf_is_wf(const Leaf& l, const Ctx& c, const Signature& sig);

}  // namespace hss
