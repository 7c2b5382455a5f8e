#include "hss/context.hpp"

#include "hss/errors.hpp"
#include "hss/term.hpp"

namespace hss {

namespace {

[[noreturn]] void bad_leaf(const char* map, const Leaf& l) {
  throw ScopeError(std::string(map) + ": leaf " + debug_string(l) + " outside the source context");
}

}  // namespace

LeafMap id_map(const Ctx& c) {
  return {c, c, [](const Leaf& l) { return l; }};
}

LeafMap compose_map(const LeafMap& g, const LeafMap& h) {
  if (!(h.target == g.source))
    throw ContextMismatch("compose_map: " + debug_string(h.target) + " does not match " +
                          debug_string(g.source));
  return {h.source, g.target, [g = g.fn, h = h.fn](const Leaf& l) { return g(h(l)); }};
}

LeafMap weaken_map(const Ctx& c) {
  return {c, Ctx::ext(c), [](const Leaf& l) { return Leaf::old(l); }};
}

LeafMap lift_map(const LeafMap& g) {
  return {Ctx::ext(g.source), Ctx::ext(g.target), [g = g.fn](const Leaf& l) {
            switch (l.kind()) {
              case Leaf::Kind::fresh: return l;
              case Leaf::Kind::old: return Leaf::old(g(l.inner()));
              default: bad_leaf("lift", l);
            }
          }};
}

LeafMap lift_map_n(const LeafMap& g, std::size_t k) {
  LeafMap out = g;
  for (std::size_t i = 0; i < k; ++i) out = lift_map(out);
  return out;
}

LeafMap eta_wrap_map(const Ctx& c) {
  return {c, Ctx::tm_over(c), [](const Leaf& l) { return Leaf::boxed(Term::var(l)); }};
}

LeafMap box_map(const Signature& sig, const LeafMap& g) {
  return {Ctx::tm_over(g.source), Ctx::tm_over(g.target), [sig, g](const Leaf& l) {
            if (l.kind() != Leaf::Kind::boxed) bad_leaf("box_map", l);
            return Leaf::boxed(raw::map_leaves(sig, g, l.term()));
          }};
}

LeafMap tabulated_map(std::size_t n, const Ctx& target, std::vector<Leaf> images) {
  if (images.size() != n) throw ContextMismatch("tabulated_map: table size differs from source");
  return {Ctx::fin(n), target, [images = std::move(images)](const Leaf& l) {
            if (l.kind() != Leaf::Kind::index || l.index() >= images.size()) bad_leaf("table", l);
            return images[l.index()];
          }};
}

namespace endo {

PointedEndo identity() {
  return {"IdZ", [](const Ctx& c) { return c; }, [](const LeafMap& g) { return g; },
          [](const Ctx& c) { return id_map(c); }};
}

PointedEndo ext() {
  return {"ExtZ", [](const Ctx& c) { return Ctx::ext(c); },
          [](const LeafMap& g) { return lift_map(g); },
          [](const Ctx& c) { return weaken_map(c); }};
}

PointedEndo term(const Signature& sig) {
  return {"TmZ", [](const Ctx& c) { return Ctx::tm_over(c); },
          [sig](const LeafMap& g) { return box_map(sig, g); },
          [](const Ctx& c) { return eta_wrap_map(c); }};
}

PointedEndo compose(const PointedEndo& outer, const PointedEndo& inner) {
  return {outer.name + "." + inner.name,
          [outer, inner](const Ctx& c) { return outer.on_ctx(inner.on_ctx(c)); },
          [outer, inner](const LeafMap& g) { return outer.on_map(inner.on_map(g)); },
          [outer, inner](const Ctx& c) {
            return compose_map(outer.point(inner.on_ctx(c)), inner.point(c));
          }};
}

}  // namespace endo

LeafMap dist_map(const PointedEndo& z, const Ctx& c, std::size_t k) {
  if (k == 0) return id_map(z.on_ctx(c));
  LeafMap below = dist_map(z, c, k - 1);
  Ctx base = Ctx::ext_n(c, k - 1);
  LeafMap fresh_image = z.point(Ctx::ext(base));
  LeafMap old_image = z.on_map(weaken_map(base));
  LeafMap step{Ctx::ext(z.on_ctx(base)), z.on_ctx(Ctx::ext(base)),
               [fresh_image, old_image](const Leaf& l) {
                 switch (l.kind()) {
                   case Leaf::Kind::fresh: return fresh_image(Leaf::fresh());
                   case Leaf::Kind::old: return old_image(l.inner());
                   default: bad_leaf("dist", l);
                 }
               }};
  return compose_map(step, lift_map(below));
}

namespace ptd {

PointedMorphism identity_on_term(const Signature& sig) {
  return {"identity", endo::term(sig), [](const Ctx&, const Leaf& l) {
            if (l.kind() != Leaf::Kind::boxed) bad_leaf("identity-on-T", l);
            return l.term();
          }};
}

PointedMorphism eta() {
  return {"eta", endo::identity(), [](const Ctx&, const Leaf& l) { return Term::var(l); }};
}

PointedMorphism const_closed(const Term& closed) {
  return {"const-closed", endo::ext(), [closed](const Ctx&, const Leaf& l) {
            switch (l.kind()) {
              case Leaf::Kind::fresh: return closed;
              case Leaf::Kind::old: return Term::var(l.inner());
              default: bad_leaf("const-closed", l);
            }
          }};
}

}  // namespace ptd

PointedMorphism precompose(const PointedMorphism& f, const PointedMap& g) {
  return {f.name + "." + g.name, g.source, [f, g](const Ctx& c, const Leaf& l) {
            return f.component(c, g.component(c)(l));
          }};
}

namespace ptd_map {

PointedMap point_of(const PointedEndo& z) {
  return {"point", endo::identity(), z, z.point};
}

PointedMap identity(const PointedEndo& z) {
  return {"id", z, z, [z](const Ctx& c) { return id_map(z.on_ctx(c)); }};
}

PointedMap const_boxed(const Signature& sig, const Term& closed) {
  return {"const-boxed", endo::ext(), endo::term(sig), [closed](const Ctx& c) {
            return LeafMap{Ctx::ext(c), Ctx::tm_over(c), [closed](const Leaf& l) {
                             switch (l.kind()) {
                               case Leaf::Kind::fresh: return Leaf::boxed(closed);
                               case Leaf::Kind::old: return Leaf::boxed(Term::var(l.inner()));
                               default: bad_leaf("const-boxed", l);
                             }
                           }};
          }};
}

}  // namespace ptd_map

bool leaf_is_wf(const Leaf& l, const Ctx& c, const Signature& sig) {
  switch (c.kind()) {
    case Ctx::Kind::fin:
      return l.kind() == Leaf::Kind::index && l.index() < c.count();
    case Ctx::Kind::ext:
      if (l.kind() == Leaf::Kind::fresh) return true;
      return l.kind() == Leaf::Kind::old && leaf_is_wf(l.inner(), c.inner(), sig);
    case Ctx::Kind::tm_over:
      return l.kind() == Leaf::Kind::boxed && validate(sig, c.inner(), l.term());
  }
  return false;
}

}  // namespace hss
