#include <doctest.h>

#include "hss/context.hpp"
#include "hss/errors.hpp"
#include "hss/laws.hpp"
#include "hss/lambda.hpp"
#include "hss/random.hpp"
#include "hss/substitution.hpp"
#include "hss/term.hpp"

using namespace hss;

namespace {

Leaf idx(std::size_t i) { return Leaf::idx(i); }
Term v(Leaf l) { return Term::var(std::move(l)); }

}  // namespace

TEST_CASE("id_map fixes leaves") {
  CHECK(id_map(Ctx::fin(3))(idx(1)) == idx(1));
  CHECK(id_map(Ctx::ext(Ctx::fin(0)))(Leaf::fresh()) == Leaf::fresh());
  Leaf boxed = Leaf::boxed(v(idx(0)));
  CHECK(id_map(Ctx::tm_over(Ctx::fin(1)))(boxed) == boxed);
}

TEST_CASE("compose_map") {
  Rng rng(5);
  LeafMap h = random_renaming(3, 2, rng);
  LeafMap left = compose_map(id_map(Ctx::fin(2)), h);
  for (std::size_t i = 0; i < 3; ++i) CHECK(left(idx(i)) == h(idx(i)));

  SUBCASE("double shift") {
    LeafMap w1 = weaken_map(Ctx::fin(1));
    LeafMap w2 = weaken_map(Ctx::ext(Ctx::fin(1)));
    LeafMap both = compose_map(w2, w1);
    CHECK(both(idx(0)) == Leaf::old(Leaf::old(idx(0))));
    CHECK(both.source == Ctx::fin(1));
    CHECK(both.target == Ctx::ext_n(Ctx::fin(1), 2));
  }
  SUBCASE("involution") {
    LeafMap swap = tabulated_map(2, Ctx::fin(2), {idx(1), idx(0)});
    LeafMap twice = compose_map(swap, swap);
    CHECK(twice(idx(0)) == idx(0));
    CHECK(twice(idx(1)) == idx(1));
  }
  SUBCASE("mismatched endpoints") {
    CHECK_THROWS_AS(compose_map(weaken_map(Ctx::fin(2)), weaken_map(Ctx::fin(1))),
                    ContextMismatch);
  }
}

TEST_CASE("weaken_map") {
  CHECK(weaken_map(Ctx::fin(2))(idx(1)) == Leaf::old(idx(1)));
  CHECK(weaken_map(Ctx::ext(Ctx::fin(0)))(Leaf::fresh()) == Leaf::old(Leaf::fresh()));
  Term t = lam::app(lam::var(0), lam::var(0));
  Term expected = lam::app(v(Leaf::old(idx(0))), v(Leaf::old(idx(0))));
  CHECK(map_leaves(sigs::lc(), weaken_map(Ctx::fin(1)), t) == expected);
}

TEST_CASE("dist_map") {
  Signature lc = sigs::lc();
  Ctx c = Ctx::fin(1);
  SUBCASE("identity endofunctor") {
    LeafMap d = dist_map(endo::identity(), c, 1);
    CHECK(d(Leaf::fresh()) == Leaf::fresh());
    CHECK(d(Leaf::old(idx(0))) == Leaf::old(idx(0)));
  }
  SUBCASE("term endofunctor") {
    LeafMap d = dist_map(endo::term(lc), c, 1);
    CHECK(d(Leaf::fresh()) == Leaf::boxed(v(Leaf::fresh())));
    CHECK(d(Leaf::old(Leaf::boxed(v(idx(0))))) == Leaf::boxed(v(Leaf::old(idx(0)))));
    CHECK(d.source == Ctx::ext(Ctx::tm_over(c)));
    CHECK(d.target == Ctx::tm_over(Ctx::ext(c)));
  }
  SUBCASE("two binders") {
    LeafMap d = dist_map(endo::ext(), c, 2);
    CHECK(d.source == Ctx::ext_n(Ctx::ext(c), 2));
    CHECK(d.target == Ctx::ext(Ctx::ext_n(c, 2)));
    CHECK(d(Leaf::fresh()) == Leaf::old(Leaf::fresh()));
    CHECK(d(Leaf::old(Leaf::fresh())) == Leaf::old(Leaf::old(Leaf::fresh())));
    CHECK(d(Leaf::old_n(Leaf::fresh(), 2)) == Leaf::fresh());
  }
}

TEST_CASE("eta_wrap_map") {
  Signature lc = sigs::lc();
  Ctx c = Ctx::fin(1);
  Leaf wrapped = eta_wrap_map(c)(idx(0));
  CHECK(wrapped == Leaf::boxed(lam::var(0)));
  CHECK(ptd::identity_on_term(lc)(c, wrapped) == lam::var(0));
  Term t = lam::app(lam::var(0), lam::var(0));
  CHECK(mu(lc, map_leaves(lc, eta_wrap_map(c), t), c) == t);
}

TEST_CASE("leaf_is_wf") {
  Signature lc = sigs::lc();
  CHECK_FALSE(leaf_is_wf(idx(2), Ctx::fin(2), lc));
  CHECK(leaf_is_wf(Leaf::fresh(), Ctx::ext(Ctx::fin(0)), lc));
  CHECK(leaf_is_wf(Leaf::boxed(lam::var(0)), Ctx::tm_over(Ctx::fin(1)), lc));
  CHECK_FALSE(leaf_is_wf(Leaf::fresh(), Ctx::fin(3), lc));
  CHECK_FALSE(leaf_is_wf(Leaf::boxed(lam::var(1)), Ctx::tm_over(Ctx::fin(1)), lc));
  CHECK(leaf_is_wf(Leaf::old(idx(0)), Ctx::ext(Ctx::fin(1)), lc));
}

TEST_CASE("composite endofunctors are strict") {
  Signature lc = sigs::lc();
  PointedEndo ext = endo::ext();
  PointedEndo tm = endo::term(lc);
  Rng rng(11);
  for (const PointedEndo& outer : {ext, tm})
    for (const PointedEndo& inner : {ext, tm}) {
      PointedEndo both = endo::compose(outer, inner);
      for (int s = 0; s < 20; ++s) {
        Ctx c = random_ctx(lc, rng);
        CHECK(both.on_ctx(c) == outer.on_ctx(inner.on_ctx(c)));
      }
    }
}

TEST_CASE("map and pointed-endofunctor laws") {
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()}) {
    CHECK(check_map_laws(sig, 200, 3).ok());
    for (const PointedEndo& z : {endo::identity(), endo::ext(), endo::term(sig)}) {
      LawReport r = check_pointed_endo(sig, z, 200, 3);
      CHECK_MESSAGE(r.ok(), format_report(r));
    }
  }
}

TEST_CASE("shipped pointed morphisms are pointed and natural") {
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()})
    for (const ShippedMorphism& s : shipped_morphisms(sig)) {
      LawReport r = check_pointed_morphism(sig, s.f, 200, 9);
      CHECK_MESSAGE(r.ok(), format_report(r));
    }
}

TEST_CASE("a morphism that is not pointed is caught") {
  Signature lc = sigs::lc();
  Term closed = lam::abs(Term::var(Leaf::fresh()));
  PointedMorphism bad{"constant", endo::identity(),
                      [closed](const Ctx&, const Leaf&) { return closed; }};
  LawReport r = check_pointed_morphism(lc, bad, 100, 1);
  CHECK(r.failures_of("pointedness") > 0);
}
