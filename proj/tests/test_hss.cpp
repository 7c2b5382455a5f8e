#include <doctest.h>

#include "hss/errors.hpp"
#include "hss/lambda.hpp"
#include "hss/laws.hpp"
#include "hss/random.hpp"
#include "hss/substitution.hpp"
#include "hss/term.hpp"

using namespace hss;

namespace {

Term v(Leaf l) { return Term::var(std::move(l)); }
Term fresh() { return v(Leaf::fresh()); }
Term id_term() { return lam::abs(fresh()); }
Term boxed(Term t) { return v(Leaf::boxed(std::move(t))); }

}  // namespace

TEST_CASE("bracket") {
  Signature lc = sigs::lc();
  Ctx c = Ctx::fin(1);
  Term u = lam::app(lam::var(0), id_term());
  CHECK(bracket(lc, ptd::identity_on_term(lc), boxed(u), c) == u);

  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    Ctx d = random_ctx(sigs::lce(), rng);
    Term t = random_term(sigs::lce(), d, 20, rng);
    CHECK(bracket(sigs::lce(), ptd::eta(), t, d) == t);
  }

  Term t = lam::app(fresh(), v(Leaf::old(Leaf::idx(0))));
  CHECK(bracket(lc, ptd::const_closed(id_term()), t, c) == lam::app(id_term(), lam::var(0)));
  CHECK_THROWS_AS(bracket(lc, ptd::const_closed(id_term()), lam::var(0), c), ScopeError);
}

TEST_CASE("bracket under a binder transports through the strength") {
  Signature lc = sigs::lc();
  Ctx c = Ctx::fin(1);
  // \. (0 [1]) with the box holding free index 0: the box moves under the binder.
  Term t = lam::abs(lam::app(fresh(), v(Leaf::old(Leaf::boxed(lam::var(0))))));
  Term expected = lam::abs(lam::app(fresh(), v(Leaf::old(Leaf::idx(0)))));
  CHECK(mu(lc, t, c) == expected);
}

TEST_CASE("mu") {
  Signature lc = sigs::lc();
  Ctx c = Ctx::fin(1);
  Term u = lam::app(lam::var(0), lam::var(0));
  CHECK(mu(lc, boxed(u), c) == u);
  CHECK(mu(lc, map_leaves(lc, eta_wrap_map(c), u), c) == u);
  Term t = lam::app(boxed(id_term()), boxed(lam::var(0)));
  CHECK(mu(lc, t, c) == lam::app(id_term(), lam::var(0)));
  CHECK_THROWS_AS(mu(lc, u, c), ScopeError);
}

TEST_CASE("subst") {
  Signature lc = sigs::lc();
  Term t = lam::app(lam::var(0), lam::var(1));
  CHECK(subst(lc, SubstRule::identity(lc, Ctx::fin(2)), t) == t);

  SubstRule r = SubstRule::from_fin(lc, 2, Ctx::fin(2), {id_term(), lam::var(1)});
  CHECK(subst(lc, r, t) == lam::app(id_term(), lam::var(1)));

  Term under = lam::abs(lam::app(v(Leaf::old(Leaf::idx(0))), fresh()));
  SubstRule r1 = SubstRule::from_fin(lc, 1, Ctx::fin(0), {id_term()});
  CHECK(subst(lc, r1, under) == lam::abs(lam::app(id_term(), fresh())));

  SUBCASE("rules over Ext contexts") {
    Ctx e = Ctx::ext(Ctx::fin(1));
    SubstRule swap(lc, e, e, {{Leaf::fresh(), v(Leaf::old(Leaf::idx(0)))},
                              {Leaf::old(Leaf::idx(0)), fresh()}});
    Term x = lam::app(fresh(), v(Leaf::old(Leaf::idx(0))));
    CHECK(subst(lc, swap, x) == lam::app(v(Leaf::old(Leaf::idx(0))), fresh()));
  }
  SUBCASE("malformed rules") {
    CHECK_THROWS_AS(SubstRule::from_fin(lc, 2, Ctx::fin(1), {id_term(), lam::var(1)}), ScopeError);
    CHECK_THROWS_AS(SubstRule::from_fin(lc, 2, Ctx::fin(2), {id_term()}), ScopeError);
    CHECK_THROWS_AS(SubstRule(lc, Ctx::fin(1), Ctx::fin(1),
                              {{Leaf::idx(0), lam::var(0)}, {Leaf::idx(0), lam::var(0)}}),
                    ScopeError);
    CHECK_THROWS_AS(SubstRule::identity(lc, Ctx::tm_over(Ctx::fin(1))), ScopeError);
  }
}

TEST_CASE("subst1") {
  Signature lc = sigs::lc();
  Ctx c = Ctx::fin(1);
  Term u = lam::app(lam::var(0), id_term());
  CHECK(subst1(lc, fresh(), u, c) == u);
  CHECK(subst1(lc, v(Leaf::old(Leaf::idx(0))), u, c) == lam::var(0));
  CHECK(subst1(lc, lam::app(fresh(), fresh()), id_term(), Ctx::fin(0)) ==
        lam::app(id_term(), id_term()));
}

TEST_CASE("bracket laws for shipped morphisms") {
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp(),
                               parse_signature("bind:2,0+bind:+flat+bind:1,1")}) {
    std::vector<ShippedMorphism> fs = shipped_morphisms(sig);
    CHECK(fs.size() == 3);
    for (const ShippedMorphism& s : fs) {
      LawReport r = check_bracket_laws(sig, s, 200, 13);
      CHECK_MESSAGE(r.ok(), format_report(r));
    }
  }
}

TEST_CASE("a corrupted morphism fails the bracket laws") {
  Signature lc = sigs::lc();
  PointedMorphism bad{"corrupted", endo::identity(),
                      [](const Ctx&, const Leaf&) { return id_term(); }};
  ShippedMorphism shipped{bad, {ptd_map::identity(bad.z)}};
  LawReport r = check_bracket_laws(lc, shipped, 200, 5);
  CHECK(r.failures > 0);
  CHECK(r.failures_of("pointedness") > 0);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().term.is_var());
  CHECK(r.counterexamples.size() <= LawReport::kMaxCounterexamples);
  CHECK(r.failures <= r.samples);
}

TEST_CASE("unsimplified flattening clause agrees") {
  Signature lce = sigs::lce();
  Rng rng(31);
  for (const ShippedMorphism& s : shipped_morphisms(lce)) {
    for (int i = 0; i < 200; ++i) {
      Ctx c = random_ctx(lce, rng);
      Term x = random_node(lce, lam::kFlat, s.f.z.on_ctx(c), 20, rng);
      CHECK(bracket(lce, s.f, x, c) == bracket_layer(lce, s.f, lam::kFlat, x.args(), c));
    }
  }
}

TEST_CASE("monad laws") {
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()}) {
    LawReport r = check_monad_laws(sig, 300, 42);
    CHECK_MESSAGE(r.ok(), format_report(r));
    CHECK(r.samples == 300);
  }
  LawReport unary = check_monad_laws(parse_signature("bind:0"), 100, 42);
  CHECK_MESSAGE(unary.ok(), format_report(unary));
}

TEST_CASE("gfold agrees with bracket") {
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()})
    for (const LawReport& r : check_gfold_bracket(sig, 200, 6)) CHECK_MESSAGE(r.ok(), format_report(r));
}

TEST_CASE("morphism checkers") {
  SubstSystem lc = initial_system(sigs::lc());
  CHECK(is_hss_morphism(lc, lc, identity_morphism(), 200, 1).ok());
  CHECK(is_monad_morphism(lc, lc, identity_morphism(), 200, 1).ok());

  SubstSystem dup = initial_system(sigs::dupapp());
  CHECK(is_monad_morphism(dup, dup, swap_morphism(), 200, 1).ok());
  LawReport r = is_hss_morphism(dup, dup, swap_morphism(), 200, 1);
  CHECK(r.failures_of("tau") > 0);
  CHECK(r.failures_of("eta") == 0);
  CHECK(r.failures_of("bracket") == 0);
}

TEST_CASE("report formatting") {
  LawReport r = check_monad_laws(sigs::lc(), 10, 3);
  CHECK(summary_line(r) == "suite=monad-laws samples=10 failures=0 seed=3");
}
