#include <doctest.h>

#include "hss/errors.hpp"
#include "hss/lambda.hpp"
#include "hss/mendler.hpp"
#include "hss/random.hpp"
#include "hss/substitution.hpp"
#include "hss/term.hpp"

using namespace hss;

namespace {

Term v(Leaf l) { return Term::var(std::move(l)); }
Term fresh() { return v(Leaf::fresh()); }
Term old0() { return v(Leaf::old(Leaf::idx(0))); }

}  // namespace

TEST_CASE("validate") {
  Signature lc = sigs::lc();
  Signature lce = sigs::lce();
  CHECK(validate(lc, Ctx::fin(1), lam::abs(fresh())));
  CHECK_FALSE(validate(lc, Ctx::fin(0), lam::var(0)));
  CHECK(validate(lce, Ctx::fin(0), lam::flat(v(Leaf::boxed(lam::abs(fresh()))))));
  CHECK_FALSE(validate(lc, Ctx::fin(0), lam::flat(v(Leaf::boxed(lam::abs(fresh()))))));
  CHECK_FALSE(validate(lc, Ctx::fin(2), Term::node(0, {lam::var(0)})));
  CHECK_FALSE(validate(lce, Ctx::fin(1), lam::flat(lam::var(0))));
  CHECK(validate(lce, Ctx::ext(Ctx::fin(0)), lam::flat(v(Leaf::boxed(fresh())))));
}

TEST_CASE("map_leaves") {
  Signature lc = sigs::lc();
  Signature lce = sigs::lce();
  Ctx c = Ctx::fin(1);
  Term t = lam::app(lam::var(0), lam::abs(fresh()));
  CHECK(map_leaves(lc, id_map(c), t) == t);
  CHECK(map_leaves(lc, weaken_map(c), t) == lam::app(old0(), lam::abs(fresh())));

  Term under = lam::abs(lam::app(fresh(), v(Leaf::old(Leaf::idx(0)))));
  Term lifted = lam::abs(lam::app(fresh(), v(Leaf::old(Leaf::old(Leaf::idx(0))))));
  CHECK(map_leaves(lc, weaken_map(c), under) == lifted);

  Term f = lam::flat(v(Leaf::boxed(lam::var(0))));
  CHECK(map_leaves(lce, weaken_map(c), f) == lam::flat(v(Leaf::boxed(old0()))));
  CHECK_THROWS_AS(map_leaves(lc, weaken_map(Ctx::fin(0)), t), ScopeError);
}

TEST_CASE("size and equality") {
  Term t = lam::app(lam::var(0), lam::abs(fresh()));
  CHECK(term_eq(t, t));
  CHECK(size(lam::var(0)) == 1);
  CHECK(size(lam::flat(v(Leaf::boxed(lam::var(0))))) == 3);
  CHECK(size(t) == 4);
  CHECK_FALSE(term_eq(lam::var(0), lam::var(1)));
}

TEST_CASE("random_term") {
  Signature lc = sigs::lc();
  Signature lce = sigs::lce();
  CHECK(random_term(lc, Ctx::fin(0), 0, 1) == lam::abs(fresh()));
  CHECK(random_term(lc, Ctx::fin(3), 0, 1).is_var());
  CHECK(random_term(lce, Ctx::fin(2), 30, 7) == random_term(lce, Ctx::fin(2), 30, 7));
  CHECK(validate(lce, Ctx::fin(2), random_term(lce, Ctx::fin(2), 30, 7)));

  Signature unary = parse_signature("bind:0");
  CHECK_THROWS_AS(random_term(unary, Ctx::fin(0), 5, 1), GenerationError);
  CHECK(random_term(unary, Ctx::fin(1), 0, 1) == lam::var(0));

  Rng rng(3);
  for (const Signature& sig : {lc, lce, sigs::dupapp(), parse_signature("bind:2,0+bind:+flat")}) {
    for (int i = 0; i < 300; ++i) {
      Ctx c = random_ctx(sig, rng);
      std::size_t budget = rng.below(26);
      Term t = random_term(sig, c, budget, rng);
      CHECK(validate(sig, c, t));
      CHECK(size(t) <= std::max(budget + 1, min_size(sig, c)));
    }
  }
}

TEST_CASE("flattening depth is capped") {
  Signature lce = sigs::lce();
  auto depth = [](auto&& self, const Term& t) -> std::size_t {
    if (t.is_var()) {
      const Leaf* l = &t.leaf();
      while (l->kind() == Leaf::Kind::old) l = &l->inner();
      return l->kind() == Leaf::Kind::boxed ? self(self, l->term()) : 0;
    }
    std::size_t d = 0;
    for (const Term& a : t.args()) d = std::max(d, self(self, a));
    return d + (t.arity() == lam::kFlat ? 1 : 0);
  };
  Rng rng(8);
  for (int i = 0; i < 300; ++i) CHECK(depth(depth, random_term(lce, Ctx::fin(2), 40, rng)) <= 2);
}

TEST_CASE("mendler_gfold") {
  Signature lce = sigs::lce();
  Rng rng(21);
  StepBundle<std::size_t> sz = size_steps(lce);
  StepBundle<Term> mu_steps = bracket_steps(lce, ptd::identity_on_term(lce));
  CHECK(mendler_gfold(lce, endo::identity(), sz, lam::var(0), Ctx::fin(1)) == 1);
  for (int i = 0; i < 200; ++i) {
    Ctx c = random_ctx(lce, rng);
    Term t = random_term(lce, c, 20, rng);
    CHECK(mendler_gfold(lce, endo::identity(), sz, t, c) == size(t));
    Term tt = random_term(lce, Ctx::tm_over(c), 20, rng);
    Term folded = mendler_gfold(lce, endo::term(lce), mu_steps, tt, c);
    CHECK(folded == mu(lce, tt, c));
    CHECK(folded == apply_step(mu_steps, c, tt, fold_handle(mu_steps)));
  }
  CHECK_THROWS_AS(mendler_gfold(lce, endo::identity(), sz, lam::var(3), Ctx::fin(1)), ScopeError);
}

TEST_CASE("a step leaving its target raises a contract error") {
  Signature lce = sigs::lce();
  StepBundle<Term> bad = eval_steps();
  bad.node = [](const Ctx&, std::size_t arity, std::span<const Term> args,
                const FoldHandle<Term>&) { return Term::node(arity, {args.begin(), args.end()}); };
  Term t = lam::flat(v(Leaf::boxed(lam::abs(fresh()))));
  CHECK_THROWS_AS(mendler_gfold(lce, endo::identity(), bad, t, Ctx::fin(0)), StepContractError);
  CHECK(mendler_gfold(lce, endo::identity(), eval_steps(), t, Ctx::fin(0)) == lam::abs(fresh()));
}

TEST_CASE("fusion harness") {
  SUBCASE("reflexive") {
    FusionReport r = check_fusion_instance(fusion_reflexive(), 200, 4);
    CHECK(r.premise.ok());
    CHECK(r.conclusion.ok());
  }
  SUBCASE("eval instance") {
    for (const ShippedMorphism& s : shipped_morphisms(sigs::lce())) {
      FusionReport r = check_fusion_instance(fusion_eval(s.f), 200, 4);
      CHECK_MESSAGE(r.premise.ok(), format_report(r.premise));
      CHECK_MESSAGE(r.conclusion.ok(), format_report(r.conclusion));
    }
  }
  SUBCASE("broken phi") {
    FusionInstance<Term, Term> inst = fusion_broken();
    FusionReport r = check_fusion_instance(inst, 200, 4);
    CHECK(r.premise.failures > 0);
    CHECK_FALSE(r.premise.counterexamples.empty());

    // One application layer over TmOver(Fin(1)), handle = the fold itself.
    Ctx c = Ctx::fin(1);
    Term x = lam::app(v(Leaf::boxed(lam::var(0))), v(Leaf::boxed(lam::abs(fresh()))));
    FoldHandle<Term> h = fold_handle(inst.psi);
    FoldHandle<Term> phi_h = [&](const Ctx& d, const Term& y) { return inst.phi(d, h(d, y)); };
    Term lhs = inst.phi(c, apply_step(inst.psi, c, x, h));
    Term rhs = apply_step(inst.psi_prime, c, x, phi_h);
    CHECK(lhs == lam::app(lam::abs(fresh()), lam::var(0)));
    CHECK(rhs == lam::app(lam::var(0), lam::abs(fresh())));
  }
}
