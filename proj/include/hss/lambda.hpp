#pragma once

// Untyped lambda calculus with and without explicit flattening, the EVAL
// morphism that resolves flattening nodes, and the swap endomorphism on the
// two-application calculus.

#include <cstdint>
#include <vector>

#include "hss/laws.hpp"
#include "hss/mendler.hpp"

namespace hss {

namespace lam {

// Arity ids in sigs::lc() and sigs::lce().
inline constexpr std::size_t kApp = 0;
inline constexpr std::size_t kAbs = 1;
inline constexpr std::size_t kFlat = 2;

// Arity ids in sigs::dupapp().
inline constexpr std::size_t kDupApp = 0;
inline constexpr std::size_t kDupAppPrime = 1;
inline constexpr std::size_t kDupAbs = 2;

Term var(std::size_t i);
Term app(Term f, Term a);
Term abs(Term body);
Term flat(Term outer);

}  // namespace lam

// mu for LC; t is over TmOver(c).
Term mu_lam(const Term& t, const Ctx& c);

// [alpha, mu_lam] on one LCE layer whose arguments are LC terms.
Term extended_algebra_apply(const Ctx& c, std::size_t arity, std::span<const Term> args);

// EVAL: LCE terms over c to LC terms over c.
Term eval_flatten(const Term& t, const Ctx& c);

// EVAL as a step bundle for mendler_gfold at Z = IdZ.
StepBundle<Term> eval_steps();
Term eval_flatten_gfold(const Term& t, const Ctx& c);

// (LC, [alpha, mu_lam]) with the LC bracket, as a substitution system for LCE.
SubstSystem extended_system();
TermMorphism eval_morphism();

// eval(bracket_LCE(f, t)) against bracket_LC(eval . f, eval(t)), one report
// per shipped f.
std::vector<LawReport> check_init_compat(std::size_t samples, std::uint64_t seed);

// Direct EVAL against the gfold version, embed retraction, idempotence and
// LC-validity of results.
LawReport check_eval_properties(std::size_t samples, std::uint64_t seed);

// phi = id, psi = psi' = bracket steps of identity-on-T.
FusionInstance<Term, Term> fusion_reflexive();
// phi = EVAL, psi = bracket steps of f in LCE, psi' = [eval . f, mu_lam-extended].
FusionInstance<Term, Term> fusion_eval(const PointedMorphism& f);
// fusion_eval with phi swapping the arguments of every application.
FusionInstance<Term, Term> fusion_broken();

// On DUPAPP, exchanges app and app' everywhere.
Term swap_apps(const Term& t);
TermMorphism swap_morphism();

struct NonfullnessWitness {
  LawReport monad;      // expected to pass
  LawReport hss;        // expected to fail on tau
  Term counterexample;  // App(Var 0, Var 1) over Fin(2)
  Term tau_lhs;         // swap(tau(App, ...))
  Term tau_rhs;         // tau(App, swap ...)
  bool expected() const;
};

NonfullnessWitness nonfullness_witness(std::size_t samples = 500, std::uint64_t seed = 1);

}  // namespace hss
