#pragma once

// Randomized law suites. Every suite draws its samples from one seeded
// stream, so a (suite, samples, seed) triple always reproduces.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hss/context.hpp"
#include "hss/report.hpp"
#include "hss/signature.hpp"
#include "hss/substitution.hpp"

namespace hss {

inline constexpr std::size_t kDefaultBudget = 20;

// A substitution system for `sig` whose carrier consists of terms over
// `carrier`. eta is always Var.
struct SubstSystem {
  std::string name;
  Signature sig;
  Signature carrier;
  // Algebra structure on one layer: arguments are carrier terms.
  std::function<Term(const Ctx&, std::size_t, std::span<const Term>)> tau;
  std::function<Term(const PointedMorphism&, const Term&, const Ctx&)> bracket;

  Term mu(const Term& t, const Ctx& c) const {
    return bracket(ptd::identity_on_term(carrier), t, c);
  }
};

// The term algebra of sig with the structural bracket.
SubstSystem initial_system(const Signature& sig);

// A natural transformation between carriers, applied at a context. It walks
// the trunk only; leaves pass through untouched.
struct TermMorphism {
  std::string name;
  std::function<Term(const Ctx&, const Term&)> apply;

  Term operator()(const Ctx& c, const Term& t) const { return apply(c, t); }
};

TermMorphism identity_morphism();

// Functor laws of map_leaves on sampled renamings, and validity preservation.
LawReport check_map_laws(const Signature& sig, std::size_t samples, std::uint64_t seed);

// Functor laws of on_map and naturality of the point.
LawReport check_pointed_endo(const Signature& sig, const PointedEndo& z, std::size_t samples,
                             std::uint64_t seed);

// Pointedness f . e = eta and naturality of the component.
LawReport check_pointed_morphism(const Signature& sig, const PointedMorphism& f,
                                 std::size_t samples, std::uint64_t seed);

// The two diagrams defining {f} (triangle and square, the square evaluated
// by bracket_layer), pointedness of f, naturality of {-} in f over the
// shipped precomposable maps, and naturality of {f} in Fin contexts.
LawReport check_bracket_laws(const Signature& sig, const ShippedMorphism& f,
                             std::size_t samples, std::uint64_t seed);

// Left unit, right unit and associativity of (T, eta, mu).
LawReport check_monad_laws(const Signature& sig, std::size_t samples, std::uint64_t seed);

// Identity and composition laws of the strength, one report per arity.
// Composite endofunctors are sampled from {ExtZ, TmZ}.
std::vector<LawReport> check_theta_laws(const Signature& sig, std::size_t samples_per_arity,
                                        std::uint64_t seed);

// mendler_gfold(bracket_steps(f)) against bracket, for each shipped f.
std::vector<LawReport> check_gfold_bracket(const Signature& sig, std::size_t samples,
                                           std::uint64_t seed);

// eta triangle, tau square and bracket square of an hss morphism. The
// bracket square ranges over the shipped pointed morphisms of the source.
LawReport is_hss_morphism(const SubstSystem& source, const SubstSystem& target,
                          const TermMorphism& beta, std::size_t samples, std::uint64_t seed);

// beta . eta = eta' and beta . mu = mu' . (beta * beta).
LawReport is_monad_morphism(const SubstSystem& source, const SubstSystem& target,
                            const TermMorphism& beta, std::size_t samples, std::uint64_t seed);

// beta * beta on a term over TmOver(c): beta on the trunk, then beta on every
// boxed leaf.
Term horizontal(const Signature& target_carrier, const TermMorphism& beta, const Term& t,
                const Ctx& c);

}  // namespace hss
