#pragma once

// Generalized Mendler-style iteration on the initial (Id + H)-algebra along
// the reduction functor (- . Z), and a randomized harness for the fusion law.
//
// A step bundle Psi receives the recursive-call handle h : X.Z -> R (usable at
// any context) and one layer of syntax: either a leaf of Z(c) or a node whose
// arguments still live at Z-level. The fold is the unique h with
// h(In x) = Psi(h)(x), computed by structural recursion.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hss/context.hpp"
#include "hss/errors.hpp"
#include "hss/random.hpp"
#include "hss/report.hpp"
#include "hss/term.hpp"

namespace hss {

template <class R>
using FoldHandle = std::function<R(const Ctx&, const Term&)>;

template <class R>
struct StepBundle {
  std::string name;
  // Leaf of Z(c) to a result at c.
  std::function<R(const Ctx&, const Leaf&)> var;
  // Node at Z(c). The step may call `rec` only on (transports of) the node's
  // arguments and on the boxed contents of a flattening payload.
  std::function<R(const Ctx&, std::size_t arity, std::span<const Term> args,
                  const FoldHandle<R>& rec)>
      node;
  // Optional contract on results; a violation raises StepContractError.
  std::function<bool(const Ctx&, const R&)> target_valid;
};

// Psi(h) applied to one layer x over Z(c).
template <class R>
R apply_step(const StepBundle<R>& psi, const Ctx& c, const Term& x, const FoldHandle<R>& h) {
  if (x.is_var()) return psi.var(c, x.leaf());
  return psi.node(c, x.arity(), x.args(), h);
}

namespace raw {

template <class R>
R mendler_gfold(const StepBundle<R>& psi, const Term& t, const Ctx& c) {
  struct Folder {
    const StepBundle<R>& psi;
    FoldHandle<R> self;
    R run(const Ctx& c, const Term& t) const {
      R r = apply_step(psi, c, t, self);
      if (psi.target_valid && !psi.target_valid(c, r))
        throw StepContractError("step bundle '" + psi.name + "' left its target at " +
                                debug_string(c));
      return r;
    }
  };
  Folder folder{psi, {}};
  folder.self = [&folder](const Ctx& d, const Term& x) { return folder.run(d, x); };
  return folder.run(c, t);
}

}  // namespace raw

template <class R>
R mendler_gfold(const Signature& sig, const PointedEndo& z, const StepBundle<R>& psi,
                const Term& t, const Ctx& c) {
  require_valid(sig, z.on_ctx(c), t, "mendler_gfold");
  return raw::mendler_gfold(psi, t, c);
}

// The fold as a handle, for use where a step expects one.
template <class R>
FoldHandle<R> fold_handle(const StepBundle<R>& psi) {
  return [psi](const Ctx& d, const Term& x) { return raw::mendler_gfold(psi, x, d); };
}

// Size with Z = IdZ: one per Var and node, plus boxed contents.
StepBundle<std::size_t> size_steps(const Signature& sig);

// Data for one fusion-law instance phi(fold psi) = fold psi'.
template <class R, class R2>
struct FusionInstance {
  std::string name;
  Signature sig;
  PointedEndo z;
  StepBundle<R> psi;
  StepBundle<R2> psi_prime;
  std::function<R2(const Ctx&, const R&)> phi;
  std::function<bool(const R2&, const R2&)> eq;
  // Recursive handles sampled for the premise besides fold(psi) itself. Each
  // must be natural in the context.
  std::vector<FoldHandle<R>> extra_handles;
};

struct FusionReport {
  LawReport premise;
  LawReport conclusion;
};

// (a) premise phi . Psi(h) = Psi'(phi . h) on sampled layers and handles;
// (b) conclusion phi(fold psi) = fold psi' on sampled terms.
template <class R, class R2>
FusionReport check_fusion_instance(const FusionInstance<R, R2>& inst, std::size_t samples,
                                   std::uint64_t seed, std::size_t budget = 20) {
  FusionReport out;
  out.premise.suite = "fusion/" + inst.name + "/premise";
  out.conclusion.suite = "fusion/" + inst.name + "/conclusion";
  out.premise.seed = out.conclusion.seed = seed;
  Rng rng(seed);

  std::vector<FoldHandle<R>> handles{fold_handle(inst.psi)};
  handles.insert(handles.end(), inst.extra_handles.begin(), inst.extra_handles.end());

  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(out.premise);
    Ctx c = random_ctx(inst.sig, rng);
    Ctx zc = inst.z.on_ctx(c);
    try {
      std::size_t pick = rng.below(inst.sig.size() + (has_leaf(inst.sig, zc) ? 1 : 0));
      Term x = pick == inst.sig.size()
                   ? Term::var(random_leaf(inst.sig, zc, budget / 2, rng))
                   : random_node(inst.sig, pick, zc, budget, rng);
      const FoldHandle<R>& h = handles[rng.below(handles.size())];
      FoldHandle<R2> phi_h = [&](const Ctx& d, const Term& y) { return inst.phi(d, h(d, y)); };
      R2 lhs = inst.phi(c, apply_step(inst.psi, c, x, h));
      R2 rhs = apply_step(inst.psi_prime, c, x, phi_h);
      sample.expect(inst.eq(lhs, rhs), "premise", inst.sig, zc, x);
    } catch (const Error& e) {
      sample.error("premise", e.what());
    }
  }

  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(out.conclusion);
    Ctx c = random_ctx(inst.sig, rng);
    Ctx zc = inst.z.on_ctx(c);
    try {
      Term t = random_term(inst.sig, zc, budget, rng);
      R2 lhs = inst.phi(c, raw::mendler_gfold(inst.psi, t, c));
      R2 rhs = raw::mendler_gfold(inst.psi_prime, t, c);
      sample.expect(inst.eq(lhs, rhs), "conclusion", inst.sig, zc, t);
    } catch (const Error& e) {
      sample.error("conclusion", e.what());
    }
  }
  return out;
}

}  // namespace hss
