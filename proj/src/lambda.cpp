#include "hss/lambda.hpp"

#include "hss/errors.hpp"
#include "hss/random.hpp"
#include "hss/strength.hpp"
#include "hss/term.hpp"

namespace hss {

namespace lam {

Term var(std::size_t i) { return Term::var(Leaf::idx(i)); }
Term app(Term f, Term a) { return Term::node(kApp, {std::move(f), std::move(a)}); }
Term abs(Term body) { return Term::node(kAbs, {std::move(body)}); }
Term flat(Term outer) { return Term::node(kFlat, {std::move(outer)}); }

}  // namespace lam

namespace {

const Signature& lc_sig() {
  static const Signature s = sigs::lc();
  return s;
}

const Signature& lce_sig() {
  static const Signature s = sigs::lce();
  return s;
}

template <class Fn>
LeafMap each_box(const Ctx& from, const Ctx& to, Fn fn) {
  return {Ctx::tm_over(from), Ctx::tm_over(to), [fn](const Leaf& l) {
            if (l.kind() != Leaf::Kind::boxed)
              throw ScopeError("expected a boxed leaf, got " + debug_string(l));
            return Leaf::boxed(fn(l.term()));
          }};
}

Term eval_raw(const Term& t, const Ctx& c) {
  if (t.is_var()) return t;
  if (t.arity() == lam::kFlat) {
    Ctx over = Ctx::tm_over(c);
    LeafMap inner = each_box(c, c, [&c](const Term& w) { return eval_raw(w, c); });
    Term trunk = eval_raw(raw::map_leaves(lce_sig(), inner, t.args()[0]), over);
    return raw::mu(lc_sig(), trunk, c);
  }
  const Arity& a = lce_sig()[t.arity()];
  std::vector<Term> out;
  for (std::size_t i = 0; i < t.args().size(); ++i)
    out.push_back(eval_raw(t.args()[i], arg_ctx(a, i, c)));
  return Term::node(t.arity(), std::move(out));
}

bool trunk_flat_free(const Term& t) {
  if (t.is_var()) return true;
  if (t.arity() == lam::kFlat) return false;
  for (const Term& a : t.args())
    if (!trunk_flat_free(a)) return false;
  return true;
}

bool boxes_flat_free(const Term& t) {
  if (t.is_var()) {
    const Leaf* l = &t.leaf();
    while (l->kind() == Leaf::Kind::old) l = &l->inner();
    return l->kind() != Leaf::Kind::boxed || trunk_flat_free(l->term());
  }
  for (const Term& a : t.args())
    if (!boxes_flat_free(a)) return false;
  return true;
}

Term flip_apps(const Term& t) {
  if (t.is_var()) return t;
  if (t.arity() == lam::kApp) return lam::app(flip_apps(t.args()[1]), flip_apps(t.args()[0]));
  std::vector<Term> out;
  for (const Term& a : t.args()) out.push_back(flip_apps(a));
  return Term::node(t.arity(), std::move(out));
}

PointedMorphism after_eval(const PointedMorphism& f) {
  return {"eval." + f.name, f.z,
          [f](const Ctx& c, const Leaf& l) { return eval_raw(f(c, l), c); }};
}

// [eval . f, [alpha, mu_lam] . H h . theta].
StepBundle<Term> extended_bracket_steps(const PointedMorphism& f) {
  StepBundle<Term> psi;
  psi.name = "extended-bracket/" + f.name;
  psi.var = [f](const Ctx& c, const Leaf& l) { return eval_raw(f(c, l), c); };
  psi.node = [z = f.z](const Ctx& c, std::size_t arity, std::span<const Term> args,
                       const FoldHandle<Term>& h) {
    const Arity& a = lce_sig()[arity];
    std::vector<Term> theta = raw::strength(lce_sig(), arity, z, args, c);
    if (a.is_flattening()) {
      Ctx zc = z.on_ctx(c);
      Term inner = h(Ctx::tm_over(zc), theta[0]);
      LeafMap boxes = each_box(zc, c, [&](const Term& w) { return h(c, w); });
      return raw::mu(lc_sig(), raw::map_leaves(lce_sig(), boxes, inner), c);
    }
    std::vector<Term> out;
    for (std::size_t i = 0; i < theta.size(); ++i)
      out.push_back(h(Ctx::ext_n(c, a.binders[i]), theta[i]));
    return Term::node(arity, std::move(out));
  };
  return psi;
}

}  // namespace

Term mu_lam(const Term& t, const Ctx& c) { return mu(lc_sig(), t, c); }

Term extended_algebra_apply(const Ctx& c, std::size_t arity, std::span<const Term> args) {
  if (arity >= lce_sig().size()) throw ScopeError("unknown LCE arity " + std::to_string(arity));
  const Arity& a = lce_sig()[arity];
  if (args.size() != a.arg_count()) throw ScopeError("payload has the wrong number of arguments");
  // Leaves are opaque, so only trunks must be plain LC; mu_lam also walks the
  // boxes of a flattening payload.
  for (std::size_t i = 0; i < args.size(); ++i) {
    require_valid(lce_sig(), arg_ctx(a, i, c), args[i], "extended_algebra_apply");
    if (!trunk_flat_free(args[i]))
      throw ScopeError("extended_algebra_apply: payload is not a lambda term");
  }
  if (a.is_flattening()) {
    if (!boxes_flat_free(args[0]))
      throw ScopeError("extended_algebra_apply: boxed payload is not a lambda term");
    return raw::mu(lc_sig(), args[0], c);
  }
  return Term::node(arity, {args.begin(), args.end()});
}

Term eval_flatten(const Term& t, const Ctx& c) {
  require_valid(lce_sig(), c, t, "eval_flatten");
  return eval_raw(t, c);
}

StepBundle<Term> eval_steps() {
  StepBundle<Term> psi;
  psi.name = "eval";
  psi.var = [](const Ctx&, const Leaf& l) { return Term::var(l); };
  psi.node = [](const Ctx& c, std::size_t arity, std::span<const Term> args,
                const FoldHandle<Term>& rec) {
    if (arity == lam::kFlat) {
      Term trunk = rec(Ctx::tm_over(c), args[0]);
      LeafMap boxes = each_box(c, c, [&](const Term& w) { return rec(c, w); });
      return raw::mu(lc_sig(), raw::map_leaves(lce_sig(), boxes, trunk), c);
    }
    const Arity& a = lce_sig()[arity];
    std::vector<Term> out;
    for (std::size_t i = 0; i < args.size(); ++i) out.push_back(rec(arg_ctx(a, i, c), args[i]));
    return Term::node(arity, std::move(out));
  };
  psi.target_valid = [](const Ctx&, const Term& r) { return trunk_flat_free(r); };
  return psi;
}

Term eval_flatten_gfold(const Term& t, const Ctx& c) {
  static const StepBundle<Term> psi = eval_steps();
  return mendler_gfold(lce_sig(), endo::identity(), psi, t, c);
}

SubstSystem extended_system() {
  return {"lc-extended", lce_sig(), lc_sig(),
          [](const Ctx& c, std::size_t arity, std::span<const Term> args) {
            return extended_algebra_apply(c, arity, args);
          },
          [](const PointedMorphism& f, const Term& t, const Ctx& c) {
            return raw::bracket(lc_sig(), f, t, c);
          }};
}

TermMorphism eval_morphism() {
  return {"eval", [](const Ctx& c, const Term& t) { return eval_raw(t, c); }};
}

std::vector<LawReport> check_init_compat(std::size_t samples, std::uint64_t seed) {
  std::vector<LawReport> reports;
  for (const ShippedMorphism& shipped : shipped_morphisms(lce_sig())) {
    const PointedMorphism& f = shipped.f;
    PointedMorphism ef = after_eval(f);
    LawReport report;
    report.suite = "init-compat/" + f.name;
    report.seed = seed;
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      Sample sample(report);
      try {
        Ctx c = random_ctx(lce_sig(), rng);
        Ctx zc = f.z.on_ctx(c);
        Term t = random_term(lce_sig(), zc, kDefaultBudget, rng);
        Term lhs = eval_raw(bracket(lce_sig(), f, t, c), c);
        Term rhs = raw::bracket(lc_sig(), ef, eval_raw(t, zc), c);
        sample.expect(lhs == rhs, "init-compat", lce_sig(), zc, t);
        sample.expect(trunk_flat_free(lhs), "lc-result", lce_sig(), zc, t);
      } catch (const Error& e) {
        sample.error("init-compat", e.what());
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

LawReport check_eval_properties(std::size_t samples, std::uint64_t seed) {
  LawReport report;
  report.suite = "eval-properties";
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    try {
      Ctx c = random_ctx(lce_sig(), rng);
      Term t = random_term(lce_sig(), c, kDefaultBudget, rng);
      Term e = eval_raw(t, c);
      sample.expect(eval_flatten_gfold(t, c) == e, "gfold-agreement", lce_sig(), c, t);
      sample.expect(eval_raw(e, c) == e, "idempotence", lce_sig(), c, t);
      bool plain = c.kind() != Ctx::Kind::tm_over;
      sample.expect(plain ? validate(lc_sig(), c, e) : trunk_flat_free(e), "lc-result",
                    lce_sig(), c, t);
      Term p = random_term(lc_sig(), c, kDefaultBudget, rng);
      sample.expect(eval_raw(p, c) == p, "embed", lc_sig(), c, p);
    } catch (const Error& e) {
      sample.error("eval", e.what());
    }
  }
  return report;
}

FusionInstance<Term, Term> fusion_reflexive() {
  PointedMorphism id = ptd::identity_on_term(lce_sig());
  StepBundle<Term> psi = bracket_steps(lce_sig(), id);
  FusionInstance<Term, Term> inst{"reflexive", lce_sig(), id.z, psi, psi,
                                  [](const Ctx&, const Term& t) { return t; },
                                  [](const Term& a, const Term& b) { return a == b; },
                                  {}};
  inst.extra_handles.push_back(
      [](const Ctx& d, const Term& y) { return eval_raw(raw::mu(lce_sig(), y, d), d); });
  return inst;
}

FusionInstance<Term, Term> fusion_eval(const PointedMorphism& f) {
  FusionInstance<Term, Term> inst{"eval/" + f.name,
                                  lce_sig(),
                                  f.z,
                                  bracket_steps(lce_sig(), f),
                                  extended_bracket_steps(f),
                                  [](const Ctx& c, const Term& t) { return eval_raw(t, c); },
                                  [](const Term& a, const Term& b) { return a == b; },
                                  {}};
  inst.extra_handles.push_back([f](const Ctx& d, const Term& y) {
    return eval_raw(raw::bracket(lce_sig(), f, y, d), d);
  });
  return inst;
}

FusionInstance<Term, Term> fusion_broken() {
  FusionInstance<Term, Term> inst = fusion_eval(ptd::identity_on_term(lce_sig()));
  inst.name = "broken-phi";
  inst.phi = [](const Ctx& c, const Term& t) { return flip_apps(eval_raw(t, c)); };
  return inst;
}

Term swap_apps(const Term& t) {
  if (t.is_var()) return t;
  std::size_t id = t.arity();
  if (id == lam::kDupApp)
    id = lam::kDupAppPrime;
  else if (id == lam::kDupAppPrime)
    id = lam::kDupApp;
  std::vector<Term> out;
  for (const Term& a : t.args()) out.push_back(swap_apps(a));
  return Term::node(id, std::move(out));
}

TermMorphism swap_morphism() {
  return {"swap", [](const Ctx&, const Term& t) { return swap_apps(t); }};
}

bool NonfullnessWitness::expected() const {
  return monad.ok() && hss.failures_of("tau") > 0 && !(tau_lhs == tau_rhs);
}

NonfullnessWitness nonfullness_witness(std::size_t samples, std::uint64_t seed) {
  SubstSystem sys = initial_system(sigs::dupapp());
  TermMorphism swap = swap_morphism();
  Ctx c = Ctx::fin(2);
  std::vector<Term> args{lam::var(0), lam::var(1)};
  Term x = Term::node(lam::kDupApp, args);
  std::vector<Term> swapped{swap(c, args[0]), swap(c, args[1])};
  return {is_monad_morphism(sys, sys, swap, samples, seed),
          is_hss_morphism(sys, sys, swap, samples, seed), x, swap(c, sys.tau(c, lam::kDupApp, args)),
          sys.tau(c, lam::kDupApp, swapped)};
}

}  // namespace hss
