#include "hss/laws.hpp"

#include "hss/errors.hpp"
#include "hss/mendler.hpp"
#include "hss/random.hpp"
#include "hss/strength.hpp"
#include "hss/term.hpp"

namespace hss {

namespace {

template <class Fn>
void guarded(Sample& s, const char* check, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    s.error(check, e.what());
  }
}

LawReport make_report(std::string suite, std::uint64_t seed) {
  LawReport r;
  r.suite = std::move(suite);
  r.seed = seed;
  return r;
}

// Scope sizes for a renaming Fin(n) -> Fin(m) with n drawn so that Fin(n)
// carries terms of sig.
std::pair<std::size_t, std::size_t> renaming_shape(const Signature& sig, Rng& rng) {
  std::size_t n = random_fin_ctx(sig, rng).count();
  std::size_t m = rng.between(n > 0 ? 1 : 0, 3);
  if (!inhabited(sig, Ctx::fin(m))) m = std::max<std::size_t>(m, 1);
  return {n, m};
}

std::vector<Term> random_payload(const Signature& carrier, const Arity& a, const Ctx& c,
                                 Rng& rng) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < a.arg_count(); ++i)
    args.push_back(random_term(carrier, arg_ctx(a, i, c), kDefaultBudget / 2, rng));
  return args;
}

// theta_{T.Z', Z} at c applied after theta_{T, Z'} at Z c.
std::vector<Term> theta_of_composite_rhs(const Signature& sig, std::size_t arity,
                                         const PointedEndo& outer, const PointedEndo& inner,
                                         std::span<const Term> args, const Ctx& c) {
  const Arity& a = sig[arity];
  std::vector<Term> first = raw::strength(sig, arity, outer, args, inner.on_ctx(c));
  std::vector<Term> out;
  if (a.is_flattening()) {
    Ctx over = Ctx::tm_over(outer.on_ctx(inner.on_ctx(c)));
    out.push_back(raw::map_leaves(sig, outer.on_map(inner.point(over)), first[0]));
    return out;
  }
  for (std::size_t i = 0; i < first.size(); ++i)
    out.push_back(raw::map_leaves(sig, outer.on_map(dist_map(inner, c, a.binders[i])), first[i]));
  return out;
}

PointedMorphism after(const TermMorphism& beta, const PointedMorphism& f) {
  return {beta.name + "." + f.name, f.z,
          [beta, f](const Ctx& c, const Leaf& l) { return beta(c, f(c, l)); }};
}

}  // namespace

SubstSystem initial_system(const Signature& sig) {
  return {"initial", sig, sig,
          [](const Ctx&, std::size_t arity, std::span<const Term> args) {
            return Term::node(arity, {args.begin(), args.end()});
          },
          [sig](const PointedMorphism& f, const Term& t, const Ctx& c) {
            return raw::bracket(sig, f, t, c);
          }};
}

TermMorphism identity_morphism() {
  return {"id", [](const Ctx&, const Term& t) { return t; }};
}

Term horizontal(const Signature& target_carrier, const TermMorphism& beta, const Term& t,
                const Ctx& c) {
  Term trunk = beta(Ctx::tm_over(c), t);
  LeafMap each{Ctx::tm_over(c), Ctx::tm_over(c), [&beta, &c](const Leaf& l) {
                 if (l.kind() != Leaf::Kind::boxed)
                   throw ScopeError("horizontal: expected boxed leaf");
                 return Leaf::boxed(beta(c, l.term()));
               }};
  return raw::map_leaves(target_carrier, each, trunk);
}

LawReport check_map_laws(const Signature& sig, std::size_t samples, std::uint64_t seed) {
  LawReport report = make_report("map-laws", seed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    guarded(sample, "map", [&] {
      auto [n, m] = renaming_shape(sig, rng);
      std::size_t p = rng.between(1, 3);
      Ctx c = Ctx::fin(n);
      Term t = random_term(sig, c, kDefaultBudget, rng);
      sample.expect(map_leaves(sig, id_map(c), t) == t, "identity", sig, c, t);

      LeafMap h = random_renaming(n, m, rng);
      LeafMap g = random_renaming(m, p, rng);
      Term once = map_leaves(sig, compose_map(g, h), t);
      Term twice = map_leaves(sig, g, map_leaves(sig, h, t));
      sample.expect(once == twice, "composition", sig, c, t);
      sample.expect(validate(sig, Ctx::fin(p), once), "validity", sig, c, t);

      LeafMap w = weaken_map(Ctx::fin(m));
      Term lifted = map_leaves(sig, compose_map(w, h), t);
      sample.expect(lifted == map_leaves(sig, w, map_leaves(sig, h, t)), "weaken-composition",
                    sig, c, t);
      sample.expect(validate(sig, Ctx::ext(Ctx::fin(m)), lifted), "weaken-validity", sig, c, t);
    });
  }
  return report;
}

LawReport check_pointed_endo(const Signature& sig, const PointedEndo& z, std::size_t samples,
                             std::uint64_t seed) {
  LawReport report = make_report("pointed-endo/" + z.name, seed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    guarded(sample, "endo", [&] {
      auto [n, m] = renaming_shape(sig, rng);
      std::size_t p = rng.between(1, 3);
      Ctx c = Ctx::fin(n);
      LeafMap h = random_renaming(n, m, rng);
      LeafMap g = random_renaming(m, p, rng);
      Ctx zc = z.on_ctx(c);
      if (has_leaf(sig, zc)) {
        Leaf l = random_leaf(sig, zc, kDefaultBudget / 2, rng);
        Term w = Term::var(l);
        sample.expect(z.on_map(id_map(c))(l) == l, "identity", sig, zc, w);
        sample.expect(z.on_map(compose_map(g, h))(l) == compose_map(z.on_map(g), z.on_map(h))(l),
                      "composition", sig, zc, w);
      }
      if (n > 0) {
        Leaf l = random_leaf(sig, c, 0, rng);
        sample.expect(z.on_map(h)(z.point(c)(l)) == z.point(Ctx::fin(m))(h(l)), "point-naturality",
                      sig, c, Term::var(l));
      }
    });
  }
  return report;
}

LawReport check_pointed_morphism(const Signature& sig, const PointedMorphism& f,
                                 std::size_t samples, std::uint64_t seed) {
  LawReport report = make_report("pointed-morphism/" + f.name, seed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    guarded(sample, "morphism", [&] {
      auto [n, m] = renaming_shape(sig, rng);
      Ctx c = Ctx::fin(n);
      if (n > 0) {
        Leaf l = random_leaf(sig, c, 0, rng);
        sample.expect(f(c, f.z.point(c)(l)) == Term::var(l), "pointedness", sig, c, Term::var(l));
      }
      Ctx zc = f.z.on_ctx(c);
      if (has_leaf(sig, zc)) {
        LeafMap g = random_renaming(n, m, rng);
        Leaf l = random_leaf(sig, zc, kDefaultBudget / 2, rng);
        Term lhs = raw::map_leaves(sig, g, f(c, l));
        Term rhs = f(Ctx::fin(m), f.z.on_map(g)(l));
        sample.expect(lhs == rhs, "naturality", sig, zc, Term::var(l));
      }
    });
  }
  return report;
}

LawReport check_bracket_laws(const Signature& sig, const ShippedMorphism& shipped,
                             std::size_t samples, std::uint64_t seed) {
  const PointedMorphism& f = shipped.f;
  LawReport report = make_report("bracket-laws/" + f.name, seed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    Ctx c = random_ctx(sig, rng);
    Ctx zc = f.z.on_ctx(c);

    guarded(sample, "pointedness", [&] {
      if (!has_leaf(sig, c)) return;
      Leaf l = random_leaf(sig, c, kDefaultBudget / 2, rng);
      sample.expect(f(c, f.z.point(c)(l)) == Term::var(l), "pointedness", sig, c, Term::var(l));
    });

    guarded(sample, "triangle", [&] {
      if (!has_leaf(sig, zc)) return;
      Term v = Term::var(random_leaf(sig, zc, kDefaultBudget / 2, rng));
      sample.expect(bracket(sig, f, v, c) == f(c, v.leaf()), "triangle", sig, zc, v);
    });

    guarded(sample, "square", [&] {
      std::size_t arity = rng.below(sig.size());
      Term x = random_node(sig, arity, zc, kDefaultBudget, rng);
      sample.expect(bracket(sig, f, x, c) == bracket_layer(sig, f, arity, x.args(), c), "square",
                    sig, zc, x);
    });

    guarded(sample, "naturality-in-f", [&] {
      const PointedMap& g = shipped.precomposable[rng.below(shipped.precomposable.size())];
      Ctx gc = g.source.on_ctx(c);
      if (!inhabited(sig, gc)) return;
      Term t = random_term(sig, gc, kDefaultBudget, rng);
      Term lhs = bracket(sig, precompose(f, g), t, c);
      Term rhs = bracket(sig, f, raw::map_leaves(sig, g.component(c), t), c);
      sample.expect(lhs == rhs, "naturality-in-f", sig, gc, t, "via " + g.name);
    });

    guarded(sample, "naturality-in-context", [&] {
      auto [n, m] = renaming_shape(sig, rng);
      Ctx from = Ctx::fin(n);
      Ctx to = Ctx::fin(m);
      LeafMap rho = random_renaming(n, m, rng);
      if (!inhabited(sig, f.z.on_ctx(from))) return;
      Term t = random_term(sig, f.z.on_ctx(from), kDefaultBudget, rng);
      Term lhs = raw::map_leaves(sig, rho, bracket(sig, f, t, from));
      Term rhs = bracket(sig, f, raw::map_leaves(sig, f.z.on_map(rho), t), to);
      sample.expect(lhs == rhs, "naturality-in-context", sig, f.z.on_ctx(from), t);
    });
  }
  return report;
}

LawReport check_monad_laws(const Signature& sig, std::size_t samples, std::uint64_t seed) {
  LawReport report = make_report("monad-laws", seed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    Ctx c = random_ctx(sig, rng);
    guarded(sample, "units", [&] {
      Term t = random_term(sig, c, kDefaultBudget, rng);
      sample.expect(mu(sig, Term::var(Leaf::boxed(t)), c) == t, "left-unit", sig, c, t);
      sample.expect(mu(sig, map_leaves(sig, eta_wrap_map(c), t), c) == t, "right-unit", sig, c, t);
    });
    guarded(sample, "associativity", [&] {
      Ctx c1 = Ctx::tm_over(c);
      Ctx c2 = Ctx::tm_over(c1);
      Term tt = random_term(sig, c2, kDefaultBudget, rng);
      Term lhs = mu(sig, mu(sig, tt, c1), c);
      LeafMap inner{c2, c1, [&](const Leaf& l) { return Leaf::boxed(mu(sig, l.term(), c)); }};
      Term rhs = mu(sig, raw::map_leaves(sig, inner, tt), c);
      sample.expect(lhs == rhs, "associativity", sig, c2, tt);
    });
  }
  return report;
}

std::vector<LawReport> check_theta_laws(const Signature& sig, std::size_t samples_per_arity,
                                        std::uint64_t seed) {
  std::vector<LawReport> reports;
  std::vector<PointedEndo> pool{endo::ext(), endo::term(sig)};
  Rng rng(seed);
  for (std::size_t arity = 0; arity < sig.size(); ++arity) {
    LawReport report = make_report("theta-laws/" + std::to_string(arity), seed);
    for (std::size_t s = 0; s < samples_per_arity; ++s) {
      Sample sample(report);
      Ctx c = random_ctx(sig, rng);
      guarded(sample, "identity", [&] {
        Term x = random_node(sig, arity, c, kDefaultBudget, rng);
        auto out = strength(sig, arity, endo::identity(), x.args(), c);
        sample.expect(Term::node(arity, out) == x, "identity", sig, c, x);
      });
      guarded(sample, "composition", [&] {
        const PointedEndo& outer = pool[rng.below(pool.size())];
        const PointedEndo& inner = pool[rng.below(pool.size())];
        PointedEndo both = endo::compose(outer, inner);
        Ctx zc = both.on_ctx(c);
        Term x = random_node(sig, arity, zc, kDefaultBudget, rng);
        auto lhs = strength(sig, arity, both, x.args(), c);
        auto rhs = theta_of_composite_rhs(sig, arity, outer, inner, x.args(), c);
        sample.expect(lhs == rhs, "composition", sig, zc, x, both.name);
      });
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<LawReport> check_gfold_bracket(const Signature& sig, std::size_t samples,
                                           std::uint64_t seed) {
  std::vector<LawReport> reports;
  for (const ShippedMorphism& shipped : shipped_morphisms(sig)) {
    const PointedMorphism& f = shipped.f;
    LawReport report = make_report("gfold-bracket/" + f.name, seed);
    Rng rng(seed);
    StepBundle<Term> psi = bracket_steps(sig, f);
    for (std::size_t s = 0; s < samples; ++s) {
      Sample sample(report);
      guarded(sample, "agreement", [&] {
        Ctx c = random_ctx(sig, rng);
        Term t = random_term(sig, f.z.on_ctx(c), kDefaultBudget, rng);
        Term via_fold = mendler_gfold(sig, f.z, psi, t, c);
        sample.expect(via_fold == bracket(sig, f, t, c), "agreement", sig, f.z.on_ctx(c), t);
        // Defining equation h(In x) = Psi(h)(x) with h the fold itself.
        sample.expect(via_fold == apply_step(psi, c, t, fold_handle(psi)), "defining-equation",
                      sig, f.z.on_ctx(c), t);
      });
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

LawReport is_hss_morphism(const SubstSystem& source, const SubstSystem& target,
                          const TermMorphism& beta, std::size_t samples, std::uint64_t seed) {
  LawReport report = make_report("hss-morphism/" + beta.name, seed);
  Rng rng(seed);
  std::vector<ShippedMorphism> fs = shipped_morphisms(source.carrier);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    Ctx c = random_ctx(source.carrier, rng);

    guarded(sample, "eta", [&] {
      if (!has_leaf(source.carrier, c)) return;
      Term v = Term::var(random_leaf(source.carrier, c, kDefaultBudget / 2, rng));
      sample.expect(beta(c, v) == v, "eta", source.carrier, c, v);
    });

    guarded(sample, "tau", [&] {
      std::size_t arity = rng.below(source.sig.size());
      const Arity& a = source.sig[arity];
      std::vector<Term> args = random_payload(source.carrier, a, c, rng);
      Term lhs = beta(c, source.tau(c, arity, args));
      std::vector<Term> mapped;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (a.is_flattening())
          mapped.push_back(horizontal(target.carrier, beta, args[i], c));
        else
          mapped.push_back(beta(arg_ctx(a, i, c), args[i]));
      }
      Term rhs = target.tau(c, arity, mapped);
      sample.expect(lhs == rhs, "tau", source.sig, c, Term::node(arity, args));
    });

    guarded(sample, "bracket", [&] {
      const PointedMorphism& f = fs[rng.below(fs.size())].f;
      Ctx zc = f.z.on_ctx(c);
      Term t = random_term(source.carrier, zc, kDefaultBudget, rng);
      Term lhs = beta(c, source.bracket(f, t, c));
      Term rhs = target.bracket(after(beta, f), beta(zc, t), c);
      sample.expect(lhs == rhs, "bracket", source.carrier, zc, t, "f = " + f.name);
    });
  }
  return report;
}

LawReport is_monad_morphism(const SubstSystem& source, const SubstSystem& target,
                            const TermMorphism& beta, std::size_t samples, std::uint64_t seed) {
  LawReport report = make_report("monad-morphism/" + beta.name, seed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    Ctx c = random_ctx(source.carrier, rng);
    guarded(sample, "eta", [&] {
      if (!has_leaf(source.carrier, c)) return;
      Term v = Term::var(random_leaf(source.carrier, c, kDefaultBudget / 2, rng));
      sample.expect(beta(c, v) == v, "eta", source.carrier, c, v);
    });
    guarded(sample, "mu", [&] {
      Ctx over = Ctx::tm_over(c);
      Term tt = random_term(source.carrier, over, kDefaultBudget, rng);
      Term lhs = beta(c, source.mu(tt, c));
      Term rhs = target.mu(horizontal(target.carrier, beta, tt, c), c);
      sample.expect(lhs == rhs, "mu", source.carrier, over, tt);
    });
  }
  return report;
}

}  // namespace hss
