#include "hss/naive.hpp"

#include <functional>

#include "hss/errors.hpp"
#include "hss/lambda.hpp"
#include "hss/random.hpp"
#include "hss/substitution.hpp"

namespace hss::naive {

namespace {

constexpr std::size_t kApp = 0;
constexpr std::size_t kAbs = 1;
constexpr std::size_t kFlat = 2;

// Where leaves at the base of the current skeleton point: the free indices
// of Fin(n), or the env of the enclosing flat.
struct Scope {
  const Scope* parent = nullptr;
  std::vector<NTerm>* env = nullptr;
};

NTerm convert(const Term& t, const Scope& s);

std::size_t resolve(const Leaf& l, const Scope& s) {
  switch (l.kind()) {
    case Leaf::Kind::fresh: return 0;
    case Leaf::Kind::old: return 1 + resolve(l.inner(), s);
    case Leaf::Kind::index:
      if (s.env) throw ScopeError("free index inside a flattening skeleton");
      return l.index();
    case Leaf::Kind::boxed:
      if (!s.env) throw ScopeError("boxed leaf outside a flattening skeleton");
      s.env->push_back(convert(l.term(), *s.parent));
      return s.env->size() - 1;
  }
  throw ScopeError("bad leaf");
}

NTerm convert(const Term& t, const Scope& s) {
  if (t.is_var()) return nvar(resolve(t.leaf(), s));
  auto a = t.args();
  switch (t.arity()) {
    case kApp: return napp(convert(a[0], s), convert(a[1], s));
    case kAbs: return nlam(convert(a[0], s));
    case kFlat: {
      std::vector<NTerm> env;
      Scope inner{&s, &env};
      NTerm outer = convert(a[0], inner);
      return nflat(std::move(outer), std::move(env));
    }
  }
  throw ScopeError("arity outside the lambda calculus");
}

using Base = std::function<Leaf(std::size_t)>;

Term back(const NTerm& t, std::size_t depth, const Base& base) {
  switch (t.kind) {
    case NTerm::Kind::var:
      if (t.index < depth) return Term::var(Leaf::old_n(Leaf::fresh(), t.index));
      return Term::var(Leaf::old_n(base(t.index - depth), depth));
    case NTerm::Kind::lam: return Term::node(kAbs, {back(t.kids[0], depth + 1, base)});
    case NTerm::Kind::app:
      return Term::node(kApp, {back(t.kids[0], depth, base), back(t.kids[1], depth, base)});
    case NTerm::Kind::flat: {
      std::vector<Term> env;
      for (std::size_t k = 1; k < t.kids.size(); ++k) env.push_back(back(t.kids[k], depth, base));
      Base boxes = [&env](std::size_t k) {
        if (k >= env.size()) throw ScopeError("flat skeleton index past its env");
        return Leaf::boxed(env[k]);
      };
      return Term::node(kFlat, {back(t.kids[0], 0, boxes)});
    }
  }
  throw ScopeError("bad term");
}

NTerm with_env(const NTerm& t, const std::function<NTerm(const NTerm&)>& fn) {
  NTerm out = t;
  for (std::size_t k = 1; k < out.kids.size(); ++k) out.kids[k] = fn(t.kids[k]);
  return out;
}

NTerm subst_at(const NTerm& t, std::size_t e, const std::function<NTerm(std::size_t)>& free) {
  switch (t.kind) {
    case NTerm::Kind::var:
      if (t.index < e) return t;
      return shift(free(t.index - e), e);
    case NTerm::Kind::lam: return nlam(subst_at(t.kids[0], e + 1, free));
    case NTerm::Kind::app: return napp(subst_at(t.kids[0], e, free), subst_at(t.kids[1], e, free));
    case NTerm::Kind::flat:
      return with_env(t, [&](const NTerm& x) { return subst_at(x, e, free); });
  }
  return t;
}

}  // namespace

NTerm nvar(std::size_t i) { return {NTerm::Kind::var, i, {}}; }
NTerm nlam(NTerm body) { return {NTerm::Kind::lam, 0, {std::move(body)}}; }
NTerm napp(NTerm f, NTerm a) { return {NTerm::Kind::app, 0, {std::move(f), std::move(a)}}; }
NTerm nflat(NTerm outer, std::vector<NTerm> env) {
  NTerm t{NTerm::Kind::flat, 0, {std::move(outer)}};
  for (NTerm& e : env) t.kids.push_back(std::move(e));
  return t;
}

NTerm shift(const NTerm& t, std::size_t d, std::size_t cutoff) {
  switch (t.kind) {
    case NTerm::Kind::var: return nvar(t.index >= cutoff ? t.index + d : t.index);
    case NTerm::Kind::lam: return nlam(shift(t.kids[0], d, cutoff + 1));
    case NTerm::Kind::app: return napp(shift(t.kids[0], d, cutoff), shift(t.kids[1], d, cutoff));
    case NTerm::Kind::flat:
      return with_env(t, [&](const NTerm& x) { return shift(x, d, cutoff); });
  }
  return t;
}

NTerm substitute(const NTerm& t, const std::vector<NTerm>& sigma) {
  return subst_at(t, 0, [&sigma](std::size_t j) {
    if (j >= sigma.size()) throw ScopeError("index " + std::to_string(j) + " has no image");
    return sigma[j];
  });
}

NTerm substitute1(const NTerm& t, const NTerm& u) {
  return subst_at(t, 0, [&u](std::size_t j) { return j == 0 ? u : nvar(j - 1); });
}

NTerm flatten(const NTerm& t) {
  switch (t.kind) {
    case NTerm::Kind::var: return t;
    case NTerm::Kind::lam: return nlam(flatten(t.kids[0]));
    case NTerm::Kind::app: return napp(flatten(t.kids[0]), flatten(t.kids[1]));
    case NTerm::Kind::flat: {
      std::vector<NTerm> env;
      for (std::size_t k = 1; k < t.kids.size(); ++k) env.push_back(flatten(t.kids[k]));
      return substitute(flatten(t.kids[0]), env);
    }
  }
  return t;
}

NTerm from_term(const Term& t) { return convert(t, Scope{}); }

Term to_term(const NTerm& t, std::size_t n) {
  return back(t, 0, [n](std::size_t j) {
    if (j >= n) throw ScopeError("index " + std::to_string(j) + " out of scope");
    return Leaf::idx(j);
  });
}

Term to_term_ext(const NTerm& t, std::size_t n) {
  return back(t, 1, [n](std::size_t j) {
    if (j >= n) throw ScopeError("index " + std::to_string(j) + " out of scope");
    return Leaf::idx(j);
  });
}

}  // namespace hss::naive

namespace hss {

Term naive_flatten(const Term& t, std::size_t n) {
  return naive::to_term(naive::flatten(naive::from_term(t)), n);
}

Term naive_subst(const Term& t, std::size_t n, const std::vector<Term>& images, std::size_t m) {
  if (images.size() != n) throw ScopeError("need one image per index");
  std::vector<naive::NTerm> sigma;
  for (const Term& u : images) sigma.push_back(naive::from_term(u));
  return naive::to_term(naive::substitute(naive::from_term(t), sigma), m);
}

Term naive_subst1(const Term& t, const Term& u, std::size_t n) {
  return naive::to_term(naive::substitute1(naive::from_term(t), naive::from_term(u)), n);
}

LawReport check_oracle_equivalence(std::size_t samples, std::uint64_t seed, std::size_t budget) {
  const Signature lce = sigs::lce();
  LawReport report;
  report.suite = "oracle-equivalence";
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    try {
      std::size_t n = rng.below(4);
      Ctx c = Ctx::fin(n);
      Term t = random_term(lce, c, budget, rng);
      sample.expect(naive::to_term(naive::from_term(t), n) == t, "conversion", lce, c, t);
      sample.expect(eval_flatten(t, c) == naive_flatten(t, n), "flatten", lce, c, t);

      std::size_t m = rng.below(4);
      std::vector<Term> images;
      for (std::size_t i = 0; i < n; ++i)
        images.push_back(random_term(lce, Ctx::fin(m), budget / 3, rng));
      SubstRule rule = SubstRule::from_fin(lce, n, Ctx::fin(m), images);
      sample.expect(subst(lce, rule, t) == naive_subst(t, n, images, m), "subst", lce, c, t);

      Ctx ec = Ctx::ext(c);
      Term body = random_term(lce, ec, budget, rng);
      Term u = random_term(lce, c, budget / 3, rng);
      sample.expect(subst1(lce, body, u, c) == naive_subst1(body, u, n), "subst1", lce, ec, body);
    } catch (const Error& e) {
      sample.error("oracle", e.what());
    }
  }
  return report;
}

}  // namespace hss
