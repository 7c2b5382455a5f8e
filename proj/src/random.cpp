#include "hss/random.hpp"

#include <algorithm>

#include "hss/errors.hpp"
#include "hss/term.hpp"

namespace hss {

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
  return (a == kNoTerm || b == kNoTerm || a > kNoTerm - b) ? kNoTerm : a + b;
}

// Cost of the cheapest node of a binding arity whose binder-free arguments
// cost `plain` each.
std::size_t binding_cost(const Arity& a, std::size_t plain) {
  std::size_t cost = 1;
  for (std::size_t k : a.binders) cost = sat_add(cost, k > 0 ? 1 : plain);
  return cost;
}

// Smallest term with no free leaves. Only arities whose every argument binds
// something (or nullary ones) can realize it, so the fixed point settles
// after a couple of rounds.
std::size_t closed_min(const Signature& sig) {
  std::size_t m = kNoTerm;
  while (true) {
    std::size_t best = m;
    for (const Arity& a : sig.arities)
      if (!a.is_flattening()) best = std::min(best, binding_cost(a, m));
    if (best >= m) return m;
    m = best;
  }
}

Term closed_minimal(const Signature& sig) {
  std::size_t m = closed_min(sig);
  if (m == kNoTerm) throw GenerationError("signature has no closed terms");
  for (std::size_t id = 0; id < sig.size(); ++id) {
    const Arity& a = sig[id];
    if (a.is_flattening() || binding_cost(a, kNoTerm) != m) continue;
    std::vector<Term> args(a.binders.size(), Term::var(Leaf::fresh()));
    return Term::node(id, std::move(args));
  }
  throw GenerationError("no minimal closed construction");
}

bool leaf_fits(const Signature& sig, const Ctx& c, std::size_t budget) {
  switch (c.kind()) {
    case Ctx::Kind::fin: return c.count() > 0;
    case Ctx::Kind::ext: return true;
    case Ctx::Kind::tm_over: return min_size(sig, c.inner()) <= budget;
  }
  return false;
}

struct Generator {
  const Signature& sig;
  Rng& rng;
  const GenOptions& opts;

  bool arity_fits(std::size_t id, const Ctx& c, std::size_t budget, std::size_t depth) const {
    const Arity& a = sig[id];
    if (a.is_flattening()) {
      if (depth >= opts.max_flat_depth) return false;
      return sat_add(1, min_size(sig, Ctx::tm_over(c))) <= budget + 1;
    }
    std::size_t cost = 1;
    for (std::size_t k : a.binders) cost = sat_add(cost, min_size(sig, Ctx::ext_n(c, k)));
    return cost <= budget + 1;
  }

  Term term(const Ctx& c, std::size_t budget, std::size_t depth) {
    std::size_t m = min_size(sig, c);
    if (m == kNoTerm) throw GenerationError("context " + debug_string(c) + " has no terms");
    if (budget + 1 < m) return minimal_term(sig, c);

    std::vector<std::size_t> choices;
    // Leaves mostly wait until the budget is spent, so sizes track the budget.
    if (leaf_fits(sig, c, budget) && (budget < 4 || rng.chance(1, 8)))
      choices.insert(choices.end(), budget < 4 ? 2 : 1, sig.size());
    for (std::size_t id = 0; id < sig.size(); ++id)
      if (arity_fits(id, c, budget, depth)) choices.push_back(id);
    if (choices.empty()) return minimal_term(sig, c);

    std::size_t pick = choices[rng.below(choices.size())];
    if (pick == sig.size()) return Term::var(leaf(c, budget, depth));
    return node(pick, c, budget, depth);
  }

  Leaf leaf(const Ctx& c, std::size_t budget, std::size_t depth) {
    switch (c.kind()) {
      case Ctx::Kind::fin:
        if (c.count() == 0) throw GenerationError("Fin(0) has no leaves");
        return Leaf::idx(rng.below(c.count()));
      case Ctx::Kind::ext:
        if (leaf_fits(sig, c.inner(), budget) && rng.chance(1, 2))
          return Leaf::old(leaf(c.inner(), budget, depth));
        return Leaf::fresh();
      case Ctx::Kind::tm_over: {
        std::size_t ms = min_size(sig, c.inner());
        if (ms == kNoTerm) throw GenerationError("no terms to box over " + debug_string(c.inner()));
        if (ms > budget) return Leaf::boxed(minimal_term(sig, c.inner()));
        return Leaf::boxed(term(c.inner(), rng.between(std::max(ms, budget / 2) - 1, budget - 1), depth));
      }
    }
    throw GenerationError("unknown context");
  }

  Term node(std::size_t id, const Ctx& c, std::size_t budget, std::size_t depth) {
    const Arity& a = sig[id];
    if (a.is_flattening()) {
      Ctx over = Ctx::tm_over(c);
      std::size_t floor = min_size(sig, over);
      if (floor == kNoTerm) throw GenerationError("flattening payload uninhabited");
      return Term::node(id, {term(over, std::max(floor, budget) - 1, depth + 1)});
    }
    std::size_t p = a.binders.size();
    std::vector<std::size_t> floors(p);
    std::size_t used = 0;
    for (std::size_t i = 0; i < p; ++i) {
      floors[i] = min_size(sig, Ctx::ext_n(c, a.binders[i]));
      if (floors[i] == kNoTerm) throw GenerationError("argument context uninhabited");
      used = sat_add(used, floors[i]);
    }
    std::size_t spare = budget > used ? budget - used : 0;
    std::vector<std::size_t> shares(p, 0);
    if (p > 0) {
      for (std::size_t u = 0; u < spare; ++u) ++shares[rng.below(p)];
    }
    std::vector<Term> args;
    args.reserve(p);
    for (std::size_t i = 0; i < p; ++i)
      args.push_back(term(Ctx::ext_n(c, a.binders[i]), floors[i] - 1 + shares[i], depth));
    return Term::node(id, std::move(args));
  }
};

}  // namespace

std::size_t min_size(const Signature& sig, const Ctx& c) {
  switch (c.kind()) {
    case Ctx::Kind::fin: return c.count() > 0 ? 1 : closed_min(sig);
    case Ctx::Kind::ext: return 1;
    case Ctx::Kind::tm_over:
      return std::min(sat_add(1, min_size(sig, c.inner())), closed_min(sig));
  }
  return kNoTerm;
}

bool inhabited(const Signature& sig, const Ctx& c) { return min_size(sig, c) != kNoTerm; }

bool has_leaf(const Signature& sig, const Ctx& c) { return leaf_fits(sig, c, kNoTerm - 1); }

Term minimal_term(const Signature& sig, const Ctx& c) {
  switch (c.kind()) {
    case Ctx::Kind::fin:
      if (c.count() > 0) return Term::var(Leaf::idx(0));
      return closed_minimal(sig);
    case Ctx::Kind::ext: return Term::var(Leaf::fresh());
    case Ctx::Kind::tm_over: {
      std::size_t boxed = sat_add(1, min_size(sig, c.inner()));
      if (boxed != kNoTerm && boxed <= closed_min(sig))
        return Term::var(Leaf::boxed(minimal_term(sig, c.inner())));
      return closed_minimal(sig);
    }
  }
  throw GenerationError("unknown context");
}

Term random_term(const Signature& sig, const Ctx& c, std::size_t budget, std::uint64_t seed) {
  Rng rng(seed);
  return random_term(sig, c, budget, rng);
}

Term random_term(const Signature& sig, const Ctx& c, std::size_t budget, Rng& rng,
                 const GenOptions& opts) {
  Generator gen{sig, rng, opts};
  return gen.term(c, rng.between(budget / 2, budget), 0);
}

Leaf random_leaf(const Signature& sig, const Ctx& c, std::size_t budget, Rng& rng,
                 const GenOptions& opts) {
  if (!has_leaf(sig, c)) throw GenerationError(debug_string(c) + " has no leaves");
  Generator gen{sig, rng, opts};
  return gen.leaf(c, budget, 0);
}

Term random_node(const Signature& sig, std::size_t arity, const Ctx& c, std::size_t budget,
                 Rng& rng, const GenOptions& opts) {
  Generator gen{sig, rng, opts};
  return gen.node(arity, c, budget, 0);
}

Ctx random_fin_ctx(const Signature& sig, Rng& rng, std::size_t max_n) {
  while (true) {
    Ctx c = Ctx::fin(rng.between(0, max_n));
    if (inhabited(sig, c)) return c;
  }
}

Ctx random_ctx(const Signature& sig, Rng& rng) {
  std::size_t r = rng.below(10);
  if (r < 6) return random_fin_ctx(sig, rng);
  if (r < 8) return Ctx::ext(Ctx::fin(rng.between(0, 2)));
  return Ctx::tm_over(random_fin_ctx(sig, rng, 2));
}

LeafMap random_renaming(std::size_t n, std::size_t m, Rng& rng) {
  if (n > 0 && m == 0) throw GenerationError("no renaming from a nonempty scope into Fin(0)");
  std::vector<Leaf> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Leaf::idx(rng.below(m)));
  return tabulated_map(n, Ctx::fin(m), std::move(images));
}

}  // namespace hss
