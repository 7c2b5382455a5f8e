#pragma once

// Seeded random generation of contexts, leaves and scope-valid terms.

#include <cstdint>
#include <limits>
#include <random>

#include "hss/context.hpp"
#include "hss/signature.hpp"
#include "hss/syntax.hpp"

namespace hss {

// Deterministic for a fixed seed on every platform: only the raw engine
// output is used, never std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kNoTerm = std::numeric_limits<std::size_t>::max();

struct GenOptions {
  // Flattening nodes nested along one path, counting boxed contents.
  std::size_t max_flat_depth = 2;
};

// Size of the smallest term over c, or kNoTerm when c is uninhabited.
std::size_t min_size(const Signature& sig, const Ctx& c);
bool inhabited(const Signature& sig, const Ctx& c);
bool has_leaf(const Signature& sig, const Ctx& c);
// Throws GenerationError when c is uninhabited.
Term minimal_term(const Signature& sig, const Ctx& c);

// Scope-valid over c with size <= budget + 1 whenever such a term exists;
// otherwise the minimal term. Throws GenerationError if c is uninhabited.
Term random_term(const Signature& sig, const Ctx& c, std::size_t budget, std::uint64_t seed);
Term random_term(const Signature& sig, const Ctx& c, std::size_t budget, Rng& rng,
                 const GenOptions& opts = {});

// A well-formed leaf of c whose boxed contents weigh at most `budget` when
// possible. Throws GenerationError if c has no leaf.
Leaf random_leaf(const Signature& sig, const Ctx& c, std::size_t budget, Rng& rng,
                 const GenOptions& opts = {});

// A node of the given arity over c.
Term random_node(const Signature& sig, std::size_t arity, const Ctx& c, std::size_t budget,
                 Rng& rng, const GenOptions& opts = {});

// Fin(n) with n <= max_n, inhabited for sig.
Ctx random_fin_ctx(const Signature& sig, Rng& rng, std::size_t max_n = 3);
// Mostly Fin contexts, with some Ext(Fin) and TmOver(Fin); always inhabited.
Ctx random_ctx(const Signature& sig, Rng& rng);
// Fin(n) -> Fin(m), arbitrary table; m > 0 whenever n > 0.
LeafMap random_renaming(std::size_t n, std::size_t m, Rng& rng);

}  // namespace hss
