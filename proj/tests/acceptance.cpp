// One line per acceptance criterion; exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hss/lambda.hpp"
#include "hss/laws.hpp"
#include "hss/naive.hpp"
#include "hss/syntax_io.hpp"

using namespace hss;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
  void zero(const LawReport& r) {
    need(r.ok(), summary_line(r));
  }
};

Verdict monad_laws() {
  Verdict v;
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()}) {
    LawReport r = check_monad_laws(sig, 1000, kSeed);
    v.zero(r);
    v.need(r.samples >= 1000, "too few samples");
  }
  return v;
}

Verdict bracket_laws() {
  Verdict v;
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()})
    for (const ShippedMorphism& s : shipped_morphisms(sig)) v.zero(check_bracket_laws(sig, s, 1000, kSeed));
  return v;
}

Verdict theta_laws() {
  Verdict v;
  std::vector<LawReport> rs = check_theta_laws(sigs::lce(), 500, kSeed);
  v.need(rs.size() == sigs::lce().size(), "one report per arity");
  for (const LawReport& r : rs) v.zero(r);
  return v;
}

Verdict oracle() {
  Verdict v;
  LawReport r = check_oracle_equivalence(1000, kSeed, 25);
  v.zero(r);
  for (const char* check : {"flatten", "subst", "subst1", "conversion"})
    v.need(r.failures_of(check) == 0, check);
  return v;
}

Verdict initiality() {
  Verdict v;
  for (const LawReport& r : check_init_compat(1000, kSeed)) v.zero(r);
  v.zero(is_hss_morphism(initial_system(sigs::lce()), extended_system(), eval_morphism(), 1000,
                         kSeed));
  v.zero(is_monad_morphism(initial_system(sigs::lce()), extended_system(), eval_morphism(), 1000,
                           kSeed));
  return v;
}

Verdict fusion() {
  Verdict v;
  FusionReport refl = check_fusion_instance(fusion_reflexive(), 500, kSeed);
  v.zero(refl.premise);
  v.zero(refl.conclusion);
  for (const ShippedMorphism& s : shipped_morphisms(sigs::lce())) {
    FusionReport r = check_fusion_instance(fusion_eval(s.f), 500, kSeed);
    v.zero(r.premise);
    v.zero(r.conclusion);
  }
  FusionReport broken = check_fusion_instance(fusion_broken(), 500, kSeed);
  v.need(broken.premise.failures > 0, "broken phi passed its premise");
  return v;
}

Verdict nonfullness() {
  Verdict v;
  NonfullnessWitness w = nonfullness_witness(500, kSeed);
  v.zero(w.monad);
  v.need(w.monad.samples >= 500, "too few samples");
  v.need(w.hss.failures_of("tau") > 0, "tau square never failed");
  v.need(!(w.tau_lhs == w.tau_rhs), "stored counterexample does not separate");
  return v;
}

Verdict map_and_roundtrip() {
  Verdict v;
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()}) {
    v.zero(check_map_laws(sig, 1000, kSeed));
    v.zero(check_roundtrip(sig, 1000, kSeed));
  }
  return v;
}

Verdict cross_implementation() {
  Verdict v;
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp()})
    for (const LawReport& r : check_gfold_bracket(sig, 1000, kSeed)) v.zero(r);
  LawReport e = check_eval_properties(1000, kSeed);
  v.zero(e);
  v.need(e.failures_of("gfold-agreement") == 0, "eval via gfold disagrees");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"monad laws on lc, lce, dupapp", monad_laws},
      {"bracket laws for identity, eta, const-closed", bracket_laws},
      {"strength laws per arity of lce", theta_laws},
      {"flattening and substitution match the naive oracle", oracle},
      {"eval is an hss and monad morphism (initiality)", initiality},
      {"fusion law instances", fusion},
      {"swap is a monad morphism but not an hss morphism", nonfullness},
      {"map laws and parser round-trip", map_and_roundtrip},
      {"gfold agrees with direct recursion", cross_implementation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v = criteria[i].second();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs)%s%s\n", v.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first, secs, v.ok ? "" : " -- ", v.note.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
