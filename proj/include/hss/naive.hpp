#pragma once

// Reference lambda calculus with plain integer de Bruijn indices and
// textbook shifting. Shares no code with the bracket machinery; used as an
// oracle for eval_flatten and subst.

#include <cstdint>
#include <vector>

#include "hss/report.hpp"
#include "hss/syntax.hpp"

namespace hss::naive {

struct NTerm {
  enum class Kind { var, lam, app, flat };
  Kind kind = Kind::var;
  std::size_t index = 0;
  // lam: body. app: function, argument. flat: outer skeleton, then env
  // entries; inside the skeleton an index j >= depth d names entry j - d.
  std::vector<NTerm> kids;

  friend bool operator==(const NTerm&, const NTerm&) = default;
};

NTerm nvar(std::size_t i);
NTerm nlam(NTerm body);
NTerm napp(NTerm f, NTerm a);
NTerm nflat(NTerm outer, std::vector<NTerm> env);

// Indices >= cutoff move up by d.
NTerm shift(const NTerm& t, std::size_t d, std::size_t cutoff = 0);
// Index j >= depth e becomes shift(sigma[j - e], e).
NTerm substitute(const NTerm& t, const std::vector<NTerm>& sigma);
// Index 0 becomes u; the others move down by one.
NTerm substitute1(const NTerm& t, const NTerm& u);
NTerm flatten(const NTerm& t);

// LCE term over Fin(n), or over Ext(Fin(n)) for the `ext` variant.
NTerm from_term(const Term& t);
Term to_term(const NTerm& t, std::size_t n);
Term to_term_ext(const NTerm& t, std::size_t n);

}  // namespace hss::naive

namespace hss {

Term naive_flatten(const Term& t, std::size_t n);
// t over Fin(n), images over Fin(m).
Term naive_subst(const Term& t, std::size_t n, const std::vector<Term>& images, std::size_t m);
// t over Ext(Fin(n)), u over Fin(n).
Term naive_subst1(const Term& t, const Term& u, std::size_t n);

// eval_flatten against naive_flatten, subst and subst1 against their naive
// counterparts, over Fin(0..3) with the given budget.
LawReport check_oracle_equivalence(std::size_t samples, std::uint64_t seed,
                                   std::size_t budget = 25);

}  // namespace hss
