#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hss {

// One constructor: either binds k_i fresh variables in its i-th argument, or
// is the explicit flattening constructor T.T -> T.
struct Arity {
  enum class Kind { binding, flattening };

  Kind kind = Kind::binding;
  std::vector<std::size_t> binders;

  static Arity binding(std::vector<std::size_t> ks) { return {Kind::binding, std::move(ks)}; }
  static Arity flattening() { return {Kind::flattening, {}}; }

  bool is_flattening() const { return kind == Kind::flattening; }
  // Number of subterms a node of this arity carries.
  std::size_t arg_count() const { return is_flattening() ? 1 : binders.size(); }

  friend bool operator==(const Arity&, const Arity&) = default;
};

// Ordered arities; position i is arity id i.
struct Signature {
  std::vector<Arity> arities;

  std::size_t size() const { return arities.size(); }
  const Arity& operator[](std::size_t id) const { return arities.at(id); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature sum_sig(const Signature& s1, const Signature& s2);

namespace sigs {
// app, abs
Signature lc();
// app, abs, flat
Signature lce();
// app, app', abs
Signature dupapp();
}  // namespace sigs

// Accepts `lc`, `lce`, or `+`-joined `bind:k1,...,kp` / `flat` terms.
// Throws ConfigError on malformed input.
Signature parse_signature(std::string_view text);
std::string to_string(const Signature& sig);

// Arity ids the concrete syntax uses: the first Binding([0,0]) is application,
// the first Binding([1]) is abstraction, the first Flattening is flat{...}.
struct SyntaxRoles {
  std::optional<std::size_t> app;
  std::optional<std::size_t> abs;
  std::optional<std::size_t> flat;
};
SyntaxRoles syntax_roles(const Signature& sig);

}  // namespace hss
