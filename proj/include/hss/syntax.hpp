#pragma once

// Contexts, leaves and terms. All three are immutable values with shared
// structure; copies are cheap and equality is structural.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hss {

class Term;

// Leaf domain descriptor: a finite block of de Bruijn indices, the extension
// of a context by one fresh variable, or the terms over a context.
class Ctx {
 public:
  enum class Kind : std::uint8_t { fin, ext, tm_over };

  static Ctx fin(std::size_t n);
  static Ctx ext(Ctx inner);
  static Ctx tm_over(Ctx inner);
  // Ext applied k times.
  static Ctx ext_n(Ctx inner, std::size_t k);

  Kind kind() const;
  // Only meaningful for fin.
  std::size_t count() const;
  // Only meaningful for ext and tm_over.
  const Ctx& inner() const;

  friend bool operator==(const Ctx& a, const Ctx& b);

 private:
  struct Rep;
  explicit Ctx(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

class Leaf {
 public:
  enum class Kind : std::uint8_t { index, fresh, old, boxed };

  static Leaf idx(std::size_t i);
  static Leaf fresh();
  static Leaf old(Leaf l);
  static Leaf boxed(Term t);
  // old applied k times.
  static Leaf old_n(Leaf l, std::size_t k);

  Kind kind() const;
  std::size_t index() const;
  const Leaf& inner() const;
  const Term& term() const;

  friend bool operator==(const Leaf& a, const Leaf& b);

 private:
  struct Rep;
  explicit Leaf(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Var(leaf) or Node(arity id, arguments). The meaning of the arguments is
// fixed by the ambient signature: for a binding arity argument i lives over
// Ext^{k_i}(c); for the flattening arity the single argument lives over
// TmOver(c).
class Term {
 public:
  static Term var(Leaf l);
  static Term node(std::size_t arity, std::vector<Term> args);

  bool is_var() const;
  const Leaf& leaf() const;
  std::size_t arity() const;
  std::span<const Term> args() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

bool term_eq(const Term& a, const Term& b);

// Node count. Var leaves count one; contents of boxed leaves are included.
std::size_t size(const Term& t);
// Size contributed by the boxed contents reachable through a leaf.
std::size_t leaf_weight(const Leaf& l);

// Number of tm_over layers in a context.
std::size_t tm_depth(const Ctx& c);

// Structural dump, e.g. `Node1(Var(New))`; used in diagnostics.
std::string debug_string(const Ctx& c);
std::string debug_string(const Leaf& l);
std::string debug_string(const Term& t);

std::ostream& operator<<(std::ostream& os, const Ctx& c);
std::ostream& operator<<(std::ostream& os, const Leaf& l);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace hss
