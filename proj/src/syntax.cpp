#include "hss/syntax.hpp"

#include <cassert>
#include <optional>
#include <ostream>
#include <sstream>

namespace hss {

struct Ctx::Rep {
  Kind kind;
  std::size_t count = 0;
  std::optional<Ctx> inner;
};

Ctx Ctx::fin(std::size_t n) {
  return Ctx(std::make_shared<const Rep>(Rep{Kind::fin, n, std::nullopt}));
}

Ctx Ctx::ext(Ctx inner) {
  return Ctx(std::make_shared<const Rep>(Rep{Kind::ext, 0, std::move(inner)}));
}

Ctx Ctx::tm_over(Ctx inner) {
  return Ctx(std::make_shared<const Rep>(Rep{Kind::tm_over, 0, std::move(inner)}));
}

Ctx Ctx::ext_n(Ctx inner, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) inner = ext(std::move(inner));
  return inner;
}

Ctx::Kind Ctx::kind() const { return rep_->kind; }
std::size_t Ctx::count() const { return rep_->count; }

const Ctx& Ctx::inner() const {
  assert(rep_->inner);
  return *rep_->inner;
}

bool operator==(const Ctx& a, const Ctx& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Ctx::Kind::fin) return a.count() == b.count();
  return a.inner() == b.inner();
}

struct Leaf::Rep {
  Kind kind;
  std::size_t index = 0;
  std::optional<Leaf> inner;
  std::optional<Term> term;
};

Leaf Leaf::idx(std::size_t i) {
  return Leaf(std::make_shared<const Rep>(Rep{Kind::index, i, std::nullopt, std::nullopt}));
}

Leaf Leaf::fresh() {
  static const Leaf shared(
      std::make_shared<const Rep>(Rep{Kind::fresh, 0, std::nullopt, std::nullopt}));
  return shared;
}

Leaf Leaf::old(Leaf l) {
  return Leaf(std::make_shared<const Rep>(Rep{Kind::old, 0, std::move(l), std::nullopt}));
}

Leaf Leaf::boxed(Term t) {
  return Leaf(std::make_shared<const Rep>(Rep{Kind::boxed, 0, std::nullopt, std::move(t)}));
}

Leaf Leaf::old_n(Leaf l, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) l = old(std::move(l));
  return l;
}

Leaf::Kind Leaf::kind() const { return rep_->kind; }
std::size_t Leaf::index() const { return rep_->index; }

const Leaf& Leaf::inner() const {
  assert(rep_->inner);
  return *rep_->inner;
}

const Term& Leaf::term() const {
  assert(rep_->term);
  return *rep_->term;
}

bool operator==(const Leaf& a, const Leaf& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Leaf::Kind::index: return a.index() == b.index();
    case Leaf::Kind::fresh: return true;
    case Leaf::Kind::old: return a.inner() == b.inner();
    case Leaf::Kind::boxed: return a.term() == b.term();
  }
  return false;
}

struct Term::Rep {
  std::optional<Leaf> leaf;
  std::size_t arity = 0;
  std::vector<Term> args;
};

Term Term::var(Leaf l) { return Term(std::make_shared<const Rep>(Rep{std::move(l), 0, {}})); }

Term Term::node(std::size_t arity, std::vector<Term> args) {
  return Term(std::make_shared<const Rep>(Rep{std::nullopt, arity, std::move(args)}));
}

bool Term::is_var() const { return rep_->leaf.has_value(); }

const Leaf& Term::leaf() const {
  assert(rep_->leaf);
  return *rep_->leaf;
}

std::size_t Term::arity() const { return rep_->arity; }
std::span<const Term> Term::args() const { return rep_->args; }

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.leaf() == b.leaf();
  if (a.arity() != b.arity() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

bool term_eq(const Term& a, const Term& b) { return a == b; }

std::size_t leaf_weight(const Leaf& l) {
  switch (l.kind()) {
    case Leaf::Kind::old: return leaf_weight(l.inner());
    case Leaf::Kind::boxed: return size(l.term());
    default: return 0;
  }
}

std::size_t size(const Term& t) {
  if (t.is_var()) return 1 + leaf_weight(t.leaf());
  std::size_t n = 1;
  for (const Term& a : t.args()) n += size(a);
  return n;
}

std::size_t tm_depth(const Ctx& c) {
  switch (c.kind()) {
    case Ctx::Kind::fin: return 0;
    case Ctx::Kind::ext: return tm_depth(c.inner());
    case Ctx::Kind::tm_over: return 1 + tm_depth(c.inner());
  }
  return 0;
}

namespace {

void dump(std::ostream& os, const Term& t);

void dump(std::ostream& os, const Ctx& c) {
  switch (c.kind()) {
    case Ctx::Kind::fin: os << "Fin(" << c.count() << ")"; break;
    case Ctx::Kind::ext: os << "Ext("; dump(os, c.inner()); os << ")"; break;
    case Ctx::Kind::tm_over: os << "TmOver("; dump(os, c.inner()); os << ")"; break;
  }
}

void dump(std::ostream& os, const Leaf& l) {
  switch (l.kind()) {
    case Leaf::Kind::index: os << l.index(); break;
    case Leaf::Kind::fresh: os << "New"; break;
    case Leaf::Kind::old: os << "Old("; dump(os, l.inner()); os << ")"; break;
    case Leaf::Kind::boxed: os << "Box("; dump(os, l.term()); os << ")"; break;
  }
}

void dump(std::ostream& os, const Term& t) {
  if (t.is_var()) {
    os << "Var(";
    dump(os, t.leaf());
    os << ")";
    return;
  }
  os << "Node" << t.arity() << "(";
  bool first = true;
  for (const Term& a : t.args()) {
    if (!first) os << ", ";
    first = false;
    dump(os, a);
  }
  os << ")";
}

template <class T>
std::string to_debug(const T& v) {
  std::ostringstream os;
  dump(os, v);
  return os.str();
}

}  // namespace

std::string debug_string(const Ctx& c) { return to_debug(c); }
std::string debug_string(const Leaf& l) { return to_debug(l); }
std::string debug_string(const Term& t) { return to_debug(t); }

std::ostream& operator<<(std::ostream& os, const Ctx& c) { return os << debug_string(c); }
std::ostream& operator<<(std::ostream& os, const Leaf& l) { return os << debug_string(l); }
std::ostream& operator<<(std::ostream& os, const Term& t) { return os << debug_string(t); }

}  // namespace hss
