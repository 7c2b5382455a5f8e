#include "hss/syntax_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "hss/errors.hpp"
#include "hss/random.hpp"
#include "hss/term.hpp"

namespace hss {

namespace {

// ---- lexing ----

enum class Tok { nat, lam, dot, lparen, rparen, lbrace, rbrace, bar, comma, hash, flat, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::size_t value = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t d = static_cast<std::size_t>(s[i] - '0');
        if (v > (SIZE_MAX - d) / 10) throw ParseError(start, "numeral too large");
        v = v * 10 + d;
        ++i;
      }
      out.push_back({Tok::nat, start, v});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      std::string_view word = s.substr(start, i - start);
      if (word == "lam")
        out.push_back({Tok::lam, start});
      else if (word == "flat")
        out.push_back({Tok::flat, start});
      else
        throw ParseError(start, "unexpected word '" + std::string(word) + "'");
      continue;
    }
    Tok k;
    switch (ch) {
      case '\\': k = Tok::lam; break;
      case '.': k = Tok::dot; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '{': k = Tok::lbrace; break;
      case '}': k = Tok::rbrace; break;
      case '|': k = Tok::bar; break;
      case ',': k = Tok::comma; break;
      case '#': k = Tok::hash; break;
      default: throw ParseError(start, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({k, start});
    ++i;
  }
  out.push_back({Tok::end, s.size()});
  return out;
}

// ---- raw syntax ----

struct Syn {
  enum class Kind { nat, app, abs, flat, generic } kind;
  std::size_t pos;
  std::size_t value = 0;  // numeral, or arity id for generic
  bool braces = false;    // generic written with { | }
  // app: function then arguments. abs: body. flat and braced generic:
  // skeleton then env.
  std::vector<Syn> kids;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Syn parse() {
    Syn t = term();
    if (peek().kind != Tok::end) throw ParseError(peek().pos, "trailing input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(peek().pos, std::string("expected ") + what);
    return take();
  }
  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::nat || k == Tok::lparen || k == Tok::flat || k == Tok::hash;
  }

  Syn term() {
    if (peek().kind == Tok::lam) {
      Token l = take();
      expect(Tok::dot, "'.' after lambda");
      return {Syn::Kind::abs, l.pos, 0, false, {term()}};
    }
    std::size_t pos = peek().pos;
    Syn head = atom();
    if (!starts_atom()) return head;
    Syn app{Syn::Kind::app, pos, 0, false, {std::move(head)}};
    while (starts_atom()) app.kids.push_back(atom());
    return app;
  }

  // skeleton "|" [ env ] "}", after the opening brace.
  void env_body(Syn& into) {
    into.kids.push_back(term());
    expect(Tok::bar, "'|'");
    if (peek().kind != Tok::rbrace) {
      into.kids.push_back(term());
      while (peek().kind == Tok::comma) {
        take();
        into.kids.push_back(term());
      }
    }
    expect(Tok::rbrace, "'}'");
  }

  Syn atom() {
    Token t = peek();
    switch (t.kind) {
      case Tok::nat: take(); return {Syn::Kind::nat, t.pos, t.value, false, {}};
      case Tok::lparen: {
        take();
        Syn inner = term();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::flat: {
        take();
        expect(Tok::lbrace, "'{' after flat");
        Syn f{Syn::Kind::flat, t.pos, 0, true, {}};
        env_body(f);
        return f;
      }
      case Tok::hash: {
        take();
        Token id = expect(Tok::nat, "arity number after '#'");
        Syn g{Syn::Kind::generic, t.pos, id.value, false, {}};
        if (peek().kind == Tok::lbrace) {
          take();
          g.braces = true;
          env_body(g);
          return g;
        }
        expect(Tok::lparen, "'(' or '{' after arity number");
        if (peek().kind != Tok::rparen) {
          g.kids.push_back(term());
          while (peek().kind == Tok::comma) {
            take();
            g.kids.push_back(term());
          }
        }
        expect(Tok::rparen, "')'");
        return g;
      }
      default: throw ParseError(t.pos, "expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---- elaboration ----

struct Scope {
  enum class Kind { base, binder, env } kind;
  const Scope* parent = nullptr;
  std::size_t n = 0;
  const std::vector<Term>* entries = nullptr;
};

Leaf resolve(std::size_t i, const Scope& s, std::size_t pos) {
  switch (s.kind) {
    case Scope::Kind::binder:
      if (i == 0) return Leaf::fresh();
      return Leaf::old(resolve(i - 1, *s.parent, pos));
    case Scope::Kind::base:
      if (i >= s.n)
        throw ScopeError("index out of scope at " + std::to_string(pos) + " (scope " +
                         std::to_string(s.n) + ")");
      return Leaf::idx(i);
    case Scope::Kind::env:
      if (i >= s.entries->size())
        throw ScopeError("flat skeleton index past its env at " + std::to_string(pos));
      return Leaf::boxed((*s.entries)[i]);
  }
  throw ScopeError("bad scope");
}

class Elaborator {
 public:
  explicit Elaborator(const Signature& sig) : sig_(sig), roles_(syntax_roles(sig)) {}

  Term run(const Syn& s, const Scope& sc) const {
    switch (s.kind) {
      case Syn::Kind::nat: return Term::var(resolve(s.value, sc, s.pos));
      case Syn::Kind::app: {
        if (!roles_.app) throw ParseError(s.pos, "signature has no application");
        Term acc = run(s.kids[0], sc);
        for (std::size_t i = 1; i < s.kids.size(); ++i)
          acc = Term::node(*roles_.app, {std::move(acc), run(s.kids[i], sc)});
        return acc;
      }
      case Syn::Kind::abs: {
        if (!roles_.abs) throw ParseError(s.pos, "signature has no abstraction");
        Scope b{Scope::Kind::binder, &sc};
        return Term::node(*roles_.abs, {run(s.kids[0], b)});
      }
      case Syn::Kind::flat:
        if (!roles_.flat) throw ParseError(s.pos, "signature has no flattening");
        return flat(*roles_.flat, s, sc);
      case Syn::Kind::generic: {
        if (s.value >= sig_.size())
          throw ParseError(s.pos, "no arity #" + std::to_string(s.value));
        const Arity& a = sig_[s.value];
        if (a.is_flattening() != s.braces)
          throw ParseError(s.pos, "arity #" + std::to_string(s.value) +
                                      (a.is_flattening() ? " is flattening" : " is binding"));
        if (a.is_flattening()) return flat(s.value, s, sc);
        if (s.kids.size() != a.binders.size())
          throw ParseError(s.pos, "arity #" + std::to_string(s.value) + " takes " +
                                      std::to_string(a.binders.size()) + " arguments");
        std::vector<Term> args;
        for (std::size_t i = 0; i < s.kids.size(); ++i) args.push_back(under(a.binders[i], s.kids[i], sc));
        return Term::node(s.value, std::move(args));
      }
    }
    throw ParseError(s.pos, "bad syntax");
  }

 private:
  Term under(std::size_t k, const Syn& s, const Scope& sc) const {
    if (k == 0) return run(s, sc);
    Scope b{Scope::Kind::binder, &sc};
    return under(k - 1, s, b);
  }

  Term flat(std::size_t id, const Syn& s, const Scope& sc) const {
    std::vector<Term> entries;
    for (std::size_t i = 1; i < s.kids.size(); ++i) entries.push_back(run(s.kids[i], sc));
    Scope e{Scope::Kind::env, &sc, 0, &entries};
    return Term::node(id, {run(s.kids[0], e)});
  }

  const Signature& sig_;
  SyntaxRoles roles_;
};

// ---- printing ----

void add_unique(std::vector<Term>& out, const Term& w) {
  if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
}

const Leaf& base_of(const Leaf& l, std::size_t& olds) {
  const Leaf* p = &l;
  olds = 0;
  while (p->kind() == Leaf::Kind::old) {
    p = &p->inner();
    ++olds;
  }
  return *p;
}

// Boxes of this skeleton layer in printed order.
void collect(const Signature& sig, const Term& t, std::vector<Term>& out) {
  if (t.is_var()) {
    std::size_t olds;
    const Leaf& b = base_of(t.leaf(), olds);
    if (b.kind() == Leaf::Kind::boxed) add_unique(out, b.term());
    return;
  }
  if (sig[t.arity()].is_flattening()) {
    std::vector<Term> nested;
    collect(sig, t.args()[0], nested);
    for (const Term& w : nested) collect(sig, w, out);
    return;
  }
  for (const Term& a : t.args()) collect(sig, a, out);
}

struct Layer {
  const std::vector<Term>* env = nullptr;
  const Layer* parent = nullptr;
};

class Printer {
 public:
  explicit Printer(const Signature& sig) : sig_(sig), roles_(syntax_roles(sig)) {}

  std::string term(const Term& t, const Layer& layer) const {
    if (t.is_var()) return leaf(t.leaf(), layer);
    std::size_t id = t.arity();
    const Arity& a = sig_[id];
    auto args = t.args();
    if (roles_.app && id == *roles_.app)
      return "(" + atom(args[0], layer) + " " + atom(args[1], layer) + ")";
    if (roles_.abs && id == *roles_.abs) return "\\." + term(args[0], layer);
    if (a.is_flattening()) {
      std::string head = roles_.flat && id == *roles_.flat ? "flat" : "#" + std::to_string(id);
      return head + flat_body(args[0], layer);
    }
    std::string s = "#" + std::to_string(id) + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) s += ", ";
      s += term(args[i], layer);
    }
    return s + ")";
  }

 private:
  bool is_abs(const Term& t) const { return !t.is_var() && roles_.abs && t.arity() == *roles_.abs; }

  std::string atom(const Term& t, const Layer& layer) const {
    return is_abs(t) ? "(" + term(t, layer) + ")" : term(t, layer);
  }

  std::string flat_body(const Term& skeleton, const Layer& layer) const {
    std::vector<Term> env;
    collect(sig_, skeleton, env);
    Layer inner{&env, &layer};
    std::string s = "{ " + term(skeleton, inner) + " |";
    for (std::size_t i = 0; i < env.size(); ++i) s += (i > 0 ? ", " : " ") + term(env[i], layer);
    return s + " }";
  }

  std::string leaf(const Leaf& l, const Layer& layer) const {
    std::size_t olds;
    const Leaf& b = base_of(l, olds);
    switch (b.kind()) {
      case Leaf::Kind::fresh: return std::to_string(olds);
      case Leaf::Kind::index: return std::to_string(olds + b.index());
      case Leaf::Kind::old: break;
      case Leaf::Kind::boxed: {
        if (!layer.env) return "[" + term(b.term(), layer) + "]";
        auto it = std::find(layer.env->begin(), layer.env->end(), b.term());
        return std::to_string(olds + static_cast<std::size_t>(it - layer.env->begin()));
      }
    }
    return "?";
  }

  const Signature& sig_;
  SyntaxRoles roles_;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig, std::size_t scope) {
  Syn syn = Parser(lex(text)).parse();
  Scope base{Scope::Kind::base, nullptr, scope};
  return Elaborator(sig).run(syn, base);
}

std::string print_term(const Term& t, const Signature& sig) {
  return Printer(sig).term(t, Layer{});
}

std::string print_term(const Term& t, const Signature& sig, const Ctx& ctx) {
  require_valid(sig, ctx, t, "print_term");
  return print_term(t, sig);
}

LawReport check_roundtrip(const Signature& sig, std::size_t samples, std::uint64_t seed,
                          std::size_t budget) {
  LawReport report;
  report.suite = "roundtrip";
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sample sample(report);
    try {
      Ctx c = random_fin_ctx(sig, rng);
      Term t = random_term(sig, c, budget, rng);
      std::string text = print_term(t, sig);
      Term back = parse_term(text, sig, c.count());
      sample.expect(back == t, "parse-print", sig, c, t);
      sample.expect(print_term(back, sig) == text, "print-parse", sig, c, t);
    } catch (const Error& e) {
      sample.error("roundtrip", e.what());
    }
  }
  return report;
}

}  // namespace hss
