#include <doctest.h>

#include <sstream>

#include "hss/cli.hpp"
#include "hss/errors.hpp"
#include "hss/lambda.hpp"
#include "hss/syntax_io.hpp"

using namespace hss;

namespace {

Term v(Leaf l) { return Term::var(std::move(l)); }
Term fresh() { return v(Leaf::fresh()); }
Term id_term() { return lam::abs(fresh()); }
Term boxed(Term t) { return v(Leaf::boxed(std::move(t))); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<const char*> args) {
  args.insert(args.begin(), "hss");
  std::ostringstream out, err;
  int code = cli::main_entry(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_term") {
  Signature lc = sigs::lc();
  Signature lce = sigs::lce();
  CHECK(parse_term("\\.0", lc, 0) == id_term());
  CHECK(parse_term("lam.0", lc, 0) == id_term());
  CHECK(parse_term("((\\.0) 1)", lc, 2) == lam::app(id_term(), lam::var(1)));
  // An abstraction extends as far right as possible.
  CHECK(parse_term("(\\.0 1)", lc, 2) == lam::abs(lam::app(fresh(), v(Leaf::old(Leaf::idx(0))))));
  CHECK(parse_term("flat{ 0 | \\.0 }", lce, 0) == lam::flat(boxed(id_term())));
  CHECK(parse_term("0 1 2", lc, 3) == lam::app(lam::app(lam::var(0), lam::var(1)), lam::var(2)));
  CHECK(parse_term("  ( 0\n1 ) ", lc, 2) == lam::app(lam::var(0), lam::var(1)));
}

TEST_CASE("parse errors") {
  Signature lc = sigs::lc();
  Signature lce = sigs::lce();
  CHECK_THROWS_AS(parse_term("(0 1)", lc, 0), ScopeError);
  CHECK_THROWS_AS(parse_term("flat{ 1 | \\.0 }", lce, 0), ScopeError);
  CHECK_THROWS_AS(parse_term("flat{ \\.1 | }", lce, 0), ScopeError);
  try {
    parse_term("(0 1", lc, 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_term("\\ 0", lc, 1), ParseError);
  CHECK_THROWS_AS(parse_term("x", lc, 1), ParseError);
  CHECK_THROWS_AS(parse_term("", lc, 1), ParseError);
  CHECK_THROWS_AS(parse_term("0 \\.0", lc, 1), ParseError);
  CHECK_THROWS_AS(parse_term("flat{ 0 | 0 }", lc, 1), ParseError);
  CHECK_THROWS_AS(parse_term("#1(0, 0)", lc, 1), ParseError);
  CHECK_THROWS_AS(parse_term("#5()", lc, 1), ParseError);
}

TEST_CASE("print_term") {
  Signature lc = sigs::lc();
  Signature lce = sigs::lce();
  CHECK(print_term(id_term(), lc) == "\\.0");
  CHECK(print_term(lam::app(id_term(), lam::var(1)), lc) == "((\\.0) 1)");
  CHECK(print_term(lam::app(lam::var(1), id_term()), lc) == "(1 (\\.0))");
  Term u = lam::app(lam::var(0), id_term());
  Term f = lam::flat(lam::app(boxed(u), boxed(u)));
  CHECK(print_term(f, lce) == "flat{ (0 0) | (0 (\\.0)) }");
  CHECK(print_term(lam::flat(id_term()), lce) == "flat{ \\.0 | }");
  CHECK(print_term(lam::flat(lam::app(boxed(lam::var(1)), boxed(lam::var(0)))), lce) ==
        "flat{ (0 1) | 1, 0 }");
}

TEST_CASE("generic arity syntax") {
  Signature dup = sigs::dupapp();
  Term t = Term::node(lam::kDupAppPrime, {lam::var(0), lam::var(1)});
  CHECK(print_term(t, dup) == "#1(0, 1)");
  CHECK(parse_term("#1(0, 1)", dup, 2) == t);
  Signature odd = parse_signature("bind:2,0+bind:");
  Term k = Term::node(1, {});
  Term b = Term::node(0, {v(Leaf::old(Leaf::fresh())), k});
  CHECK(print_term(b, odd) == "#0(1, #1())");
  CHECK(parse_term("#0(1, #1())", odd, 0) == b);
}

TEST_CASE("print then parse") {
  for (const Signature& sig : {sigs::lc(), sigs::lce(), sigs::dupapp(),
                               parse_signature("bind:2,0+bind:+flat+flat")}) {
    LawReport r = check_roundtrip(sig, 300, 10);
    CHECK_MESSAGE(r.ok(), format_report(r));
  }
  for (const char* text : {"\\.\\.(1 0)", "flat{ \\.(0 1) | (0 (\\.0)) }", "((0 0) 0)",
                           "flat{ flat{ (0 1) | 0, \\.0 } | 0 }"}) {
    CHECK(print_term(parse_term(text, sigs::lce(), 1), sigs::lce()) == text);
  }
}

TEST_CASE("binding lists") {
  auto b = cli::parse_bindings("0=\\.0, 1=flat{ 0 | 1, 2 }");
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::pair<std::size_t, std::string>{0, "\\.0"});
  CHECK(b[1].second == "flat{ 0 | 1, 2 }");
  CHECK(cli::parse_bindings("").empty());
  CHECK_THROWS_AS(cli::parse_bindings("0"), ConfigError);
  CHECK_THROWS_AS(cli::parse_bindings("a=0"), ConfigError);
}

TEST_CASE("command line") {
  Run r = run_cli({"eval", "--sig", "lce", "--scope", "0", "flat{ 0 | \\.0 }"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\.0\n");

  CHECK(run_cli({"eval", "--sig", "lce", "--scope", "0", "(0 1)"}).code == 3);
  CHECK(run_cli({"eval", "--sig", "lce", "--scope", "2", "(0 1"}).code == 2);
  CHECK(run_cli({"eval", "--sig", "lc", "--scope", "0", "\\.0"}).code == 4);
  CHECK(run_cli({"eval", "--sig", "nonsense", "\\.0"}).code == 4);
  CHECK(run_cli({"frobnicate"}).code == 4);
  CHECK(run_cli({"--help"}).code == 0);

  r = run_cli({"check", "--suite", "monad-laws", "--sig", "lce", "--samples", "200", "--seed", "42",
           "--format", "summary"});
  CHECK(r.code == 0);
  CHECK(r.out == "suite=monad-laws samples=200 failures=0 seed=42\n");
  CHECK(run_cli({"check", "--suite", "monad-laws", "--samples", "0"}).code == 4);
  CHECK(run_cli({"check", "--suite", "nope"}).code == 4);

  r = run_cli({"check", "--suite", "nonfullness", "--samples", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("expected pattern observed") != std::string::npos);

  r = run_cli({"subst", "--sig", "lc", "--scope", "2", "--map", "0=\\.0", "(0 1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "((\\.0) 1)\n");
  r = run_cli({"subst", "--sig", "lc", "--scope", "2", "--target-scope", "1", "--map", "0=0,1=(0 0)",
           "\\.(1 2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\.(1 (1 1))\n");
  CHECK(run_cli({"subst", "--sig", "lc", "--scope", "2", "--target-scope", "1", "(0 1)"}).code == 3);

  r = run_cli({"random", "--sig", "lce", "--scope", "2", "--budget", "15", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == run_cli({"random", "--sig", "lce", "--scope", "2", "--budget", "15", "--seed", "3"}).out);

  r = run_cli({"validate", "--sig", "lce", "--scope", "1", "flat{0|0}"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid: flat{ 0 | 0 }\n");
}
