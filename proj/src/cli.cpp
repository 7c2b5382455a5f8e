#include "hss/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hss/errors.hpp"
#include "hss/lambda.hpp"
#include "hss/laws.hpp"
#include "hss/naive.hpp"
#include "hss/random.hpp"
#include "hss/substitution.hpp"
#include "hss/syntax_io.hpp"

namespace hss::cli {

namespace {

std::string trim(std::string s) {
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && blank(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && blank(s[i])) ++i;
  return s.substr(i);
}

std::string input_text(const CliConfig& cfg) {
  if (!cfg.file.empty()) {
    if (!cfg.term_text.empty()) throw ConfigError("give either a term or --file, not both");
    std::ifstream in(cfg.file);
    if (!in) throw ConfigError("cannot read " + cfg.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return trim(ss.str());
  }
  if (cfg.term_text.empty()) throw ConfigError("missing term");
  return cfg.term_text;
}

void emit(const CliConfig& cfg, const LawReport& r, std::ostream& out) {
  if (cfg.format == "summary")
    out << summary_line(r) << '\n';
  else
    out << format_report(r);
}

bool all_ok(const std::vector<LawReport>& rs) {
  for (const LawReport& r : rs)
    if (!r.ok()) return false;
  return true;
}

void append(std::vector<LawReport>& into, std::vector<LawReport> more) {
  for (LawReport& r : more) into.push_back(std::move(r));
}

int check_nonfullness(const CliConfig& cfg, std::ostream& out) {
  NonfullnessWitness w = nonfullness_witness(cfg.samples, cfg.seed);
  emit(cfg, w.monad, out);
  emit(cfg, w.hss, out);
  Signature dup = sigs::dupapp();
  out << "tau-square on " << print_term(w.counterexample, dup) << ": "
      << print_term(w.tau_lhs, dup) << " != " << print_term(w.tau_rhs, dup) << '\n';
  out << (w.expected() ? "nonfullness: expected pattern observed\n"
                       : "nonfullness: expected pattern NOT observed\n");
  return w.expected() ? kOk : kLawViolation;
}

std::vector<LawReport> fusion_reports(std::size_t samples, std::uint64_t seed) {
  std::vector<LawReport> rs;
  auto add = [&](const FusionInstance<Term, Term>& inst) {
    FusionReport f = check_fusion_instance(inst, samples, seed);
    rs.push_back(std::move(f.premise));
    rs.push_back(std::move(f.conclusion));
  };
  add(fusion_reflexive());
  for (const ShippedMorphism& s : shipped_morphisms(sigs::lce())) add(fusion_eval(s.f));
  return rs;
}

int run_check(const CliConfig& cfg, const Signature& sig, std::ostream& out) {
  if (cfg.samples == 0) throw ConfigError("--samples must be at least 1");
  const std::size_t n = cfg.samples;
  const std::uint64_t seed = cfg.seed;
  const std::string& suite = cfg.suite;
  std::vector<LawReport> rs;

  if (suite == "nonfullness") return check_nonfullness(cfg, out);
  if (suite == "bracket-laws") {
    for (const ShippedMorphism& s : shipped_morphisms(sig))
      rs.push_back(check_bracket_laws(sig, s, n, seed));
  } else if (suite == "monad-laws") {
    rs.push_back(check_monad_laws(sig, n, seed));
  } else if (suite == "theta-laws") {
    rs = check_theta_laws(sig, n, seed);
  } else if (suite == "map-laws") {
    rs.push_back(check_map_laws(sig, n, seed));
  } else if (suite == "roundtrip") {
    rs.push_back(check_roundtrip(sig, n, seed));
  } else if (suite == "gfold-agreement") {
    rs = check_gfold_bracket(sig, n, seed);
    if (sig == sigs::lce()) rs.push_back(check_eval_properties(n, seed));
  } else if (suite == "hss-morphism-eval") {
    rs.push_back(is_hss_morphism(initial_system(sigs::lce()), extended_system(), eval_morphism(),
                                 n, seed));
  } else if (suite == "monad-morphism-eval") {
    rs.push_back(is_monad_morphism(initial_system(sigs::lce()), extended_system(),
                                   eval_morphism(), n, seed));
  } else if (suite == "init-compat") {
    rs = check_init_compat(n, seed);
  } else if (suite == "fusion") {
    rs = fusion_reports(n, seed);
  } else if (suite == "oracle-equivalence") {
    rs.push_back(check_oracle_equivalence(n, seed));
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  for (const LawReport& r : rs) emit(cfg, r, out);
  return all_ok(rs) ? kOk : kLawViolation;
}

int run_subst(const CliConfig& cfg, const Signature& sig, std::ostream& out) {
  Term t = parse_term(input_text(cfg), sig, cfg.scope);
  std::size_t m = cfg.target_scope.value_or(cfg.scope);
  std::vector<std::optional<Term>> images(cfg.scope);
  for (const auto& [i, text] : parse_bindings(cfg.map_text)) {
    if (i >= cfg.scope) throw ScopeError("binding for index " + std::to_string(i) + " out of scope");
    if (images[i]) throw ConfigError("index " + std::to_string(i) + " bound twice");
    images[i] = parse_term(text, sig, m);
  }
  std::vector<Term> full;
  for (std::size_t i = 0; i < cfg.scope; ++i) {
    if (images[i]) {
      full.push_back(*images[i]);
    } else {
      if (i >= m) throw ScopeError("index " + std::to_string(i) + " unbound and outside target scope");
      full.push_back(Term::var(Leaf::idx(i)));
    }
  }
  SubstRule rule = SubstRule::from_fin(sig, cfg.scope, Ctx::fin(m), std::move(full));
  out << print_term(subst(sig, rule, t), sig) << '\n';
  return kOk;
}

int dispatch(const CliConfig& cfg, std::ostream& out) {
  Signature sig = parse_signature(cfg.sig_text);
  if (cfg.format != "text" && cfg.format != "summary")
    throw ConfigError("unknown format '" + cfg.format + "'");
  const std::string& cmd = cfg.command;
  if (cmd == "eval") {
    if (!(sig == sigs::lce())) throw ConfigError("eval requires --sig lce");
    Term t = parse_term(input_text(cfg), sig, cfg.scope);
    out << print_term(eval_flatten(t, Ctx::fin(cfg.scope)), sigs::lc()) << '\n';
    return kOk;
  }
  if (cmd == "validate") {
    Term t = parse_term(input_text(cfg), sig, cfg.scope);
    out << "valid: " << print_term(t, sig) << '\n';
    return kOk;
  }
  if (cmd == "random") {
    out << print_term(random_term(sig, Ctx::fin(cfg.scope), cfg.budget, cfg.seed), sig) << '\n';
    return kOk;
  }
  if (cmd == "subst") return run_subst(cfg, sig, out);
  if (cmd == "check") return run_check(cfg, sig, out);
  throw ConfigError("unknown command '" + cmd + "'");
}

}  // namespace

std::vector<std::pair<std::size_t, std::string>> parse_bindings(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!trim(cur).empty() || !parts.empty()) parts.push_back(cur);

  std::vector<std::pair<std::size_t, std::string>> out;
  for (const std::string& raw : parts) {
    std::string p = trim(raw);
    std::size_t eq = p.find('=');
    if (eq == std::string::npos) throw ConfigError("binding '" + p + "' lacks '='");
    std::string lhs = trim(p.substr(0, eq));
    if (lhs.empty() || lhs.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("binding '" + p + "' must start with an index");
    out.emplace_back(std::stoul(lhs), trim(p.substr(eq + 1)));
  }
  return out;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const ConfigError& e) {
    err << "configuration: " << e.what() << '\n';
    return kBadConfig;
  } catch (const Error& e) {
    err << "scope: " << e.what() << '\n';
    return kScopeError;
  } catch (const std::out_of_range& e) {
    err << "configuration: " << e.what() << '\n';
    return kBadConfig;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heterogeneous substitution systems over binding signatures"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto common = [&cfg](CLI::App* s) {
    s->add_option("--sig", cfg.sig_text, "Signature: lc, lce, or bind:k1,..+flat");
    s->add_option("--scope", cfg.scope, "Number of free indices");
    s->add_option("--seed", cfg.seed, "Random seed");
    s->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "summary"}));
  };
  auto with_term = [&cfg](CLI::App* s) {
    s->add_option("term", cfg.term_text, "Term text");
    s->add_option("--file", cfg.file, "Read the term from a file");
  };

  CLI::App* eval = app.add_subcommand("eval", "Resolve explicit flattenings");
  common(eval);
  with_term(eval);
  CLI::App* subst = app.add_subcommand("subst", "Apply a parallel substitution");
  common(subst);
  with_term(subst);
  subst->add_option("--map", cfg.map_text, "Bindings i=term[,j=term...]");
  subst->add_option("--target-scope", cfg.target_scope, "Scope of the images");
  CLI::App* random = app.add_subcommand("random", "Print a random term");
  common(random);
  random->add_option("--budget", cfg.budget, "Size budget");
  CLI::App* check = app.add_subcommand("check", "Run a law suite");
  common(check);
  check->add_option("--suite", cfg.suite, "Suite name")->required();
  check->add_option("--samples", cfg.samples, "Samples per suite")->check(CLI::PositiveNumber);
  CLI::App* validate = app.add_subcommand("validate", "Check scope-validity");
  common(validate);
  with_term(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadConfig;
  }
  for (CLI::App* s : {eval, subst, random, check, validate})
    if (s->parsed()) cfg.command = s->get_name();
  return run(cfg, out, err);
}

}  // namespace hss::cli
