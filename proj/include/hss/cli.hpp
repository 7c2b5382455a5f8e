#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hss/signature.hpp"

namespace hss::cli {

enum ExitCode : int {
  kOk = 0,
  kLawViolation = 1,
  kParseError = 2,
  kScopeError = 3,
  kBadConfig = 4,
};

struct CliConfig {
  std::string command;  // eval | subst | random | check | validate
  std::string sig_text = "lc";
  std::size_t scope = 0;
  // Scope of the images in `subst`; defaults to `scope`.
  std::optional<std::size_t> target_scope;
  std::string term_text;
  std::string file;
  std::string map_text;
  std::string suite;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t budget = 10;
  std::string format = "text";  // text | summary
};

// Splits `i=term,j=term` at commas outside brackets.
std::vector<std::pair<std::size_t, std::string>> parse_bindings(const std::string& text);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);
// Parses argv (argv[0] is the program name) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hss::cli
