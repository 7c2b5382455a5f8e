#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hss/signature.hpp"
#include "hss/syntax.hpp"

namespace hss {

struct Counterexample {
  std::string check;
  Signature sig;
  Ctx ctx;
  Term term;
  std::string detail;
};

// Outcome of a randomized law suite. A sample counts as failed once, however
// many of its checks fail; per-check tallies live in `check_failures`.
struct LawReport {
  static constexpr std::size_t kMaxCounterexamples = 10;

  std::string suite;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> check_failures;
  // The smallest counterexamples by term size, ties in discovery order.
  std::vector<Counterexample> counterexamples;
  // Messages of exceptions raised by the code under test (first few only).
  std::vector<std::string> errors;

  bool ok() const { return failures == 0; }
  std::size_t failures_of(const std::string& check) const;
  void keep(Counterexample cx);
};

// One sample of a suite. Checks accumulate; the destructor commits the
// sample to the report.
class Sample {
 public:
  explicit Sample(LawReport& report) : report_(report) {}
  Sample(const Sample&) = delete;
  Sample& operator=(const Sample&) = delete;
  ~Sample();

  // Returns ok so callers can chain.
  bool expect(bool ok, std::string_view check, const Signature& sig, const Ctx& ctx,
              const Term& witness, std::string detail = {});
  // An exception escaped the code under test.
  void error(std::string_view check, const std::string& what);

 private:
  LawReport& report_;
  bool failed_ = false;
};

// `suite=<name> samples=<n> failures=<k> seed=<s>`
std::string summary_line(const LawReport& r);
// Summary line followed by one line per stored counterexample.
std::string format_report(const LawReport& r);

}  // namespace hss
