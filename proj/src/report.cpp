#include "hss/report.hpp"

#include <algorithm>
#include <sstream>

#include "hss/errors.hpp"
#include "hss/syntax_io.hpp"

namespace hss {

std::size_t LawReport::failures_of(const std::string& check) const {
  auto it = check_failures.find(check);
  return it == check_failures.end() ? 0 : it->second;
}

void LawReport::keep(Counterexample cx) {
  std::size_t n = size(cx.term);
  auto pos = std::upper_bound(counterexamples.begin(), counterexamples.end(), n,
                              [](std::size_t v, const Counterexample& c) { return v < size(c.term); });
  if (pos == counterexamples.end() && counterexamples.size() >= kMaxCounterexamples) return;
  counterexamples.insert(pos, std::move(cx));
  if (counterexamples.size() > kMaxCounterexamples) counterexamples.pop_back();
}

Sample::~Sample() {
  ++report_.samples;
  if (failed_) ++report_.failures;
}

bool Sample::expect(bool ok, std::string_view check, const Signature& sig, const Ctx& ctx,
                    const Term& witness, std::string detail) {
  if (ok) return true;
  failed_ = true;
  ++report_.check_failures[std::string(check)];
  report_.keep({std::string(check), sig, ctx, witness, std::move(detail)});
  return false;
}

void Sample::error(std::string_view check, const std::string& what) {
  failed_ = true;
  ++report_.check_failures[std::string(check) + "/error"];
  if (report_.errors.size() < LawReport::kMaxCounterexamples) report_.errors.push_back(what);
}

std::string summary_line(const LawReport& r) {
  std::ostringstream os;
  os << "suite=" << r.suite << " samples=" << r.samples << " failures=" << r.failures
     << " seed=" << r.seed;
  return os.str();
}

std::string format_report(const LawReport& r) {
  std::ostringstream os;
  os << summary_line(r) << '\n';
  for (const auto& [check, n] : r.check_failures) os << "  check " << check << ": " << n << '\n';
  for (const Counterexample& cx : r.counterexamples) {
    os << "  counterexample [" << cx.check << "] ";
    try {
      os << print_term(cx.term, cx.sig, cx.ctx);
    } catch (const Error&) {
      os << debug_string(cx.term);
    }
    if (!cx.detail.empty()) os << "  -- " << cx.detail;
    os << '\n';
  }
  for (const std::string& e : r.errors) os << "  error: " << e << '\n';
  return os.str();
}

}  // namespace hss
