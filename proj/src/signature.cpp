#include "hss/signature.hpp"

#include <charconv>

#include "hss/errors.hpp"

namespace hss {

Signature sum_sig(const Signature& s1, const Signature& s2) {
  Signature out = s1;
  out.arities.insert(out.arities.end(), s2.arities.begin(), s2.arities.end());
  return out;
}

namespace sigs {

Signature lc() { return {{Arity::binding({0, 0}), Arity::binding({1})}}; }

Signature lce() { return sum_sig(lc(), Signature{{Arity::flattening()}}); }

Signature dupapp() {
  return {{Arity::binding({0, 0}), Arity::binding({0, 0}), Arity::binding({1})}};
}

}  // namespace sigs

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Arity parse_arity(std::string_view part) {
  part = trim(part);
  if (part == "flat") return Arity::flattening();
  constexpr std::string_view prefix = "bind:";
  if (part.substr(0, prefix.size()) != prefix)
    throw ConfigError("unknown arity '" + std::string(part) + "'");
  std::string_view rest = trim(part.substr(prefix.size()));
  std::vector<std::size_t> ks;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view num = trim(rest.substr(0, comma));
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
      throw ConfigError("bad binder count '" + std::string(num) + "' in '" + std::string(part) + "'");
    ks.push_back(k);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) throw ConfigError("trailing comma in '" + std::string(part) + "'");
  }
  return Arity::binding(std::move(ks));
}

}  // namespace

Signature parse_signature(std::string_view text) {
  text = trim(text);
  if (text == "lc") return sigs::lc();
  if (text == "lce") return sigs::lce();
  if (text.empty()) throw ConfigError("empty signature");
  Signature sig;
  while (true) {
    auto plus = text.find('+');
    sig.arities.push_back(parse_arity(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  return sig;
}

std::string to_string(const Signature& sig) {
  std::string out;
  for (const Arity& a : sig.arities) {
    if (!out.empty()) out += '+';
    if (a.is_flattening()) {
      out += "flat";
      continue;
    }
    out += "bind:";
    for (std::size_t i = 0; i < a.binders.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(a.binders[i]);
    }
  }
  return out;
}

SyntaxRoles syntax_roles(const Signature& sig) {
  SyntaxRoles roles;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const Arity& a = sig[i];
    if (a.is_flattening()) {
      if (!roles.flat) roles.flat = i;
    } else if (a.binders == std::vector<std::size_t>{0, 0}) {
      if (!roles.app) roles.app = i;
    } else if (a.binders == std::vector<std::size_t>{1}) {
      if (!roles.abs) roles.abs = i;
    }
  }
  return roles;
}

}  // namespace hss
