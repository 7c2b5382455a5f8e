#include "hss/mendler.hpp"

namespace hss {

StepBundle<std::size_t> size_steps(const Signature& sig) {
  StepBundle<std::size_t> psi;
  psi.name = "size";
  psi.var = [](const Ctx&, const Leaf& l) { return 1 + leaf_weight(l); };
  psi.node = [sig](const Ctx& c, std::size_t arity, std::span<const Term> args,
                   const FoldHandle<std::size_t>& rec) {
    const Arity& a = sig[arity];
    std::size_t n = 1;
    for (std::size_t i = 0; i < args.size(); ++i) n += rec(arg_ctx(a, i, c), args[i]);
    return n;
  };
  return psi;
}

}  // namespace hss
