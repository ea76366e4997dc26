#include "grundy/classify.hpp"

namespace grundy {

Certificate is_one_move(const Ruleset& rules, const PositionKey& g,
                        SGCache& cache, const Budget& budget) {
  Certificate cert{Certificate::Kind::OneMove, g, true, std::nullopt,
                   std::nullopt};
  for (const PositionKey& f : follower_closure(rules, g, budget)) {
    if (sg(rules, f, cache, budget) == 0 && !rules.is_terminal(f)) {
      cert.verdict = false;
      cert.witness = f;
      return cert;
    }
  }
  return cert;
}

Certificate is_sg_decreasing(const Ruleset& rules, const PositionKey& g,
                             SGCache& cache, const Budget& budget) {
  Certificate cert{Certificate::Kind::SgDecreasing, g, true, std::nullopt,
                   std::nullopt};
  for (const PositionKey& f : follower_closure(rules, g, budget)) {
    const std::uint32_t vf = sg(rules, f, cache, budget);
    for (const PositionKey& opt : rules.options(f)) {
      if (vf <= sg(rules, opt, cache, budget)) {
        cert.verdict = false;
        cert.witness = f;
        cert.witness_option = opt;
        return cert;
      }
    }
  }
  return cert;
}

bool recheck_witness(const Ruleset& rules, const Certificate& cert,
                     SGCache& cache, const Budget& budget) {
  if (cert.verdict || !cert.witness) return false;
  if (cert.kind == Certificate::Kind::OneMove) {
    const PositionKey& w = *cert.witness;
    auto closure = follower_closure(rules, cert.position, budget);
    const bool reachable = std::binary_search(closure.begin(), closure.end(), w);
    return reachable && sg(rules, w, cache, budget) == 0 &&
           !rules.is_terminal(w);
  }
  if (!cert.witness_option) return false;
  const PositionKey& f = *cert.witness;
  const PositionKey& opt = *cert.witness_option;
  auto closure = follower_closure(rules, cert.position, budget);
  if (!std::binary_search(closure.begin(), closure.end(), f)) return false;
  auto opts = rules.options(f);
  if (!std::binary_search(opts.begin(), opts.end(), opt)) return false;
  return sg(rules, f, cache, budget) <= sg(rules, opt, cache, budget);
}

const Certificate& Classifier::one_move(const Ruleset& rules,
                                        const PositionKey& g) {
  auto it = one_move_.find(g);
  if (it != one_move_.end()) return it->second;
  return one_move_.emplace(g, is_one_move(rules, g, cache_, budget_))
      .first->second;
}

const Certificate& Classifier::sg_decreasing(const Ruleset& rules,
                                             const PositionKey& g) {
  auto it = sg_dec_.find(g);
  if (it != sg_dec_.end()) return it->second;
  return sg_dec_.emplace(g, is_sg_decreasing(rules, g, cache_, budget_))
      .first->second;
}

}  // namespace grundy
