#include "grundy/ruleset.hpp"

#include <algorithm>
#include <limits>

namespace grundy {

std::vector<PositionKey> Ruleset::options(const PositionKey& g) const {
  std::vector<PositionKey> out;
  append_options(g, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PositionKey Ruleset::key(std::initializer_list<std::uint64_t> payload) const {
  return key(std::vector<std::uint64_t>(payload));
}

PositionKey Ruleset::key(const std::vector<std::uint64_t>& payload) const {
  if (payload.size() != arity_)
    throw std::invalid_argument(name_ + " position needs " +
                                std::to_string(arity_) + " coordinates, got " +
                                std::to_string(payload.size()));
  Payload p;
  p.reserve(payload.size());
  for (std::uint64_t v : payload) {
    if (v > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("coordinate " + std::to_string(v) +
                                  " does not fit in 32 bits");
    p.push_back(static_cast<std::uint32_t>(v));
  }
  return raw_key(std::move(p));
}

void NimRuleset::append_options(const PositionKey& g,
                                std::vector<PositionKey>& out) const {
  const std::uint32_t m = g.payload[0];
  for (std::uint32_t k = 0; k < m; ++k) out.push_back(raw_key({k}));
}

std::shared_ptr<const NimRuleset> NimRuleset::instance() {
  static auto shared = std::make_shared<const NimRuleset>();
  return shared;
}

void TwoPileNimRuleset::append_options(const PositionKey& g,
                                       std::vector<PositionKey>& out) const {
  const std::uint32_t a = g.payload[0], b = g.payload[1];
  for (std::uint32_t k = 0; k < a; ++k) out.push_back(raw_key({k, b}));
  for (std::uint32_t k = 0; k < b; ++k) out.push_back(raw_key({a, k}));
}

std::shared_ptr<const TwoPileNimRuleset> TwoPileNimRuleset::instance() {
  static auto shared = std::make_shared<const TwoPileNimRuleset>();
  return shared;
}

}  // namespace grundy
