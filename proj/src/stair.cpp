#include "grundy/stair.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace grundy {

StairRuleset::StairRuleset(HFunction h)
    : Ruleset("stair[" + h.name() + "]", 4), h_(std::move(h)) {}

void StairRuleset::append_options(const PositionKey& g,
                                  std::vector<PositionKey>& out) const {
  const std::uint32_t x = g.payload[0], y = g.payload[1], z = g.payload[2],
                      p = g.payload[3];
  for (std::uint32_t u = 0; u < x; ++u) out.push_back(raw_key({u, y, z, p}));
  for (std::uint32_t v = 0; v < y; ++v) out.push_back(raw_key({x, v, z, p}));
  for (std::uint32_t w = 0; w < z; ++w)
    out.push_back(raw_key({x, std::min(y, h_(w)), w, p}));
  if (p == 1 && !is_terminal(g)) out.push_back(raw_key({x, y, z, 0}));
}

PositionKey StairRuleset::position(const StairPosition& s) const {
  if (s.y > h_(s.z))
    throw std::invalid_argument(
        "stair invariant y <= h(z) violated: y=" + std::to_string(s.y) +
        ", h(" + std::to_string(s.z) + ")=" + std::to_string(h_(s.z)));
  return raw_key({s.x, s.y, s.z, s.pass_available ? 1u : 0u});
}

StairPosition StairRuleset::unpack(const PositionKey& g) const {
  return StairPosition{g.payload[0], g.payload[1], g.payload[2],
                       g.payload[3] == 1};
}

std::vector<StairPosition> stair_moves(const HFunction& h,
                                       const StairPosition& s) {
  StairRuleset rules(h);
  std::vector<StairPosition> out;
  for (const PositionKey& k : rules.options(rules.position(s)))
    out.push_back(rules.unpack(k));
  return out;
}

std::uint32_t stair_sg(const HFunction& h, const StairPosition& s,
                       SGCache& cache, const Budget& budget) {
  StairRuleset rules(h);
  return sg(rules, rules.position(s), cache, budget);
}

GpTable::GpTable(std::uint32_t max, SGCache& cache, const Budget& budget)
    : max_(max), values_(gp_table(max, cache, budget)) {}

std::uint32_t GpTable::at(std::uint32_t a, std::uint32_t b) const {
  if (a > max_ || b > max_)
    throw std::invalid_argument("gp table covers values <= " +
                                std::to_string(max_));
  return values_[a][b];
}

std::uint32_t stair_sg_fast(const HFunction& h, const StairPosition& s,
                            const GpTable& gp, SGCache& cache,
                            const Budget& budget) {
  Choco2Ruleset bar(h);
  const std::uint32_t bar_sg = sg(bar, bar.position(s.y, s.z), cache, budget);
  auto nim = NimRuleset::instance();
  const std::uint32_t pile_sg = sg(*nim, nim->key({s.x}), cache, budget);
  if (!s.pass_available) return pile_sg ^ bar_sg;
  return gp.at(pile_sg, bar_sg);
}

namespace {

void require_valid(const HFunction& h, const StairPosition& s) {
  if (s.y > h(s.z))
    throw std::invalid_argument(
        "stair invariant y <= h(z) violated: y=" + std::to_string(s.y) +
        ", h(" + std::to_string(s.z) + ")=" + std::to_string(h(s.z)));
}

bool in_list(const StairPosition& s,
             std::span<const std::array<std::uint32_t, 3>> list) {
  for (const auto& t : list)
    if (s.x == t[0] && s.y == t[1] && s.z == t[2]) return true;
  return false;
}

// Membership lists for the SG = 1 and SG = 2 characterizations, grouped by
// first coordinate.
constexpr std::array<std::uint32_t, 3> kB1[] = {
    {0, 0, 2}, {0, 1, 3}, {2, 0, 0}};
constexpr std::array<std::uint32_t, 3> kB3[] = {
    {0, 0, 0}, {2, 0, 2}, {2, 1, 3}};

constexpr std::array<std::uint32_t, 3> kC1[] = {
    {0, 0, 1},
    {1, 0, 0},
    {2, 0, 2}, {2, 1, 3},
    {3, 0, 5}, {3, 1, 4}, {3, 2, 7}, {3, 3, 6},
    {4, 0, 7}, {4, 1, 6}, {4, 2, 5}, {4, 3, 4},
    {5, 0, 3}, {5, 1, 2},
    {6, 0, 8}, {6, 1, 9}, {6, 2, 10}, {6, 3, 11},
    {6, 4, 12}, {6, 5, 13}, {6, 6, 14}, {6, 7, 15},
    {7, 0, 4}, {7, 1, 5}, {7, 2, 6}, {7, 3, 7},
    {8, 0, 6}, {8, 1, 7}, {8, 2, 4}, {8, 3, 5}};

constexpr std::array<std::uint32_t, 3> kC3[] = {
    {1, 0, 4}, {1, 1, 5}, {1, 2, 6}, {1, 3, 7},
    {2, 0, 3}, {2, 1, 2},
    {3, 0, 2}, {3, 1, 3},
    {4, 0, 1},
    {5, 0, 8}, {5, 1, 9}, {5, 2, 10}, {5, 3, 11},
    {5, 4, 12}, {5, 5, 13}, {5, 6, 14}, {5, 7, 15},
    {6, 0, 7}, {6, 1, 6}, {6, 2, 5}, {6, 3, 4},
    {7, 0, 6}, {7, 1, 7}, {7, 2, 4}, {7, 3, 5},
    {8, 0, 5}, {8, 1, 4}, {8, 2, 7}, {8, 3, 6}};

}  // namespace

bool in_A(const HFunction& h, const StairPosition& s) {
  require_valid(h, s);
  const std::uint32_t xyz = s.x ^ s.y ^ s.z;
  if (!s.pass_available) return xyz == 0;
  if (s.x == 0 && s.y == 0 && s.z == 0) return true;
  if (s.x % 2 == 1) return ((s.x + 1) ^ s.y ^ s.z) == 0;
  if (s.x >= 2) return ((s.x - 1) ^ s.y ^ s.z) == 0;
  return false;
}

bool in_B(const HFunction& h, const StairPosition& s) {
  require_valid(h, s);
  if (!s.pass_available) return (s.x ^ s.y ^ s.z) == 1;
  if (in_list(s, kB3)) return false;
  if (in_list(s, kB1)) return true;
  return (s.x ^ s.y ^ s.z) == 0;
}

bool in_C(const HFunction& h, const StairPosition& s) {
  require_valid(h, s);
  if (!s.pass_available) return (s.x ^ s.y ^ s.z) == 2;
  if (in_list(s, kC3)) return false;
  if (in_list(s, kC1)) return true;
  // (x-1 xor 3)+1 is the unique partner pile with pairwise distance 3;
  // x = 0 has no predecessor and is fully covered by the explicit list.
  if (s.x == 0) return false;
  return ((((s.x - 1) ^ 3) + 1) ^ s.y ^ s.z) == 0;
}

}  // namespace grundy
