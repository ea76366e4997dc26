#include "grundy/nim_pass.hpp"

#include <array>
#include <ostream>

namespace grundy {

CompoundState nim_pass_state(const NimPassPosition& p) {
  if (p.piles.empty()) throw std::invalid_argument("nim-pass needs piles");
  auto nim = NimRuleset::instance();
  CompoundState c;
  c.components.reserve(p.piles.size());
  for (std::uint32_t m : p.piles)
    c.components.push_back(Component{nim, nim->key({m})});
  c.pass_available = p.pass_available;
  return c;
}

std::uint32_t gp_n(std::span<const std::uint32_t> piles, SGCache& cache,
                   const Budget& budget) {
  NimPassPosition p;
  p.piles.assign(piles.begin(), piles.end());
  p.pass_available = true;
  return one_pass_sg_oracle(nim_pass_state(p), cache, budget);
}

std::uint32_t gp(std::uint32_t x, std::uint32_t y, SGCache& cache,
                 const Budget& budget) {
  const std::array<std::uint32_t, 2> piles{x, y};
  return gp_n(piles, cache, budget);
}

std::vector<std::vector<std::uint32_t>> gp_table(std::uint32_t max,
                                                 SGCache& cache,
                                                 const Budget& budget) {
  std::vector<std::vector<std::uint32_t>> table(max + 1);
  for (std::uint32_t x = 0; x <= max; ++x) {
    table[x].resize(max + 1);
    for (std::uint32_t y = 0; y <= max; ++y) table[x][y] = gp(x, y, cache, budget);
  }
  return table;
}

bool gp_is_zero(std::uint32_t x, std::uint32_t y) {
  if (x == 0 && y == 0) return true;
  const std::uint32_t lo = std::min(x, y), hi = std::max(x, y);
  return hi == lo + 1 && hi % 2 == 0;  // {2n-1, 2n}
}

bool gp_is_one(std::uint32_t x, std::uint32_t y) {
  if ((x == 0 && y == 2) || (x == 2 && y == 0)) return true;
  return x == y && x != 0 && x != 2;
}

bool gp_is_two(std::uint32_t x, std::uint32_t y) {
  static const std::pair<std::uint32_t, std::uint32_t> fixed[] = {
      {0, 1}, {1, 0}, {2, 2}, {3, 5}, {4, 7},
      {5, 3}, {6, 8}, {7, 4}, {8, 6}};
  for (const auto& [a, b] : fixed)
    if (x == a && y == b) return true;
  return x >= 9 && y >= 9 && ((x - 1) ^ (y - 1)) == 3;
}

void write_gp_table_csv(std::ostream& out,
                        const std::vector<std::vector<std::uint32_t>>& table) {
  for (std::size_t y = 0; y < table.size(); ++y) out << ',' << y;
  out << '\n';
  for (std::size_t x = 0; x < table.size(); ++x) {
    out << x;
    for (std::uint32_t v : table[x]) out << ',' << v;
    out << '\n';
  }
}

}  // namespace grundy
