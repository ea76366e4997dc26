#ifndef GRUNDY_NIM_PASS_HPP
#define GRUNDY_NIM_PASS_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "grundy/compound.hpp"

namespace grundy {

/// Nim position with the single optional pass. Terminal exactly when all
/// piles are empty; the pass is never usable there.
struct NimPassPosition {
  std::vector<std::uint32_t> piles;
  bool pass_available = true;
};

CompoundState nim_pass_state(const NimPassPosition& p);

/// SG of the n-pile nim position with the pass still available; this is the
/// right-hand side evaluator of the one-move homomorphism.
std::uint32_t gp_n(std::span<const std::uint32_t> piles, SGCache& cache,
                   const Budget& budget = {});

/// Two-pile case: exact SG by game-tree recursion. Symmetric in x, y.
std::uint32_t gp(std::uint32_t x, std::uint32_t y, SGCache& cache,
                 const Budget& budget = {});

/// (max+1) x (max+1) matrix M with M[x][y] = gp(x, y), computed row-major
/// over one shared memo.
std::vector<std::vector<std::uint32_t>> gp_table(std::uint32_t max,
                                                 SGCache& cache,
                                                 const Budget& budget = {});

/// Closed forms for the small values, implemented as pure arithmetic so the
/// brute-force comparison is a genuine two-route check.
bool gp_is_zero(std::uint32_t x, std::uint32_t y);
bool gp_is_one(std::uint32_t x, std::uint32_t y);
bool gp_is_two(std::uint32_t x, std::uint32_t y);

/// CSV with a header row and column of indices; '\n' line endings, no
/// locale-dependent formatting.
void write_gp_table_csv(std::ostream& out,
                        const std::vector<std::vector<std::uint32_t>>& table);

}  // namespace grundy

#endif  // GRUNDY_NIM_PASS_HPP
