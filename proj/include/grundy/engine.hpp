#ifndef GRUNDY_ENGINE_HPP
#define GRUNDY_ENGINE_HPP

#include <span>
#include <vector>

#include "grundy/position.hpp"
#include "grundy/ruleset.hpp"

namespace grundy {

/// Least nonnegative integer absent from the values. Duplicates allowed.
std::uint32_t mex(std::span<const std::uint32_t> values);

/// SG-value of g: mex of the option SG-values, 0 at terminal positions.
/// Iterative; fills the cache for g and every follower expanded on the way.
std::uint32_t sg(const Ruleset& rules, const PositionKey& g, SGCache& cache,
                 const Budget& budget = {});

enum class Outcome { P, N };

/// P exactly when sg(g) == 0.
Outcome outcome(const Ruleset& rules, const PositionKey& g, SGCache& cache,
                const Budget& budget = {});

/// Win/lose minimax without SG values: a position is N iff some option is P.
/// Independent route used to cross-check `outcome`.
Outcome outcome_minimax(const Ruleset& rules, const PositionKey& g,
                        const Budget& budget = {});

/// Positions reachable in exactly n moves (move^0(g) = {g}). Sorted.
std::vector<PositionKey> followers(const Ruleset& rules, const PositionKey& g,
                                   unsigned n, const Budget& budget = {});

/// All followers of g (any number of moves, g included). Sorted.
std::vector<PositionKey> follower_closure(const Ruleset& rules,
                                          const PositionKey& g,
                                          const Budget& budget = {});

}  // namespace grundy

#endif  // GRUNDY_ENGINE_HPP
