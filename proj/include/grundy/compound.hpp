#ifndef GRUNDY_COMPOUND_HPP
#define GRUNDY_COMPOUND_HPP

#include <memory>
#include <vector>

#include "grundy/engine.hpp"
#include "grundy/ruleset.hpp"

namespace grundy {

struct Component {
  std::shared_ptr<const Ruleset> rules;
  PositionKey pos;
};

/// Ordered list of component positions plus the pass bit. Once the pass is
/// spent it never comes back; component order is significant for encoding
/// but SG results are order-independent.
struct CompoundState {
  std::vector<Component> components;
  bool pass_available = false;
};

/// Vertices are 1..n; every edge is a nonempty subset of them.
class Hypergraph {
 public:
  Hypergraph(std::uint32_t n,
             std::vector<std::vector<std::uint32_t>> edges);
  std::uint32_t vertex_count() const { return n_; }
  const std::vector<std::vector<std::uint32_t>>& edges() const {
    return edges_;
  }
  std::string label() const;

 private:
  std::uint32_t n_;
  std::vector<std::vector<std::uint32_t>> edges_;
};

/// Move in exactly one component; payload is the component payloads
/// concatenated.
class DisjunctiveRuleset final : public Ruleset {
 public:
  explicit DisjunctiveRuleset(std::vector<std::shared_ptr<const Ruleset>> parts);
  bool is_terminal(const PositionKey& g) const override;
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  PositionKey pack(const std::vector<PositionKey>& positions) const;
  const std::vector<std::shared_ptr<const Ruleset>>& parts() const {
    return parts_;
  }

 private:
  std::vector<std::shared_ptr<const Ruleset>> parts_;
};

/// Disjunctive play plus one optional pass, never at a terminal position;
/// payload is [p, component payloads...].
class OnePassRuleset final : public Ruleset {
 public:
  explicit OnePassRuleset(std::vector<std::shared_ptr<const Ruleset>> parts);
  bool is_terminal(const PositionKey& g) const override;
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  PositionKey pack(const std::vector<PositionKey>& positions,
                   bool pass_available) const;
  const std::vector<std::shared_ptr<const Ruleset>>& parts() const {
    return parts_;
  }

 private:
  std::vector<std::shared_ptr<const Ruleset>> parts_;
};

/// Pick a hyperedge and move simultaneously (and independently) in every
/// component on it; an edge touching a component with no moves is not
/// selectable.
class HypergraphRuleset final : public Ruleset {
 public:
  HypergraphRuleset(Hypergraph h,
                    std::vector<std::shared_ptr<const Ruleset>> parts);
  bool is_terminal(const PositionKey& g) const override;
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  PositionKey pack(const std::vector<PositionKey>& positions) const;

 private:
  Hypergraph graph_;
  std::vector<std::shared_ptr<const Ruleset>> parts_;
};

/// States obtained by replacing one component position with one of its
/// options. Requires pass_available == false.
std::vector<CompoundState> disjunctive_options(const CompoundState& c);

/// XOR of the component SG-values.
std::uint32_t disjunctive_sg_fast(const CompoundState& c, SGCache& cache,
                                  const Budget& budget = {});

/// SG of the disjunctive compound by full game-tree recursion.
std::uint32_t disjunctive_sg_oracle(const CompoundState& c, SGCache& cache,
                                    const Budget& budget = {});

/// Empty when every component is terminal; otherwise the disjunctive moves
/// (pass bit preserved) plus, if the pass is available, the same components
/// with the pass spent.
std::vector<CompoundState> one_pass_options(const CompoundState& c);

/// Exact SG of the one-pass compound by game-tree recursion.
std::uint32_t one_pass_sg_oracle(const CompoundState& c, SGCache& cache,
                                 const Budget& budget = {});

/// SG via the one-move homomorphism: computes each component's ordinary
/// SG-value and evaluates the nim image of the compound (same pass state).
/// Only valid when every component is a one-move game; with
/// verify_components set, that is checked up front and a violation throws
/// std::invalid_argument instead of silently returning a wrong value.
std::uint32_t one_pass_sg_fast(const CompoundState& c, SGCache& cache,
                               const Budget& budget = {},
                               bool verify_components = false);

/// A one-pass compound whose single component is two-pile-nim-as-one-game
/// at (1,1): SG-value 0 yet not terminal, so the homomorphism fast path
/// disagrees with the oracle. The mismatch is re-verified at construction.
CompoundState homomorphism_counterexample(SGCache& cache,
                                          const Budget& budget = {});

/// Per-edge simultaneous moves, as full component-position lists.
std::vector<std::vector<PositionKey>> hypergraph_options(
    const Hypergraph& h, const std::vector<Component>& components);

std::uint32_t hypergraph_sg_oracle(const Hypergraph& h,
                                   const std::vector<Component>& components,
                                   SGCache& cache, const Budget& budget = {});

/// SG via the SG-decreasing homomorphism: nim image of the hypergraph
/// compound. Only valid when every component is SG-decreasing; checked when
/// verify_components is set.
std::uint32_t hypergraph_sg_fast(const Hypergraph& h,
                                 const std::vector<Component>& components,
                                 SGCache& cache, const Budget& budget = {},
                                 bool verify_components = false);

}  // namespace grundy

#endif  // GRUNDY_COMPOUND_HPP
