#ifndef GRUNDY_CLASSIFY_HPP
#define GRUNDY_CLASSIFY_HPP

#include <optional>
#include <unordered_map>

#include "grundy/engine.hpp"
#include "grundy/ruleset.hpp"

namespace grundy {

/// Outcome of an exhaustive follower-analysis check. A false verdict always
/// carries a witness that violates the definition and can be re-checked.
struct Certificate {
  enum class Kind { OneMove, SgDecreasing };
  Kind kind;
  PositionKey position;
  bool verdict = false;
  /// OneMove: a non-terminal follower with SG-value 0.
  /// SgDecreasing: a follower whose SG does not exceed one of its options'.
  std::optional<PositionKey> witness;
  /// SgDecreasing only: the offending option of `witness`.
  std::optional<PositionKey> witness_option;
};

/// True iff every follower with SG-value 0 is terminal.
Certificate is_one_move(const Ruleset& rules, const PositionKey& g,
                        SGCache& cache, const Budget& budget = {});

/// True iff every follower's SG-value strictly exceeds all of its options'.
Certificate is_sg_decreasing(const Ruleset& rules, const PositionKey& g,
                             SGCache& cache, const Budget& budget = {});

/// Re-derives a false certificate's violation directly from the definition.
bool recheck_witness(const Ruleset& rules, const Certificate& cert,
                     SGCache& cache, const Budget& budget = {});

/// Memoized front end for the checks above; fast paths call these
/// repeatedly on the same components.
class Classifier {
 public:
  explicit Classifier(SGCache& cache, Budget budget = {})
      : cache_(cache), budget_(budget) {}
  const Certificate& one_move(const Ruleset& rules, const PositionKey& g);
  const Certificate& sg_decreasing(const Ruleset& rules, const PositionKey& g);

 private:
  SGCache& cache_;
  Budget budget_;
  std::unordered_map<PositionKey, Certificate, PositionKeyHash> one_move_;
  std::unordered_map<PositionKey, Certificate, PositionKeyHash> sg_dec_;
};

}  // namespace grundy

#endif  // GRUNDY_CLASSIFY_HPP
