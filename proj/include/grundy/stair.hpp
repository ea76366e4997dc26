#ifndef GRUNDY_STAIR_HPP
#define GRUNDY_STAIR_HPP

#include <vector>

#include "grundy/chocolate.hpp"
#include "grundy/nim_pass.hpp"

namespace grundy {

/// Stair bar position with a pass: nim pile x plus two-dimensional bar
/// (y, z), and p = 1 while the pass is unused. Terminal exactly when
/// (x, y, z) = (0, 0, 0); p never goes back to 1.
struct StairPosition {
  std::uint32_t x = 0, y = 0, z = 0;
  bool pass_available = false;

  friend bool operator==(const StairPosition&, const StairPosition&) = default;
};

/// Payload [x, y, z, p], with y <= h(z).
class StairRuleset final : public Ruleset {
 public:
  explicit StairRuleset(HFunction h);
  bool is_terminal(const PositionKey& g) const override {
    return g.payload[0] == 0 && g.payload[1] == 0 && g.payload[2] == 0;
  }
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  PositionKey position(const StairPosition& s) const;
  StairPosition unpack(const PositionKey& g) const;
  const HFunction& h() const { return h_; }

 private:
  HFunction h_;
};

std::vector<StairPosition> stair_moves(const HFunction& h,
                                       const StairPosition& s);

/// Brute-force SG over the four-coordinate tree.
std::uint32_t stair_sg(const HFunction& h, const StairPosition& s,
                       SGCache& cache, const Budget& budget = {});

/// Square lookup table of two-pile nim-with-pass SG values, precomputed so
/// the homomorphism path answers stair queries by table lookup.
class GpTable {
 public:
  GpTable(std::uint32_t max, SGCache& cache, const Budget& budget = {});
  std::uint32_t max() const { return max_; }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const;

 private:
  std::uint32_t max_;
  std::vector<std::vector<std::uint32_t>> values_;
};

/// Homomorphism path: component SG-values (nim pile x and the (y, z) bar)
/// combined through the pass-nim table when the pass is live, or XORed when
/// it is spent.
std::uint32_t stair_sg_fast(const HFunction& h, const StairPosition& s,
                            const GpTable& gp, SGCache& cache,
                            const Budget& budget = {});

/// Closed-form membership tests for SG-values 0, 1, 2. Pure arithmetic —
/// no game-tree calls — so agreement with stair_sg is a genuine
/// two-implementation check. All require y <= h(z).
bool in_A(const HFunction& h, const StairPosition& s);
bool in_B(const HFunction& h, const StairPosition& s);
bool in_C(const HFunction& h, const StairPosition& s);

}  // namespace grundy

#endif  // GRUNDY_STAIR_HPP
