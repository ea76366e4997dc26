#ifndef GRUNDY_CHOCOLATE_HPP
#define GRUNDY_CHOCOLATE_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grundy/engine.hpp"
#include "grundy/ruleset.hpp"

namespace grundy {

/// Monotone staircase function shaping a two-dimensional chocolate bar.
/// Kinds: floor_div(k): h(z) = floor(z / 2k); log_step: h(z) =
/// 2^floor(log2 z) - 1 with h(0) = 0; finite_table: explicit values,
/// clamped to the last entry beyond the table.
class HFunction {
 public:
  enum class Kind { FloorDiv, LogStep, Table };

  static HFunction floor_div(std::uint32_t k);
  static HFunction log_step();
  static HFunction finite_table(std::vector<std::uint32_t> values);

  std::uint32_t operator()(std::uint32_t z) const;
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Largest z with explicitly defined behavior; unbounded kinds return
  /// nullopt. NS checks refuse to vouch beyond a table's domain.
  std::optional<std::uint32_t> domain_max() const;

  /// The three proven staircase families checked throughout the test and
  /// verification suites: floor-div:1, floor-div:2, log-step.
  static const std::vector<HFunction>& builtins();

 private:
  HFunction(Kind kind, std::uint32_t k, std::vector<std::uint32_t> table,
            std::string name)
      : kind_(kind), k_(k), table_(std::move(table)), name_(std::move(name)) {}

  Kind kind_;
  std::uint32_t k_ = 0;
  std::vector<std::uint32_t> table_;
  std::string name_;
};

/// Monotone two-variable staircase shaping a three-dimensional bar.
/// from_h: F(x,z) = h(z); sum_floor_div(d): F(x,z) = floor((x+z)/d);
/// finite_table: explicit matrix (rows indexed by x), clamped at the edges.
class FFunction {
 public:
  enum class Kind { FromH, SumFloorDiv, Table };

  static FFunction from_h(HFunction h);
  static FFunction sum_floor_div(std::uint32_t d);
  static FFunction f1() { return sum_floor_div(3); }
  static FFunction f2() { return from_h(HFunction::floor_div(1)); }
  static FFunction finite_table(std::vector<std::vector<std::uint32_t>> rows);

  std::uint32_t operator()(std::uint32_t x, std::uint32_t z) const;
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::optional<std::uint32_t> domain_max_x() const;
  std::optional<std::uint32_t> domain_max_z() const;
  const HFunction* base_h() const { return h_ ? &*h_ : nullptr; }

 private:
  FFunction(Kind kind, std::uint32_t d, std::optional<HFunction> h,
            std::vector<std::vector<std::uint32_t>> rows, std::string name)
      : kind_(kind),
        d_(d),
        h_(std::move(h)),
        rows_(std::move(rows)),
        name_(std::move(name)) {}

  Kind kind_;
  std::uint32_t d_ = 0;
  std::optional<HFunction> h_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::string name_;
};

/// Which clause of the staircase-coherence (NS) property failed.
enum class NsClause { OriginNonzero, QuotientMismatch };

struct NsWitness {
  NsClause clause;
  /// For two-variable checks: the slice the failure lives in.
  /// FixedX: z -> F(slice_index, z); FixedZ: x -> F(x, slice_index).
  enum class Slice { None, FixedX, FixedZ };
  Slice slice = Slice::None;
  std::uint32_t slice_index = 0;
  /// Quotient mismatch: floor(a/2^i) == floor(b/2^i) yet the value
  /// quotients by 2^(i-1) differ. Origin failure: a == b == 0.
  std::uint32_t a = 0, b = 0, i = 0;

  std::string describe() const;
};

/// Bounded semi-decision: pass means "verified on [0, z_max]", not a proof.
struct NsResult {
  bool pass = false;
  std::optional<NsWitness> witness;
  /// Informational diagnostics (e.g. a non-surjective table, or slices
  /// whose value at 0 is nonzero under the alternative per-slice reading).
  std::vector<std::string> notes;
};

/// Checks h(0) = 0 and quotient coherence: floor(z/2^i) = floor(z'/2^i)
/// implies floor(h(z)/2^(i-1)) = floor(h(z')/2^(i-1)), over z, z' <= z_max
/// and 1 <= i <= i_max.
NsResult ns_check_h(const HFunction& h, std::uint32_t z_max,
                    std::uint32_t i_max);

/// Slice-wise check of F. Every slice in both directions must be
/// quotient-coherent; the value-at-origin clause is enforced on the
/// fixed-x slices (so F(x, 0) must be 0), while fixed-z slices may start
/// above zero — that offset is the two-dimensional bar shape itself and is
/// reported in the notes rather than failed.
NsResult ns_check_f(const FFunction& f, std::uint32_t x_max,
                    std::uint32_t z_max, std::uint32_t i_max);

/// Two-dimensional bar: payload [y, z] with y <= h(z). A move either lowers
/// y or shortens z, capping y at the new h(w).
class Choco2Ruleset final : public Ruleset {
 public:
  explicit Choco2Ruleset(HFunction h);
  bool is_terminal(const PositionKey& g) const override {
    return g.payload[0] == 0 && g.payload[1] == 0;
  }
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  /// Validated construction; rejects y > h(z).
  PositionKey position(std::uint32_t y, std::uint32_t z) const;
  const HFunction& h() const { return h_; }

 private:
  HFunction h_;
};

/// Three-dimensional bar: payload [x, y, z] with y <= F(x, z).
class Choco3Ruleset final : public Ruleset {
 public:
  explicit Choco3Ruleset(FFunction f);
  bool is_terminal(const PositionKey& g) const override {
    return g.payload[0] == 0 && g.payload[1] == 0 && g.payload[2] == 0;
  }
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  PositionKey position(std::uint32_t x, std::uint32_t y,
                       std::uint32_t z) const;
  const FFunction& f() const { return f_; }

 private:
  FFunction f_;
};

/// Positions reachable from (x, y, z) in one cut, as coordinate triples:
/// {(u, min(F(u,z), y), z) : u < x} u {(x, v, z) : v < y}
/// u {(x, min(y, F(x,w)), w) : w < z}, duplicates removed.
std::vector<std::array<std::uint32_t, 3>> move_f(const FFunction& f,
                                                 std::uint32_t x,
                                                 std::uint32_t y,
                                                 std::uint32_t z);

/// Brute-force SG values of bar positions.
std::uint32_t choco2_sg(const HFunction& h, std::uint32_t y, std::uint32_t z,
                        SGCache& cache, const Budget& budget = {});
std::uint32_t choco3_sg(const FFunction& f, std::uint32_t x, std::uint32_t y,
                        std::uint32_t z, SGCache& cache,
                        const Budget& budget = {});

/// h(z) <= 2^floor(log2 z) - 1, the height cap every coherent staircase
/// obeys (z >= 1).
bool h_bound(const HFunction& h, std::uint32_t z);

/// For z >= 16: y xor z >= 16 for every y <= h(z).
bool xor_at_least_16(const HFunction& h, std::uint32_t z);

/// The exact (y, z) sets carrying each small SG-value v <= 8 in the
/// two-dimensional bar, independent of the particular coherent h (membership
/// at a use site still requires y <= h(z)). v > 8 is unsupported.
std::vector<std::pair<std::uint32_t, std::uint32_t>> small_sg_classify(
    std::uint32_t v);

}  // namespace grundy

#endif  // GRUNDY_CHOCOLATE_HPP
