#ifndef GRUNDY_RULESET_HPP
#define GRUNDY_RULESET_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "grundy/position.hpp"

namespace grundy {

/// A move generator: terminal predicate plus option enumerator over
/// position keys. is_terminal(g) must hold exactly when options(g) is empty,
/// and the option relation must be well-founded.
class Ruleset {
 public:
  Ruleset(std::string name, std::size_t arity)
      : name_(std::move(name)), id_(intern_ruleset_name(name_)), arity_(arity) {}
  virtual ~Ruleset() = default;

  const std::string& name() const { return name_; }
  std::uint32_t id() const { return id_; }
  std::size_t arity() const { return arity_; }

  virtual bool is_terminal(const PositionKey& g) const = 0;
  virtual void append_options(const PositionKey& g,
                              std::vector<PositionKey>& out) const = 0;

  /// Option set: sorted, duplicates removed.
  std::vector<PositionKey> options(const PositionKey& g) const;

  /// Builds a key for this ruleset, rejecting wrong arity and values that
  /// do not fit in 32 bits.
  PositionKey key(std::initializer_list<std::uint64_t> payload) const;
  PositionKey key(const std::vector<std::uint64_t>& payload) const;

 protected:
  PositionKey raw_key(Payload payload) const {
    PositionKey k;
    k.ruleset = id_;
    k.payload = std::move(payload);
    return k;
  }

 private:
  std::string name_;
  std::uint32_t id_;
  std::size_t arity_;
};

/// Single-pile nim: payload [m]; a move removes any positive number of
/// tokens.
class NimRuleset final : public Ruleset {
 public:
  NimRuleset() : Ruleset("nim", 1) {}
  bool is_terminal(const PositionKey& g) const override {
    return g.payload[0] == 0;
  }
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  static std::shared_ptr<const NimRuleset> instance();
};

/// Two-pile nim played as a single game: payload [a, b]; a move shrinks one
/// pile. Its position (1,1) has SG-value 0 without being terminal, which is
/// what the pass-move counterexample needs.
class TwoPileNimRuleset final : public Ruleset {
 public:
  TwoPileNimRuleset() : Ruleset("nim2", 2) {}
  bool is_terminal(const PositionKey& g) const override {
    return g.payload[0] == 0 && g.payload[1] == 0;
  }
  void append_options(const PositionKey& g,
                      std::vector<PositionKey>& out) const override;
  static std::shared_ptr<const TwoPileNimRuleset> instance();
};

}  // namespace grundy

#endif  // GRUNDY_RULESET_HPP
