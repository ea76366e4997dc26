#ifndef GRUNDY_POSITION_HPP
#define GRUNDY_POSITION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <boost/container/small_vector.hpp>

namespace grundy {

/// Thrown when a computation exceeds its position budget or the option
/// relation turns out not to be well-founded (a cycle was hit).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size budget for game-tree walks. Counts distinct positions expanded in
/// one top-level call.
struct Budget {
  std::uint64_t max_visited = 10'000'000;
};

using Payload = boost::container::small_vector<std::uint32_t, 8>;

/// Canonical, hashable encoding of a game position. Equality is exact
/// equality of (ruleset, payload); there is a single encoding per position.
/// Payload layout is fixed per ruleset: nim = [pile], nim2 = [a, b],
/// cb2 = [y, z], cb3 = [x, y, z], stair = [x, y, z, p],
/// one-pass compounds = [p, component payloads...], other compounds =
/// [component payloads...].
struct PositionKey {
  std::uint32_t ruleset = 0;
  Payload payload;

  friend bool operator==(const PositionKey& a, const PositionKey& b) {
    return a.ruleset == b.ruleset && a.payload == b.payload;
  }
  friend bool operator<(const PositionKey& a, const PositionKey& b) {
    if (a.ruleset != b.ruleset) return a.ruleset < b.ruleset;
    return std::lexicographical_compare(a.payload.begin(), a.payload.end(),
                                        b.payload.begin(), b.payload.end());
  }
};

struct PositionKeyHash {
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  std::size_t operator()(const PositionKey& k) const {
    std::uint64_t h = mix(k.ruleset);
    for (std::uint32_t v : k.payload) h = mix(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

/// Maps a canonical ruleset name to a stable numeric id. Two ruleset
/// instances with the same name are interchangeable and share cache entries.
std::uint32_t intern_ruleset_name(const std::string& name);
const std::string& ruleset_name(std::uint32_t id);

/// "name(p0,p1,...)" rendering for diagnostics and witness reports.
std::string to_string(const PositionKey& k);

/// Insert-only memo of SG values. Re-inserting an existing key with a
/// different value is a fatal internal error.
class SGCache {
 public:
  std::optional<std::uint32_t> lookup(const PositionKey& k) const {
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const PositionKey& k, std::uint32_t value) {
    auto [it, inserted] = map_.emplace(k, value);
    if (!inserted && it->second != value)
      throw std::logic_error("SGCache value conflict at " + to_string(k));
  }

  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<PositionKey, std::uint32_t, PositionKeyHash> map_;
};

}  // namespace grundy

#endif  // GRUNDY_POSITION_HPP
