#include "grundy/position.hpp"

#include <mutex>
#include <vector>

namespace grundy {

namespace {

struct InternTable {
  std::mutex mutex;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::string> names;
};

InternTable& interned() {
  static InternTable table;
  return table;
}

}  // namespace

std::uint32_t intern_ruleset_name(const std::string& name) {
  InternTable& t = interned();
  std::lock_guard<std::mutex> lock(t.mutex);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& ruleset_name(std::uint32_t id) {
  InternTable& t = interned();
  std::lock_guard<std::mutex> lock(t.mutex);
  if (id >= t.names.size()) throw std::logic_error("unknown ruleset id");
  return t.names[id];
}

std::string to_string(const PositionKey& k) {
  std::string s = ruleset_name(k.ruleset);
  s += '(';
  for (std::size_t i = 0; i < k.payload.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k.payload[i]);
  }
  s += ')';
  return s;
}

}  // namespace grundy
