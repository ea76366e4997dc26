#include "grundy/engine.hpp"

#include <deque>
#include <unordered_set>

namespace grundy {

std::uint32_t mex(std::span<const std::uint32_t> values) {
  // Presence array of length n+1: the answer never exceeds the set size.
  const std::size_t n = values.size();
  std::vector<bool> present(n + 1, false);
  for (std::uint32_t v : values)
    if (v <= n) present[v] = true;
  std::uint32_t r = 0;
  while (present[r]) ++r;
  return r;
}

namespace {

using KeySet = std::unordered_set<PositionKey, PositionKeyHash>;

[[noreturn]] void budget_exhausted(const PositionKey& at, const Budget& b) {
  throw ResourceError("position budget of " + std::to_string(b.max_visited) +
                      " exceeded while expanding " + to_string(at));
}

[[noreturn]] void cycle_found(const PositionKey& at) {
  throw ResourceError("option relation is not well-founded: cycle through " +
                      to_string(at));
}

struct SgFrame {
  PositionKey key;
  std::vector<PositionKey> opts;
  std::vector<std::uint32_t> child_sg;
  std::size_t next = 0;
  bool expanded = false;
};

}  // namespace

std::uint32_t sg(const Ruleset& rules, const PositionKey& g, SGCache& cache,
                 const Budget& budget) {
  if (auto hit = cache.lookup(g)) return *hit;

  // Explicit work stack: stair positions near 200 would blow the call stack.
  std::deque<SgFrame> stack;
  KeySet on_stack;
  std::uint64_t visited = 0;

  auto push = [&](PositionKey k) {
    if (++visited > budget.max_visited) budget_exhausted(k, budget);
    on_stack.insert(k);
    stack.push_back(SgFrame{std::move(k), {}, {}, 0, false});
  };
  push(g);

  while (!stack.empty()) {
    SgFrame& f = stack.back();
    if (!f.expanded) {
      f.opts = rules.options(f.key);
      f.child_sg.reserve(f.opts.size());
      f.expanded = true;
    }
    bool descended = false;
    while (f.next < f.opts.size()) {
      const PositionKey& child = f.opts[f.next];
      if (auto hit = cache.lookup(child)) {
        f.child_sg.push_back(*hit);
        ++f.next;
        continue;
      }
      if (on_stack.contains(child)) cycle_found(child);
      push(child);
      descended = true;
      break;
    }
    if (descended) continue;
    cache.insert(f.key, mex(f.child_sg));
    on_stack.erase(f.key);
    stack.pop_back();
  }
  return *cache.lookup(g);
}

Outcome outcome(const Ruleset& rules, const PositionKey& g, SGCache& cache,
                const Budget& budget) {
  return sg(rules, g, cache, budget) == 0 ? Outcome::P : Outcome::N;
}

namespace {

struct MinimaxFrame {
  PositionKey key;
  std::vector<PositionKey> opts;
  std::size_t next = 0;
  bool expanded = false;
};

}  // namespace

Outcome outcome_minimax(const Ruleset& rules, const PositionKey& g,
                        const Budget& budget) {
  // next_wins[k]: the player to move from k has a winning strategy.
  std::unordered_map<PositionKey, bool, PositionKeyHash> next_wins;
  std::deque<MinimaxFrame> stack;
  KeySet on_stack;
  std::uint64_t visited = 0;

  auto push = [&](PositionKey k) {
    if (++visited > budget.max_visited) budget_exhausted(k, budget);
    on_stack.insert(k);
    stack.push_back(MinimaxFrame{std::move(k), {}, 0, false});
  };
  push(g);

  while (!stack.empty()) {
    MinimaxFrame& f = stack.back();
    if (!f.expanded) {
      f.opts = rules.options(f.key);
      f.expanded = true;
    }
    bool settled = false;
    bool descended = false;
    while (f.next < f.opts.size()) {
      const PositionKey& child = f.opts[f.next];
      auto it = next_wins.find(child);
      if (it != next_wins.end()) {
        if (!it->second) {  // some option is a P-position: we win
          next_wins[f.key] = true;
          settled = true;
        }
        ++f.next;
        if (settled) break;
        continue;
      }
      if (on_stack.contains(child)) cycle_found(child);
      push(child);
      descended = true;
      break;
    }
    if (descended) continue;
    if (!settled) next_wins[f.key] = false;  // terminal or all options N
    on_stack.erase(f.key);
    stack.pop_back();
  }
  return next_wins.at(g) ? Outcome::N : Outcome::P;
}

std::vector<PositionKey> followers(const Ruleset& rules, const PositionKey& g,
                                   unsigned n, const Budget& budget) {
  std::vector<PositionKey> level{g};
  std::uint64_t visited = 1;
  for (unsigned step = 0; step < n; ++step) {
    std::vector<PositionKey> next;
    for (const PositionKey& k : level) rules.append_options(k, next);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    visited += next.size();
    if (visited > budget.max_visited) budget_exhausted(g, budget);
    level = std::move(next);
    if (level.empty()) break;
  }
  return level;
}

std::vector<PositionKey> follower_closure(const Ruleset& rules,
                                          const PositionKey& g,
                                          const Budget& budget) {
  KeySet seen{g};
  std::vector<PositionKey> queue{g};
  std::vector<PositionKey> opts;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    opts.clear();
    rules.append_options(queue[i], opts);
    for (PositionKey& k : opts) {
      if (seen.insert(k).second) {
        if (seen.size() > budget.max_visited) budget_exhausted(g, budget);
        queue.push_back(std::move(k));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace grundy
