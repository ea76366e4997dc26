#include "grundy/compound.hpp"

#include <algorithm>
#include <set>

#include "grundy/classify.hpp"

namespace grundy {

namespace {

std::string join_names(const std::vector<std::shared_ptr<const Ruleset>>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i]->name();
  }
  return s;
}

std::size_t total_arity(const std::vector<std::shared_ptr<const Ruleset>>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p->arity();
  return n;
}

void check_parts(const std::vector<std::shared_ptr<const Ruleset>>& parts) {
  if (parts.empty()) throw std::invalid_argument("compound needs components");
}

// Reads component i's position out of a packed payload.
PositionKey slice(const std::vector<std::shared_ptr<const Ruleset>>& parts,
                  const PositionKey& g, std::size_t offset, std::size_t i) {
  PositionKey k;
  k.ruleset = parts[i]->id();
  for (std::size_t j = 0; j < i; ++j) offset += parts[j]->arity();
  k.payload.assign(g.payload.begin() + offset,
                   g.payload.begin() + offset + parts[i]->arity());
  return k;
}

PositionKey splice(const PositionKey& g, std::uint32_t compound_id,
                   std::size_t offset, const PositionKey& replacement) {
  PositionKey k;
  k.ruleset = compound_id;
  k.payload = g.payload;
  std::copy(replacement.payload.begin(), replacement.payload.end(),
            k.payload.begin() + offset);
  return k;
}

void check_state(const CompoundState& c) {
  if (c.components.empty())
    throw std::invalid_argument("compound state needs components");
  for (const Component& comp : c.components)
    if (comp.pos.ruleset != comp.rules->id())
      throw std::invalid_argument("component position belongs to " +
                                  ruleset_name(comp.pos.ruleset) + ", not " +
                                  comp.rules->name());
}

std::vector<std::shared_ptr<const Ruleset>> state_parts(
    const CompoundState& c) {
  std::vector<std::shared_ptr<const Ruleset>> parts;
  parts.reserve(c.components.size());
  for (const Component& comp : c.components) parts.push_back(comp.rules);
  return parts;
}

std::vector<PositionKey> state_positions(const CompoundState& c) {
  std::vector<PositionKey> ps;
  ps.reserve(c.components.size());
  for (const Component& comp : c.components) ps.push_back(comp.pos);
  return ps;
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t n,
                       std::vector<std::vector<std::uint32_t>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("hypergraph needs vertices");
  for (auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (std::uint32_t v : e)
      if (v < 1 || v > n_)
        throw std::invalid_argument("hyperedge vertex " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::string Hypergraph::label() const {
  std::string s;
  for (const auto& e : edges_) {
    s += '{';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(e[i]);
    }
    s += '}';
  }
  return s;
}

DisjunctiveRuleset::DisjunctiveRuleset(
    std::vector<std::shared_ptr<const Ruleset>> parts)
    : Ruleset("sum(" + join_names(parts) + ")", total_arity(parts)),
      parts_(std::move(parts)) {
  check_parts(parts_);
}

bool DisjunctiveRuleset::is_terminal(const PositionKey& g) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    PositionKey part;
    part.ruleset = parts_[i]->id();
    part.payload.assign(g.payload.begin() + offset,
                        g.payload.begin() + offset + parts_[i]->arity());
    if (!parts_[i]->is_terminal(part)) return false;
    offset += parts_[i]->arity();
  }
  return true;
}

void DisjunctiveRuleset::append_options(const PositionKey& g,
                                        std::vector<PositionKey>& out) const {
  std::size_t offset = 0;
  std::vector<PositionKey> part_opts;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    PositionKey part = slice(parts_, g, 0, i);
    part_opts.clear();
    parts_[i]->append_options(part, part_opts);
    for (const PositionKey& opt : part_opts)
      out.push_back(splice(g, id(), offset, opt));
    offset += parts_[i]->arity();
  }
}

PositionKey DisjunctiveRuleset::pack(
    const std::vector<PositionKey>& positions) const {
  if (positions.size() != parts_.size())
    throw std::invalid_argument("component count mismatch");
  PositionKey k;
  k.ruleset = id();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i].ruleset != parts_[i]->id())
      throw std::invalid_argument("component ruleset mismatch");
    k.payload.insert(k.payload.end(), positions[i].payload.begin(),
                     positions[i].payload.end());
  }
  return k;
}

OnePassRuleset::OnePassRuleset(std::vector<std::shared_ptr<const Ruleset>> parts)
    : Ruleset("pass-sum(" + join_names(parts) + ")", 1 + total_arity(parts)),
      parts_(std::move(parts)) {
  check_parts(parts_);
}

bool OnePassRuleset::is_terminal(const PositionKey& g) const {
  std::size_t offset = 1;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    PositionKey part;
    part.ruleset = parts_[i]->id();
    part.payload.assign(g.payload.begin() + offset,
                        g.payload.begin() + offset + parts_[i]->arity());
    if (!parts_[i]->is_terminal(part)) return false;
    offset += parts_[i]->arity();
  }
  return true;
}

void OnePassRuleset::append_options(const PositionKey& g,
                                    std::vector<PositionKey>& out) const {
  if (is_terminal(g)) return;  // no pass from a terminal position
  std::size_t offset = 1;
  std::vector<PositionKey> part_opts;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    PositionKey part = slice(parts_, g, 1, i);
    part_opts.clear();
    parts_[i]->append_options(part, part_opts);
    for (const PositionKey& opt : part_opts)
      out.push_back(splice(g, id(), offset, opt));
    offset += parts_[i]->arity();
  }
  if (g.payload[0] == 1) {
    PositionKey spent = g;
    spent.payload[0] = 0;
    out.push_back(std::move(spent));
  }
}

PositionKey OnePassRuleset::pack(const std::vector<PositionKey>& positions,
                                 bool pass_available) const {
  if (positions.size() != parts_.size())
    throw std::invalid_argument("component count mismatch");
  PositionKey k;
  k.ruleset = id();
  k.payload.push_back(pass_available ? 1 : 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i].ruleset != parts_[i]->id())
      throw std::invalid_argument("component ruleset mismatch");
    k.payload.insert(k.payload.end(), positions[i].payload.begin(),
                     positions[i].payload.end());
  }
  return k;
}

HypergraphRuleset::HypergraphRuleset(
    Hypergraph h, std::vector<std::shared_ptr<const Ruleset>> parts)
    : Ruleset("hyper[" + h.label() + "](" + join_names(parts) + ")",
              total_arity(parts)),
      graph_(std::move(h)),
      parts_(std::move(parts)) {
  check_parts(parts_);
  if (graph_.vertex_count() != parts_.size())
    throw std::invalid_argument("hypergraph vertex count != component count");
}

bool HypergraphRuleset::is_terminal(const PositionKey& g) const {
  // An edge is selectable exactly when none of its components is terminal.
  for (const auto& edge : graph_.edges()) {
    bool selectable = true;
    for (std::uint32_t v : edge) {
      if (parts_[v - 1]->is_terminal(slice(parts_, g, 0, v - 1))) {
        selectable = false;
        break;
      }
    }
    if (selectable) return false;
  }
  return true;
}

void HypergraphRuleset::append_options(const PositionKey& g,
                                       std::vector<PositionKey>& out) const {
  std::vector<std::size_t> offsets(parts_.size());
  std::size_t off = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    offsets[i] = off;
    off += parts_[i]->arity();
  }
  for (const auto& edge : graph_.edges()) {
    // Per-vertex option lists; the edge is selectable only if all nonempty.
    std::vector<std::vector<PositionKey>> choices;
    bool selectable = true;
    for (std::uint32_t v : edge) {
      const std::size_t i = v - 1;
      PositionKey part = slice(parts_, g, 0, i);
      std::vector<PositionKey> opts;
      parts_[i]->append_options(part, opts);
      if (opts.empty()) {
        selectable = false;
        break;
      }
      choices.push_back(std::move(opts));
    }
    if (!selectable) continue;
    std::vector<std::size_t> pick(edge.size(), 0);
    while (true) {
      PositionKey next = g;
      for (std::size_t j = 0; j < edge.size(); ++j) {
        const std::size_t i = edge[j] - 1;
        const PositionKey& rep = choices[j][pick[j]];
        std::copy(rep.payload.begin(), rep.payload.end(),
                  next.payload.begin() + offsets[i]);
      }
      out.push_back(std::move(next));
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == choices[j].size()) {
        pick[j] = 0;
        ++j;
      }
      if (j == pick.size()) break;
    }
  }
}

PositionKey HypergraphRuleset::pack(
    const std::vector<PositionKey>& positions) const {
  if (positions.size() != parts_.size())
    throw std::invalid_argument("component count mismatch");
  PositionKey k;
  k.ruleset = id();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i].ruleset != parts_[i]->id())
      throw std::invalid_argument("component ruleset mismatch");
    k.payload.insert(k.payload.end(), positions[i].payload.begin(),
                     positions[i].payload.end());
  }
  return k;
}

std::vector<CompoundState> disjunctive_options(const CompoundState& c) {
  check_state(c);
  if (c.pass_available)
    throw std::invalid_argument(
        "disjunctive_options is for pass-free states; use one_pass_options");
  std::vector<CompoundState> out;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    for (const PositionKey& opt : c.components[i].rules->options(c.components[i].pos)) {
      CompoundState next = c;
      next.components[i].pos = opt;
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::uint32_t disjunctive_sg_fast(const CompoundState& c, SGCache& cache,
                                  const Budget& budget) {
  check_state(c);
  std::uint32_t acc = 0;
  for (const Component& comp : c.components)
    acc ^= sg(*comp.rules, comp.pos, cache, budget);
  return acc;
}

std::uint32_t disjunctive_sg_oracle(const CompoundState& c, SGCache& cache,
                                    const Budget& budget) {
  check_state(c);
  DisjunctiveRuleset rules(state_parts(c));
  return sg(rules, rules.pack(state_positions(c)), cache, budget);
}

std::vector<CompoundState> one_pass_options(const CompoundState& c) {
  check_state(c);
  bool all_terminal = true;
  for (const Component& comp : c.components)
    if (!comp.rules->is_terminal(comp.pos)) {
      all_terminal = false;
      break;
    }
  if (all_terminal) return {};
  std::vector<CompoundState> out;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    for (const PositionKey& opt : c.components[i].rules->options(c.components[i].pos)) {
      CompoundState next = c;
      next.components[i].pos = opt;
      out.push_back(std::move(next));
    }
  }
  if (c.pass_available) {
    CompoundState spent = c;
    spent.pass_available = false;
    out.push_back(std::move(spent));
  }
  return out;
}

std::uint32_t one_pass_sg_oracle(const CompoundState& c, SGCache& cache,
                                 const Budget& budget) {
  check_state(c);
  OnePassRuleset rules(state_parts(c));
  return sg(rules, rules.pack(state_positions(c), c.pass_available), cache,
            budget);
}

std::uint32_t one_pass_sg_fast(const CompoundState& c, SGCache& cache,
                               const Budget& budget, bool verify_components) {
  check_state(c);
  if (verify_components) {
    for (const Component& comp : c.components) {
      Certificate cert = is_one_move(*comp.rules, comp.pos, cache, budget);
      if (!cert.verdict)
        throw std::invalid_argument(
            "one_pass_sg_fast requires one-move components; " +
            to_string(comp.pos) + " has non-terminal zero-SG follower " +
            to_string(*cert.witness));
    }
  }
  auto nim = NimRuleset::instance();
  std::vector<std::shared_ptr<const Ruleset>> parts(c.components.size(), nim);
  std::vector<PositionKey> piles;
  piles.reserve(c.components.size());
  for (const Component& comp : c.components)
    piles.push_back(nim->key({sg(*comp.rules, comp.pos, cache, budget)}));
  OnePassRuleset image(std::move(parts));
  return sg(image, image.pack(piles, c.pass_available), cache, budget);
}

CompoundState homomorphism_counterexample(SGCache& cache,
                                          const Budget& budget) {
  auto nim2 = TwoPileNimRuleset::instance();
  CompoundState c;
  c.components.push_back(Component{nim2, nim2->key({1, 1})});
  c.pass_available = true;
  const std::uint32_t oracle = one_pass_sg_oracle(c, cache, budget);
  const std::uint32_t image = one_pass_sg_fast(c, cache, budget);
  if (oracle == image)
    throw std::logic_error("counterexample failed to separate: both " +
                           std::to_string(oracle));
  return c;
}

std::vector<std::vector<PositionKey>> hypergraph_options(
    const Hypergraph& h, const std::vector<Component>& components) {
  if (components.empty())
    throw std::invalid_argument("compound needs components");
  if (h.vertex_count() != components.size())
    throw std::invalid_argument("hypergraph vertex count != component count");
  std::set<std::vector<PositionKey>> seen;
  for (const auto& edge : h.edges()) {
    std::vector<std::vector<PositionKey>> choices;
    bool selectable = true;
    for (std::uint32_t v : edge) {
      auto opts = components[v - 1].rules->options(components[v - 1].pos);
      if (opts.empty()) {
        selectable = false;
        break;
      }
      choices.push_back(std::move(opts));
    }
    if (!selectable) continue;
    std::vector<std::size_t> pick(edge.size(), 0);
    while (true) {
      std::vector<PositionKey> next;
      next.reserve(components.size());
      for (const Component& comp : components) next.push_back(comp.pos);
      for (std::size_t j = 0; j < edge.size(); ++j)
        next[edge[j] - 1] = choices[j][pick[j]];
      seen.insert(std::move(next));
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == choices[j].size()) {
        pick[j] = 0;
        ++j;
      }
      if (j == pick.size()) break;
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint32_t hypergraph_sg_oracle(const Hypergraph& h,
                                   const std::vector<Component>& components,
                                   SGCache& cache, const Budget& budget) {
  std::vector<std::shared_ptr<const Ruleset>> parts;
  std::vector<PositionKey> positions;
  for (const Component& comp : components) {
    parts.push_back(comp.rules);
    positions.push_back(comp.pos);
  }
  HypergraphRuleset rules(h, std::move(parts));
  return sg(rules, rules.pack(positions), cache, budget);
}

std::uint32_t hypergraph_sg_fast(const Hypergraph& h,
                                 const std::vector<Component>& components,
                                 SGCache& cache, const Budget& budget,
                                 bool verify_components) {
  if (verify_components) {
    for (const Component& comp : components) {
      Certificate cert =
          is_sg_decreasing(*comp.rules, comp.pos, cache, budget);
      if (!cert.verdict)
        throw std::invalid_argument(
            "hypergraph_sg_fast requires SG-decreasing components; " +
            to_string(comp.pos) + " fails at " + to_string(*cert.witness) +
            " -> " + to_string(*cert.witness_option));
    }
  }
  auto nim = NimRuleset::instance();
  std::vector<Component> image;
  image.reserve(components.size());
  for (const Component& comp : components)
    image.push_back(
        Component{nim, nim->key({sg(*comp.rules, comp.pos, cache, budget)})});
  return hypergraph_sg_oracle(h, image, cache, budget);
}

}  // namespace grundy
