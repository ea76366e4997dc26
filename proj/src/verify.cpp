#include "grundy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "grundy/chocolate.hpp"
#include "grundy/classify.hpp"
#include "grundy/compound.hpp"
#include "grundy/nim_pass.hpp"
#include "grundy/stair.hpp"

namespace grundy {

namespace {

using nlohmann::json;

std::uint32_t pick(std::uint32_t value, std::uint32_t fallback) {
  return value == 0 ? fallback : value;
}

struct SuiteRun {
  VerificationReport report;
  std::chrono::steady_clock::time_point t0;

  explicit SuiteRun(std::string name) : t0(std::chrono::steady_clock::now()) {
    report.suite = std::move(name);
  }

  void record(json input, json expected, json actual) {
    report.mismatches.push_back(json{{"suite", report.suite},
                                     {"input", std::move(input)},
                                     {"expected", std::move(expected)},
                                     {"actual", std::move(actual)}});
  }

  void check_eq(json input, std::uint32_t expected, std::uint32_t actual) {
    ++report.cases;
    if (expected != actual) record(std::move(input), expected, actual);
  }

  void check_iff(json input, bool expected, bool actual) {
    ++report.cases;
    if (expected != actual) record(std::move(input), expected, actual);
  }

  VerificationReport finish() {
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const json& a, const json& b) {
                return a["input"].dump() < b["input"].dump();
              });
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return std::move(report);
  }
};

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  // Plain modulo keeps trial streams identical across platforms.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(gen() % n);
  }
};

json compound_input(const CompoundState& c) {
  json parts = json::array();
  for (const Component& comp : c.components) parts.push_back(to_string(comp.pos));
  return json{{"components", parts}, {"pass", c.pass_available}};
}

// ---- sg == 0 exactly at previous-player wins --------------------------

VerificationReport suite_thm1(const VerifyConfig& cfg) {
  SuiteRun run("thm1");
  SGCache cache;
  const Budget& budget = cfg.budget;
  auto check = [&](const Ruleset& r, const PositionKey& g) {
    const bool zero = sg(r, g, cache, budget) == 0;
    const bool prev = outcome_minimax(r, g, budget) == Outcome::P;
    run.check_iff(json{{"position", to_string(g)}}, prev, zero);
  };

  auto nim = NimRuleset::instance();
  for (std::uint32_t m = 0; m <= pick(cfg.max, 30); ++m)
    check(*nim, nim->key({m}));

  auto nim2 = TwoPileNimRuleset::instance();
  for (std::uint32_t a = 0; a <= 8; ++a)
    for (std::uint32_t b = 0; b <= 8; ++b) check(*nim2, nim2->key({a, b}));

  for (const HFunction& h : HFunction::builtins()) {
    Choco2Ruleset bar(h);
    for (std::uint32_t z = 0; z <= pick(cfg.z_max, 12); ++z)
      for (std::uint32_t y = 0; y <= h(z); ++y) check(bar, bar.position(y, z));
  }

  Choco3Ruleset bar3(FFunction::from_h(HFunction::floor_div(1)));
  for (std::uint32_t x = 0; x <= 6; ++x)
    for (std::uint32_t z = 0; z <= 6; ++z)
      for (std::uint32_t y = 0; y <= bar3.f()(x, z); ++y)
        check(bar3, bar3.position(x, y, z));

  StairRuleset stair(HFunction::floor_div(1));
  for (std::uint32_t x = 0; x <= 6; ++x)
    for (std::uint32_t z = 0; z <= 6; ++z)
      for (std::uint32_t y = 0; y <= stair.h()(z); ++y)
        for (std::uint32_t p = 0; p <= 1; ++p)
          check(stair, stair.position(StairPosition{x, y, z, p == 1}));

  OnePassRuleset pass_nim({nim, nim});
  for (std::uint32_t x = 0; x <= 8; ++x)
    for (std::uint32_t y = 0; y <= 8; ++y)
      for (std::uint32_t p = 0; p <= 1; ++p)
        check(pass_nim, pass_nim.pack({nim->key({x}), nim->key({y})}, p == 1));

  return run.finish();
}

// ---- compound SG equals XOR of component SGs --------------------------

std::vector<Component> component_pool(std::uint32_t nim_max,
                                      std::uint32_t cb2_zmax) {
  std::vector<Component> pool;
  auto nim = NimRuleset::instance();
  for (std::uint32_t m = 0; m <= nim_max; ++m)
    pool.push_back(Component{nim, nim->key({m})});
  auto bar = std::make_shared<const Choco2Ruleset>(HFunction::floor_div(1));
  for (std::uint32_t z = 0; z <= cb2_zmax; ++z)
    for (std::uint32_t y = 0; y <= bar->h()(z); ++y)
      pool.push_back(Component{bar, bar->position(y, z)});
  return pool;
}

VerificationReport suite_thm3(const VerifyConfig& cfg) {
  SuiteRun run("thm3");
  SGCache cache;
  const Budget& budget = cfg.budget;
  const auto pool = component_pool(8, pick(cfg.z_max, 8));

  auto check = [&](const CompoundState& c) {
    run.check_eq(compound_input(c), disjunctive_sg_oracle(c, cache, budget),
                 disjunctive_sg_fast(c, cache, budget));
  };

  for (std::size_t i = 0; i < pool.size(); ++i) {
    check(CompoundState{{pool[i]}, false});
    for (std::size_t j = 0; j < pool.size(); ++j) {
      check(CompoundState{{pool[i], pool[j]}, false});
      for (std::size_t k = 0; k < pool.size(); ++k)
        check(CompoundState{{pool[i], pool[j], pool[k]}, false});
    }
  }
  return run.finish();
}

// ---- hypergraph compound over SG-decreasing components ----------------

std::vector<Hypergraph> all_hypergraphs(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> all_edges;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> edge;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask & (1u << v)) edge.push_back(v + 1);
    all_edges.push_back(std::move(edge));
  }
  std::vector<Hypergraph> out;
  for (std::uint32_t mask = 1; mask < (1u << all_edges.size()); ++mask) {
    std::vector<std::vector<std::uint32_t>> edges;
    for (std::size_t e = 0; e < all_edges.size(); ++e)
      if (mask & (1u << e)) edges.push_back(all_edges[e]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

// Pool of SG-decreasing positions: nim piles and flat bars (0, z), which
// play like a nim pile under a different encoding.
std::vector<Component> sg_decreasing_pool(std::uint32_t max) {
  std::vector<Component> pool;
  auto nim = NimRuleset::instance();
  for (std::uint32_t m = 0; m <= max; ++m)
    pool.push_back(Component{nim, nim->key({m})});
  auto bar = std::make_shared<const Choco2Ruleset>(HFunction::floor_div(1));
  for (std::uint32_t z = 0; z <= max; ++z)
    pool.push_back(Component{bar, bar->position(0, z)});
  return pool;
}

VerificationReport suite_thm4(const VerifyConfig& cfg) {
  SuiteRun run("thm4");
  SGCache cache;
  const Budget& budget = cfg.budget;

  auto check = [&](const Hypergraph& h, const std::vector<Component>& comps) {
    json input{{"hypergraph", h.label()}};
    json parts = json::array();
    for (const Component& comp : comps) parts.push_back(to_string(comp.pos));
    input["components"] = parts;
    run.check_eq(std::move(input), hypergraph_sg_oracle(h, comps, cache, budget),
                 hypergraph_sg_fast(h, comps, cache, budget, true));
  };

  const auto pool2 = sg_decreasing_pool(4);
  for (const Hypergraph& h : all_hypergraphs(2))
    for (const Component& a : pool2)
      for (const Component& b : pool2) check(h, {a, b});

  const auto pool3 = sg_decreasing_pool(3);
  const auto graphs3 = all_hypergraphs(3);
  Rng rng(cfg.seed);
  for (std::uint32_t t = 0; t < pick(cfg.trials, 200); ++t) {
    const Hypergraph& h =
        graphs3[rng.below(static_cast<std::uint32_t>(graphs3.size()))];
    std::vector<Component> comps;
    for (int i = 0; i < 3; ++i)
      comps.push_back(pool3[rng.below(static_cast<std::uint32_t>(pool3.size()))]);
    check(h, comps);
  }
  return run.finish();
}

// ---- bar SG equals coordinate XOR exactly for coherent staircases -----

VerificationReport suite_thm5(const VerifyConfig& cfg) {
  SuiteRun run("thm5");
  SGCache cache;
  const Budget& budget = cfg.budget;
  const std::uint32_t max = pick(cfg.max, 16);
  const std::uint32_t ns_x = pick(cfg.x_max, 64), ns_z = pick(cfg.z_max, 64),
                      ns_i = pick(cfg.i_max, 10);

  const std::vector<FFunction> coherent = {
      FFunction::from_h(HFunction::floor_div(1)),
      FFunction::from_h(HFunction::floor_div(2)),
      FFunction::from_h(HFunction::log_step()), FFunction::f2()};

  for (const FFunction& f : coherent) {
    NsResult ns = ns_check_f(f, ns_x, ns_z, ns_i);
    run.check_iff(json{{"f", f.name()}, {"check", "ns"}}, true, ns.pass);
    if (!ns.pass) continue;
    run.report.notes.push_back(f.name() + ": coherence verified on [0," +
                               std::to_string(ns_x) + "]x[0," +
                               std::to_string(ns_z) + "]");
    for (std::uint32_t x = 0; x <= max; ++x)
      for (std::uint32_t z = 0; z <= max; ++z)
        for (std::uint32_t y = 0; y <= std::min(max, f(x, z)); ++y)
          run.check_eq(json{{"f", f.name()}, {"pos", {x, y, z}}}, x ^ y ^ z,
                       choco3_sg(f, x, y, z, cache, budget));
  }

  // Converse: the incoherent staircase must fail the check and exhibit a
  // position whose SG leaves the XOR pattern.
  const FFunction f1 = FFunction::f1();
  NsResult ns = ns_check_f(f1, ns_x, ns_z, ns_i);
  run.check_iff(json{{"f", f1.name()}, {"check", "ns"}}, false, ns.pass);
  if (ns.witness) run.report.notes.push_back(f1.name() + ": " + ns.witness->describe());
  bool found = false;
  for (std::uint32_t x = 0; x <= max && !found; ++x)
    for (std::uint32_t z = 0; z <= max && !found; ++z)
      for (std::uint32_t y = 0; y <= std::min(max, f1(x, z)) && !found; ++y)
        if (choco3_sg(f1, x, y, z, cache, budget) != (x ^ y ^ z)) {
          found = true;
          run.report.notes.push_back(
              f1.name() + ": SG(" + std::to_string(x) + "," +
              std::to_string(y) + "," + std::to_string(z) + ")=" +
              std::to_string(choco3_sg(f1, x, y, z, cache, budget)) +
              " differs from xor " + std::to_string(x ^ y ^ z));
        }
  run.check_iff(json{{"f", f1.name()}, {"check", "sg-witness"}}, true, found);
  return run.finish();
}

// ---- one-pass homomorphism over one-move components -------------------

VerificationReport suite_thm6(const VerifyConfig& cfg) {
  SuiteRun run("thm6");
  SGCache cache;
  const Budget& budget = cfg.budget;

  auto check = [&](const CompoundState& c) {
    run.check_eq(compound_input(c), one_pass_sg_oracle(c, cache, budget),
                 one_pass_sg_fast(c, cache, budget, true));
  };

  // Exhaustive two-component slice: every nim pile up to 12 against every
  // bar position with z <= 15.
  {
    auto nim = NimRuleset::instance();
    auto bar = std::make_shared<const Choco2Ruleset>(HFunction::floor_div(1));
    for (std::uint32_t m = 0; m <= pick(cfg.max, 12); ++m)
      for (std::uint32_t z = 0; z <= 15; ++z)
        for (std::uint32_t y = 0; y <= bar->h()(z); ++y)
          check(CompoundState{{Component{nim, nim->key({m})},
                               Component{bar, bar->position(y, z)}},
                              true});
  }

  // Seeded random compounds of 2..4 components. Larger compounds draw from
  // smaller coordinate pools to keep the oracle's product game tree at desk
  // scale while the two-component trials still cover SG values 0..15.
  Rng rng(cfg.seed);
  auto nim = NimRuleset::instance();
  std::vector<std::shared_ptr<const Choco2Ruleset>> bars;
  for (const HFunction& h : HFunction::builtins())
    bars.push_back(std::make_shared<const Choco2Ruleset>(h));

  for (std::uint32_t t = 0; t < pick(cfg.trials, 1000); ++t) {
    const std::uint32_t size = 2 + rng.below(3);
    const std::uint32_t nim_max = size == 2 ? 15 : size == 3 ? 12 : 8;
    const std::uint32_t z_max = size == 2 ? 15 : size == 3 ? 8 : 6;
    CompoundState c;
    c.pass_available = true;
    for (std::uint32_t i = 0; i < size; ++i) {
      if (rng.below(2) == 0) {
        c.components.push_back(Component{nim, nim->key({rng.below(nim_max + 1)})});
      } else {
        const auto& bar = bars[rng.below(static_cast<std::uint32_t>(bars.size()))];
        const std::uint32_t z = rng.below(z_max + 1);
        const std::uint32_t y = rng.below(bar->h()(z) + 1);
        c.components.push_back(Component{bar, bar->position(y, z)});
      }
    }
    check(c);
  }
  return run.finish();
}

// ---- staircase height cap ---------------------------------------------

VerificationReport suite_lemma1(const VerifyConfig& cfg) {
  SuiteRun run("lemma1");
  const std::uint32_t z_max = pick(cfg.z_max, 512);
  const std::uint32_t i_max = pick(cfg.i_max, 10);
  for (const HFunction& h : HFunction::builtins()) {
    NsResult ns = ns_check_h(h, z_max, i_max);
    run.check_iff(json{{"h", h.name()}, {"check", "ns"}}, true, ns.pass);
    for (std::uint32_t z = 1; z <= z_max; ++z)
      run.check_iff(json{{"h", h.name()}, {"z", z}}, true, h_bound(h, z));
  }
  return run.finish();
}

// ---- xor of feasible (y, z) clears 16 beyond z = 16 --------------------

VerificationReport suite_lemma2(const VerifyConfig& cfg) {
  SuiteRun run("lemma2");
  const std::uint32_t z_max = pick(cfg.z_max, 512);
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t z = 16; z <= z_max; ++z)
      run.check_iff(json{{"h", h.name()}, {"z", z}}, true,
                    xor_at_least_16(h, z));
  return run.finish();
}

// ---- small SG-values occupy exactly the classified cells --------------

VerificationReport suite_lemma4(const VerifyConfig& cfg) {
  SuiteRun run("lemma4");
  SGCache cache;
  const Budget& budget = cfg.budget;
  const std::uint32_t z_max = pick(cfg.z_max, 64);

  std::unordered_map<std::uint64_t, std::uint32_t> classified;
  for (std::uint32_t v = 0; v <= 8; ++v)
    for (const auto& [y, z] : small_sg_classify(v))
      classified[(static_cast<std::uint64_t>(y) << 32) | z] = v;

  for (const HFunction& h : HFunction::builtins()) {
    for (std::uint32_t z = 0; z <= z_max; ++z)
      for (std::uint32_t y = 0; y <= h(z); ++y) {
        const std::uint32_t v = choco2_sg(h, y, z, cache, budget);
        auto it = classified.find((static_cast<std::uint64_t>(y) << 32) | z);
        const std::uint32_t expected = it == classified.end() ? 9 : it->second;
        run.check_eq(json{{"h", h.name()}, {"pos", {y, z}}}, expected,
                     v <= 8 ? v : 9);
      }
  }
  return run.finish();
}

// ---- closed forms for two-pile pass-nim SG in {0,1,2} ------------------

VerificationReport suite_lemma5(const VerifyConfig& cfg) {
  SuiteRun run("lemma5");
  SGCache cache;
  const Budget& budget = cfg.budget;
  const std::uint32_t max = pick(cfg.max, 200);
  for (std::uint32_t x = 0; x <= max; ++x)
    for (std::uint32_t y = 0; y <= max; ++y) {
      const std::uint32_t v = gp(x, y, cache, budget);
      run.check_iff(json{{"pred", "zero"}, {"pos", {x, y}}}, v == 0,
                    gp_is_zero(x, y));
      run.check_iff(json{{"pred", "one"}, {"pos", {x, y}}}, v == 1,
                    gp_is_one(x, y));
      run.check_iff(json{{"pred", "two"}, {"pos", {x, y}}}, v == 2,
                    gp_is_two(x, y));
      const int hits = int(gp_is_zero(x, y)) + int(gp_is_one(x, y)) +
                       int(gp_is_two(x, y));
      run.check_iff(json{{"pred", "exclusive"}, {"pos", {x, y}}}, true,
                    hits <= 1);
    }
  return run.finish();
}

// ---- two-dimensional bar SG equals y xor z ------------------------------

VerificationReport suite_cor1(const VerifyConfig& cfg) {
  SuiteRun run("cor1");
  SGCache cache;
  const Budget& budget = cfg.budget;
  const std::uint32_t z_max = pick(cfg.z_max, 64);
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t z = 0; z <= z_max; ++z)
      for (std::uint32_t y = 0; y <= h(z); ++y)
        run.check_eq(json{{"h", h.name()}, {"pos", {y, z}}}, y ^ z,
                     choco2_sg(h, y, z, cache, budget));
  return run.finish();
}

// ---- stair-with-pass membership sets for SG 0, 1, 2 ---------------------

template <typename Pred>
VerificationReport stair_membership_suite(const char* name,
                                          std::uint32_t target, Pred pred,
                                          const VerifyConfig& cfg) {
  SuiteRun run(name);
  SGCache cache;
  const Budget& budget = cfg.budget;
  const std::uint32_t x_max = pick(cfg.x_max, 20);
  const std::uint32_t z_max = pick(cfg.z_max, 20);
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t x = 0; x <= x_max; ++x)
      for (std::uint32_t z = 0; z <= z_max; ++z)
        for (std::uint32_t y = 0; y <= h(z); ++y)
          for (std::uint32_t p = 0; p <= 1; ++p) {
            const StairPosition s{x, y, z, p == 1};
            run.check_iff(json{{"h", h.name()}, {"pos", {x, y, z, p}}},
                          stair_sg(h, s, cache, budget) == target, pred(h, s));
          }
  return run.finish();
}

VerificationReport suite_cor2(const VerifyConfig& cfg) {
  return stair_membership_suite("cor2", 0, in_A, cfg);
}
VerificationReport suite_cor3(const VerifyConfig& cfg) {
  return stair_membership_suite("cor3", 1, in_B, cfg);
}
VerificationReport suite_cor4(const VerifyConfig& cfg) {
  return stair_membership_suite("cor4", 2, in_C, cfg);
}

// ---- the homomorphism needs one-move components ------------------------

VerificationReport suite_counterexample(const VerifyConfig& cfg) {
  SuiteRun run("counterexample");
  SGCache cache;
  const Budget& budget = cfg.budget;

  CompoundState c = homomorphism_counterexample(cache, budget);
  const std::uint32_t oracle = one_pass_sg_oracle(c, cache, budget);
  const std::uint32_t image = one_pass_sg_fast(c, cache, budget);
  run.check_iff(compound_input(c), true, oracle != image);
  run.report.notes.push_back("oracle SG " + std::to_string(oracle) +
                             ", nim-image SG " + std::to_string(image) +
                             " at " + to_string(c.components[0].pos));

  bool rejected = false;
  try {
    one_pass_sg_fast(c, cache, budget, true);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  run.check_iff(json{{"check", "certification-rejects"}}, true, rejected);

  // Terminal extras keep the mismatch.
  auto nim = NimRuleset::instance();
  CompoundState wide = c;
  wide.components.push_back(Component{nim, nim->key({0})});
  wide.components.push_back(Component{nim, nim->key({0})});
  run.check_iff(compound_input(wide), true,
                one_pass_sg_oracle(wide, cache, budget) !=
                    one_pass_sg_fast(wide, cache, budget));

  // Swapping the offender for a terminal position dissolves it.
  auto nim2 = TwoPileNimRuleset::instance();
  CompoundState tame = wide;
  tame.components[0] = Component{nim2, nim2->key({0, 0})};
  run.check_eq(compound_input(tame), one_pass_sg_oracle(tame, cache, budget),
               one_pass_sg_fast(tame, cache, budget));
  return run.finish();
}

using SuiteFn = VerificationReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"thm1", suite_thm1},       {"thm3", suite_thm3},
      {"thm4", suite_thm4},       {"thm5", suite_thm5},
      {"thm6", suite_thm6},       {"lemma1", suite_lemma1},
      {"lemma2", suite_lemma2},   {"lemma4", suite_lemma4},
      {"lemma5", suite_lemma5},   {"cor1", suite_cor1},
      {"cor2", suite_cor2},       {"cor3", suite_cor3},
      {"cor4", suite_cor4},       {"counterexample", suite_counterexample},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name,
                             const VerifyConfig& config) {
  for (const auto& [suite, fn] : registry())
    if (suite == name) return fn(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace grundy
