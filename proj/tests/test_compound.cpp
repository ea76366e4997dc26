#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "grundy/chocolate.hpp"
#include "grundy/compound.hpp"

using namespace grundy;

namespace {

Component nim_pile(std::uint32_t m) {
  auto nim = NimRuleset::instance();
  return Component{nim, nim->key({m})};
}

Component cb2_pos(std::uint32_t y, std::uint32_t z) {
  static auto bar =
      std::make_shared<const Choco2Ruleset>(HFunction::floor_div(1));
  return Component{bar, bar->position(y, z)};
}

CompoundState piles(std::initializer_list<std::uint32_t> ms, bool pass) {
  CompoundState c;
  for (std::uint32_t m : ms) c.components.push_back(nim_pile(m));
  c.pass_available = pass;
  return c;
}

}  // namespace

TEST_CASE("disjunctive options replace exactly one component") {
  auto opts = disjunctive_options(piles({1, 1}, false));
  REQUIRE(opts.size() == 2);
  CHECK(opts[0].components[0].pos.payload[0] == 0);
  CHECK(opts[0].components[1].pos.payload[0] == 1);
  CHECK(opts[1].components[1].pos.payload[0] == 0);

  CHECK(disjunctive_options(piles({0, 0}, false)).empty());
  CHECK(disjunctive_options(piles({2, 1}, false)).size() == 3);
  CHECK_THROWS_AS(disjunctive_options(piles({1}, true)), std::invalid_argument);
  CHECK_THROWS_AS(disjunctive_options(CompoundState{}), std::invalid_argument);
}

TEST_CASE("compound SG is the XOR of component SGs") {
  SGCache cache;
  CHECK(disjunctive_sg_fast(piles({1, 2, 3}, false), cache) == 0);
  CHECK(disjunctive_sg_fast(piles({4, 7}, false), cache) == 3);
  CompoundState mixed{{nim_pile(3), cb2_pos(1, 3)}, false};
  CHECK(disjunctive_sg_fast(mixed, cache) == 1);  // 3 xor 2
}

TEST_CASE("XOR rule against the oracle, exhaustively on small compounds") {
  SGCache cache;
  std::vector<Component> pool;
  for (std::uint32_t m = 0; m <= 6; ++m) pool.push_back(nim_pile(m));
  for (std::uint32_t z = 0; z <= 6; ++z)
    for (std::uint32_t y = 0; y <= z / 2; ++y) pool.push_back(cb2_pos(y, z));
  for (const Component& a : pool)
    for (const Component& b : pool) {
      CompoundState c{{a, b}, false};
      CHECK(disjunctive_sg_fast(c, cache) == disjunctive_sg_oracle(c, cache));
    }
}

TEST_CASE("one-pass options: moves keep the bit, the pass spends it") {
  CHECK(one_pass_options(piles({0, 0}, true)).empty());

  auto opts = one_pass_options(piles({1}, true));
  REQUIRE(opts.size() == 2);
  CHECK(opts[0].components[0].pos.payload[0] == 0);
  CHECK(opts[0].pass_available);
  CHECK(opts[1].components[0].pos.payload[0] == 1);
  CHECK_FALSE(opts[1].pass_available);

  auto spent = one_pass_options(piles({1, 0}, false));
  REQUIRE(spent.size() == 1);
  CHECK_FALSE(spent[0].pass_available);
}

TEST_CASE("the pass never comes back") {
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t b = 0; b <= 3; ++b)
      for (bool pass : {false, true})
        for (const CompoundState& next : one_pass_options(piles({a, b}, pass)))
          if (!pass) CHECK_FALSE(next.pass_available);
}

TEST_CASE("one-pass oracle values") {
  SGCache cache;
  CHECK(one_pass_sg_oracle(piles({0, 1}, true), cache) == 2);
  CHECK(one_pass_sg_oracle(piles({2, 2}, true), cache) == 2);
  CHECK(one_pass_sg_oracle(piles({1}, true), cache) == 2);
  CHECK(one_pass_sg_oracle(piles({0}, true), cache) == 0);
}

TEST_CASE("homomorphism fast path on one-move components") {
  SGCache cache;
  CompoundState a{{nim_pile(1), cb2_pos(0, 2)}, true};
  CHECK(one_pass_sg_fast(a, cache, {}, true) == 0);  // G_P(1, 2)
  CompoundState b{{nim_pile(3), cb2_pos(1, 2)}, true};
  CHECK(one_pass_sg_fast(b, cache, {}, true) == 1);  // G_P(3, 3)
  CompoundState c{{nim_pile(0), cb2_pos(0, 0)}, true};
  CHECK(one_pass_sg_fast(c, cache, {}, true) == 0);
}

TEST_CASE("fast path equals oracle over a small exhaustive slice") {
  SGCache cache;
  for (std::uint32_t m = 0; m <= 6; ++m)
    for (std::uint32_t z = 0; z <= 6; ++z)
      for (std::uint32_t y = 0; y <= z / 2; ++y)
        for (bool pass : {false, true}) {
          CompoundState c{{nim_pile(m), cb2_pos(y, z)}, pass};
          CHECK(one_pass_sg_fast(c, cache, {}, true) ==
                one_pass_sg_oracle(c, cache));
        }
}

TEST_CASE("component order does not change the SG") {
  SGCache cache;
  CompoundState ab{{nim_pile(5), cb2_pos(2, 6)}, true};
  CompoundState ba{{cb2_pos(2, 6), nim_pile(5)}, true};
  CHECK(one_pass_sg_oracle(ab, cache) == one_pass_sg_oracle(ba, cache));
  ab.pass_available = ba.pass_available = false;
  CHECK(disjunctive_sg_oracle(ab, cache) == disjunctive_sg_oracle(ba, cache));
}

TEST_CASE("a zero compound turns nonzero when the pass arrives") {
  SGCache cache;
  for (std::uint32_t a = 0; a <= 6; ++a)
    for (std::uint32_t b = 0; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      CompoundState plain = piles({a, b}, false);
      if (disjunctive_sg_oracle(plain, cache) != 0) continue;
      CHECK(one_pass_sg_oracle(piles({a, b}, true), cache) != 0);
    }
}

TEST_CASE("the counterexample separates oracle from nim image") {
  SGCache cache;
  CompoundState c = homomorphism_counterexample(cache);
  const std::uint32_t oracle = one_pass_sg_oracle(c, cache);
  const std::uint32_t image = one_pass_sg_fast(c, cache);
  CHECK(oracle == 1);
  CHECK(image == 0);

  // Certification refuses the fast path outright.
  CHECK_THROWS_AS(one_pass_sg_fast(c, cache, {}, true), std::invalid_argument);

  // Terminal extras preserve the mismatch.
  CompoundState wide = c;
  wide.components.push_back(nim_pile(0));
  wide.components.push_back(nim_pile(0));
  CHECK(one_pass_sg_oracle(wide, cache) == 1);
  CHECK(one_pass_sg_fast(wide, cache) == 0);

  // Replacing the offender with a terminal position removes it.
  auto nim2 = TwoPileNimRuleset::instance();
  CompoundState tame = wide;
  tame.components[0] = Component{nim2, nim2->key({0, 0})};
  CHECK(one_pass_sg_oracle(tame, cache) == 0);
  CHECK(one_pass_sg_fast(tame, cache) == 0);
}

TEST_CASE("hypergraph construction validates edges") {
  CHECK_THROWS_AS(Hypergraph(2, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(2, {{3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(0, {}), std::invalid_argument);
  CHECK_NOTHROW(Hypergraph(2, {{1}, {2}, {1, 2}}));
}

TEST_CASE("hypergraph moves: singleton edges mirror the disjunctive game") {
  Hypergraph singles(2, {{1}, {2}});
  std::vector<Component> comps{nim_pile(1), nim_pile(1)};
  auto moves = hypergraph_options(singles, comps);
  CHECK(moves.size() == 2);

  Hypergraph both(2, {{1, 2}});
  auto sim = hypergraph_options(both, comps);
  REQUIRE(sim.size() == 1);
  CHECK(sim[0][0].payload[0] == 0);
  CHECK(sim[0][1].payload[0] == 0);

  std::vector<Component> stuck{nim_pile(1), nim_pile(0)};
  CHECK(hypergraph_options(both, stuck).empty());
}

TEST_CASE("hypergraph nim image equals the oracle on SG-decreasing pools") {
  SGCache cache;
  static auto bar =
      std::make_shared<const Choco2Ruleset>(HFunction::floor_div(1));
  std::vector<Component> pool;
  for (std::uint32_t m = 0; m <= 3; ++m) pool.push_back(nim_pile(m));
  for (std::uint32_t z = 0; z <= 3; ++z)
    pool.push_back(Component{bar, bar->position(0, z)});

  const std::vector<Hypergraph> graphs = {
      Hypergraph(2, {{1}, {2}}),
      Hypergraph(2, {{1, 2}}),
      Hypergraph(2, {{1}, {2}, {1, 2}}),
      Hypergraph(2, {{2}, {1, 2}}),
  };
  for (const Hypergraph& h : graphs)
    for (const Component& a : pool)
      for (const Component& b : pool)
        CHECK(hypergraph_sg_fast(h, {a, b}, cache, {}, true) ==
              hypergraph_sg_oracle(h, {a, b}, cache));
}

TEST_CASE("hypergraph fast path rejects non-SG-decreasing components") {
  SGCache cache;
  Hypergraph h(1, {{1}});
  CHECK_THROWS_AS(hypergraph_sg_fast(h, {cb2_pos(1, 3)}, cache, {}, true),
                  std::invalid_argument);
}

TEST_CASE("singleton-edge hypergraphs collapse to the XOR rule") {
  SGCache cache;
  Hypergraph singles(3, {{1}, {2}, {3}});
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t b = 0; b <= 3; ++b)
      for (std::uint32_t c = 0; c <= 3; ++c)
        CHECK(hypergraph_sg_oracle(singles,
                                   {nim_pile(a), nim_pile(b), nim_pile(c)},
                                   cache) == (a ^ b ^ c));
}
