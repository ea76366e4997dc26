#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grundy/chocolate.hpp"

using namespace grundy;

namespace {

bool has_triple(const std::vector<std::array<std::uint32_t, 3>>& moves,
                std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return std::find(moves.begin(), moves.end(),
                   std::array<std::uint32_t, 3>{x, y, z}) != moves.end();
}

}  // namespace

TEST_CASE("staircase evaluation") {
  const HFunction fd1 = HFunction::floor_div(1);
  CHECK(fd1(0) == 0);
  CHECK(fd1(7) == 3);
  const HFunction fd2 = HFunction::floor_div(2);
  CHECK(fd2(16) == 4);
  const HFunction log = HFunction::log_step();
  CHECK(log(0) == 0);
  CHECK(log(1) == 0);
  CHECK(log(2) == 1);
  CHECK(log(8) == 7);
  CHECK(log(15) == 7);
}

TEST_CASE("finite tables must be monotone; they clamp past the end") {
  CHECK_THROWS_AS(HFunction::finite_table({0, 2, 1}), std::invalid_argument);
  const HFunction t = HFunction::finite_table({0, 0, 1, 1});
  CHECK(t(3) == 1);
  CHECK(t(100) == 1);
}

TEST_CASE("F tables validate monotonicity and clamp at the edges") {
  CHECK_THROWS_AS(FFunction::finite_table({{0, 1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FFunction::finite_table({{0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FFunction::finite_table({}), std::invalid_argument);
  const FFunction t = FFunction::finite_table({{0, 0, 1}, {0, 1, 2}});
  CHECK(t(0, 2) == 1);
  CHECK(t(5, 9) == 2);
  CHECK_THROWS_AS(ns_check_f(t, 8, 8, 4), std::invalid_argument);
  // Coherence needs F(0,m) = F(1,m); a two-row table passes only with
  // identical rows.
  CHECK_FALSE(ns_check_f(t, 1, 2, 4).pass);
  const FFunction flat = FFunction::finite_table({{0, 0, 1}, {0, 0, 1}});
  CHECK(ns_check_f(flat, 1, 2, 4).pass);
}

TEST_CASE("cut enumeration matches the worked example positions") {
  // (3,3,7), (5,2,7), (5,2,5) are cuts of (5,3,7) under F(x,z) = floor(z/2).
  const FFunction f2 = FFunction::f2();
  auto moves = move_f(f2, 5, 3, 7);
  CHECK(has_triple(moves, 3, 3, 7));
  CHECK(has_triple(moves, 5, 2, 7));
  CHECK(has_triple(moves, 5, 2, 5));

  // (7,3,4) is a cut of (7,6,13) under F(x,z) = floor((x+z)/3).
  const FFunction f1 = FFunction::f1();
  CHECK(has_triple(move_f(f1, 7, 6, 13), 7, 3, 4));

  CHECK(move_f(f1, 0, 0, 0).empty());
}

TEST_CASE("cuts never leave the feasible region, and duplicates collapse") {
  const FFunction f = FFunction::from_h(HFunction::floor_div(1));
  for (std::uint32_t x = 0; x <= 5; ++x)
    for (std::uint32_t z = 0; z <= 8; ++z)
      for (std::uint32_t y = 0; y <= f(x, z); ++y) {
        auto moves = move_f(f, x, y, z);
        std::set<std::array<std::uint32_t, 3>> unique(moves.begin(),
                                                      moves.end());
        CHECK(unique.size() == moves.size());
        for (const auto& [u, v, w] : moves) CHECK(v <= f(u, w));
      }
}

TEST_CASE("two-dimensional bar SG values from the reference table") {
  SGCache cache;
  const HFunction h = HFunction::floor_div(1);
  CHECK(choco2_sg(h, 0, 0, cache) == 0);
  CHECK(choco2_sg(h, 2, 6, cache) == 4);
  CHECK(choco2_sg(h, 1, 3, cache) == 2);
  CHECK(choco2_sg(h, 3, 7, cache) == 4);
  CHECK(choco2_sg(h, 7, 15, cache) == 8);
}

TEST_CASE("three-dimensional bar SG values") {
  SGCache cache;
  const FFunction f = FFunction::from_h(HFunction::floor_div(1));
  CHECK(choco3_sg(f, 0, 0, 0, cache) == 0);
  CHECK(choco3_sg(f, 1, 1, 3, cache) == (1 ^ 1 ^ 3));

  // The incoherent staircase leaves the XOR pattern: (3,1,0) has height
  // F1(3,0) = 1, and its SG is 4, not 3^1^0 = 2.
  const FFunction f1 = FFunction::f1();
  CHECK(choco3_sg(f1, 3, 1, 0, cache) == 4);
}

TEST_CASE("position constructors reject infeasible coordinates") {
  Choco2Ruleset bar(HFunction::floor_div(1));
  CHECK_THROWS_AS(bar.position(9, 7), std::invalid_argument);
  Choco3Ruleset bar3(FFunction::f1());
  CHECK_THROWS_AS(bar3.position(0, 1, 0), std::invalid_argument);
  CHECK_NOTHROW(bar3.position(3, 1, 0));
}

TEST_CASE("coherence check accepts the proven families") {
  for (const HFunction& h : HFunction::builtins()) {
    NsResult r = ns_check_h(h, 256, 10);
    CHECK(r.pass);
  }
}

TEST_CASE("coherence check rejects the identity staircase with a witness") {
  const HFunction ident =
      HFunction::finite_table({0, 1, 2, 3, 4, 5, 6, 7, 8});
  NsResult r = ns_check_h(ident, 8, 4);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->clause == NsClause::QuotientMismatch);
  CHECK(r.witness->a == 0);
  CHECK(r.witness->b == 1);
  CHECK(r.witness->i == 1);
}

TEST_CASE("coherence check refuses to vouch beyond a table's domain") {
  const HFunction t = HFunction::finite_table({0, 0, 1});
  CHECK_THROWS_AS(ns_check_h(t, 64, 10), std::invalid_argument);
  CHECK_NOTHROW(ns_check_h(t, 2, 10));
}

TEST_CASE("tables that skip a value get a diagnostic note") {
  const HFunction t = HFunction::finite_table({0, 0, 0, 3});
  NsResult r = ns_check_h(t, 3, 2);
  CHECK_FALSE(r.pass);  // block {2,3} jumps 0 -> 3
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes[0].find("skips value 1") != std::string::npos);
}

TEST_CASE("nonzero value at the origin fails the single-variable check") {
  const HFunction t = HFunction::finite_table({1, 1, 1, 1});
  NsResult r = ns_check_h(t, 3, 3);
  REQUIRE_FALSE(r.pass);
  CHECK(r.witness->clause == NsClause::OriginNonzero);
}

TEST_CASE("two-variable coherence: shape families pass, the skew one fails") {
  const std::vector<FFunction> good = {
      FFunction::from_h(HFunction::floor_div(1)),
      FFunction::from_h(HFunction::floor_div(2)),
      FFunction::from_h(HFunction::log_step()), FFunction::f2()};
  for (const FFunction& f : good) CHECK(ns_check_f(f, 64, 64, 10).pass);

  NsResult bad = ns_check_f(FFunction::f1(), 64, 64, 10);
  REQUIRE_FALSE(bad.pass);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->slice == NsWitness::Slice::FixedX);
}

TEST_CASE("height cap") {
  CHECK(h_bound(HFunction::floor_div(1), 7));   // 3 <= 3
  CHECK(h_bound(HFunction::log_step(), 8));     // 7 <= 7
  CHECK(h_bound(HFunction::floor_div(2), 16));  // 4 <= 15
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t z = 1; z <= 512; ++z) CHECK(h_bound(h, z));
}

TEST_CASE("xor of feasible cells clears 16 from width 16 on") {
  CHECK(xor_at_least_16(HFunction::floor_div(1), 16));
  CHECK(xor_at_least_16(HFunction::log_step(), 31));
  CHECK(xor_at_least_16(HFunction::floor_div(2), 100));
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t z = 16; z <= 512; ++z) CHECK(xor_at_least_16(h, z));
  CHECK_THROWS_AS(xor_at_least_16(HFunction::floor_div(1), 15),
                  std::invalid_argument);
}

TEST_CASE("small SG classification sets") {
  using P = std::pair<std::uint32_t, std::uint32_t>;
  CHECK(small_sg_classify(0) == std::vector<P>{{0, 0}});
  CHECK(small_sg_classify(4) == std::vector<P>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  auto eight = small_sg_classify(8);
  REQUIRE(eight.size() == 8);
  CHECK(eight.back() == P{7, 15});
  CHECK_THROWS_AS(small_sg_classify(9), std::invalid_argument);
}

TEST_CASE("bar SG equals y xor z across the built-in staircases") {
  SGCache cache;
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t z = 0; z <= 24; ++z)
      for (std::uint32_t y = 0; y <= h(z); ++y)
        CHECK(choco2_sg(h, y, z, cache) == (y ^ z));
}

TEST_CASE("small-SG cells are exactly the classified ones (width <= 24)") {
  SGCache cache;
  std::set<std::pair<std::uint32_t, std::uint32_t>> classified;
  for (std::uint32_t v = 0; v <= 8; ++v)
    for (const auto& yz : small_sg_classify(v)) classified.insert(yz);
  for (const HFunction& h : HFunction::builtins())
    for (std::uint32_t z = 0; z <= 24; ++z)
      for (std::uint32_t y = 0; y <= h(z); ++y) {
        const std::uint32_t v = choco2_sg(h, y, z, cache);
        CHECK((v <= 8) == (classified.count({y, z}) == 1));
      }
}
