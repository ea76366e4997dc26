#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "grundy/cli.hpp"

using namespace grundy;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sg command on every ruleset selector") {
  CHECK(run({"sg", "nim", "5"}).out == "5\n");
  CHECK(run({"sg", "nim2-single", "1", "1"}).out == "0\n");
  CHECK(run({"sg", "nim-pass", "2", "4"}).out == "7\n");
  CHECK(run({"sg", "choco2", "--h", "floor-div:1", "3", "7"}).out == "4\n");
  CHECK(run({"sg", "choco3", "--f", "from-h:floor-div:1", "1", "1", "3"}).out ==
        "3\n");
  CHECK(run({"sg", "stair-pass", "--h", "floor-div:1", "0", "0", "0", "--pass"})
            .out == "0\n");
  CHECK(run({"sg", "stair-pass", "--h", "floor-div:1", "3", "1", "2"}).out ==
        "0\n");
}

TEST_CASE("jsonl output format") {
  auto r = run({"sg", "nim-pass", "2", "4", "--format", "jsonl"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"coords\":[2,4],\"ruleset\":\"nim-pass\",\"sg\":7}\n");
}

TEST_CASE("invalid coordinates exit 2 and name the invariant") {
  auto r = run({"sg", "choco2", "--h", "floor-div:1", "9", "7"});
  CHECK(r.code == 2);
  CHECK(r.err.find("y <= h(z)") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"sg", "mystery", "1"}).code == 2);
  CHECK(run({"sg", "nim"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"table", "nope"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
  auto r = run({"--budget", "10", "sg", "nim-pass", "50", "50"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("table gp matches the golden file byte for byte") {
  auto r = run({"table", "gp", "--max", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp("golden/gp_table_12.csv"));
}

TEST_CASE("table cb2 matches the golden file byte for byte") {
  auto r = run({"table", "cb2", "--h", "log-step", "--zmax", "15"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp("golden/cb2_table_15.csv"));
}

TEST_CASE("table gp --max 0 is the single terminal cell") {
  CHECK(run({"table", "gp", "--max", "0"}).out == ",0\n0,0\n");
}

TEST_CASE("table --out writes the same bytes to a file") {
  const std::string path = "build/tmp_gp_table.csv";
  auto r = run({"table", "gp", "--max", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto direct = run({"table", "gp", "--max", "3"});
  CHECK(slurp(path) == direct.out);
}

TEST_CASE("verify runs clean on a bounded sweep") {
  auto r = run({"verify", "lemma5", "--max", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite=lemma5") != std::string::npos);
  CHECK(r.out.find("mismatches=0") != std::string::npos);
}

TEST_CASE("verify counterexample reports the witness and exits 0") {
  auto r = run({"verify", "counterexample"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches=0") != std::string::npos);
  CHECK(r.out.find("nim2(1,1)") != std::string::npos);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  auto strip_elapsed = [](std::string s) {
    const auto pos = s.find(" elapsed=");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  auto a = run({"verify", "thm6", "--trials", "25", "--seed", "7"});
  auto b = run({"verify", "thm6", "--trials", "25", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}

TEST_CASE("classify command prints certificates") {
  auto nim = run({"classify", "nim", "5"});
  CHECK(nim.out.find("one-move: true") != std::string::npos);
  CHECK(nim.out.find("sg-decreasing: true") != std::string::npos);

  auto bar = run({"classify", "choco2", "--h", "floor-div:1", "1", "3"});
  CHECK(bar.out.find("one-move: true") != std::string::npos);
  CHECK(bar.out.find("sg-decreasing: false") != std::string::npos);
  CHECK(bar.out.find("witness") != std::string::npos);

  auto nim2 = run({"classify", "nim2-single", "1", "1"});
  CHECK(nim2.out.find("one-move: false") != std::string::npos);
  CHECK(nim2.out.find("witness nim2(1,1)") != std::string::npos);
}

TEST_CASE("staircase tables load from files") {
  const std::string path = "build/tmp_h_table.txt";
  {
    std::ofstream f(path);
    f << "0,0,1\n1\n";  // h = [0,0,1,1], same staircase as floor-div:1 there
  }
  CHECK(run({"sg", "choco2", "--h", "table:" + path, "1", "3"}).out == "2\n");
  CHECK(run({"sg", "choco2", "--h", "table:missing.txt", "1", "3"}).code == 2);
  CHECK(run({"sg", "choco2", "--h", "mystery", "1", "3"}).code == 2);
}

TEST_CASE("GRUNDY_BUDGET overrides the default budget") {
  setenv("GRUNDY_BUDGET", "10", 1);
  auto r = run({"sg", "nim-pass", "50", "50"});
  unsetenv("GRUNDY_BUDGET");
  CHECK(r.code == 3);

  setenv("GRUNDY_BUDGET", "bogus", 1);
  auto r2 = run({"sg", "nim", "1"});
  unsetenv("GRUNDY_BUDGET");
  CHECK(r2.code == 2);

  // An explicit flag wins over the environment.
  setenv("GRUNDY_BUDGET", "10", 1);
  auto r3 = run({"--budget", "100000", "sg", "nim-pass", "50", "50"});
  unsetenv("GRUNDY_BUDGET");
  CHECK(r3.code == 0);
}

TEST_CASE("help is reachable and exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sg") != std::string::npos);
}
