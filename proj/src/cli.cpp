#include "grundy/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grundy/chocolate.hpp"
#include "grundy/classify.hpp"
#include "grundy/compound.hpp"
#include "grundy/nim_pass.hpp"
#include "grundy/stair.hpp"
#include "grundy/verify.hpp"

namespace grundy {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

std::vector<std::uint32_t> read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file " + path);
  std::vector<std::uint32_t> values;
  std::string token;
  while (in >> token) {
    std::size_t start = 0;
    while (start < token.size()) {
      std::size_t comma = token.find(',', start);
      if (comma == std::string::npos) comma = token.size();
      if (comma > start)
        values.push_back(
            static_cast<std::uint32_t>(std::stoul(token.substr(start, comma - start))));
      start = comma + 1;
    }
  }
  if (values.empty()) throw std::invalid_argument("empty table file " + path);
  return values;
}

HFunction parse_h(const std::string& spec) {
  if (spec == "log-step") return HFunction::log_step();
  if (spec.rfind("floor-div:", 0) == 0)
    return HFunction::floor_div(
        static_cast<std::uint32_t>(std::stoul(spec.substr(10))));
  if (spec.rfind("table:", 0) == 0)
    return HFunction::finite_table(read_table_file(spec.substr(6)));
  throw std::invalid_argument(
      "unknown h selector '" + spec +
      "' (expected floor-div:<k>, log-step, or table:<path>)");
}

FFunction parse_f(const std::string& spec) {
  if (spec == "f1") return FFunction::f1();
  if (spec == "f2") return FFunction::f2();
  if (spec.rfind("from-h:", 0) == 0)
    return FFunction::from_h(parse_h(spec.substr(7)));
  if (spec.rfind("sum-div:", 0) == 0)
    return FFunction::sum_floor_div(
        static_cast<std::uint32_t>(std::stoul(spec.substr(8))));
  throw std::invalid_argument(
      "unknown F selector '" + spec +
      "' (expected from-h:<h>, sum-div:<d>, f1, or f2)");
}

void need_coords(const std::vector<std::uint64_t>& coords, std::size_t n,
                 const std::string& ruleset) {
  if (coords.size() != n)
    throw std::invalid_argument(ruleset + " needs " + std::to_string(n) +
                                " coordinates, got " +
                                std::to_string(coords.size()));
}

struct SgRequest {
  std::string ruleset;
  std::vector<std::uint64_t> coords;
  std::string h_spec = "floor-div:1";
  std::string f_spec = "from-h:floor-div:1";
  bool pass = false;
  std::string format = "plain";
};

std::uint32_t eval_sg(const SgRequest& req, SGCache& cache,
                      const Budget& budget) {
  if (req.ruleset == "nim") {
    need_coords(req.coords, 1, "nim");
    auto nim = NimRuleset::instance();
    return sg(*nim, nim->key(req.coords), cache, budget);
  }
  if (req.ruleset == "nim2-single") {
    need_coords(req.coords, 2, "nim2-single");
    auto nim2 = TwoPileNimRuleset::instance();
    return sg(*nim2, nim2->key(req.coords), cache, budget);
  }
  if (req.ruleset == "nim-pass") {
    if (req.coords.empty())
      throw std::invalid_argument("nim-pass needs at least one pile");
    std::vector<std::uint32_t> piles;
    for (std::uint64_t v : req.coords)
      piles.push_back(static_cast<std::uint32_t>(v));
    return gp_n(piles, cache, budget);
  }
  if (req.ruleset == "choco2") {
    need_coords(req.coords, 2, "choco2");
    Choco2Ruleset bar(parse_h(req.h_spec));
    PositionKey g = bar.position(static_cast<std::uint32_t>(req.coords[0]),
                                 static_cast<std::uint32_t>(req.coords[1]));
    return sg(bar, g, cache, budget);
  }
  if (req.ruleset == "choco3") {
    need_coords(req.coords, 3, "choco3");
    Choco3Ruleset bar(parse_f(req.f_spec));
    PositionKey g = bar.position(static_cast<std::uint32_t>(req.coords[0]),
                                 static_cast<std::uint32_t>(req.coords[1]),
                                 static_cast<std::uint32_t>(req.coords[2]));
    return sg(bar, g, cache, budget);
  }
  if (req.ruleset == "stair-pass") {
    need_coords(req.coords, 3, "stair-pass");
    StairRuleset stair(parse_h(req.h_spec));
    StairPosition s{static_cast<std::uint32_t>(req.coords[0]),
                    static_cast<std::uint32_t>(req.coords[1]),
                    static_cast<std::uint32_t>(req.coords[2]), req.pass};
    return sg(stair, stair.position(s), cache, budget);
  }
  throw std::invalid_argument(
      "unknown ruleset '" + req.ruleset +
      "' (expected nim, nim2-single, nim-pass, choco2, choco3, stair-pass)");
}

void write_cb2_table_csv(std::ostream& out, const HFunction& h,
                         std::uint32_t z_max, SGCache& cache,
                         const Budget& budget) {
  const std::uint32_t y_max = h(z_max);
  for (std::uint32_t z = 0; z <= z_max; ++z) out << ',' << z;
  out << '\n';
  for (std::uint32_t y = 0; y <= y_max; ++y) {
    out << y;
    for (std::uint32_t z = 0; z <= z_max; ++z) {
      out << ',';
      if (y <= h(z)) out << choco2_sg(h, y, z, cache, budget);
    }
    out << '\n';
  }
}

int cmd_sg(const SgRequest& req, const Budget& budget, std::ostream& out) {
  SGCache cache;
  const std::uint32_t value = eval_sg(req, cache, budget);
  if (req.format == "jsonl") {
    json record{{"ruleset", req.ruleset}, {"coords", req.coords}, {"sg", value}};
    if (req.ruleset == "stair-pass") record["pass"] = req.pass;
    out << record.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kOk;
}

int cmd_table(const std::string& which, std::uint32_t max, std::uint32_t z_max,
              const std::string& h_spec, const std::string& out_path,
              const Budget& budget, std::ostream& out) {
  std::ostringstream csv;
  SGCache cache;
  if (which == "gp") {
    write_gp_table_csv(csv, gp_table(max, cache, budget));
  } else if (which == "cb2") {
    write_cb2_table_csv(csv, parse_h(h_spec), z_max, cache, budget);
  } else {
    throw std::invalid_argument("unknown table '" + which +
                                "' (expected gp or cb2)");
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + out_path);
    file << csv.str();
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const VerifyConfig& config,
               std::ostream& out) {
  const VerificationReport report = run_suite(suite, config);
  for (const std::string& note : report.notes) out << "note: " << note << '\n';
  for (const json& m : report.mismatches) out << m.dump() << '\n';
  out << "suite=" << report.suite << " cases=" << report.cases
      << " mismatches=" << report.mismatches.size() << " elapsed="
      << json(report.elapsed_seconds).dump() << "s\n";
  return report.ok() ? kOk : kMismatch;
}

int cmd_classify(const SgRequest& req, const Budget& budget,
                 std::ostream& out) {
  SGCache cache;
  std::unique_ptr<Ruleset> owned;
  const Ruleset* rules = nullptr;
  PositionKey g;
  if (req.ruleset == "nim") {
    need_coords(req.coords, 1, "nim");
    auto nim = NimRuleset::instance();
    rules = nim.get();
    g = nim->key(req.coords);
  } else if (req.ruleset == "nim2-single") {
    need_coords(req.coords, 2, "nim2-single");
    auto nim2 = TwoPileNimRuleset::instance();
    rules = nim2.get();
    g = nim2->key(req.coords);
  } else if (req.ruleset == "choco2") {
    need_coords(req.coords, 2, "choco2");
    auto bar = std::make_unique<Choco2Ruleset>(parse_h(req.h_spec));
    g = bar->position(static_cast<std::uint32_t>(req.coords[0]),
                      static_cast<std::uint32_t>(req.coords[1]));
    rules = bar.get();
    owned = std::move(bar);
  } else if (req.ruleset == "choco3") {
    need_coords(req.coords, 3, "choco3");
    auto bar = std::make_unique<Choco3Ruleset>(parse_f(req.f_spec));
    g = bar->position(static_cast<std::uint32_t>(req.coords[0]),
                      static_cast<std::uint32_t>(req.coords[1]),
                      static_cast<std::uint32_t>(req.coords[2]));
    rules = bar.get();
    owned = std::move(bar);
  } else if (req.ruleset == "stair-pass") {
    need_coords(req.coords, 3, "stair-pass");
    auto stair = std::make_unique<StairRuleset>(parse_h(req.h_spec));
    g = stair->position(StairPosition{static_cast<std::uint32_t>(req.coords[0]),
                                      static_cast<std::uint32_t>(req.coords[1]),
                                      static_cast<std::uint32_t>(req.coords[2]),
                                      req.pass});
    rules = stair.get();
    owned = std::move(stair);
  } else {
    throw std::invalid_argument("unknown ruleset '" + req.ruleset + "'");
  }

  const Certificate om = is_one_move(*rules, g, cache, budget);
  out << "one-move: " << (om.verdict ? "true" : "false");
  if (!om.verdict) out << " (witness " << to_string(*om.witness) << ")";
  out << '\n';

  const Certificate sd = is_sg_decreasing(*rules, g, cache, budget);
  out << "sg-decreasing: " << (sd.verdict ? "true" : "false");
  if (!sd.verdict)
    out << " (witness " << to_string(*sd.witness) << " -> "
        << to_string(*sd.witness_option) << ")";
  out << '\n';
  return kOk;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GRUNDY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("GRUNDY_BUDGET must be a positive integer");
  }
  return Budget{}.max_visited;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sprague-Grundy engine for impartial games with a pass-move"};
  app.require_subcommand(1);
  // --h is a domain flag here, so help keeps only its long spelling.
  app.set_help_flag("--help", "print help");

  std::uint64_t budget_limit = 0;
  app.add_option("--budget", budget_limit,
                 "position budget per computation (default 10^7, or "
                 "GRUNDY_BUDGET)");

  auto add_subcommand = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  SgRequest sg_req;
  CLI::App* sg_cmd = add_subcommand("sg", "print the SG-value of a position");
  sg_cmd->add_option("ruleset", sg_req.ruleset,
                     "nim | nim2-single | nim-pass | choco2 | choco3 | stair-pass")
      ->required();
  sg_cmd->add_option("coords", sg_req.coords, "position coordinates");
  sg_cmd->add_option("--h", sg_req.h_spec,
                     "staircase: floor-div:<k> | log-step | table:<path>");
  sg_cmd->add_option("--f", sg_req.f_spec,
                     "bar shape: from-h:<h> | sum-div:<d> | f1 | f2");
  sg_cmd->add_flag("--pass", sg_req.pass, "pass still available (stair-pass)");
  sg_cmd->add_option("--format", sg_req.format, "plain | jsonl")
      ->check(CLI::IsMember({"plain", "jsonl"}));

  std::string table_which;
  std::uint32_t table_max = 12, table_zmax = 15;
  std::string table_h = "log-step", table_out;
  CLI::App* table_cmd = add_subcommand("table", "emit a golden CSV table");
  table_cmd->add_option("which", table_which, "gp | cb2")->required();
  table_cmd->add_option("--max", table_max, "largest pile index (gp)");
  table_cmd->add_option("--zmax", table_zmax, "largest width (cb2)");
  table_cmd->add_option("--h", table_h, "staircase selector (cb2)");
  table_cmd->add_option("--out", table_out, "write to file instead of stdout");

  std::string verify_suite;
  VerifyConfig verify_cfg;
  CLI::App* verify_cmd =
      add_subcommand("verify", "run an exhaustive verification sweep");
  verify_cmd->add_option("suite", verify_suite, "one of: thm1 thm3 thm4 thm5 thm6 lemma1 lemma2 lemma4 lemma5 cor1 cor2 cor3 cor4 counterexample")
      ->required();
  verify_cmd->add_option("--max", verify_cfg.max, "main sweep bound");
  verify_cmd->add_option("--xmax", verify_cfg.x_max, "x bound");
  verify_cmd->add_option("--zmax", verify_cfg.z_max, "z bound");
  verify_cmd->add_option("--imax", verify_cfg.i_max, "quotient exponent bound");
  verify_cmd->add_option("--trials", verify_cfg.trials, "randomized trial count");
  verify_cmd->add_option("--seed", verify_cfg.seed, "trial RNG seed");

  SgRequest cls_req;
  CLI::App* classify_cmd = add_subcommand(
      "classify", "one-move / SG-decreasing certificates for a position");
  classify_cmd->add_option("ruleset", cls_req.ruleset,
                           "nim | nim2-single | choco2 | choco3 | stair-pass")
      ->required();
  classify_cmd->add_option("coords", cls_req.coords, "position coordinates");
  classify_cmd->add_option("--h", cls_req.h_spec, "staircase selector");
  classify_cmd->add_option("--f", cls_req.f_spec, "bar shape selector");
  classify_cmd->add_flag("--pass", cls_req.pass, "pass still available");

  std::vector<const char*> argv;
  argv.push_back("grundy");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Budget budget{budget_limit > 0 ? budget_limit : default_budget()};
    verify_cfg.budget = budget;
    if (*sg_cmd) return cmd_sg(sg_req, budget, out);
    if (*table_cmd)
      return cmd_table(table_which, table_max, table_zmax, table_h, table_out,
                       budget, out);
    if (*verify_cmd) return cmd_verify(verify_suite, verify_cfg, out);
    if (*classify_cmd) return cmd_classify(cls_req, budget, out);
    err << "error: no command\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace grundy
