// Command-line front end: one subcommand per scenario kind plus `suite`.
// Exit codes: 0 all verdicts pass, 1 any verdict failed, 2 input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "regpair/scenario.hpp"
#include "regpair/version.hpp"

namespace {

struct CommonArgs {
  std::string scenario_path;
  std::string out_path;
  std::string format = "text";
  double tol = -1.0;
  uint64_t seed = 0;
  bool seed_set = false;
  long max_cells = 600000;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file")->required();
  cmd->add_option("--out", args.out_path, "Write the report to this file");
  cmd->add_option("--format", args.format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--tol", args.tol, "Numeric tolerance override");
  cmd->add_option("--seed", args.seed, "Seed override")->each([&](const std::string&) {
    args.seed_set = true;
  });
  cmd->add_option("--max-cells", args.max_cells, "Quadrature cell budget");
}

int run_kind(const std::string& kind, const CommonArgs& args) {
  try {
    regpair::Scenario s = regpair::load_scenario(args.scenario_path);
    if (s.kind != kind) {
      std::cerr << "error: scenario kind is \"" << s.kind << "\" but the subcommand is \""
                << kind << "\"\n";
      return 2;
    }
    regpair::RunOptions opts;
    if (args.tol > 0) opts.tol = args.tol;
    if (args.seed_set) opts.seed = args.seed;
    opts.max_cells = args.max_cells;
    regpair::Json report = regpair::run_scenario(s, opts);
    std::string rendered = args.format == "json" ? report.dump(2) + "\n"
                                                 : regpair::report_to_text(report);
    if (!args.out_path.empty()) {
      std::ofstream out(args.out_path);
      if (!out) {
        std::cerr << "error: cannot write " << args.out_path << "\n";
        return 2;
      }
      out << (args.format == "json" ? report.dump(2) + "\n" : rendered);
      std::cout << rendered;
    } else {
      std::cout << rendered;
    }
    return regpair::report_pass(report) ? 0 : 1;
  } catch (const regpair::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical verification of archimedean cycle pairings"};
  app.set_version_flag("--version", REGPAIR_VERSION);
  app.require_subcommand(1);

  const char* kinds[] = {"weil",  "tame",   "pair0",    "reciprocity0", "projection0",
                         "witness", "hmap", "ledger", "currents", "pair1", "suite"};
  std::map<std::string, CommonArgs> args;
  for (const char* kind : kinds) {
    CLI::App* cmd = app.add_subcommand(kind, std::string("Run a ") + kind + " scenario");
    add_common(cmd, args[kind]);
  }

  CLI11_PARSE(app, argc, argv);
  for (const char* kind : kinds) {
    if (app.got_subcommand(kind)) return run_kind(kind, args[kind]);
  }
  return 2;
}
