// Command-line front end: abstracts theory specifications into Boolean
// documents, checks Boolean documents for realizability, and benchmarks
// fixture directories.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <boolabs/boolabs.hpp>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw boolabs::ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw boolabs::ParseError("cannot write '" + path + "'");
  out << text;
}

bool parse_switch(const std::string& value, const std::string& flag) {
  if (value == "on") return true;
  if (value == "off") return false;
  throw boolabs::ParseError("flag " + flag + " expects on or off, got '" + value + "'");
}

struct CommonOpts {
  std::string solver_cmd = boolabs::default_solver_cmd();
  int timeout_ms = 60000;
  std::uint64_t seed = 0;
  std::string encoding = "onehot";
  std::string cluster = "on";

  void attach(CLI::App* cmd) {
    cmd->add_option("--solver-cmd", solver_cmd, "SMT solver command line (reads SMT-LIB2 on stdin)");
    cmd->add_option("--timeout-ms", timeout_ms, "per-query solver timeout in milliseconds");
    cmd->add_option("--seed", seed, "seed for model sampling");
    cmd->add_option("--encoding", encoding, "decision encoding: onehot | binary");
    cmd->add_option("--cluster", cluster, "literal clustering: on | off");
  }

  void apply(boolabs::RunConfig& cfg) const {
    cfg.solver_cmd = solver_cmd;
    cfg.timeout_ms = timeout_ms;
    cfg.seed = seed;
    cfg.encoding = boolabs::parse_encoding(encoding);
    cfg.clustering = parse_switch(cluster, "--cluster");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean abstraction for LTL specifications modulo theories"};
  app.require_subcommand(1);

  // --- abstract ---
  auto* cmd_abstract = app.add_subcommand("abstract", "abstract a theory spec into a Boolean document");
  std::string spec_path, out_path, stats_path, algo = "nested", theory, acore;
  std::optional<int> mxi, md, decay;
  std::uint64_t bf_cap = 4096;
  bool force = false;
  CommonOpts abs_common;
  cmd_abstract->add_option("spec", spec_path, "input specification file")->required();
  cmd_abstract->add_option("-o,--output", out_path, "output file for the Boolean document (default stdout)");
  cmd_abstract->add_option("--algo", algo, "algorithm: bf | sat | nested");
  cmd_abstract->add_option("--theory", theory, "override the spec's theory: lia | lra | nra");
  cmd_abstract->add_option("--mxi", mxi, "nested heuristic: inner fatigue budget");
  cmd_abstract->add_option("--md", md, "nested heuristic: enter the inner loop every Md-th invalid model");
  cmd_abstract->add_option("--decay", decay, "nested heuristic: fatigue decay divisor (0 = none)");
  cmd_abstract->add_option("--acore", acore, "nested heuristic: all-antipotential prefilter, on | off");
  cmd_abstract->add_option("--stats", stats_path, "write run statistics JSON to this file");
  cmd_abstract->add_option("--bf-cap", bf_cap, "refuse brute force above this many validity queries");
  cmd_abstract->add_flag("--force", force, "run brute force even above the query cap");
  abs_common.attach(cmd_abstract);

  // --- check ---
  auto* cmd_check = app.add_subcommand("check", "decide realizability of a Boolean document");
  std::string boolspec_path;
  int state_cap = 24;
  cmd_check->add_option("boolspec", boolspec_path, "Boolean document file")->required();
  cmd_check->add_option("--state-cap-bits", state_cap, "refuse games beyond 2^N states");

  // --- bench ---
  auto* cmd_bench = app.add_subcommand("bench", "run every algorithm over a fixture directory");
  std::string bench_dir, report_path;
  int reps = 5;
  CommonOpts bench_common;
  cmd_bench->add_option("dir", bench_dir, "directory of .spec fixtures")->required();
  cmd_bench->add_option("--reps", reps, "repetitions to average per fixture");
  cmd_bench->add_option("--report", report_path, "write the JSON report to this file");
  bench_common.attach(cmd_bench);

  try {
    app.parse(argc, argv);

    if (*cmd_abstract) {
      boolabs::RunConfig cfg;
      abs_common.apply(cfg);
      cfg.algo = boolabs::parse_algo(algo);
      if (!theory.empty()) cfg.theory = boolabs::parse_theory(theory);
      cfg.mxi = mxi;
      cfg.md = md;
      cfg.dc = decay;
      if (!acore.empty()) cfg.acore = parse_switch(acore, "--acore");
      cfg.bf_query_cap = bf_cap;
      cfg.force = force;
      boolabs::AbstractResult res = boolabs::abstract_text(read_file(spec_path), cfg);
      const std::string doc = boolabs::emit_boolean_spec(res.document);
      if (out_path.empty())
        std::cout << doc;
      else
        write_file(out_path, doc);
      if (!stats_path.empty()) write_file(stats_path, boolabs::emit_stats(res.stats));
      return 0;
    }

    if (*cmd_check) {
      boolabs::BooleanSpecDocument doc = boolabs::parse_boolean_spec(read_file(boolspec_path));
      boolabs::GameVerdict v = boolabs::check_document(doc, state_cap);
      std::cout << (v.realizable ? "realizable" : "unrealizable") << "\n";
      return 0;
    }

    if (*cmd_bench) {
      boolabs::RunConfig cfg;
      bench_common.apply(cfg);
      boolabs::BenchReport report = boolabs::bench_directory(bench_dir, reps, cfg);
      std::cout << boolabs::render_bench_table(report);
      if (!report_path.empty()) write_file(report_path, boolabs::emit_bench_report(report));
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const boolabs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
