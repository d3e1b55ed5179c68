// pipeline.hpp -- end-to-end runs: abstraction over all clusters (optionally
// in parallel), realizability checking of documents, and the benchmark
// driver behind the CLI.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <boolabs/game.hpp>
#include <boolabs/io.hpp>
#include <boolabs/literals.hpp>
#include <boolabs/reactions.hpp>
#include <boolabs/search.hpp>
#include <boolabs/smt.hpp>

namespace boolabs {

enum class Algo { BruteForce, ModelLoop, Nested };

inline std::string to_string(Algo a) {
  switch (a) {
    case Algo::BruteForce: return "bf";
    case Algo::ModelLoop: return "sat";
    case Algo::Nested: return "nested";
  }
  throw InternalError("unreachable algorithm tag");
}

inline Algo parse_algo(const std::string& s) {
  if (s == "bf") return Algo::BruteForce;
  if (s == "sat") return Algo::ModelLoop;
  if (s == "nested") return Algo::Nested;
  throw ParseError("unknown algorithm '" + s + "' (expected bf, sat, or nested)");
}

inline Theory parse_theory(const std::string& s) {
  if (s == "lia") return Theory::LIA;
  if (s == "lra") return Theory::LRA;
  if (s == "nra") return Theory::NRA;
  throw ParseError("unknown theory '" + s + "' (expected lia, lra, or nra)");
}

// Observed fast setups: lean inner budgets below six literals, heavy
// budgets with decay and no antipotential-core gating above.
inline HeuristicSetup default_heuristics(int max_cluster_lits) {
  if (max_cluster_lits <= 5) return {10, 2, 0, true};
  return {100, 20, 40, false};
}

struct RunConfig {
  Algo algo = Algo::Nested;
  std::optional<Theory> theory;  // overrides the theory named in the spec file
  // Heuristic fields default from the largest cluster; set any to override.
  std::optional<int> mxi, md, dc;
  std::optional<bool> acore;
  Encoding encoding = Encoding::OneHot;
  bool clustering = true;
  std::string solver_cmd = default_solver_cmd();
  int timeout_ms = 60000;
  std::uint64_t seed = 0;
  std::uint64_t bf_query_cap = 4096;
  bool force = false;
  int sat_lit_cap = 12;
  int enum_lit_cap = 16;
  int game_state_cap_bits = 24;
};

struct AbstractResult {
  BooleanSpecDocument document;
  RunStats stats;
  std::vector<ValidReactionSet> cluster_reactions;
};

namespace detail {

struct ClusterOutcome {
  ValidReactionSet vr;
  GatewayStats stats;
};

inline ClusterOutcome run_cluster(const TheorySpec& spec, const LiteralTable& table,
                                  const Cluster& cluster, const RunConfig& cfg,
                                  const HeuristicSetup& h) {
  ClusterView view = make_cluster_view(spec, table, cluster);
  enumerate_choices(view.size(), cfg.enum_lit_cap);
  SolverConfig scfg{cfg.solver_cmd, cfg.timeout_ms, cfg.seed};
  SmtGateway gateway(scfg);
  gateway.open(view);
  ClusterOutcome out;
  switch (cfg.algo) {
    case Algo::BruteForce:
      out.vr = brute_force(view, gateway, cfg.bf_query_cap, cfg.force);
      break;
    case Algo::ModelLoop:
      out.vr = model_loop(view, gateway, scfg, cfg.sat_lit_cap);
      break;
    case Algo::Nested:
      out.vr = nested_loop(view, gateway, scfg, h, cfg.sat_lit_cap);
      break;
  }
  out.stats = gateway.stats();
  return out;
}

}  // namespace detail

inline AbstractResult abstract_spec(const TheorySpec& input, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  TheorySpec spec = input;
  if (cfg.theory) spec.theory = *cfg.theory;
  AbstractResult result;
  result.stats.algorithm = to_string(cfg.algo);
  result.stats.seed = cfg.seed;

  LiteralTable table;
  FormulaPtr skeleton = substitute(spec, table);
  auto clusters = cluster_literals(table, spec, cfg.clustering);

  int max_lits = 0;
  for (const auto& c : clusters) max_lits = std::max(max_lits, static_cast<int>(c.lits.size()));
  HeuristicSetup h = default_heuristics(max_lits);
  if (cfg.mxi) h.mxi = *cfg.mxi;
  if (cfg.md) h.md = *cfg.md;
  if (cfg.dc) h.dc = *cfg.dc;
  if (cfg.acore) h.acore = *cfg.acore;
  if (h.md < 1) throw ParseError("heuristic Md must be at least 1");
  if (h.mxi < 0 || h.dc < 0) throw ParseError("heuristic MxI and Dc must be nonnegative");
  result.stats.heuristics = h;

  for (const auto& c : clusters)
    result.stats.clusters.push_back(
        {static_cast<int>(c.vars.size()), static_cast<int>(c.lits.size())});

  std::vector<detail::ClusterOutcome> outcomes(clusters.size());
  if (clusters.size() <= 1) {
    for (size_t j = 0; j < clusters.size(); ++j)
      outcomes[j] = detail::run_cluster(spec, table, clusters[j], cfg, h);
  } else {
    // Clusters are independent; give each its own solver processes and merge
    // in declaration order so results stay deterministic.
    std::vector<std::future<detail::ClusterOutcome>> futures;
    for (size_t j = 0; j < clusters.size(); ++j)
      futures.push_back(std::async(std::launch::async, [&, j] {
        return detail::run_cluster(spec, table, clusters[j], cfg, h);
      }));
    for (size_t j = 0; j < clusters.size(); ++j) outcomes[j] = futures[j].get();
  }

  std::vector<ValidReactionSet> vrs;
  for (auto& o : outcomes) {
    result.stats.outer_queries += o.stats.outer_queries;
    result.stats.inner_queries += o.stats.inner_queries;
    result.stats.smt_ms += o.stats.smt_ms;
    result.stats.valid_reactions += o.vr.size();
    vrs.push_back(std::move(o.vr));
  }
  result.document = assemble(skeleton, table, clusters, vrs, cfg.encoding);
  result.cluster_reactions = std::move(vrs);
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

inline AbstractResult abstract_text(const std::string& text, const RunConfig& cfg) {
  return abstract_spec(parse_theory_spec(text), cfg);
}

// ---------------------------------------------------------------------------
// Benchmark driver.
// ---------------------------------------------------------------------------

struct BenchRow {
  std::string fixture;
  std::string algo;
  std::vector<ClusterShape> clusters;
  double outer_queries = 0.0;
  double inner_queries = 0.0;
  double smt_ms = 0.0;
  double wall_ms = 0.0;
  std::uint64_t valid_reactions = 0;
  std::string verdict;  // realizable | unrealizable | - (not checkable)
  std::string error;    // empty on success
};

struct BenchReport {
  int reps = 5;
  std::vector<BenchRow> rows;
};

inline BenchRow bench_one(const std::string& name, const std::string& text, Algo algo,
                          const RunConfig& base, int reps) {
  BenchRow row;
  row.fixture = name;
  row.algo = to_string(algo);
  try {
    RunConfig cfg = base;
    cfg.algo = algo;
    AbstractResult last;
    for (int r = 0; r < reps; ++r) {
      AbstractResult res = abstract_text(text, cfg);
      row.outer_queries += static_cast<double>(res.stats.outer_queries);
      row.inner_queries += static_cast<double>(res.stats.inner_queries);
      row.smt_ms += res.stats.smt_ms;
      row.wall_ms += res.stats.wall_ms;
      last = std::move(res);
    }
    row.outer_queries /= reps;
    row.inner_queries /= reps;
    row.smt_ms /= reps;
    row.wall_ms /= reps;
    row.clusters = last.stats.clusters;
    row.valid_reactions = last.stats.valid_reactions;
    try {
      row.verdict = check_document(last.document, base.game_state_cap_bits).realizable
                        ? "realizable"
                        : "unrealizable";
    } catch (const Error&) {
      row.verdict = "-";  // document outside the desk-scale game fragment
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

inline BenchReport bench_directory(const std::string& dir, int reps, const RunConfig& base) {
  BenchReport report;
  report.reps = reps;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".spec")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    for (Algo algo : {Algo::BruteForce, Algo::ModelLoop, Algo::Nested})
      report.rows.push_back(bench_one(f.stem().string(), text, algo, base, reps));
  }
  return report;
}

inline std::string emit_bench_report(const BenchReport& report) {
  nlohmann::json j;
  j["reps"] = report.reps;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row;
    row["fixture"] = r.fixture;
    row["algo"] = r.algo;
    row["clusters"] = nlohmann::json::array();
    for (const auto& c : r.clusters)
      row["clusters"].push_back({{"vars", c.vars}, {"lits", c.lits}});
    row["outer_queries"] = r.outer_queries;
    row["inner_queries"] = r.inner_queries;
    row["smt_ms"] = r.smt_ms;
    row["wall_ms"] = r.wall_ms;
    row["valid_reactions"] = r.valid_reactions;
    row["verdict"] = r.verdict;
    row["error"] = r.error;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

inline std::string render_bench_table(const BenchReport& report) {
  std::ostringstream out;
  out << "fixture              algo    clusters      outer    inner    smt_ms    wall_ms  VR    verdict\n";
  for (const auto& r : report.rows) {
    if (!r.error.empty()) {
      out << r.fixture << "  " << r.algo << "  error: " << r.error << "\n";
      continue;
    }
    std::string shapes;
    for (const auto& c : r.clusters) {
      if (!shapes.empty()) shapes += ",";
      shapes += std::to_string(c.vars) + "v" + std::to_string(c.lits) + "l";
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %-7s %-13s %8.1f %8.1f %9.1f %10.1f %-5llu %s\n",
                  r.fixture.c_str(), r.algo.c_str(), shapes.c_str(), r.outer_queries,
                  r.inner_queries, r.smt_ms, r.wall_ms,
                  static_cast<unsigned long long>(r.valid_reactions), r.verdict.c_str());
    out << buf;
  }
  return out.str();
}

}  // namespace boolabs
