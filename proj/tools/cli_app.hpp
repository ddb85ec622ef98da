#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "copsrobber/analysis.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/oracle.hpp"
#include "copsrobber/verify.hpp"

namespace copsrobber::cli {

enum ExitCode : int { kOk = 0, kConfig = 2, kInfeasible = 3, kVerifyFail = 4 };

inline constexpr const char* kBudgetEnv = "COPSROBBER_BUDGET";
inline constexpr const char* kCacheEnv = "COPSROBBER_CACHE";

struct ExperimentConfig {
  std::string command;
  std::string kind;
  std::string rows;     // one value, a comma list, or a range a..b
  std::string cols;
  std::string cops;
  std::string algorithm;
  std::string robber = "worst-case";
  std::string script;   // comma separated moves for the scripted robber
  std::optional<int> deadline;
  bool cop_number = false;
  std::optional<std::uint64_t> budget;
  int round_cap = 0;
  std::string out;
  std::string cache;
  std::uint64_t seed = 0;
};

/// "5", "4,6,8" or "4..8".
inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        if (lo > hi) throw ConfigError(std::string(what) + ": empty range " + item);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) throw;
    throw ConfigError(std::string(what) + ": not an integer list: " + text);
  }
  return out;
}

inline int single(const std::string& text, const char* what) {
  const auto v = parse_int_list(text, what);
  if (v.size() != 1) throw ConfigError(std::string(what) + ": exactly one value required");
  return v.front();
}

inline void require_field(bool present, const std::string& command, const char* flag) {
  if (!present) throw ConfigError(command + ": " + flag + " is required");
}

/// The strategy for a board kind and team size when --algo is omitted.
inline Algorithm default_algorithm(Topology kind, int k) {
  switch (kind) {
    case Topology::PlanarGrid: return k == 2 ? Algorithm::Grid : Algorithm::GridK;
    case Topology::SemiTorus: return k == 2 ? Algorithm::SGrid : Algorithm::SGridK;
    case Topology::Torus: return k == 3 ? Algorithm::TGrid : Algorithm::TGridK;
  }
  return Algorithm::Grid;
}

inline int default_team(Algorithm a) {
  switch (a) {
    case Algorithm::Grid:
    case Algorithm::SGrid:
    case Algorithm::SGridK: return 2;
    case Algorithm::GridK: return 4;
    case Algorithm::TGrid: return 3;
    case Algorithm::TGridK: return 4;
  }
  return 2;
}

inline int default_team(Topology kind) { return kind == Topology::Torus ? 3 : 2; }

inline std::uint64_t budget_of(const ExperimentConfig& cfg) {
  if (cfg.budget) return *cfg.budget;
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw ConfigError(std::string(kBudgetEnv) + ": not a state count: " + env);
    }
  }
  return kDefaultStateBudget;
}

inline std::string cache_dir(const ExperimentConfig& cfg) {
  if (!cfg.cache.empty()) return cfg.cache;
  if (const char* env = std::getenv(kCacheEnv)) return env;
  return {};
}

inline std::string window_text(const CaptureFormula& f) {
  return f.lo == f.hi ? std::to_string(f.lo) : std::to_string(f.lo) + ".." + std::to_string(f.hi);
}

inline std::optional<CaptureFormula> formula_or_none(const GridSpec& spec, int k) {
  try {
    return capture_time_formula(spec, k);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// One board from the config's single-valued fields.
struct Instance {
  GridSpec spec;
  int k;
  std::optional<Algorithm> algorithm;
};

inline Instance single_instance(const ExperimentConfig& cfg, bool needs_algorithm) {
  require_field(!cfg.kind.empty(), cfg.command, "--kind");
  require_field(!cfg.rows.empty(), cfg.command, "-m");
  require_field(!cfg.cols.empty(), cfg.command, "-n");
  const GridSpec spec(parse_topology(cfg.kind), single(cfg.rows, "-m"), single(cfg.cols, "-n"));
  std::optional<Algorithm> algo;
  if (!cfg.algorithm.empty()) algo = parse_algorithm(cfg.algorithm);
  int k = 0;
  if (!cfg.cops.empty()) k = single(cfg.cops, "-k");
  else if (algo) k = default_team(*algo);
  else k = default_team(spec.kind());
  if (needs_algorithm && !algo) algo = default_algorithm(spec.kind(), k);
  return {spec, k, algo};
}

inline void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn,
                       bool binary = false) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw ConfigError("cannot write " + path);
  fn(os);
}

inline RobberPolicy robber_of(const ExperimentConfig& cfg) {
  RobberPolicy p;
  p.kind = parse_robber_kind(cfg.robber);
  if (p.kind == RobberKind::ExternalChoice)
    throw ConfigError("the external robber is only available through the library");
  if (p.kind == RobberKind::Scripted) {
    require_field(!cfg.script.empty(), cfg.command, "--script");
    std::stringstream ss(cfg.script);
    std::string mv;
    while (std::getline(ss, mv, ',')) p.script.push_back(parse_move(mv));
  }
  return p;
}

inline int cmd_simulate(const ExperimentConfig& cfg, std::ostream& out) {
  const Instance in = single_instance(cfg, true);
  GameConfig game{in.spec, *in.algorithm, in.k, robber_of(cfg), std::nullopt, cfg.round_cap,
                  cfg.seed};
  const Trace t = run_game(game);
  if (!cfg.out.empty()) write_file(cfg.out, [&](std::ostream& os) { write_trace(os, t); });
  const auto formula = formula_or_none(in.spec, in.k);
  out << "t=" << (t.outcome == Outcome::Captured ? std::to_string(t.capture_time) : "none")
      << " formula=" << (formula ? window_text(*formula) : "n/a");
  if (in.spec.kind() == Topology::Torus) {
    if (const auto c = torus_components(t))
      out << " components=" << c->t1 << ',' << c->t2 << ',' << c->t3;
  }
  if (t.outcome != Outcome::Captured) out << " (round cap " << t.capture_time << " reached)";
  out << '\n';
  return kOk;
}

inline std::string blob_name(const GridSpec& spec, int k) {
  return std::string(to_string(spec.kind())) + "_" + std::to_string(spec.rows()) + "x" +
         std::to_string(spec.cols()) + "_k" + std::to_string(k) + ".crvt";
}

// Solves through the blob cache when one is configured.
inline ValueTable solve_cached(const ExperimentConfig& cfg, const GridSpec& spec, int k) {
  const std::string dir = cache_dir(cfg);
  std::filesystem::path path;
  if (!dir.empty()) {
    path = std::filesystem::path(dir) / blob_name(spec, k);
    if (std::filesystem::exists(path)) {
      std::ifstream is(path, std::ios::binary);
      return ValueTable::read(is);
    }
  }
  ValueTable table = retrograde_solve(spec, k, budget_of(cfg));
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    write_file(path.string(), [&](std::ostream& os) { table.write(os); }, true);
  }
  return table;
}

inline int cmd_solve(const ExperimentConfig& cfg, std::ostream& out) {
  const Instance in = single_instance(cfg, false);
  if (cfg.cop_number) {
    const int k_max = cfg.cops.empty() ? 4 : in.k;
    for (int k = 1; k <= k_max; ++k) {
      if (StateCodec::estimate(in.spec, k) > budget_of(cfg)) {
        out << "cop number >= " << k << " (k=" << k << " untested: over budget)\n";
        return kInfeasible;
      }
      const ValueTable table = solve_cached(cfg, in.spec, k);
      if (optimal_from_table(table).value) {
        if (!cfg.out.empty())
          write_file(cfg.out, [&](std::ostream& os) { table.write(os); }, true);
        out << "cop number=" << k << '\n';
        return kOk;
      }
    }
    out << "cop number >= " << k_max + 1 << " (untested)\n";
    return kOk;
  }
  if (cfg.cops.empty()) throw ConfigError("solve: -k or --cop-number is required");
  const ValueTable table = solve_cached(cfg, in.spec, in.k);
  if (!cfg.out.empty()) write_file(cfg.out, [&](std::ostream& os) { table.write(os); }, true);
  const OptimalResult best = optimal_from_table(table);
  out << "optimal t=" << (best.value ? std::to_string(*best.value) : "infinite") << '\n';
  return kOk;
}

struct VerifyRow {
  VerifyResult result;
  std::optional<CaptureFormula> formula;
  int lower = 0;
  std::optional<int> oracle;
  bool oracle_run = false;
  bool pass = false;
};

inline VerifyRow verify_instance(const ExperimentConfig& cfg, const GridSpec& spec,
                                 Algorithm algo, int k) {
  VerifyRow row;
  row.result = verify_strategy_worst_case(spec, algo, k);
  row.formula = formula_or_none(spec, k);
  row.lower = capture_lower_bound(spec, k);
  if (StateCodec::estimate(spec, k) <= budget_of(cfg)) {
    row.oracle = optimal_from_table(solve_cached(cfg, spec, k)).value;
    row.oracle_run = true;
  }
  if (row.result.status != VerifyResult::Status::Captured) return row;
  const int worst = placement_capture_bound(row.result);
  bool ok = true;
  if (row.oracle_run) ok = row.oracle && row.lower <= *row.oracle && *row.oracle <= worst;
  else ok = row.lower <= worst;
  if (row.formula) ok = ok && worst <= row.formula->bracket_high();
  row.pass = ok;
  return row;
}

inline int cmd_verify(const ExperimentConfig& cfg, std::ostream& out) {
  const Instance in = single_instance(cfg, true);
  const VerifyRow row = verify_instance(cfg, in.spec, *in.algorithm, in.k);
  if (!cfg.out.empty())
    write_file(cfg.out, [&](std::ostream& os) { write_trace(os, row.result.witness); });
  if (row.result.status != VerifyResult::Status::Captured) {
    out << "max t=none (" << row.result.message << ") FAIL\n";
    out << trace_to_string(row.result.witness);
    return kVerifyFail;
  }
  out << "max t=" << row.result.max_capture_time
      << " formula=" << (row.formula ? window_text(*row.formula) : "n/a")
      << " lower=" << row.lower << " oracle=";
  if (!row.oracle_run) out << "skipped (over budget)";
  else out << (row.oracle ? std::to_string(*row.oracle) : "infinite");
  out << ' ' << (row.pass ? "PASS" : "FAIL") << '\n';
  return row.pass ? kOk : kVerifyFail;
}

inline int cmd_table(const ExperimentConfig& cfg, std::ostream& out) {
  require_field(!cfg.kind.empty(), cfg.command, "--kind");
  require_field(!cfg.rows.empty(), cfg.command, "-m");
  require_field(!cfg.cols.empty(), cfg.command, "-n");
  const Topology kind = parse_topology(cfg.kind);
  std::vector<int> teams = parse_int_list(cfg.cops, "-k");
  if (teams.empty()) teams.push_back(default_team(kind));
  std::ostringstream rows;
  rows << bounds_csv_header() << '\n';
  for (int m : parse_int_list(cfg.rows, "-m"))
    for (int n : parse_int_list(cfg.cols, "-n"))
      for (int k : teams) rows << to_csv_row(bounds_report(GridSpec(kind, m, n), k, cfg.deadline)) << '\n';
  if (cfg.out.empty()) out << rows.str();
  else write_file(cfg.out, [&](std::ostream& os) { os << rows.str(); });
  return kOk;
}

inline int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  require_field(!cfg.kind.empty(), cfg.command, "--kind");
  require_field(!cfg.rows.empty(), cfg.command, "-m");
  require_field(!cfg.cols.empty(), cfg.command, "-n");
  const Topology kind = parse_topology(cfg.kind);
  std::vector<int> teams = parse_int_list(cfg.cops, "-k");
  if (teams.empty()) teams.push_back(default_team(kind));
  std::ostringstream rows;
  rows << "kind,m,n,k,algo,worst,formula_lo,formula_hi,lower,oracle,status\n";
  bool all_pass = true;
  for (int m : parse_int_list(cfg.rows, "-m"))
    for (int n : parse_int_list(cfg.cols, "-n"))
      for (int k : teams) {
        const GridSpec spec(kind, m, n);
        const Algorithm algo =
            cfg.algorithm.empty() ? default_algorithm(kind, k) : parse_algorithm(cfg.algorithm);
        rows << to_string(kind) << ',' << m << ',' << n << ',' << k << ',' << to_string(algo)
             << ',';
        try {
          initial_placement(algo, spec, k);
        } catch (const ConfigError& e) {
          rows << "\"n/a: " << e.what() << "\",,,,,skipped\n";
          continue;
        }
        const VerifyRow row = verify_instance(cfg, spec, algo, k);
        all_pass = all_pass && row.pass;
        if (row.result.status == VerifyResult::Status::Captured)
          rows << row.result.max_capture_time;
        else
          rows << "none";
        rows << ',';
        if (row.formula) rows << row.formula->lo << ',' << row.formula->hi;
        else rows << ',';
        rows << ',' << row.lower << ',';
        if (row.oracle_run) rows << (row.oracle ? std::to_string(*row.oracle) : "infinite");
        rows << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
      }
  if (cfg.out.empty()) out << rows.str();
  else write_file(cfg.out, [&](std::ostream& os) { os << rows.str(); });
  return all_pass ? kOk : kVerifyFail;
}

inline void add_board_options(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--kind", cfg.kind, "grid, semitorus or torus");
  sub->add_option("-m", cfg.rows, "rows (list or range a..b for table and sweep)");
  sub->add_option("-n", cfg.cols, "columns (list or range a..b for table and sweep)");
  sub->add_option("-k", cfg.cops, "number of cops (list for table and sweep)");
  sub->add_option("--algo", cfg.algorithm, "grid, sgrid, tgrid, grid-k, sgrid-k or tgrid-k");
  sub->add_option("--robber", cfg.robber, "worst-case, greedy or scripted");
  sub->add_option("--script", cfg.script, "moves for the scripted robber, e.g. D,D,L,S");
  sub->add_option("--deadline", cfg.deadline, "capture deadline t* for the cops-needed column");
  sub->add_flag("--cop-number", cfg.cop_number, "solve for the cop number (k is the upper limit)");
  sub->add_option("--budget", cfg.budget, "oracle state budget");
  sub->add_option("--round-cap", cfg.round_cap, "simulation round limit");
  sub->add_option("--out", cfg.out, "output file");
  sub->add_option("--cache", cfg.cache, "value table cache directory");
  sub->add_option("--seed", cfg.seed, "recorded in traces");
}

/// Runs one command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and robber on grids, semi-tori and tori"};
  app.require_subcommand(1);
  ExperimentConfig cfg;
  for (const char* name : {"simulate", "solve", "verify", "table", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_board_options(sub, cfg);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kConfig;
  }
  try {
    if (cfg.command == "simulate") return cmd_simulate(cfg, out);
    if (cfg.command == "solve") return cmd_solve(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "table") return cmd_table(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InfeasibleDeadline& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ConfigError& e) {
    err << "config: " << e.what() << '\n';
    return kConfig;
  } catch (const InputError& e) {
    err << "input: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    err << "domain: " << e.what() << '\n';
    return kConfig;
  }
}

}  // namespace copsrobber::cli
