#include "sat3ce/cli.hpp"

#include "sat3ce/ce3.hpp"
#include "sat3ce/compiler.hpp"
#include "sat3ce/dynamics.hpp"
#include "sat3ce/error.hpp"
#include "sat3ce/json_io.hpp"
#include "sat3ce/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <thread>

namespace sat3ce {

namespace {

struct ModelOptions {
  double b = 0.3;
  double f = 1.0;
  double d = 1.0;
  double gap_min = 0.2; // units of D
};

void add_model_options(CLI::App *cmd, ModelOptions &mo) {
  cmd->add_option("--b", mo.b, "two-body coupling B (energy units)")
      ->capture_default_str();
  cmd->add_option("--f", mo.f, "per-wire field step F (energy units)")
      ->capture_default_str();
  cmd->add_option("--d", mo.d, "responser half-splitting D")
      ->capture_default_str();
  cmd->add_option("--gap-min", mo.gap_min,
                  "required U0 - U1, in units of D")
      ->capture_default_str();
}

CE3Solution solve_best(const ModelOptions &mo) {
  return best_solution(solve(mo.b, mo.d, mo.f, mo.gap_min * mo.d));
}

Formula load(const std::string &path, std::istream &in, std::ostream &err) {
  ParseDiagnostics diag;
  Formula f = path == "-" ? parse_dimacs(in, &diag)
                          : read_dimacs_file(path, &diag);
  for (const auto &w : diag.warnings)
    err << "warning: " << w << '\n';
  return f;
}

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::NoSolution:
    return kExitInfeasible;
  case ErrorCode::InvalidArgument:
  case ErrorCode::InvalidRange:
    return kExitUsage;
  default:
    return kExitInvalid;
  }
}

void print_json(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

} // namespace

CommandOutcome run_cli(const std::vector<std::string> &args, std::istream &in,
                       std::ostream &out, std::ostream &err) {
  CLI::App app{"Ground-state encoding of 3SAT in tailored three-literal "
               "clause evaluators"};
  app.name("sat3ce");
  app.require_subcommand(1);

  std::string cnf = "-";
  ModelOptions mo;
  unsigned threads = 0;

  auto *validate = app.add_subcommand("validate", "check a DIMACS 3SAT file");
  validate->add_option("cnf", cnf, "CNF file, '-' for stdin");

  auto *ce3_solve =
      app.add_subcommand("ce3-solve", "tailor A and E for given B, D, F");
  add_model_options(ce3_solve, mo);

  ScanRequest scan;
  std::vector<double> b_range{scan.b_min, scan.b_max};
  std::vector<double> f_range{scan.f_min, scan.f_max};
  std::string csv_path, pgm_path;
  auto *ce3_scan = app.add_subcommand(
      "ce3-scan", "map the feasible (B/D, F/D) region");
  ce3_scan->add_option("--b-range", b_range, "B/D range lo,hi")
      ->delimiter(',')
      ->expected(2);
  ce3_scan->add_option("--f-range", f_range, "F/D range lo,hi")
      ->delimiter(',')
      ->expected(2);
  ce3_scan->add_option("--nb", scan.nb, "B/D samples")->capture_default_str();
  ce3_scan->add_option("--nf", scan.nf, "F/D samples")->capture_default_str();
  ce3_scan->add_option("--gap-min", scan.gap_min, "in units of D")
      ->capture_default_str();
  ce3_scan->add_option("--csv", csv_path, "write the grid as CSV");
  ce3_scan->add_option("--pgm", pgm_path, "write the grid as a P2 image");
  ce3_scan->add_option("--threads", threads, "worker count (0 = all cores)");

  auto *compile_cmd =
      app.add_subcommand("compile", "print the machine netlist as JSON");
  compile_cmd->add_option("cnf", cnf, "CNF file, '-' for stdin");
  add_model_options(compile_cmd, mo);

  std::string bits;
  auto *energy =
      app.add_subcommand("energy", "energy of one register assignment");
  energy->add_option("cnf", cnf, "CNF file, '-' for stdin");
  energy->add_option("--assignment", bits, "0/1 string, variable 1 first")
      ->required();
  add_model_options(energy, mo);

  std::uint32_t limit = 24;
  std::size_t max_ground = 1024;
  auto *spectrum =
      app.add_subcommand("spectrum", "exhaustive energy spectrum");
  spectrum->add_option("cnf", cnf, "CNF file, '-' for stdin");
  spectrum->add_option("--limit", limit, "largest m to enumerate")
      ->capture_default_str();
  spectrum->add_option("--max-ground", max_ground,
                       "ground states to list")
      ->capture_default_str();
  spectrum->add_option("--threads", threads, "worker count (0 = all cores)");
  add_model_options(spectrum, mo);

  auto *verify = app.add_subcommand(
      "verify", "certify ground states == satisfying assignments");
  verify->add_option("cnf", cnf, "CNF file, '-' for stdin");
  verify->add_option("--limit", limit, "largest m to enumerate")
      ->capture_default_str();
  verify->add_option("--threads", threads, "worker count (0 = all cores)");
  add_model_options(verify, mo);

  std::uint64_t seed = 0;
  std::uint64_t steps = 1'000'000;
  std::uint64_t restarts = 1;
  std::uint64_t record_every = 1000;
  std::string schedule_text, trace_path, target_text = "floor";
  auto *anneal =
      app.add_subcommand("anneal", "Metropolis relaxation of the machine");
  anneal->add_option("cnf", cnf, "CNF file, '-' for stdin");
  anneal->add_option("--seed", seed)->capture_default_str();
  anneal->add_option("--steps", steps, "step budget per run")
      ->capture_default_str();
  anneal->add_option("--schedule", schedule_text,
                     "const:T or geo:T0,r,stage (default geo:2gap,0.97,10m)");
  anneal->add_option("--restarts", restarts)->capture_default_str();
  anneal->add_option("--record-every", record_every, "trace stride")
      ->capture_default_str();
  anneal->add_option("--trace", trace_path, "write run 0 trace as CSV");
  anneal->add_option("--target", target_text,
                     "floor (all clauses satisfied), ground (exhaustive), "
                     "or an energy value")
      ->capture_default_str();
  anneal->add_option("--threads", threads, "worker count (0 = all cores)");
  add_model_options(anneal, mo);

  std::uint32_t gen_m = 20;
  std::uint64_t gen_n = 80;
  std::uint64_t gen_seed = 0;
  auto *gen = app.add_subcommand("gen", "random 3SAT instance to stdout");
  gen->add_option("--m", gen_m, "variables")->capture_default_str();
  gen->add_option("--n", gen_n, "clauses")->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();

  CommandOutcome outcome;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return outcome;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return outcome;
  } catch (const CLI::ParseError &e) {
    err << "error: usage: " << e.what() << '\n';
    outcome.exit_code = kExitUsage;
    return outcome;
  }

  try {
    if (*validate) {
      const Formula f = load(cnf, in, err);
      Json j;
      j["valid"] = true;
      j["m"] = f.num_vars();
      j["n"] = f.num_clauses();
      j["duplicate_clauses"] = f.duplicate_clauses().size();
      print_json(out, j);
    } else if (*ce3_solve) {
      const auto sols = solve(mo.b, mo.d, mo.f, mo.gap_min * mo.d);
      Json j;
      j["b"] = mo.b;
      j["d"] = mo.d;
      j["f"] = mo.f;
      j["gap_min_over_d"] = mo.gap_min;
      Json arr = Json::array();
      for (const auto &s : sols)
        arr.push_back(to_json(s));
      j["solutions"] = std::move(arr);
      j["best"] = to_json(best_solution(sols));
      print_json(out, j);
    } else if (*ce3_scan) {
      scan.b_min = b_range[0];
      scan.b_max = b_range[1];
      scan.f_min = f_range[0];
      scan.f_max = f_range[1];
      const RegionGrid grid = scan_region(scan, threads);
      if (!csv_path.empty()) {
        auto f = open_output(csv_path);
        write_region_csv(f, grid);
        outcome.artifacts.push_back(csv_path);
      }
      if (!pgm_path.empty()) {
        auto f = open_output(pgm_path);
        write_region_pgm(f, grid);
        outcome.artifacts.push_back(pgm_path);
      }
      Json j;
      j["nb"] = scan.nb;
      j["nf"] = scan.nf;
      j["gap_min_over_d"] = scan.gap_min;
      j["feasible_cells"] = grid.feasible_count();
      j["feasible_fraction"] =
          double(grid.feasible_count()) / double(grid.cells.size());
      j["artifacts"] = outcome.artifacts;
      print_json(out, j);
    } else if (*compile_cmd) {
      const Formula f = load(cnf, in, err);
      const EnergyModel mod = compile(f, solve_best(mo), mo.gap_min * mo.d);
      print_json(out, to_json(build_netlist(mod.formula())));
    } else if (*energy) {
      const Formula f = load(cnf, in, err);
      const EnergyModel mod = compile(f, solve_best(mo), mo.gap_min * mo.d);
      const Assignment a = Assignment::from_string(bits);
      const Evaluation ev = evaluate(f, a);
      Json j;
      j["assignment"] = a.to_string();
      j["energy"] = mod.total_energy(a);
      j["e_floor"] = mod.e_floor();
      j["gap"] = mod.gap();
      j["unsat_count"] = ev.unsat_count;
      j["satisfied"] = ev.satisfied;
      print_json(out, j);
    } else if (*spectrum) {
      const Formula f = load(cnf, in, err);
      const EnergyModel mod = compile(f, solve_best(mo), mo.gap_min * mo.d);
      SpectrumOptions so;
      so.limit = limit;
      so.threads = threads;
      so.ground_limit = max_ground;
      Json j = to_json(enumerate_spectrum(mod, so));
      j["e_floor"] = mod.e_floor();
      j["gap"] = mod.gap();
      print_json(out, j);
    } else if (*verify) {
      const Formula f = load(cnf, in, err);
      const EnergyModel mod = compile(f, solve_best(mo), mo.gap_min * mo.d);
      SpectrumOptions so;
      so.limit = limit;
      so.threads = threads;
      const EncodingReport rep = check_encoding(f, mod, so);
      print_json(out, to_json(rep));
      if (!rep.ok) {
        err << "error: encoding_violation: ground states differ from the "
               "satisfying assignments\n";
        outcome.exit_code = kExitInvalid;
      }
    } else if (*anneal) {
      const Formula f = load(cnf, in, err);
      const EnergyModel mod = compile(f, solve_best(mo), mo.gap_min * mo.d);
      const Schedule sch = schedule_text.empty()
                               ? Schedule::default_for(mod)
                               : Schedule::parse(schedule_text);
      RunConfig cfg;
      cfg.seed = seed;
      cfg.max_steps = steps;
      cfg.record_every = record_every;
      if (target_text == "floor") {
        cfg.target_energy = mod.e_floor();
      } else if (target_text == "ground") {
        cfg.target_energy = enumerate_spectrum(mod).ground_energy;
      } else {
        double t = 0;
        auto [p, ec] = std::from_chars(
            target_text.data(), target_text.data() + target_text.size(), t);
        if (ec != std::errc() || p != target_text.data() + target_text.size())
          throw Error(ErrorCode::InvalidArgument,
                      "--target must be floor, ground or a number");
        cfg.target_energy = t;
      }
      RunResult first;
      const RestartReport rep =
          multi_restart(mod, restarts, cfg, sch, threads, &first);
      if (!trace_path.empty()) {
        auto tf = open_output(trace_path);
        write_trace_csv(tf, first.trace);
        outcome.artifacts.push_back(trace_path);
      }
      Json j = to_json(rep);
      j["target_energy"] = *cfg.target_energy;
      j["best_assignment"] = first.best_assignment.to_string();
      print_json(out, j);
      if (rep.success_rate == 0.0) {
        err << "error: budget_exhausted: no run reached the target energy\n";
        outcome.exit_code = kExitBudget;
      }
    } else if (*gen) {
      write_dimacs(out, gen_random(gen_m, gen_n, gen_seed));
    }
  } catch (const Error &e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    outcome.exit_code = exit_code_for(e.code());
  }
  return outcome;
}

} // namespace sat3ce
